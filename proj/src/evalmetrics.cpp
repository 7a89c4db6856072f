#include "pucci/evalmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "pucci/textutil.hpp"

namespace pucci {

namespace {

using Counts = std::map<std::string, int>;

Counts word_ngrams(const std::vector<std::string>& toks, size_t n) {
    Counts counts;
    if (toks.size() < n) return counts;
    for (size_t i = 0; i + n <= toks.size(); ++i) {
        std::string key;
        for (size_t k = 0; k < n; ++k) {
            if (k) key += '\x1f';
            key += toks[i + k];
        }
        ++counts[key];
    }
    return counts;
}

int clipped_matches(const Counts& cand, const Counts& ref) {
    int match = 0;
    for (const auto& [gram, count] : cand) {
        auto it = ref.find(gram);
        if (it != ref.end()) match += std::min(count, it->second);
    }
    return match;
}

int total(const Counts& c) {
    int t = 0;
    for (const auto& [gram, count] : c) t += count;
    return t;
}

} // namespace

BleuScore bleu(const std::string& candidate, const std::string& reference) {
    BleuScore r;
    std::vector<std::string> cand = text::word_tokens(candidate, true);
    std::vector<std::string> ref = text::word_tokens(reference, true);
    r.candidate_length = cand.size();
    r.reference_length = ref.size();
    if (cand.empty()) {
        r.empty_candidate = true;
        return r;
    }
    double log_sum = 0.0;
    bool zero = false;
    for (size_t n = 1; n <= 4; ++n) {
        Counts cg = word_ngrams(cand, n);
        Counts rg = word_ngrams(ref, n);
        int tot = total(cg);
        int match = clipped_matches(cg, rg);
        double p = tot > 0 ? static_cast<double>(match) / tot : 0.0;
        r.ngram_precisions[n - 1] = p;
        if (p <= 0.0) zero = true;
        else log_sum += std::log(p);
    }
    r.brevity_penalty = cand.size() >= ref.size()
                            ? 1.0
                            : std::exp(1.0 - static_cast<double>(ref.size()) / cand.size());
    if (!zero) r.score = 100.0 * r.brevity_penalty * std::exp(log_sum / 4.0);
    return r;
}

ChrfScore chrf(const std::string& candidate, const std::string& reference) {
    ChrfScore r;
    auto chars = [](const std::string& s) {
        std::vector<std::string> out;
        for (char32_t cp : text::decode_utf8(s)) {
            if (cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == 0xA0) continue;
            out.push_back(text::encode_utf8(cp));
        }
        return out;
    };
    std::vector<std::string> cand = chars(candidate);
    std::vector<std::string> ref = chars(reference);
    constexpr double beta2 = 4.0; // recall weight beta = 2
    double f_sum = 0.0;
    int used = 0;
    for (size_t n = 1; n <= 6; ++n) {
        Counts cg = word_ngrams(cand, n);
        Counts rg = word_ngrams(ref, n);
        int tc = total(cg), tr = total(rg);
        if (tc == 0 && tr == 0) continue;
        int match = clipped_matches(cg, rg);
        double p = tc > 0 ? static_cast<double>(match) / tc : 0.0;
        double q = tr > 0 ? static_cast<double>(match) / tr : 0.0;
        r.precisions[n - 1] = p;
        r.recalls[n - 1] = q;
        double f = (p + q) > 0.0 ? (1.0 + beta2) * p * q / (beta2 * p + q) : 0.0;
        f_sum += f;
        ++used;
    }
    if (used > 0) r.score = 100.0 * f_sum / used;
    return r;
}

std::string french_stem(const std::string& word) {
    // Longest-first suffix stripping over common French inflectional and
    // frequent derivational endings; keeps a stem of at least 3 letters.
    static const std::vector<std::string> suffixes = {
        "issements", "issement", "issantes", "issants", "issante", "issant",
        "atrices",  "atrice",   "airent",   "assent",  "resse",
        "ements",   "ement",    "euses",    "antes",   "entes",  "ables",
        "ibles",    "ances",    "ences",    "ments",   "aient",  "erent",
        "\xc3\xa8rent",          "ition",    "ation",
        "euse",     "ance",     "ence",     "ment",    "ants",   "ents",
        "ante",     "ente",     "able",     "ible",    "eaux",
        "ait",      "ais",      "ant",      "ent",     "ion",    "it\xc3\xa9",
        "eux",      "aux",      "\xc3\xa9""e", "\xc3\xa9s", "\xc3\xa8s",
        "es",       "is",       "it",       "ie",      "ir",     "er",
        "ez",       "\xc3\xa9", "\xc3\xa8", "s",       "x",      "e",
    };
    auto cps = text::decode_utf8(word);
    for (const std::string& suf : suffixes) {
        auto scps = text::decode_utf8(suf);
        if (cps.size() < scps.size() + 3) continue;
        if (std::equal(scps.begin(), scps.end(), cps.end() - scps.size())) {
            return text::encode_utf8(
                std::vector<char32_t>(cps.begin(), cps.end() - scps.size()));
        }
    }
    return word;
}

MeteorScore meteor(const std::string& candidate, const std::string& reference) {
    MeteorScore r;
    std::vector<std::string> cand = text::word_tokens(candidate, true);
    std::vector<std::string> ref = text::word_tokens(reference, true);
    if (cand.empty() || ref.empty()) return r;

    std::vector<std::optional<size_t>> match_of(cand.size());
    std::vector<bool> ref_used(ref.size(), false);
    // stage 1: exact matches, leftmost reference position first
    for (size_t i = 0; i < cand.size(); ++i) {
        for (size_t j = 0; j < ref.size(); ++j) {
            if (ref_used[j] || cand[i] != ref[j]) continue;
            match_of[i] = j;
            ref_used[j] = true;
            break;
        }
    }
    // stage 2: stem matches on what is left
    std::vector<std::string> cand_stem(cand.size()), ref_stem(ref.size());
    for (size_t i = 0; i < cand.size(); ++i) cand_stem[i] = french_stem(cand[i]);
    for (size_t j = 0; j < ref.size(); ++j) ref_stem[j] = french_stem(ref[j]);
    for (size_t i = 0; i < cand.size(); ++i) {
        if (match_of[i]) continue;
        for (size_t j = 0; j < ref.size(); ++j) {
            if (ref_used[j] || cand_stem[i] != ref_stem[j]) continue;
            match_of[i] = j;
            ref_used[j] = true;
            break;
        }
    }
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < cand.size(); ++i)
        if (match_of[i]) pairs.emplace_back(i, *match_of[i]);
    r.matches = pairs.size();
    if (pairs.empty()) return r;
    r.precision = static_cast<double>(r.matches) / cand.size();
    r.recall = static_cast<double>(r.matches) / ref.size();
    r.fmean = 10.0 * r.precision * r.recall / (r.recall + 9.0 * r.precision);
    r.chunks = 1;
    for (size_t k = 1; k < pairs.size(); ++k) {
        if (!(pairs[k].first == pairs[k - 1].first + 1 &&
              pairs[k].second == pairs[k - 1].second + 1))
            ++r.chunks;
    }
    double ratio = static_cast<double>(r.chunks) / r.matches;
    r.fragmentation_penalty = 0.5 * ratio * ratio * ratio;
    r.score = 100.0 * r.fmean * (1.0 - r.fragmentation_penalty);
    return r;
}

MetricScores score_all(const std::string& candidate, const std::string& reference) {
    return MetricScores{bleu(candidate, reference), chrf(candidate, reference),
                        meteor(candidate, reference)};
}

} // namespace pucci
