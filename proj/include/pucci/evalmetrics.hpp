// evalmetrics.hpp - BLEU, chrF and METEOR scoring
#pragma once

#include <array>
#include <string>
#include <vector>

namespace pucci {

struct BleuScore {
    double score{0.0};          // 0..100
    double brevity_penalty{1.0};
    std::array<double, 4> ngram_precisions{}; // n = 1..4
    size_t candidate_length{0};
    size_t reference_length{0};
    bool empty_candidate{false};
};

struct ChrfScore {
    double score{0.0};          // 0..100
    std::array<double, 6> precisions{}; // char n = 1..6
    std::array<double, 6> recalls{};
};

struct MeteorScore {
    double score{0.0};          // 0..100
    double precision{0.0};
    double recall{0.0};
    double fmean{0.0};
    double fragmentation_penalty{0.0};
    size_t matches{0};
    size_t chunks{0};
};

struct MetricScores {
    BleuScore bleu;
    ChrfScore chrf;
    MeteorScore meteor;
};

// Modified n-gram precision with clipping, geometric mean over n = 1..4,
// brevity penalty exp(1 - r/c) for c < r. Tokens lowercased, punctuation
// split. No smoothing: a zero precision gives score 0.
BleuScore bleu(const std::string& candidate, const std::string& reference);

// Character n-grams n = 1..6, whitespace excluded, per-n F-score with
// recall weight beta = 2, averaged over n.
ChrfScore chrf(const std::string& candidate, const std::string& reference);

// Unigram alignment, exact match first then stem match; Fmean = 10PR/(R+9P);
// penalty = 0.5 (chunks/matches)^3.
MeteorScore meteor(const std::string& candidate, const std::string& reference);

MetricScores score_all(const std::string& candidate, const std::string& reference);

// Suffix-stripping stemmer for French used by the METEOR stage.
std::string french_stem(const std::string& word);

} // namespace pucci
