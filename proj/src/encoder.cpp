#include "pucci/encoder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pucci/errors.hpp"
#include "pucci/textutil.hpp"

namespace pucci {

EncodedToken EncodedToken::make_key(GrammaticalKey k) {
    EncodedToken t;
    t.kind = TokenKind::Key;
    t.key = k;
    return t;
}

EncodedToken EncodedToken::make_literal(std::string text) {
    EncodedToken t;
    t.kind = TokenKind::Literal;
    t.literal = std::move(text);
    return t;
}

namespace {

std::vector<std::string> simplify_tokens(std::vector<std::string> tokens,
                                         const std::vector<SimplificationRule>& rules) {
    for (int pass = 0; pass < 16; ++pass) {
        bool changed = false;
        size_t i = 0;
        while (i < tokens.size()) {
            const SimplificationRule* best = nullptr;
            for (const SimplificationRule& r : rules) {
                if (i + r.pattern.size() > tokens.size()) continue;
                if (!std::equal(r.pattern.begin(), r.pattern.end(), tokens.begin() + i))
                    continue;
                if (!best || r.pattern.size() > best->pattern.size()) best = &r;
            }
            if (best) {
                std::vector<std::string> next(tokens.begin(), tokens.begin() + i);
                next.insert(next.end(), best->replacement.begin(), best->replacement.end());
                next.insert(next.end(), tokens.begin() + i + best->pattern.size(),
                            tokens.end());
                i += best->replacement.size();
                tokens = std::move(next);
                changed = true;
            } else {
                ++i;
            }
        }
        if (!changed) break;
    }
    return tokens;
}

} // namespace

std::string simplify(const std::string& text, const std::vector<SimplificationRule>& rules) {
    std::vector<std::string> paragraphs = text::split_paragraphs(text);
    std::string out;
    for (size_t p = 0; p < paragraphs.size(); ++p) {
        if (p) out += "\n\n";
        out += text::join_tokens(simplify_tokens(text::source_tokens(paragraphs[p]), rules));
    }
    return out;
}

namespace {

struct ArticleForm {
    std::optional<Gender> gender;
    std::optional<Number> number;
};

const std::map<std::string, ArticleForm>& plain_articles() {
    static const std::map<std::string, ArticleForm> m = {
        {"il", {Gender::Masculine, Number::Singular}},
        {"lo", {Gender::Masculine, Number::Singular}},
        {"la", {Gender::Feminine, Number::Singular}},
        {"l'", {std::nullopt, Number::Singular}},
        {"i", {Gender::Masculine, Number::Plural}},
        {"gli", {Gender::Masculine, Number::Plural}},
        {"le", {Gender::Feminine, Number::Plural}},
    };
    return m;
}

// contracted preposition+article families
const std::map<std::string, ArticleForm>& di_articles() {
    static const std::map<std::string, ArticleForm> m = {
        {"del", {Gender::Masculine, Number::Singular}},
        {"dello", {Gender::Masculine, Number::Singular}},
        {"della", {Gender::Feminine, Number::Singular}},
        {"dell'", {std::nullopt, Number::Singular}},
        {"dei", {Gender::Masculine, Number::Plural}},
        {"degli", {Gender::Masculine, Number::Plural}},
        {"delle", {Gender::Feminine, Number::Plural}},
    };
    return m;
}

const std::map<std::string, ArticleForm>& a_articles() {
    static const std::map<std::string, ArticleForm> m = {
        {"al", {Gender::Masculine, Number::Singular}},
        {"allo", {Gender::Masculine, Number::Singular}},
        {"alla", {Gender::Feminine, Number::Singular}},
        {"all'", {std::nullopt, Number::Singular}},
        {"ai", {Gender::Masculine, Number::Plural}},
        {"agli", {Gender::Masculine, Number::Plural}},
        {"alle", {Gender::Feminine, Number::Plural}},
    };
    return m;
}

const std::map<std::string, ArticleForm>& in_articles() {
    static const std::map<std::string, ArticleForm> m = {
        {"nel", {Gender::Masculine, Number::Singular}},
        {"nello", {Gender::Masculine, Number::Singular}},
        {"nella", {Gender::Feminine, Number::Singular}},
        {"nell'", {std::nullopt, Number::Singular}},
        {"nei", {Gender::Masculine, Number::Plural}},
        {"negli", {Gender::Masculine, Number::Plural}},
        {"nelle", {Gender::Feminine, Number::Plural}},
    };
    return m;
}

const std::map<std::string, ArticleForm>& da_articles() {
    static const std::map<std::string, ArticleForm> m = {
        {"dal", {Gender::Masculine, Number::Singular}},
        {"dallo", {Gender::Masculine, Number::Singular}},
        {"dalla", {Gender::Feminine, Number::Singular}},
        {"dall'", {std::nullopt, Number::Singular}},
        {"dai", {Gender::Masculine, Number::Plural}},
        {"dagli", {Gender::Masculine, Number::Plural}},
        {"dalle", {Gender::Feminine, Number::Plural}},
    };
    return m;
}

// possessive word -> (person, owner number)
struct PossForm {
    int person;
    Number owner;
};

const std::map<std::string, PossForm>& possessives() {
    static const std::map<std::string, PossForm> m = {
        {"mio", {1, Number::Singular}},  {"mia", {1, Number::Singular}},
        {"miei", {1, Number::Singular}}, {"mie", {1, Number::Singular}},
        {"tuo", {2, Number::Singular}},  {"tua", {2, Number::Singular}},
        {"tuoi", {2, Number::Singular}}, {"tue", {2, Number::Singular}},
        {"suo", {3, Number::Singular}},  {"sua", {3, Number::Singular}},
        {"suoi", {3, Number::Singular}}, {"sue", {3, Number::Singular}},
        {"nostro", {1, Number::Plural}}, {"nostra", {1, Number::Plural}},
        {"nostri", {1, Number::Plural}}, {"nostre", {1, Number::Plural}},
        {"vostro", {2, Number::Plural}}, {"vostra", {2, Number::Plural}},
        {"vostri", {2, Number::Plural}}, {"vostre", {2, Number::Plural}},
        {"loro", {3, Number::Plural}},
    };
    return m;
}

const std::set<std::string>& near_demonstratives() {
    static const std::set<std::string> s = {"questo", "questa", "questi", "queste"};
    return s;
}

const std::set<std::string>& far_demonstratives() {
    static const std::set<std::string> s = {"quel", "quello", "quella", "quell'",
                                            "quei", "quegli", "quelle"};
    return s;
}

ArticleForm dem_form(const std::string& w) {
    char last = w.back();
    ArticleForm f;
    if (last == 'o' || w == "quel") { f.gender = Gender::Masculine; f.number = Number::Singular; }
    else if (last == 'a') { f.gender = Gender::Feminine; f.number = Number::Singular; }
    else if (last == 'i') { f.gender = Gender::Masculine; f.number = Number::Plural; }
    else if (last == 'e') { f.gender = Gender::Feminine; f.number = Number::Plural; }
    return f;
}

GrammaticalKey possessive_key(const PossForm& p, CaseSlot slot) {
    GrammaticalKey k;
    k.category = KeyCategory::Possessive;
    k.person = p.person;
    k.number = p.owner;
    k.case_index =
        possessive_case_index(slot, p.person == 1 && p.owner == Number::Singular);
    return k;
}

GrammaticalKey article_key(const ArticleForm& f, int case_index) {
    GrammaticalKey k;
    k.category = KeyCategory::Article;
    k.case_index = case_index;
    k.gender = f.gender;
    k.number = f.number;
    return k;
}

GrammaticalKey demonstrative_key(bool near, const ArticleForm& f, int case_index) {
    GrammaticalKey k;
    k.category = near ? KeyCategory::DemonstrativeNear : KeyCategory::DemonstrativeFar;
    k.case_index = case_index;
    k.gender = f.gender;
    k.number = f.number;
    return k;
}

GrammaticalKey pronoun_key(int person, std::optional<Gender> gender, Number number,
                           int case_index) {
    GrammaticalKey k;
    k.category = KeyCategory::PersonalPronoun;
    k.person = person;
    k.gender = gender;
    k.number = number;
    k.case_index = case_index;
    return k;
}

bool is_upper_initial(const std::string& word) {
    auto cps = text::decode_utf8(word);
    return !cps.empty() && text::is_letter(cps[0]) && text::to_lower(cps[0]) != cps[0];
}

} // namespace

EncodedStream encode(const std::string& text_in, const Lexicon& lexicon) {
    EncodedStream stream;
    auto finite_verb = [&](const std::string& w) {
        for (const Analysis& a : lexicon.analyze(w))
            if (a.entry->pos == PartOfSpeech::Verb && a.features.person) return true;
        return false;
    };

    std::vector<std::string> sentences;
    for (const std::string& para : text::split_paragraphs(text_in))
        for (const std::string& s : text::split_sentences(para)) sentences.push_back(s);

    for (size_t si = 0; si < sentences.size(); ++si) {
        std::vector<std::string> toks = text::source_tokens(sentences[si]);
        std::vector<EncodedToken> out;
        bool first_word = true;
        bool prev_prep = false; // a non-absorbing preposition directly before
        size_t i = 0;
        while (i < toks.size()) {
            const std::string& raw = toks[i];
            if (text::is_punct_token(raw)) {
                out.push_back(EncodedToken::make_literal(raw));
                prev_prep = false;
                ++i;
                continue;
            }
            std::string w = first_word ? text::lowercase(raw) : raw;
            std::string lw = text::lowercase(raw);
            std::string next = i + 1 < toks.size() ? text::lowercase(toks[i + 1]) : "";
            bool was_first = first_word;
            first_word = false;

            auto emit_stem = [&](const LexiconEntry& e, const MorphFeatures& f) {
                EncodedToken t;
                t.kind = TokenKind::Stem;
                t.lemma = e.source_lemma;
                t.pos = e.pos;
                if (e.pos == PartOfSpeech::Verb) {
                    t.tense = f.tense;
                    if (f.person && f.tense != TenseIdeogram::ID9 &&
                        f.tense != TenseIdeogram::ID8 && f.tense != TenseIdeogram::ID1)
                        t.person = f.person;
                    if (f.tense == TenseIdeogram::ID9 && f.number == Number::Plural)
                        t.plural_mark = true;
                } else {
                    t.plural_mark = f.number == Number::Plural;
                    if (e.pos == PartOfSpeech::Adjective) t.gender_mark = f.gender;
                }
                out.push_back(t);
            };
            auto emit_prep = [&](const std::string& lemma) {
                const LexiconEntry* e = lexicon.find(lemma, PartOfSpeech::Preposition);
                if (!e)
                    throw EncodeError("preposition '" + lemma + "' missing from lexicon");
                emit_stem(*e, MorphFeatures{});
                prev_prep = true;
            };

            // relative pronoun: article + quale/quali
            if (plain_articles().count(lw) && (next == "quale" || next == "quali")) {
                GrammaticalKey k;
                k.category = KeyCategory::Relative;
                k.case_index = 1;
                k.gender = plain_articles().at(lw).gender;
                k.number = next == "quali" ? Number::Plural : Number::Singular;
                out.push_back(EncodedToken::make_key(k));
                prev_prep = false;
                i += 2;
                continue;
            }
            if ((di_articles().count(lw) || a_articles().count(lw)) &&
                (next == "quale" || next == "quali")) {
                bool genitive = di_articles().count(lw) > 0;
                const ArticleForm& form =
                    genitive ? di_articles().at(lw) : a_articles().at(lw);
                GrammaticalKey k;
                k.category = KeyCategory::Relative;
                k.case_index = genitive ? 2 : 3;
                k.gender = form.gender;
                k.number = next == "quali" ? Number::Plural : Number::Singular;
                out.push_back(EncodedToken::make_key(k));
                prev_prep = false;
                i += 2;
                continue;
            }

            // contracted preposition-article forms
            if (di_articles().count(lw) || a_articles().count(lw)) {
                bool genitive = di_articles().count(lw) > 0;
                CaseSlot slot = genitive ? CaseSlot::Genitive : CaseSlot::Dative;
                if (possessives().count(next)) {
                    out.push_back(
                        EncodedToken::make_key(possessive_key(possessives().at(next), slot)));
                    prev_prep = false;
                    i += 2;
                    continue;
                }
                const ArticleForm& form =
                    genitive ? di_articles().at(lw) : a_articles().at(lw);
                out.push_back(EncodedToken::make_key(article_key(form, genitive ? 2 : 3)));
                prev_prep = false;
                ++i;
                continue;
            }
            if (in_articles().count(lw) || da_articles().count(lw)) {
                bool is_in = in_articles().count(lw) > 0;
                emit_prep(is_in ? "in" : "da");
                const ArticleForm& form =
                    is_in ? in_articles().at(lw) : da_articles().at(lw);
                out.push_back(EncodedToken::make_key(article_key(form, 1)));
                prev_prep = false;
                ++i;
                continue;
            }

            // bare prepositions: absorb a following key-category word
            if (lw == "di" || lw == "d'" || lw == "a" || lw == "ad") {
                bool genitive = lw == "di" || lw == "d'";
                CaseSlot slot = genitive ? CaseSlot::Genitive : CaseSlot::Dative;
                int case_index = genitive ? 2 : 3;
                if (possessives().count(next)) {
                    out.push_back(
                        EncodedToken::make_key(possessive_key(possessives().at(next), slot)));
                    i += 2;
                    prev_prep = false;
                    continue;
                }
                if (near_demonstratives().count(next) || far_demonstratives().count(next)) {
                    bool near = near_demonstratives().count(next) > 0;
                    out.push_back(EncodedToken::make_key(
                        demonstrative_key(near, dem_form(next), case_index)));
                    i += 2;
                    prev_prep = false;
                    continue;
                }
                static const std::map<std::string, GrammaticalKey> tonic = [] {
                    std::map<std::string, GrammaticalKey> m;
                    m["me"] = pronoun_key(1, std::nullopt, Number::Singular, 1);
                    m["te"] = pronoun_key(2, std::nullopt, Number::Singular, 1);
                    m["lui"] = pronoun_key(3, Gender::Masculine, Number::Singular, 1);
                    m["lei"] = pronoun_key(3, Gender::Feminine, Number::Singular, 1);
                    m["noi"] = pronoun_key(1, std::nullopt, Number::Plural, 1);
                    m["voi"] = pronoun_key(2, std::nullopt, Number::Plural, 1);
                    return m;
                }();
                if (auto it = tonic.find(next); it != tonic.end()) {
                    GrammaticalKey k = it->second;
                    k.case_index = case_index;
                    out.push_back(EncodedToken::make_key(k));
                    i += 2;
                    prev_prep = false;
                    continue;
                }
                emit_prep(genitive ? "di" : "a");
                ++i;
                continue;
            }
            {
                static const std::set<std::string> preps = {"da", "in",  "con", "su",
                                                            "per", "tra", "fra", "verso"};
                if (preps.count(lw)) {
                    emit_prep(lw);
                    ++i;
                    continue;
                }
            }

            // articles and object clitics
            if (plain_articles().count(lw)) {
                bool cliticizable = lw == "la" || lw == "lo" || lw == "le" || lw == "li";
                if (cliticizable && !next.empty() && finite_verb(next)) {
                    GrammaticalKey k;
                    if (lw == "la")
                        k = pronoun_key(3, Gender::Feminine, Number::Singular, 4);
                    else if (lw == "lo")
                        k = pronoun_key(3, Gender::Masculine, Number::Singular, 4);
                    else if (lw == "le")
                        k = pronoun_key(3, Gender::Feminine, Number::Singular, 3);
                    else
                        k = pronoun_key(3, Gender::Masculine, Number::Singular, 4);
                    out.push_back(EncodedToken::make_key(k));
                    prev_prep = false;
                    ++i;
                    continue;
                }
                out.push_back(
                    EncodedToken::make_key(article_key(plain_articles().at(lw), 1)));
                prev_prep = false;
                ++i;
                continue;
            }

            // demonstratives, possessives, pronouns, conjunction
            if (near_demonstratives().count(lw) || far_demonstratives().count(lw)) {
                bool near = near_demonstratives().count(lw) > 0;
                out.push_back(
                    EncodedToken::make_key(demonstrative_key(near, dem_form(lw), 1)));
                prev_prep = false;
                ++i;
                continue;
            }
            if (possessives().count(lw)) {
                out.push_back(EncodedToken::make_key(
                    possessive_key(possessives().at(lw), CaseSlot::Base)));
                prev_prep = false;
                ++i;
                continue;
            }
            {
                static const std::map<std::string, GrammaticalKey> subjects = [] {
                    std::map<std::string, GrammaticalKey> m;
                    m["io"] = pronoun_key(1, std::nullopt, Number::Singular, 1);
                    m["tu"] = pronoun_key(2, std::nullopt, Number::Singular, 1);
                    m["egli"] = pronoun_key(3, Gender::Masculine, Number::Singular, 1);
                    m["ella"] = pronoun_key(3, Gender::Feminine, Number::Singular, 1);
                    m["esso"] = pronoun_key(3, Gender::Neuter, Number::Singular, 1);
                    m["noi"] = pronoun_key(1, std::nullopt, Number::Plural, 1);
                    m["voi"] = pronoun_key(2, std::nullopt, Number::Plural, 1);
                    return m;
                }();
                if (auto it = subjects.find(lw); it != subjects.end()) {
                    out.push_back(EncodedToken::make_key(it->second));
                    prev_prep = false;
                    ++i;
                    continue;
                }
                static const std::map<std::string, GrammaticalKey> clitics = [] {
                    std::map<std::string, GrammaticalKey> m;
                    m["mi"] = pronoun_key(1, std::nullopt, Number::Singular, 3);
                    m["ti"] = pronoun_key(2, std::nullopt, Number::Singular, 3);
                    m["ci"] = pronoun_key(1, std::nullopt, Number::Plural, 3);
                    m["vi"] = pronoun_key(2, std::nullopt, Number::Plural, 3);
                    return m;
                }();
                if (auto it = clitics.find(lw); it != clitics.end()) {
                    out.push_back(EncodedToken::make_key(it->second));
                    prev_prep = false;
                    ++i;
                    continue;
                }
                // tonic object after a plain preposition ("verso me")
                static const std::map<std::string, GrammaticalKey> tonic4 = [] {
                    std::map<std::string, GrammaticalKey> m;
                    m["me"] = pronoun_key(1, std::nullopt, Number::Singular, 4);
                    m["te"] = pronoun_key(2, std::nullopt, Number::Singular, 4);
                    m["lui"] = pronoun_key(3, Gender::Masculine, Number::Singular, 4);
                    m["lei"] = pronoun_key(3, Gender::Feminine, Number::Singular, 4);
                    return m;
                }();
                if (prev_prep) {
                    if (auto it = tonic4.find(lw); it != tonic4.end()) {
                        out.push_back(EncodedToken::make_key(it->second));
                        prev_prep = false;
                        ++i;
                        continue;
                    }
                }
            }
            if (lw == "e" || lw == "ed") {
                GrammaticalKey k;
                k.category = KeyCategory::Conjunction;
                out.push_back(EncodedToken::make_key(k));
                prev_prep = false;
                ++i;
                continue;
            }

            // everything else: dictionary analysis
            std::vector<Analysis> analyses = lexicon.analyze(w);
            if (analyses.empty() && w != raw) analyses = lexicon.analyze(raw);
            if (analyses.empty()) {
                if (!was_first && is_upper_initial(raw)) {
                    out.push_back(EncodedToken::make_literal(raw));
                    prev_prep = false;
                    ++i;
                    continue;
                }
                throw EncodeError("cannot analyze token '" + raw + "' in sentence " +
                                  std::to_string(si + 1));
            }
            const Analysis* chosen = &analyses[0];
            if (analyses[0].entry->pos == PartOfSpeech::Verb) {
                for (const Analysis& a : analyses) {
                    if (a.entry->pos != PartOfSpeech::Verb) break;
                    if (a.features.tense &&
                        lexicon.target_cell_defined(*a.entry, *a.features.tense,
                                                    a.features.person)) {
                        chosen = &a;
                        break;
                    }
                }
            }
            emit_stem(*chosen->entry, chosen->features);
            prev_prep = false;
            ++i;
        }

        // agreement pass: adjectives without a decided gender mark copy the
        // nearest noun's source gender (forward first, then backward)
        for (size_t t = 0; t < out.size(); ++t) {
            EncodedToken& tok = out[t];
            if (tok.kind != TokenKind::Stem || tok.pos != PartOfSpeech::Adjective ||
                tok.gender_mark)
                continue;
            auto noun_gender = [&](size_t idx) -> std::optional<Gender> {
                const EncodedToken& n = out[idx];
                if (n.kind != TokenKind::Stem || n.pos != PartOfSpeech::Noun)
                    return std::nullopt;
                const LexiconEntry* e = lexicon.find(n.lemma, PartOfSpeech::Noun);
                return e ? e->source_gender : std::nullopt;
            };
            for (size_t j = t + 1; j < std::min(out.size(), t + 5); ++j) {
                if (out[j].kind == TokenKind::Literal) break;
                if (auto g = noun_gender(j)) {
                    tok.gender_mark = g;
                    break;
                }
            }
            if (tok.gender_mark) continue;
            for (size_t j = t; j-- > 0 && j + 5 > t;) {
                if (out[j].kind == TokenKind::Literal) break;
                if (auto g = noun_gender(j)) {
                    tok.gender_mark = g;
                    break;
                }
            }
        }

        if (!out.empty()) stream.sentences.push_back(std::move(out));
    }
    return stream;
}

namespace {

std::string render_token(const EncodedToken& t) {
    switch (t.kind) {
        case TokenKind::Key:
            return print_key(t.key);
        case TokenKind::Literal: {
            std::string out = "\"";
            for (char c : t.literal) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            out += '"';
            return out;
        }
        case TokenKind::Stem: {
            std::string out = t.lemma;
            if (t.gender_mark)
                out += t.gender_mark == Gender::Feminine ? "-f" : "-m";
            if (t.plural_mark) out += "+";
            if (t.tense) {
                out += ":" + tense_name(*t.tense);
                if (t.person) out += ":" + person_name(*t.person);
            }
            return out;
        }
    }
    return "";
}

EncodedToken parse_token(const std::string& s) {
    if (s.empty()) throw ParseError("empty stream token");
    if (s[0] == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw ParseError("unterminated literal: " + s);
        std::string text;
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            if (s[i] == '\\' && i + 2 < s.size()) ++i;
            text += s[i];
        }
        return EncodedToken::make_literal(text);
    }
    // bare "a" is the preposition stem; the article key prints as a1..a4
    if (s != "a") {
        bool key_shape = s == "&" || s == "+" || s == "I." ||
                         (!s.empty() && s[0] >= 'A' && s[0] <= 'Z') ||
                         (s.size() >= 2 && (s[0] == 'a' || s[0] == 'd') &&
                          (s[1] == '.' || (s[1] >= '0' && s[1] <= '9')));
        if (key_shape) return EncodedToken::make_key(parse_key_notation(s));
    }
    EncodedToken t;
    t.kind = TokenKind::Stem;
    size_t i = 0;
    while (i < s.size() && s[i] != ':' && s[i] != '+' &&
           !(s[i] == '-' && i + 1 < s.size() && (s[i + 1] == 'm' || s[i + 1] == 'f') &&
             (i + 2 == s.size() || s[i + 2] == ':' || s[i + 2] == '+')))
        ++i;
    t.lemma = s.substr(0, i);
    if (t.lemma.empty()) throw ParseError("bad stream token: " + s);
    if (i < s.size() && s[i] == '-') {
        t.gender_mark = s[i + 1] == 'f' ? Gender::Feminine : Gender::Masculine;
        i += 2;
    }
    if (i < s.size() && s[i] == '+') {
        t.plural_mark = true;
        ++i;
    }
    if (i < s.size()) {
        if (s[i] != ':') throw ParseError("bad stream token: " + s);
        std::string rest = s.substr(i + 1);
        auto colon = rest.find(':');
        std::string tense_part = colon == std::string::npos ? rest : rest.substr(0, colon);
        auto tense = parse_tense(tense_part);
        if (!tense) throw ParseError("bad tense ideogram in: " + s);
        t.tense = tense;
        if (colon != std::string::npos) {
            auto pn = parse_person(rest.substr(colon + 1));
            if (!pn) throw ParseError("bad person in: " + s);
            t.person = pn;
        }
    }
    t.pos = t.tense ? PartOfSpeech::Verb : PartOfSpeech::Other;
    return t;
}

} // namespace

std::string render_stream(const EncodedStream& stream) {
    std::string out;
    for (size_t s = 0; s < stream.sentences.size(); ++s) {
        if (s) out += "\n";
        for (size_t t = 0; t < stream.sentences[s].size(); ++t) {
            if (t) out += " ";
            out += render_token(stream.sentences[s][t]);
        }
    }
    return out;
}

EncodedStream parse_stream(const std::string& text) {
    EncodedStream stream;
    std::string line;
    size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        std::vector<EncodedToken> sentence;
        size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ') {
                ++i;
                continue;
            }
            size_t start = i;
            if (line[i] == '"') {
                ++i;
                while (i < line.size() && line[i] != '"') {
                    if (line[i] == '\\') ++i;
                    ++i;
                }
                if (i < line.size()) ++i;
            } else {
                while (i < line.size() && line[i] != ' ') ++i;
            }
            sentence.push_back(parse_token(line.substr(start, i - start)));
        }
        if (!sentence.empty()) stream.sentences.push_back(std::move(sentence));
        if (nl == std::string::npos) break;
    }
    return stream;
}

} // namespace pucci
