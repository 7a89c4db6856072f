#include "pucci/decoder.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pucci/errors.hpp"
#include "pucci/textutil.hpp"

namespace pucci {

namespace {

PatternElem parse_pattern_elem(const std::string& s) {
    PatternElem e;
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string part;
        while (std::getline(ss, part, ',')) {
            auto neq = part.find("!=");
            auto eq = part.find('=');
            PatternElem::Test t;
            if (neq != std::string::npos) {
                t.key = part.substr(0, neq);
                t.value = part.substr(neq + 2);
                t.negated = true;
            } else if (eq != std::string::npos) {
                t.key = part.substr(0, eq);
                t.value = part.substr(eq + 1);
            } else {
                throw ParseError("bad pattern test '" + part + "'");
            }
            e.tests.push_back(std::move(t));
        }
        if (e.tests.empty()) throw ParseError("empty pattern element '" + s + "'");
        return e;
    }
    e.word = s;
    return e;
}

bool token_has(const DraftToken& t, const std::string& key, const std::string& value) {
    if (key == "word") return t.surface == value;
    if (key == "lemma") return t.lemma == value;
    if (key == "pos") {
        auto p = parse_pos(value);
        return p && t.pos == *p;
    }
    if (key == "finite") return t.finite == (value == "1");
    if (key == "poss") return t.possessive == (value == "1");
    if (key == "punct") return t.punct == (value == "1");
    if (key == "vstart") return text::starts_with_vowel(t.surface) == (value == "1");
    if (key == "gender") {
        if (!t.gender) return false;
        if (value == "m") return *t.gender == Gender::Masculine;
        if (value == "f") return *t.gender == Gender::Feminine;
        return *t.gender == Gender::Neuter;
    }
    if (key == "number") {
        if (!t.number) return false;
        return value == "pl" ? *t.number == Number::Plural : *t.number == Number::Singular;
    }
    if (key == "tense") {
        auto id = parse_tense(value);
        return id && t.tense == *id;
    }
    throw ParseError("unknown pattern feature '" + key + "'");
}

bool elem_matches(const PatternElem& e, const DraftToken& t) {
    if (e.word) return !t.punct && t.surface == *e.word;
    for (const auto& test : e.tests) {
        bool ok = token_has(t, test.key, test.value);
        if (test.negated ? ok : !ok) return false;
    }
    return true;
}

} // namespace

std::vector<CorrectionRule> load_correction_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open correction rules: " + path);
    std::vector<CorrectionRule> rules;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 4)
            throw LoadError("correction rules " + path + ":" + std::to_string(lineno) +
                            ": expected 4 tab-separated fields");
        CorrectionRule r;
        if (fields[0] == "syntactic") r.stage = RuleStage::Syntactic;
        else if (fields[0] == "morphological") r.stage = RuleStage::Morphological;
        else if (fields[0] == "differential") r.stage = RuleStage::Differential;
        else
            throw LoadError("correction rules " + path + ":" + std::to_string(lineno) +
                            ": bad stage '" + fields[0] + "'");
        r.priority = std::stoi(fields[1]);
        try {
            std::stringstream ps(fields[2]);
            std::string item;
            while (ps >> item) r.pattern.push_back(parse_pattern_elem(item));
            std::stringstream rs(fields[3]);
            while (rs >> item) {
                RewriteElem e;
                if (item.size() >= 2 && item[0] == '$') {
                    e.ref = std::stoi(item.substr(1));
                    if (e.ref < 1 || e.ref > static_cast<int>(r.pattern.size()))
                        throw ParseError("rewrite reference out of range: " + item);
                } else {
                    e.literal = item;
                }
                r.rewrite.push_back(std::move(e));
            }
        } catch (const ParseError& e) {
            throw LoadError("correction rules " + path + ":" + std::to_string(lineno) +
                            ": " + e.what());
        }
        if (r.pattern.empty())
            throw LoadError("correction rules " + path + ":" + std::to_string(lineno) +
                            ": empty pattern");
        rules.push_back(std::move(r));
    }
    std::stable_sort(rules.begin(), rules.end(),
                     [](const CorrectionRule& a, const CorrectionRule& b) {
                         return a.priority < b.priority;
                     });
    return rules;
}

namespace {

DraftToken literal_token(const std::string& word) {
    DraftToken t;
    t.surface = word;
    t.lemma = word;
    t.punct = text::is_punct_token(word);
    return t;
}

// Applies one stage's rules to fixpoint. Throws when the step budget
// (|tokens| x |rules|) is exhausted, which flags a non-terminating rule.
std::vector<DraftToken> apply_rules(std::vector<DraftToken> tokens,
                                    const std::vector<CorrectionRule>& all,
                                    RuleStage stage) {
    std::vector<const CorrectionRule*> rules;
    for (const CorrectionRule& r : all)
        if (r.stage == stage) rules.push_back(&r);
    if (rules.empty()) return tokens;
    size_t budget = (tokens.size() + 1) * rules.size() * 4;
    size_t steps = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const CorrectionRule* rule : rules) {
            size_t i = 0;
            while (i + rule->pattern.size() <= tokens.size()) {
                bool match = true;
                for (size_t k = 0; k < rule->pattern.size(); ++k) {
                    if (!elem_matches(rule->pattern[k], tokens[i + k])) {
                        match = false;
                        break;
                    }
                }
                if (!match) {
                    ++i;
                    continue;
                }
                std::vector<DraftToken> replacement;
                for (const RewriteElem& e : rule->rewrite) {
                    if (e.ref > 0) replacement.push_back(tokens[i + e.ref - 1]);
                    else replacement.push_back(literal_token(e.literal));
                }
                tokens.erase(tokens.begin() + i, tokens.begin() + i + rule->pattern.size());
                tokens.insert(tokens.begin() + i, replacement.begin(), replacement.end());
                i += replacement.size();
                changed = true;
                if (++steps > budget)
                    throw Error("correction stage exceeded its step budget (rule priority " +
                                std::to_string(rule->priority) + ")");
            }
        }
    }
    return tokens;
}

} // namespace

std::vector<DraftToken> realize(const EncodedStream& stream,
                                const KeyRealizationTable& keys, const Lexicon& lex) {
    std::vector<DraftToken> out;
    for (const auto& sentence : stream.sentences) {
        // target gender/number of every noun stem, for key agreement
        std::vector<std::optional<Gender>> noun_gender(sentence.size());
        std::vector<std::optional<Number>> noun_number(sentence.size());
        for (size_t t = 0; t < sentence.size(); ++t) {
            const EncodedToken& tok = sentence[t];
            if (tok.kind != TokenKind::Stem) continue;
            const LexiconEntry* e = lex.find(tok.lemma, PartOfSpeech::Noun);
            if (!e) continue;
            noun_gender[t] = e->target_gender ? e->target_gender : e->source_gender;
            noun_number[t] = tok.plural_mark ? Number::Plural : Number::Singular;
        }
        for (size_t t = 0; t < sentence.size(); ++t) {
            const EncodedToken& tok = sentence[t];
            switch (tok.kind) {
                case TokenKind::Literal: {
                    DraftToken d;
                    d.surface = tok.literal;
                    d.lemma = tok.literal;
                    d.punct = text::is_punct_token(tok.literal);
                    out.push_back(d);
                    break;
                }
                case TokenKind::Stem: {
                    const LexiconEntry* entry =
                        tok.tense ? lex.find(tok.lemma, PartOfSpeech::Verb)
                                  : lex.find(tok.lemma, tok.pos);
                    if (!entry) entry = lex.find_any(tok.lemma);
                    if (!entry)
                        throw CoverageError("no dictionary entry to realize stem '" +
                                            tok.lemma + "'");
                    MorphFeatures f;
                    f.tense = tok.tense;
                    f.person = tok.person;
                    f.number = tok.plural_mark ? Number::Plural : Number::Singular;
                    if (entry->pos == PartOfSpeech::Adjective ||
                        entry->pos == PartOfSpeech::Numeral)
                        f.gender = tok.gender_mark; // source-side agreement first
                    if (entry->pos == PartOfSpeech::Verb && tok.tense == TenseIdeogram::ID8)
                        out.push_back(literal_token("en")); // French gerundive marker
                    DraftToken d;
                    d.surface = lex.realize_target(*entry, f);
                    d.lemma = entry->target_lemma;
                    d.pos = entry->pos;
                    d.tense = tok.tense;
                    d.finite = tok.person.has_value();
                    if (entry->pos == PartOfSpeech::Noun) {
                        d.gender = entry->target_gender ? entry->target_gender
                                                        : entry->source_gender;
                        d.number = f.number;
                    } else if (entry->pos == PartOfSpeech::Adjective ||
                               entry->pos == PartOfSpeech::Numeral) {
                        d.gender = tok.gender_mark;
                        d.number = tok.plural_mark ? std::optional(Number::Plural)
                                                   : std::nullopt;
                    } else if (tok.tense == TenseIdeogram::ID9 && tok.plural_mark) {
                        d.number = Number::Plural;
                    }
                    out.push_back(d);
                    break;
                }
                case TokenKind::Key: {
                    const GrammaticalKey& key = tok.key;
                    AgreementContext ctx;
                    bool governs_noun = key.category == KeyCategory::Article ||
                                        key.category == KeyCategory::DemonstrativeNear ||
                                        key.category == KeyCategory::DemonstrativeFar ||
                                        key.category == KeyCategory::Possessive;
                    if (governs_noun) {
                        for (size_t j = t + 1; j < std::min(sentence.size(), t + 6); ++j) {
                            const EncodedToken& n = sentence[j];
                            if (n.kind == TokenKind::Literal) break;
                            if (n.kind == TokenKind::Key) break;
                            if (n.kind == TokenKind::Stem && n.tense && n.person) break;
                            if (noun_gender[j] || noun_number[j]) {
                                ctx.gender = noun_gender[j];
                                ctx.number = noun_number[j];
                                break;
                            }
                        }
                        if (!ctx.gender && !ctx.number) {
                            ctx.gender = key.gender;
                            ctx.number = key.number;
                        }
                    } else {
                        ctx.gender = key.gender;
                        ctx.number = key.number;
                    }
                    const std::string& surface = keys.lookup(key, ctx);
                    std::stringstream ss(surface);
                    std::string word;
                    while (ss >> word) {
                        DraftToken d;
                        d.surface = word;
                        d.lemma = word;
                        d.gender = ctx.gender;
                        d.number = ctx.number;
                        d.possessive = key.category == KeyCategory::Possessive;
                        out.push_back(d);
                    }
                    break;
                }
            }
        }
    }
    return out;
}

std::vector<DraftToken> correct_syntax(std::vector<DraftToken> draft,
                                       const std::vector<CorrectionRule>& rules) {
    return apply_rules(std::move(draft), rules, RuleStage::Syntactic);
}

std::vector<DraftToken> correct_morphology(std::vector<DraftToken> draft,
                                           const std::vector<CorrectionRule>& rules,
                                           const Lexicon& lex) {
    draft = apply_rules(std::move(draft), rules, RuleStage::Morphological);

    auto sentence_break = [&](size_t i) {
        return draft[i].punct && (draft[i].surface.find('.') != std::string::npos ||
                                  draft[i].surface == "!" || draft[i].surface == "?");
    };

    // nouns: re-derive the surface from lemma and number (irregular plurals)
    for (DraftToken& t : draft) {
        if (t.pos != PartOfSpeech::Noun || t.lemma.empty()) continue;
        const LexiconEntry* e = lex.find_target(t.lemma, PartOfSpeech::Noun);
        if (!e) continue;
        MorphFeatures f;
        f.number = t.number;
        t.surface = lex.realize_target(*e, f);
    }

    // adjectives and numerals agree with the nearest noun (forward, then back)
    for (size_t i = 0; i < draft.size(); ++i) {
        DraftToken& t = draft[i];
        bool adjective_like =
            t.pos == PartOfSpeech::Adjective || t.pos == PartOfSpeech::Numeral;
        if (!adjective_like) continue;
        const DraftToken* noun = nullptr;
        for (size_t j = i + 1; j < std::min(draft.size(), i + 5); ++j) {
            if (draft[j].punct || draft[j].finite) break;
            if (draft[j].pos == PartOfSpeech::Noun) {
                noun = &draft[j];
                break;
            }
        }
        if (!noun) {
            for (size_t j = i; j-- > 0 && j + 5 > i;) {
                if (draft[j].finite) break;
                if (draft[j].pos == PartOfSpeech::Noun) {
                    noun = &draft[j];
                    break;
                }
            }
        }
        if (!noun) continue;
        const LexiconEntry* e = lex.find_target(t.lemma);
        if (!e) continue;
        MorphFeatures f;
        f.gender = noun->gender;
        f.number = noun->number;
        t.surface = lex.realize_target(*e, f);
        t.gender = noun->gender;
        t.number = noun->number;
    }

    // past participles agree with the nearest preceding noun or gendered word
    for (size_t i = 0; i < draft.size(); ++i) {
        DraftToken& t = draft[i];
        if (t.tense != TenseIdeogram::ID9) continue;
        const DraftToken* subject = nullptr;
        for (size_t j = i; j-- > 0;) {
            if (sentence_break(j)) break;
            if (draft[j].pos == PartOfSpeech::Noun || draft[j].gender) {
                subject = &draft[j];
                break;
            }
        }
        if (!subject) continue;
        const LexiconEntry* e = lex.find_target(t.lemma, PartOfSpeech::Verb);
        if (!e) continue;
        MorphFeatures f;
        f.tense = TenseIdeogram::ID9;
        f.gender = subject->gender;
        f.number = subject->number;
        t.surface = lex.realize_target(*e, f);
        t.gender = subject->gender;
        t.number = subject->number;
    }
    return draft;
}

std::string apply_differential(std::vector<DraftToken> draft,
                               const std::vector<CorrectionRule>& rules) {
    draft = apply_rules(std::move(draft), rules, RuleStage::Differential);

    static const std::string attach_left = ",.;:!?";
    std::string out;
    bool sentence_start = true;
    bool after_apostrophe = false;
    for (const DraftToken& t : draft) {
        if (t.surface.empty()) continue;
        bool left = t.punct && attach_left.find(t.surface[0]) != std::string::npos;
        if (!out.empty() && !left && !after_apostrophe) out += ' ';
        std::string word = t.surface;
        if (sentence_start && !t.punct) {
            word = text::capitalize_first(word);
            sentence_start = false;
        }
        out += word;
        after_apostrophe = !word.empty() && word.back() == '\'';
        if (t.punct && (t.surface.find('.') != std::string::npos || t.surface == "!" ||
                        t.surface == "?"))
            sentence_start = true;
    }
    return out;
}

Engine Engine::load(const std::string& data_dir) {
    Engine e{Lexicon::load(data_dir + "/lexicon.tsv"),
             KeyRealizationTable::load(data_dir + "/keys.tsv", "it"),
             KeyRealizationTable::load(data_dir + "/keys.tsv", "fr"),
             load_simplification_rules(data_dir + "/simplify.tsv"),
             load_correction_rules(data_dir + "/correct.tsv")};
    return e;
}

std::string translate(const std::string& text_in, const Engine& engine) {
    auto stage = [](const char* name, auto&& fn) -> decltype(fn()) {
        try {
            return fn();
        } catch (const Error& e) {
            throw Error(std::string(name) + ": " + e.what());
        }
    };
    std::vector<std::string> paragraphs = text::split_paragraphs(text_in);
    std::string out;
    for (size_t p = 0; p < paragraphs.size(); ++p) {
        if (p) out += "\n\n";
        std::string simplified = stage("simplify", [&] {
            return simplify(paragraphs[p], engine.simplification);
        });
        EncodedStream stream =
            stage("encode", [&] { return encode(simplified, engine.lexicon); });
        std::vector<DraftToken> draft = stage("realize", [&] {
            return realize(stream, engine.target_keys, engine.lexicon);
        });
        draft = stage("correct-syntax",
                      [&] { return correct_syntax(std::move(draft), engine.corrections); });
        draft = stage("correct-morphology", [&] {
            return correct_morphology(std::move(draft), engine.corrections, engine.lexicon);
        });
        out += stage("differential", [&] {
            return apply_differential(std::move(draft), engine.corrections);
        });
    }
    return out;
}

std::string translate(const std::string& text_in, const TranslateConfig& config) {
    if (config.pair != "it-fr")
        throw Error("unsupported language pair '" + config.pair + "' (only it-fr)");
    Engine engine = Engine::load(config.data_dir);
    return translate(text_in, engine);
}

} // namespace pucci
