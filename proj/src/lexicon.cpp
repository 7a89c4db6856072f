#include "pucci/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "pucci/errors.hpp"
#include "pucci/textutil.hpp"

namespace pucci {

std::string pos_name(PartOfSpeech pos) {
    switch (pos) {
        case PartOfSpeech::Noun: return "noun";
        case PartOfSpeech::Verb: return "verb";
        case PartOfSpeech::Adjective: return "adjective";
        case PartOfSpeech::Adverb: return "adverb";
        case PartOfSpeech::Preposition: return "preposition";
        case PartOfSpeech::ProperNoun: return "properNoun";
        case PartOfSpeech::Numeral: return "numeral";
        case PartOfSpeech::Other: return "other";
    }
    return "?";
}

std::optional<PartOfSpeech> parse_pos(std::string_view s) {
    if (s == "noun") return PartOfSpeech::Noun;
    if (s == "verb") return PartOfSpeech::Verb;
    if (s == "adjective" || s == "adj") return PartOfSpeech::Adjective;
    if (s == "adverb" || s == "adv") return PartOfSpeech::Adverb;
    if (s == "preposition" || s == "prep") return PartOfSpeech::Preposition;
    if (s == "properNoun" || s == "proper") return PartOfSpeech::ProperNoun;
    if (s == "numeral") return PartOfSpeech::Numeral;
    if (s == "other") return PartOfSpeech::Other;
    return std::nullopt;
}

std::string person_name(PersonNumber pn) {
    return std::to_string(pn.person) + (pn.number == Number::Plural ? "pl" : "sg");
}

std::optional<PersonNumber> parse_person(std::string_view s) {
    if (s.size() != 3) return std::nullopt;
    if (s[0] < '1' || s[0] > '3') return std::nullopt;
    PersonNumber pn;
    pn.person = s[0] - '0';
    if (s.substr(1) == "sg") pn.number = Number::Singular;
    else if (s.substr(1) == "pl") pn.number = Number::Plural;
    else return std::nullopt;
    return pn;
}

namespace {

constexpr const char* kUndef = "-";

// cell table rows are six suffixes: 1sg 2sg 3sg 1pl 2pl 3pl; "-" = undefined
void fill(MorphParadigm& p, TenseIdeogram t, const char* c1, const char* c2,
          const char* c3, const char* c4, const char* c5, const char* c6) {
    const char* cells[6] = {c1, c2, c3, c4, c5, c6};
    for (int i = 0; i < 6; ++i)
        p.cells[static_cast<int>(t) - 1][i % 3][i / 3] = cells[i];
}

std::vector<MorphParadigm> build_italian() {
    std::vector<MorphParadigm> ps;
    {
        MorphParadigm p;
        p.language = "it"; p.paradigm_id = "are"; p.lemma_suffix = "are";
        fill(p, TenseIdeogram::ID2, "o", "i", "a", "iamo", "ate", "ano");
        fill(p, TenseIdeogram::ID3, "avo", "avi", "ava", "avamo", "avate", "avano");
        fill(p, TenseIdeogram::ID4, "ai", "asti", "\xc3\xb2", "ammo", "aste", "arono");
        fill(p, TenseIdeogram::ID5, "er\xc3\xb2", "erai", "er\xc3\xa0", "eremo", "erete", "eranno");
        fill(p, TenseIdeogram::ID6, "i", "i", "i", "iamo", "iate", "ino");
        fill(p, TenseIdeogram::ID7, "assi", "assi", "asse", "assimo", "aste", "assero");
        fill(p, TenseIdeogram::ID10, kUndef, "a", kUndef, "iamo", "ate", kUndef);
        fill(p, TenseIdeogram::ID11, "erei", "eresti", "erebbe", "eremmo", "ereste", "erebbero");
        p.participle = "ato"; p.gerund = "ando";
        ps.push_back(p);
    }
    {
        MorphParadigm p;
        p.language = "it"; p.paradigm_id = "ere"; p.lemma_suffix = "ere";
        fill(p, TenseIdeogram::ID2, "o", "i", "e", "iamo", "ete", "ono");
        fill(p, TenseIdeogram::ID3, "evo", "evi", "eva", "evamo", "evate", "evano");
        fill(p, TenseIdeogram::ID4, "ei", "esti", "\xc3\xa9", "emmo", "este", "erono");
        fill(p, TenseIdeogram::ID5, "er\xc3\xb2", "erai", "er\xc3\xa0", "eremo", "erete", "eranno");
        fill(p, TenseIdeogram::ID6, "a", "a", "a", "iamo", "iate", "ano");
        fill(p, TenseIdeogram::ID7, "essi", "essi", "esse", "essimo", "este", "essero");
        fill(p, TenseIdeogram::ID10, kUndef, "i", kUndef, "iamo", "ete", kUndef);
        fill(p, TenseIdeogram::ID11, "erei", "eresti", "erebbe", "eremmo", "ereste", "erebbero");
        p.participle = "uto"; p.gerund = "endo";
        ps.push_back(p);
    }
    {
        MorphParadigm p;
        p.language = "it"; p.paradigm_id = "ire"; p.lemma_suffix = "ire";
        fill(p, TenseIdeogram::ID2, "o", "i", "e", "iamo", "ite", "ono");
        fill(p, TenseIdeogram::ID3, "ivo", "ivi", "iva", "ivamo", "ivate", "ivano");
        fill(p, TenseIdeogram::ID4, "ii", "isti", "\xc3\xac", "immo", "iste", "irono");
        fill(p, TenseIdeogram::ID5, "ir\xc3\xb2", "irai", "ir\xc3\xa0", "iremo", "irete", "iranno");
        fill(p, TenseIdeogram::ID6, "a", "a", "a", "iamo", "iate", "ano");
        fill(p, TenseIdeogram::ID7, "issi", "issi", "isse", "issimo", "iste", "issero");
        fill(p, TenseIdeogram::ID10, kUndef, "i", kUndef, "iamo", "ite", kUndef);
        fill(p, TenseIdeogram::ID11, "irei", "iresti", "irebbe", "iremmo", "ireste", "irebbero");
        p.participle = "ito"; p.gerund = "endo";
        ps.push_back(p);
    }
    return ps;
}

std::vector<MorphParadigm> build_french() {
    std::vector<MorphParadigm> ps;
    {
        MorphParadigm p;
        p.language = "fr"; p.paradigm_id = "er"; p.lemma_suffix = "er";
        fill(p, TenseIdeogram::ID2, "e", "es", "e", "ons", "ez", "ent");
        fill(p, TenseIdeogram::ID3, "ais", "ais", "ait", "ions", "iez", "aient");
        fill(p, TenseIdeogram::ID4, "ai", "as", "a", "\xc3\xa2mes", "\xc3\xa2tes", "\xc3\xa8rent");
        fill(p, TenseIdeogram::ID5, "erai", "eras", "era", "erons", "erez", "eront");
        fill(p, TenseIdeogram::ID6, "e", "es", "e", "ions", "iez", "ent");
        fill(p, TenseIdeogram::ID7, "asse", "asses", "\xc3\xa2t", "assions", "assiez", "assent");
        fill(p, TenseIdeogram::ID10, kUndef, "e", kUndef, "ons", "ez", kUndef);
        fill(p, TenseIdeogram::ID11, "erais", "erais", "erait", "erions", "eriez", "eraient");
        p.participle = "\xc3\xa9"; p.gerund = "ant";
        ps.push_back(p);
    }
    {
        MorphParadigm p;
        p.language = "fr"; p.paradigm_id = "ir"; p.lemma_suffix = "ir";
        fill(p, TenseIdeogram::ID2, "is", "is", "it", "issons", "issez", "issent");
        fill(p, TenseIdeogram::ID3, "issais", "issais", "issait", "issions", "issiez", "issaient");
        fill(p, TenseIdeogram::ID4, "is", "is", "it", "\xc3\xaemes", "\xc3\xaetes", "irent");
        fill(p, TenseIdeogram::ID5, "irai", "iras", "ira", "irons", "irez", "iront");
        fill(p, TenseIdeogram::ID6, "isse", "isses", "isse", "issions", "issiez", "issent");
        fill(p, TenseIdeogram::ID7, "isse", "isses", "\xc3\xaet", "issions", "issiez", "issent");
        fill(p, TenseIdeogram::ID10, kUndef, "is", kUndef, "issons", "issez", kUndef);
        fill(p, TenseIdeogram::ID11, "irais", "irais", "irait", "irions", "iriez", "iraient");
        p.participle = "i"; p.gerund = "issant";
        ps.push_back(p);
    }
    {
        MorphParadigm p;
        p.language = "fr"; p.paradigm_id = "re"; p.lemma_suffix = "re";
        fill(p, TenseIdeogram::ID2, "s", "s", "", "ons", "ez", "ent");
        fill(p, TenseIdeogram::ID3, "ais", "ais", "ait", "ions", "iez", "aient");
        fill(p, TenseIdeogram::ID4, "is", "is", "it", "\xc3\xaemes", "\xc3\xaetes", "irent");
        fill(p, TenseIdeogram::ID6, "e", "es", "e", "ions", "iez", "ent");
        fill(p, TenseIdeogram::ID7, "isse", "isses", "\xc3\xaet", "issions", "issiez", "issent");
        fill(p, TenseIdeogram::ID10, kUndef, "s", kUndef, "ons", "ez", kUndef);
        fill(p, TenseIdeogram::ID5, "rai", "ras", "ra", "rons", "rez", "ront");
        fill(p, TenseIdeogram::ID11, "rais", "rais", "rait", "rions", "riez", "raient");
        p.participle = "u"; p.gerund = "ant";
        ps.push_back(p);
    }
    return ps;
}

const std::string* cell_suffix(const MorphParadigm& p, TenseIdeogram t, PersonNumber pn) {
    const std::string& s =
        p.cells[static_cast<int>(t) - 1][pn.person - 1][pn.number == Number::Plural];
    if (s == kUndef) return nullptr;
    return &s;
}

// French orthography: -cer keeps the soft c (commença), -ger keeps soft g.
std::string attach_fr(const std::string& stem, const std::string& suffix) {
    if (stem.empty() || suffix.empty()) return stem + suffix;
    unsigned char first = static_cast<unsigned char>(suffix[0]);
    bool hard = first == 'a' || first == 'o' || first == 0xC3; // â/ô bytes start 0xC3
    if (hard && suffix.size() >= 2 && first == 0xC3) {
        unsigned char second = static_cast<unsigned char>(suffix[1]);
        hard = second == 0xA2 || second == 0xB4; // â, ô
    }
    if (hard) {
        if (stem.back() == 'c') return stem.substr(0, stem.size() - 1) + "\xc3\xa7" + suffix;
        if (stem.back() == 'g') return stem + "e" + suffix;
    }
    return stem + suffix;
}

std::string feature_label(TenseIdeogram t, std::optional<PersonNumber> pn) {
    std::string label = "id" + std::to_string(static_cast<int>(t));
    if (pn) label += "." + person_name(*pn);
    return label;
}

std::optional<Gender> parse_gender_field(const std::string& s) {
    if (s == "m") return Gender::Masculine;
    if (s == "f") return Gender::Feminine;
    return std::nullopt;
}

bool ends_with(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

} // namespace

const std::vector<MorphParadigm>& italian_paradigms() {
    static const std::vector<MorphParadigm> ps = build_italian();
    return ps;
}

const std::vector<MorphParadigm>& french_paradigms() {
    static const std::vector<MorphParadigm> ps = build_french();
    return ps;
}

Lexicon Lexicon::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open lexicon: " + path);
    Lexicon lex;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 6)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                            ": expected 6 tab-separated fields");
        LexiconEntry e;
        e.source_lemma = fields[0];
        auto pos = parse_pos(fields[1]);
        if (!pos)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                            ": bad part of speech '" + fields[1] + "'");
        e.pos = *pos;
        e.source_gender = parse_gender_field(fields[2]);
        if (fields[2] != "-" && !e.source_gender)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                            ": bad source gender '" + fields[2] + "'");
        e.target_lemma = fields[3];
        e.target_gender = parse_gender_field(fields[4]);
        if (fields[4] != "-" && !e.target_gender)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                            ": bad target gender '" + fields[4] + "'");
        if ((e.pos == PartOfSpeech::Noun || e.pos == PartOfSpeech::Adjective) &&
            !e.source_gender)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) + ": " +
                            pos_name(e.pos) + " '" + e.source_lemma +
                            "' lacks source gender");
        if (e.pos == PartOfSpeech::Verb && e.source_gender)
            throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                            ": verb '" + e.source_lemma + "' must not carry gender");
        if (fields[5] != "-") {
            std::stringstream irr(fields[5]);
            std::string pair;
            while (std::getline(irr, pair, ';')) {
                auto eq = pair.find('=');
                if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size())
                    throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                                    ": bad irregular form '" + pair + "'");
                e.irregular[pair.substr(0, eq)] = pair.substr(eq + 1);
            }
        }
        auto key = std::make_pair(e.source_lemma, e.pos);
        auto it = lex.by_lemma_pos_.find(key);
        if (it != lex.by_lemma_pos_.end()) {
            const LexiconEntry& prev = lex.entries_[it->second];
            if (prev.target_lemma != e.target_lemma ||
                prev.target_gender != e.target_gender)
                throw LoadError("lexicon " + path + ":" + std::to_string(lineno) +
                                ": conflicting duplicate for '" + e.source_lemma + "' (" +
                                pos_name(e.pos) + ")");
            for (const auto& [k, v] : e.irregular)
                lex.entries_[it->second].irregular[k] = v;
            continue;
        }
        lex.by_lemma_pos_[key] = lex.entries_.size();
        lex.by_lemma_.emplace(e.source_lemma, lex.entries_.size());
        lex.entries_.push_back(std::move(e));
    }
    return lex;
}

const LexiconEntry* Lexicon::find(const std::string& lemma, PartOfSpeech pos) const {
    auto it = by_lemma_pos_.find(std::make_pair(lemma, pos));
    return it == by_lemma_pos_.end() ? nullptr : &entries_[it->second];
}

const LexiconEntry* Lexicon::find_any(const std::string& lemma) const {
    auto it = by_lemma_.find(lemma);
    return it == by_lemma_.end() ? nullptr : &entries_[it->second];
}

const LexiconEntry* Lexicon::find_target(const std::string& target_lemma,
                                         std::optional<PartOfSpeech> pos) const {
    for (const LexiconEntry& e : entries_)
        if (e.target_lemma == target_lemma && (!pos || e.pos == *pos)) return &e;
    return nullptr;
}

const LexiconEntry& Lexicon::translate_lemma(const std::string& lemma,
                                             PartOfSpeech pos) const {
    const LexiconEntry* e = find(lemma, pos);
    if (!e)
        throw LookupError("no lexicon entry for lemma '" + lemma + "' (" + pos_name(pos) +
                          ")");
    return *e;
}

std::vector<Analysis> Lexicon::analyze(const std::string& word) const {
    struct Candidate {
        Analysis a;
        size_t stem_len;
        size_t entry_idx;
        int tense_rank; // for deterministic verb ordering
    };
    std::vector<Candidate> cands;
    auto push = [&](const LexiconEntry& e, MorphFeatures f, size_t stem_len) {
        size_t idx = static_cast<size_t>(&e - entries_.data());
        int rank = f.tense ? static_cast<int>(*f.tense) : 0;
        cands.push_back({Analysis{&e, f}, stem_len, idx, rank});
    };

    for (const LexiconEntry& e : entries_) {
        switch (e.pos) {
            case PartOfSpeech::Noun: {
                MorphFeatures f;
                f.gender = e.source_gender;
                std::string pl = e.irregular.count("s:pl") ? e.irregular.at("s:pl")
                                                           : std::string();
                if (pl.empty()) {
                    if (ends_with(e.source_lemma, "io"))
                        pl = e.source_lemma.substr(0, e.source_lemma.size() - 2) + "i";
                    else if (ends_with(e.source_lemma, "o") || ends_with(e.source_lemma, "e"))
                        pl = e.source_lemma.substr(0, e.source_lemma.size() - 1) + "i";
                    else if (ends_with(e.source_lemma, "a"))
                        pl = e.source_lemma.substr(0, e.source_lemma.size() - 1) + "e";
                    else
                        pl = e.source_lemma;
                }
                if (word == e.source_lemma) {
                    f.number = Number::Singular;
                    push(e, f, word.size());
                } else if (word == pl) {
                    f.number = Number::Plural;
                    push(e, f, word.size() - 1);
                }
                break;
            }
            case PartOfSpeech::Adjective: {
                // -o class: o/a/i/e; -e class: e/i; anything else invariant
                const std::string& lemma = e.source_lemma;
                auto push_adj = [&](std::optional<Gender> g, Number n, size_t stem) {
                    MorphFeatures f;
                    f.gender = g;
                    f.number = n;
                    push(e, f, stem);
                };
                if (ends_with(lemma, "o")) {
                    std::string stem = lemma.substr(0, lemma.size() - 1);
                    std::string mpl = ends_with(lemma, "io") ? stem : stem + "i";
                    if (word == stem + "o") push_adj(Gender::Masculine, Number::Singular, stem.size());
                    else if (word == stem + "a") push_adj(Gender::Feminine, Number::Singular, stem.size());
                    else if (word == mpl) push_adj(Gender::Masculine, Number::Plural, stem.size());
                    else if (word == stem + "e") push_adj(Gender::Feminine, Number::Plural, stem.size());
                } else if (ends_with(lemma, "e")) {
                    std::string stem = lemma.substr(0, lemma.size() - 1);
                    if (word == lemma) push_adj(std::nullopt, Number::Singular, stem.size());
                    else if (word == stem + "i") push_adj(std::nullopt, Number::Plural, stem.size());
                } else if (word == lemma) {
                    push_adj(std::nullopt, Number::Singular, word.size());
                }
                break;
            }
            case PartOfSpeech::Verb: {
                // irregular cells first
                for (const auto& [label, surface] : e.irregular) {
                    if (label.size() < 2 || label[0] != 's' || label[1] != ':') continue;
                    std::string feat = label.substr(2);
                    // irregular participles still inflect for agreement
                    if (feat == "pp" && ends_with(surface, "o") && word != surface &&
                        word.size() == surface.size() &&
                        word.compare(0, word.size() - 1, surface, 0, surface.size() - 1) ==
                            0) {
                        MorphFeatures f;
                        f.tense = TenseIdeogram::ID9;
                        switch (word.back()) {
                            case 'a': f.gender = Gender::Feminine; f.number = Number::Singular; break;
                            case 'i': f.gender = Gender::Masculine; f.number = Number::Plural; break;
                            case 'e': f.gender = Gender::Feminine; f.number = Number::Plural; break;
                            default: continue;
                        }
                        push(e, f, word.size());
                        continue;
                    }
                    if (surface != word) continue;
                    MorphFeatures f;
                    if (feat == "pp") {
                        f.tense = TenseIdeogram::ID9;
                        f.gender = Gender::Masculine;
                        f.number = Number::Singular;
                    } else if (feat == "ger") {
                        f.tense = TenseIdeogram::ID8;
                    } else {
                        auto dot = feat.find('.');
                        std::string tense_part =
                            dot == std::string::npos ? feat : feat.substr(0, dot);
                        for (char& c : tense_part) c = static_cast<char>(std::toupper(c));
                        auto t = parse_tense(tense_part);
                        if (!t) continue;
                        f.tense = *t;
                        if (dot != std::string::npos) f.person = parse_person(feat.substr(dot + 1));
                    }
                    push(e, f, word.size());
                }
                if (word == e.source_lemma) {
                    MorphFeatures f;
                    f.tense = TenseIdeogram::ID1;
                    push(e, f, word.size());
                }
                for (const MorphParadigm& p : italian_paradigms()) {
                    if (!ends_with(e.source_lemma, p.lemma_suffix)) continue;
                    std::string stem =
                        e.source_lemma.substr(0, e.source_lemma.size() - p.lemma_suffix.size());
                    if (word.size() <= stem.size() || word.compare(0, stem.size(), stem) != 0)
                        continue;
                    std::string suffix = word.substr(stem.size());
                    for (int t = 0; t < kTenseCount; ++t) {
                        for (int person = 0; person < 3; ++person) {
                            for (int num = 0; num < 2; ++num) {
                                const std::string& cell = p.cells[t][person][num];
                                if (cell == kUndef || cell.empty() || cell != suffix) continue;
                                MorphFeatures f;
                                f.tense = static_cast<TenseIdeogram>(t + 1);
                                f.person = PersonNumber{person + 1, num ? Number::Plural
                                                                        : Number::Singular};
                                push(e, f, stem.size());
                            }
                        }
                    }
                    // participle with agreement endings, and gerund
                    if (!p.participle.empty() && suffix.size() == p.participle.size() &&
                        suffix.compare(0, suffix.size() - 1, p.participle, 0,
                                       p.participle.size() - 1) == 0) {
                        char last = suffix.back();
                        MorphFeatures f;
                        f.tense = TenseIdeogram::ID9;
                        if (last == 'o') { f.gender = Gender::Masculine; f.number = Number::Singular; }
                        else if (last == 'a') { f.gender = Gender::Feminine; f.number = Number::Singular; }
                        else if (last == 'i') { f.gender = Gender::Masculine; f.number = Number::Plural; }
                        else if (last == 'e') { f.gender = Gender::Feminine; f.number = Number::Plural; }
                        if (f.gender) push(e, f, stem.size());
                    }
                    if (suffix == p.gerund) {
                        MorphFeatures f;
                        f.tense = TenseIdeogram::ID8;
                        push(e, f, stem.size());
                    }
                }
                break;
            }
            default:
                if (word == e.source_lemma) push(e, MorphFeatures{}, word.size());
                break;
        }
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.stem_len != b.stem_len) return a.stem_len > b.stem_len;
        if (a.entry_idx != b.entry_idx) return a.entry_idx < b.entry_idx;
        return a.tense_rank < b.tense_rank;
    });
    std::vector<Analysis> out;
    out.reserve(cands.size());
    for (auto& c : cands) out.push_back(c.a);
    return out;
}

std::string Lexicon::realize_source(const LexiconEntry& entry, const MorphFeatures& f) const {
    if (entry.pos == PartOfSpeech::Verb && f.tense) {
        std::string label = "s:" + feature_label(*f.tense, f.person);
        if (auto it = entry.irregular.find(label); it != entry.irregular.end())
            return it->second;
        if (*f.tense == TenseIdeogram::ID9) {
            if (auto it = entry.irregular.find("s:pp"); it != entry.irregular.end())
                return it->second; // agreement applied by caller when needed
        }
        if (*f.tense == TenseIdeogram::ID1) return entry.source_lemma;
        for (const MorphParadigm& p : italian_paradigms()) {
            if (!ends_with(entry.source_lemma, p.lemma_suffix)) continue;
            std::string stem =
                entry.source_lemma.substr(0, entry.source_lemma.size() - p.lemma_suffix.size());
            if (*f.tense == TenseIdeogram::ID9) return stem + p.participle;
            if (*f.tense == TenseIdeogram::ID8) return stem + p.gerund;
            if (f.person) {
                if (const std::string* suf = cell_suffix(p, *f.tense, *f.person))
                    return stem + *suf;
            }
        }
        throw EncodeError("no Italian form for '" + entry.source_lemma + "' " +
                          feature_label(*f.tense, f.person));
    }
    return entry.source_lemma;
}

std::string Lexicon::realize_target(const LexiconEntry& entry, const MorphFeatures& f) const {
    auto irr = [&](const std::string& label) -> const std::string* {
        auto it = entry.irregular.find(label);
        return it == entry.irregular.end() ? nullptr : &it->second;
    };
    switch (entry.pos) {
        case PartOfSpeech::Verb: {
            if (!f.tense) return entry.target_lemma;
            if (const std::string* s = irr("t:" + feature_label(*f.tense, f.person)))
                return *s;
            if (*f.tense == TenseIdeogram::ID1) return entry.target_lemma;
            std::string pp_base;
            if (const std::string* s = irr("t:pp")) pp_base = *s;
            for (const MorphParadigm& p : french_paradigms()) {
                if (!ends_with(entry.target_lemma, p.lemma_suffix)) continue;
                std::string stem = entry.target_lemma.substr(
                    0, entry.target_lemma.size() - p.lemma_suffix.size());
                if (*f.tense == TenseIdeogram::ID9 && pp_base.empty())
                    pp_base = attach_fr(stem, p.participle);
                if (*f.tense == TenseIdeogram::ID8)
                    return attach_fr(stem, p.gerund);
                if (*f.tense != TenseIdeogram::ID9 && f.person) {
                    if (const std::string* suf = cell_suffix(p, *f.tense, *f.person))
                        return attach_fr(stem, *suf);
                }
                break;
            }
            if (*f.tense == TenseIdeogram::ID9 && !pp_base.empty()) {
                // past participles agree like regular adjectives
                std::string form = pp_base;
                if (f.gender == Gender::Feminine && !ends_with(form, "e")) form += "e";
                if (f.number == Number::Plural && !ends_with(form, "s")) form += "s";
                return form;
            }
            throw EncodeError("no French form for '" + entry.target_lemma + "' " +
                              feature_label(*f.tense, f.person));
        }
        case PartOfSpeech::Noun: {
            if (f.number == Number::Plural) {
                if (const std::string* s = irr("t:pl")) return *s;
                const std::string& l = entry.target_lemma;
                if (ends_with(l, "s") || ends_with(l, "x") || ends_with(l, "z")) return l;
                return l + "s";
            }
            return entry.target_lemma;
        }
        case PartOfSpeech::Adjective:
        case PartOfSpeech::Numeral: {
            bool fem = f.gender == Gender::Feminine;
            bool plural = f.number == Number::Plural;
            if (fem && plural) {
                if (const std::string* s = irr("t:fpl")) return *s;
            }
            if (!fem && plural) {
                if (const std::string* s = irr("t:mpl")) return *s;
            }
            std::string form = entry.target_lemma;
            if (fem) {
                if (const std::string* s = irr("t:f")) form = *s;
                else if (!ends_with(form, "e")) form += "e";
            }
            if (plural && !ends_with(form, "s") && !ends_with(form, "x")) form += "s";
            return form;
        }
        default:
            return entry.target_lemma;
    }
}

bool Lexicon::target_cell_defined(const LexiconEntry& entry, TenseIdeogram t,
                                  std::optional<PersonNumber> pn) const {
    if (entry.pos != PartOfSpeech::Verb) return false;
    if (entry.irregular.count("t:" + feature_label(t, pn))) return true;
    if (t == TenseIdeogram::ID1) return true;
    if (t == TenseIdeogram::ID9) {
        if (entry.irregular.count("t:pp")) return true;
    }
    for (const MorphParadigm& p : french_paradigms()) {
        if (!ends_with(entry.target_lemma, p.lemma_suffix)) continue;
        if (t == TenseIdeogram::ID9) return !p.participle.empty();
        if (t == TenseIdeogram::ID8) return !p.gerund.empty();
        if (pn) return cell_suffix(p, t, *pn) != nullptr;
        return false;
    }
    return false;
}

std::vector<SimplificationRule> load_simplification_rules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open simplification rules: " + path);
    std::vector<SimplificationRule> rules;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, '\t')) fields.push_back(f);
        if (fields.size() != 3)
            throw LoadError("simplification rules " + path + ":" + std::to_string(lineno) +
                            ": expected 3 tab-separated fields");
        SimplificationRule r;
        if (fields[0] == "superlative") r.rule_class = RuleClass::Superlative;
        else if (fields[0] == "rareExpression") r.rule_class = RuleClass::RareExpression;
        else if (fields[0] == "directConstruction") r.rule_class = RuleClass::DirectConstruction;
        else if (fields[0] == "ellipsisFill") r.rule_class = RuleClass::EllipsisFill;
        else
            throw LoadError("simplification rules " + path + ":" + std::to_string(lineno) +
                            ": bad rule class '" + fields[0] + "'");
        r.pattern = text::source_tokens(fields[1]);
        r.replacement = text::source_tokens(fields[2]);
        if (r.pattern.empty())
            throw LoadError("simplification rules " + path + ":" + std::to_string(lineno) +
                            ": empty pattern");
        rules.push_back(std::move(r));
    }
    return rules;
}

} // namespace pucci
