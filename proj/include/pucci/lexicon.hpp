// lexicon.hpp - bilingual stem dictionary, verb paradigms, simplification rules
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pucci/keytable.hpp"

namespace pucci {

enum class PartOfSpeech {
    Noun, Verb, Adjective, Adverb, Preposition, ProperNoun, Numeral, Other
};

std::string pos_name(PartOfSpeech pos);
std::optional<PartOfSpeech> parse_pos(std::string_view s);

struct PersonNumber {
    int person{3};            // 1..3
    Number number{Number::Singular};
    bool operator==(const PersonNumber&) const = default;
};

std::string person_name(PersonNumber pn);                   // "3sg"
std::optional<PersonNumber> parse_person(std::string_view s);

// One dictionary row. irregular maps feature labels to surfaces, with an
// "s:"/"t:" prefix selecting the source or target side, e.g.
//   s:id4.3sg=apparve   t:id4.3sg=apparut   t:pl=yeux   t:f=blanche
struct LexiconEntry {
    std::string source_lemma;
    PartOfSpeech pos{};
    std::optional<Gender> source_gender;
    std::string target_lemma;
    std::optional<Gender> target_gender;
    std::map<std::string, std::string> irregular;
};

// Feature bundle attached to an analyzed or generated word form.
struct MorphFeatures {
    std::optional<Gender> gender;
    std::optional<Number> number;
    std::optional<TenseIdeogram> tense;
    std::optional<PersonNumber> person;
};

struct Analysis {
    const LexiconEntry* entry{nullptr};
    MorphFeatures features;
};

// Regular conjugation data: suffixes per (tense, person, number) cell for
// one class of verbs, plus the lemma suffix that strips to the stem.
struct MorphParadigm {
    std::string language;
    std::string paradigm_id;      // "are", "ere", "ire", "er", "ir", "re"
    std::string lemma_suffix;
    // cells[tense-1][person-1][number] = suffix, empty string = undefined
    std::string cells[kTenseCount][3][2];
    std::string participle;       // ID9 base form suffix
    std::string gerund;           // ID8 suffix
    std::string infinitive() const { return lemma_suffix; }
};

const std::vector<MorphParadigm>& italian_paradigms();
const std::vector<MorphParadigm>& french_paradigms();

class Lexicon {
  public:
    // Loads the TSV: source_lemma, pos, src_gender, target_lemma,
    // tgt_gender, irregular_forms (';'-separated feature=surface, '-' empty).
    static Lexicon load(const std::string& path);

    // All analyses of an Italian surface form, longest-stem match first,
    // then file order. Unknown word -> empty vector.
    std::vector<Analysis> analyze(const std::string& word) const;

    // The unique target mapping for (lemma, pos). Throws LookupError.
    const LexiconEntry& translate_lemma(const std::string& lemma, PartOfSpeech pos) const;

    const LexiconEntry* find(const std::string& lemma, PartOfSpeech pos) const;
    const LexiconEntry* find_any(const std::string& lemma) const;
    // Reverse lookup by French lemma (first entry in file order).
    const LexiconEntry* find_target(const std::string& target_lemma,
                                    std::optional<PartOfSpeech> pos = std::nullopt) const;

    // Italian generation (used by the analysis round-trip checks).
    std::string realize_source(const LexiconEntry& entry, const MorphFeatures& f) const;
    // French generation: verbs by (tense, person), nouns by number,
    // adjectives by (gender, number).
    std::string realize_target(const LexiconEntry& entry, const MorphFeatures& f) const;

    // True when the verb entry has a defined French cell for the tense.
    bool target_cell_defined(const LexiconEntry& entry, TenseIdeogram t,
                             std::optional<PersonNumber> pn) const;

    size_t size() const { return entries_.size(); }
    const std::vector<LexiconEntry>& entries() const { return entries_; }

  private:
    std::vector<LexiconEntry> entries_;
    std::map<std::pair<std::string, PartOfSpeech>, size_t> by_lemma_pos_;
    std::multimap<std::string, size_t> by_lemma_;
};

enum class RuleClass { Superlative, RareExpression, DirectConstruction, EllipsisFill };

// Plain-language rewrite applied before encoding. Patterns and replacements
// are token sequences over the source tokenizer.
struct SimplificationRule {
    RuleClass rule_class{};
    std::vector<std::string> pattern;
    std::vector<std::string> replacement;
};

// Loads rules from a TSV: class <TAB> pattern <TAB> replacement.
std::vector<SimplificationRule> load_simplification_rules(const std::string& path);

} // namespace pucci
