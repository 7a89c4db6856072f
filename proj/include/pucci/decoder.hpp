// decoder.hpp - interlingua -> target text through the book-machine stages
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pucci/encoder.hpp"
#include "pucci/keytable.hpp"
#include "pucci/lexicon.hpp"

namespace pucci {

// One word (or punctuation mark) of the target-language draft, with the
// features the correction stages match on.
struct DraftToken {
    std::string surface;
    std::string lemma; // target lemma when known, else the surface
    PartOfSpeech pos{PartOfSpeech::Other};
    std::optional<Gender> gender;
    std::optional<Number> number;
    std::optional<TenseIdeogram> tense;
    bool finite{false};
    bool possessive{false};
    bool punct{false};
};

enum class RuleStage { Syntactic, Morphological, Differential };

// One predicate of a rule pattern: either a literal surface word or a
// feature test {key=value,...} / {key!=value}.
struct PatternElem {
    std::optional<std::string> word;
    struct Test {
        std::string key;
        std::string value;
        bool negated{false};
    };
    std::vector<Test> tests;
};

struct RewriteElem {
    int ref{0};          // 1-based pattern reference, 0 for a literal
    std::string literal;
};

struct CorrectionRule {
    RuleStage stage{};
    int priority{0};
    std::vector<PatternElem> pattern;
    std::vector<RewriteElem> rewrite;
};

// Loads rules from a TSV: stage <TAB> priority <TAB> match <TAB> rewrite,
// match tokens literal or {gender=f}-style, rewrites literal or $N.
std::vector<CorrectionRule> load_correction_rules(const std::string& path);

// Keys and stems to target surface forms, order unchanged. Throws
// CoverageError naming the offending token on a table or dictionary gap.
std::vector<DraftToken> realize(const EncodedStream& stream,
                                const KeyRealizationTable& keys, const Lexicon& lex);

// Ordered rewrites applied to fixpoint (step budget |tokens| x |rules|).
std::vector<DraftToken> correct_syntax(std::vector<DraftToken> draft,
                                       const std::vector<CorrectionRule>& rules);

// Adjective/participle agreement from the governing noun's target gender
// and number, irregular plurals from the lexicon, plus any file rules.
std::vector<DraftToken> correct_morphology(std::vector<DraftToken> draft,
                                           const std::vector<CorrectionRule>& rules,
                                           const Lexicon& lex);

// Contraction/elision repairs, then detokenization with French spacing.
std::string apply_differential(std::vector<DraftToken> draft,
                               const std::vector<CorrectionRule>& rules);

// Everything translate() needs, loaded once from the data directory.
struct Engine {
    Lexicon lexicon;
    KeyRealizationTable source_keys;
    KeyRealizationTable target_keys;
    std::vector<SimplificationRule> simplification;
    std::vector<CorrectionRule> corrections;

    static Engine load(const std::string& data_dir);
};

struct TranslateConfig {
    std::string pair{"it-fr"};
    std::string data_dir;
};

// Full pipeline: simplify, encode, realize, syntactic and morphological
// correction, differential repair. Deterministic.
std::string translate(const std::string& text, const Engine& engine);
std::string translate(const std::string& text, const TranslateConfig& config);

} // namespace pucci
