// encoder.hpp - source text -> ideogram interlingua
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pucci/keytable.hpp"
#include "pucci/lexicon.hpp"

namespace pucci {

enum class TokenKind { Key, Stem, Literal };

struct EncodedToken {
    TokenKind kind{TokenKind::Literal};

    GrammaticalKey key; // Key

    std::string lemma; // Stem
    PartOfSpeech pos{PartOfSpeech::Other}; // encoder annotation, not notation
    std::optional<Gender> gender_mark;   // adjectives and ambiguous stems
    bool plural_mark{false};
    std::optional<TenseIdeogram> tense;  // always set for verbs
    std::optional<PersonNumber> person;  // finite verbs

    std::string literal; // Literal (proper nouns, punctuation)

    // Notational identity: two tokens are equal when they print identically.
    // The pos annotation is re-derived from the lexicon after parsing.
    bool operator==(const EncodedToken& o) const {
        return kind == o.kind && key == o.key && lemma == o.lemma &&
               gender_mark == o.gender_mark && plural_mark == o.plural_mark &&
               tense == o.tense && person == o.person && literal == o.literal;
    }

    static EncodedToken make_key(GrammaticalKey k);
    static EncodedToken make_literal(std::string text);
};

struct EncodedStream {
    std::vector<std::vector<EncodedToken>> sentences;
    bool operator==(const EncodedStream&) const = default;
};

// Plain-language pass: replaces rule patterns left to right, longest match
// first, repeating until no pattern occurs. Idempotent for rule sets whose
// replacements contain no pattern.
std::string simplify(const std::string& text, const std::vector<SimplificationRule>& rules);

// Morphological reduction of simplified source text into keys, stems and
// literals. Throws EncodeError for unanalyzable non-proper tokens.
EncodedStream encode(const std::string& text, const Lexicon& lexicon);

// Canonical notation: one sentence per line, space-separated tokens.
//   key    := notation (a1, M2, III14, &, ...)
//   stem   := lemma["-m"|"-f"]["+"][":"IDn[":"person]]
//   literal:= '"' text '"'
std::string render_stream(const EncodedStream& stream);
EncodedStream parse_stream(const std::string& text);

} // namespace pucci
