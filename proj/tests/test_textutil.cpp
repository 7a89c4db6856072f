#include <doctest.h>

#include "pucci/textutil.hpp"

using namespace pucci;

TEST_CASE("word tokenizer splits punctuation and fuses dot runs") {
    auto toks = text::word_tokens("la donna, apparve... Fine.", true);
    std::vector<std::string> expect = {"la", "donna", ",", "apparve", "...", "fine", "."};
    CHECK(toks == expect);
}

TEST_CASE("word tokenizer keeps accented letters inside words") {
    auto toks = text::word_tokens("l'età è già là", false);
    std::vector<std::string> expect = {"l", "'", "età", "è", "già", "là"};
    CHECK(toks == expect);
}

TEST_CASE("source tokenizer attaches apostrophes to the left") {
    auto toks = text::source_tokens("nell'ultimo di questi, d'uomo");
    std::vector<std::string> expect = {"nell'", "ultimo", "di", "questi", ",", "d'", "uomo"};
    CHECK(toks == expect);
    CHECK(text::join_tokens(toks) == "nell'ultimo di questi, d'uomo");
}

TEST_CASE("lowercase and capitalize round accents") {
    CHECK(text::lowercase("À MES YEUX") == "à mes yeux");
    CHECK(text::capitalize_first("à ce point") == "À ce point");
    CHECK(text::capitalize_first("elle") == "Elle");
}

TEST_CASE("vowel detection for elision") {
    CHECK(text::starts_with_vowel("esprit"));
    CHECK(text::starts_with_vowel("âge"));
    CHECK(text::starts_with_vowel("homme"));
    CHECK(text::starts_with_vowel("il"));
    CHECK_FALSE(text::starts_with_vowel("femme"));
    CHECK_FALSE(text::starts_with_vowel("glorieuse"));
}

TEST_CASE("sentence splitting binds trailing periods") {
    auto s = text::split_sentences("Io la vidi. Apparve vestita... Fine");
    REQUIRE(s.size() == 3);
    CHECK(s[0] == "Io la vidi.");
    CHECK(s[1] == "Apparve vestita...");
    CHECK(s[2] == "Fine");
}

TEST_CASE("paragraph splitting on blank lines") {
    auto p = text::split_paragraphs("uno\ndue\n\ntre");
    REQUIRE(p.size() == 2);
    CHECK(p[0] == "uno due");
    CHECK(p[1] == "tre");
}
