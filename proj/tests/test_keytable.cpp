#include <doctest.h>

#include "pucci/errors.hpp"
#include "pucci/keytable.hpp"

using namespace pucci;

namespace {
const KeyRealizationTable& italian() {
    static const KeyRealizationTable t =
        KeyRealizationTable::load(std::string(PUCCI_DATA_DIR) + "/keys.tsv", "it");
    return t;
}
const KeyRealizationTable& french() {
    static const KeyRealizationTable t =
        KeyRealizationTable::load(std::string(PUCCI_DATA_DIR) + "/keys.tsv", "fr");
    return t;
}
} // namespace

TEST_CASE("parse_key_notation on chart forms") {
    GrammaticalKey m2 = parse_key_notation("M2");
    CHECK(m2.category == KeyCategory::Possessive);
    CHECK(m2.person == 1);
    CHECK(m2.number == Number::Singular);
    CHECK(m2.case_index == 2);

    GrammaticalKey art = parse_key_notation("a.");
    CHECK(art.category == KeyCategory::Article);
    CHECK(art.case_index == 1);

    GrammaticalKey conj = parse_key_notation("&");
    CHECK(conj.category == KeyCategory::Conjunction);

    CHECK_THROWS_AS(parse_key_notation("Q9"), ParseError);
    CHECK_THROWS_AS(parse_key_notation("a7"), ParseError);
    CHECK_THROWS_AS(parse_key_notation("M12"), ParseError);
}

TEST_CASE("third person pronoun rows") {
    GrammaticalKey la = parse_key_notation("III14");
    CHECK(la.category == KeyCategory::PersonalPronoun);
    CHECK(la.person == 3);
    CHECK(la.gender == Gender::Feminine);
    CHECK(la.number == Number::Singular);
    CHECK(la.case_index == 4);
    CHECK(print_key(la) == "III14");
    // the explicit feminine letter is an accepted alias
    CHECK(parse_key_notation("IIIf4") == la);

    GrammaticalKey neuter = parse_key_notation("IIIn2");
    CHECK(neuter.gender == Gender::Neuter);
    CHECK(print_key(neuter) == "IIIn2");

    GrammaticalKey noi = parse_key_notation("I11");
    CHECK(noi.number == Number::Plural);
    CHECK(noi.case_index == 1);
}

TEST_CASE("round-trip over the canonical inventory") {
    for (const GrammaticalKey& key : canonical_key_inventory()) {
        CHECK(parse_key_notation(print_key(key)) == key);
    }
}

TEST_CASE("italian realizations match the printed chart cells") {
    AgreementContext fsg{Gender::Feminine, Number::Singular, false};
    CHECK(italian().lookup(parse_key_notation("M2"), fsg) == "alla mia");
    CHECK(italian().lookup(parse_key_notation("I1"), {}) == "io");
    CHECK(italian().lookup(parse_key_notation("III1"), {}) == "egli");
    CHECK(italian().lookup(parse_key_notation("III11"), {}) == "ella");
    CHECK(italian().lookup(parse_key_notation("M1"), fsg) == "della mia");
    CHECK(italian().lookup(parse_key_notation("S3"), fsg) == "alla sua");
    CHECK(italian().lookup(parse_key_notation("a1"),
                           {Gender::Masculine, Number::Plural, false}) == "i");
}

TEST_CASE("french realizations") {
    AgreementContext fsg{Gender::Feminine, Number::Singular, false};
    AgreementContext mpl{Gender::Masculine, Number::Plural, false};
    CHECK(french().lookup(parse_key_notation("a1"), fsg) == "la");
    CHECK(french().lookup(parse_key_notation("M2"), mpl) == "aux mes");
    CHECK(french().lookup(parse_key_notation("III14"), fsg) == "la");
    CHECK(french().lookup(parse_key_notation("R1"), fsg) == "laquelle");
    CHECK(french().lookup(parse_key_notation("R1"),
                          {Gender::Feminine, Number::Plural, false}) == "qui");
    CHECK(french().lookup(parse_key_notation("&"), {}) == "et");
}

TEST_CASE("lookup is deterministic and total over emitted keys") {
    AgreementContext fsg{Gender::Feminine, Number::Singular, false};
    const std::string& first = french().lookup(parse_key_notation("M2"), fsg);
    const std::string& second = french().lookup(parse_key_notation("M2"), fsg);
    CHECK(first == second);
    // every key either side of the encoder can emit is covered
    for (const GrammaticalKey& key : canonical_key_inventory()) {
        if (key.category == KeyCategory::PluralMarker ||
            key.category == KeyCategory::GenderMarker ||
            key.category == KeyCategory::PersonalRelativeIndicator)
            continue;
        CHECK_MESSAGE(italian().covers(key), print_key(key));
        CHECK_MESSAGE(french().covers(key), print_key(key));
    }
}

TEST_CASE("uncovered cell raises a coverage error naming the cell") {
    AgreementContext none{};
    CHECK_THROWS_AS(french().lookup(parse_key_notation("M2"), none), CoverageError);
    try {
        french().lookup(parse_key_notation("M2"), none);
    } catch (const CoverageError& e) {
        std::string msg = e.what();
        CHECK(msg.find("M2") != std::string::npos);
    }
}
