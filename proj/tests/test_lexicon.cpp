#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "pucci/errors.hpp"
#include "pucci/lexicon.hpp"

using namespace pucci;

namespace {

const Lexicon& lex() {
    static const Lexicon l = Lexicon::load(std::string(PUCCI_DATA_DIR) + "/lexicon.tsv");
    return l;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = std::string("test_lexicon_tmp_") + std::to_string(rand()) + ".tsv";
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

bool has_analysis(const std::vector<Analysis>& as, const std::string& lemma,
                  TenseIdeogram t, int person, Number n) {
    for (const Analysis& a : as) {
        if (a.entry->source_lemma == lemma && a.features.tense == t && a.features.person &&
            a.features.person->person == person && a.features.person->number == n)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("analyze finite verbs of the excerpt") {
    CHECK(has_analysis(lex().analyze("apparve"), "apparire", TenseIdeogram::ID4, 3,
                       Number::Singular));
    CHECK(has_analysis(lex().analyze("vidi"), "vedere", TenseIdeogram::ID4, 1,
                       Number::Singular));
    CHECK(has_analysis(lex().analyze("erano"), "essere", TenseIdeogram::ID3, 3,
                       Number::Plural));
    CHECK(has_analysis(lex().analyze("dico"), "dire", TenseIdeogram::ID2, 1,
                       Number::Singular));
}

TEST_CASE("analyze nouns and adjectives") {
    auto occhi = lex().analyze("occhi");
    REQUIRE_FALSE(occhi.empty());
    CHECK(occhi[0].entry->source_lemma == "occhio");
    CHECK(occhi[0].entry->pos == PartOfSpeech::Noun);
    CHECK(occhi[0].features.gender == Gender::Masculine);
    CHECK(occhi[0].features.number == Number::Plural);

    auto gloriosa = lex().analyze("gloriosa");
    REQUIRE_FALSE(gloriosa.empty());
    CHECK(gloriosa[0].entry->source_lemma == "glorioso");
    CHECK(gloriosa[0].features.gender == Gender::Feminine);

    CHECK(lex().analyze("xyzzy").empty());
}

TEST_CASE("analysis order is deterministic") {
    auto first = lex().analyze("molto");
    auto second = lex().analyze("molto");
    REQUIRE_FALSE(first.empty());
    REQUIRE(first.size() == second.size());
    for (size_t i = 0; i < first.size(); ++i)
        CHECK(first[i].entry == second[i].entry);
    // exact adverb match outranks the shorter adjective stem
    CHECK(first[0].entry->pos == PartOfSpeech::Adverb);
}

TEST_CASE("translate_lemma") {
    const LexiconEntry& donna = lex().translate_lemma("donna", PartOfSpeech::Noun);
    CHECK(donna.target_lemma == "femme");
    CHECK(donna.target_gender == Gender::Feminine);
    const LexiconEntry& mente = lex().translate_lemma("mente", PartOfSpeech::Noun);
    CHECK(mente.target_lemma == "pensée");
    CHECK(mente.target_gender == Gender::Feminine);
    CHECK_THROWS_AS(lex().translate_lemma("xyzzy", PartOfSpeech::Noun), LookupError);
}

TEST_CASE("french realization cells") {
    const LexiconEntry& apparire = lex().translate_lemma("apparire", PartOfSpeech::Verb);
    MorphFeatures f;
    f.tense = TenseIdeogram::ID4;
    f.person = PersonNumber{3, Number::Singular};
    CHECK(lex().realize_target(apparire, f) == "apparut");
    f.tense = TenseIdeogram::ID3;
    CHECK(lex().realize_target(apparire, f) == "apparaissait");

    const LexiconEntry& cominciare = lex().translate_lemma("cominciare", PartOfSpeech::Verb);
    f.tense = TenseIdeogram::ID4;
    CHECK(lex().realize_target(cominciare, f) == "commença");

    const LexiconEntry& occhio = lex().translate_lemma("occhio", PartOfSpeech::Noun);
    MorphFeatures pl;
    pl.number = Number::Plural;
    CHECK(lex().realize_target(occhio, pl) == "yeux");

    const LexiconEntry& bianco = lex().translate_lemma("bianco", PartOfSpeech::Adjective);
    MorphFeatures fem;
    fem.gender = Gender::Feminine;
    fem.number = Number::Singular;
    CHECK(lex().realize_target(bianco, fem) == "blanche");

    const LexiconEntry& chiamare = lex().translate_lemma("chiamare", PartOfSpeech::Verb);
    MorphFeatures pp;
    pp.tense = TenseIdeogram::ID9;
    pp.gender = Gender::Feminine;
    pp.number = Number::Singular;
    CHECK(lex().realize_target(chiamare, pp) == "appelée");
}

TEST_CASE("paradigm round-trip over the corpus verb cells") {
    struct Cell {
        const char* lemma;
        TenseIdeogram tense;
        int person;
        Number number;
    };
    const Cell cells[] = {
        {"apparire", TenseIdeogram::ID4, 3, Number::Singular},
        {"apparire", TenseIdeogram::ID3, 3, Number::Singular},
        {"vedere", TenseIdeogram::ID4, 1, Number::Singular},
        {"vedere", TenseIdeogram::ID3, 1, Number::Singular},
        {"essere", TenseIdeogram::ID4, 3, Number::Singular},
        {"essere", TenseIdeogram::ID4, 3, Number::Plural},
        {"essere", TenseIdeogram::ID3, 3, Number::Plural},
        {"dire", TenseIdeogram::ID2, 1, Number::Singular},
        {"cominciare", TenseIdeogram::ID4, 3, Number::Singular},
        {"convenire", TenseIdeogram::ID3, 3, Number::Singular},
        {"potere", TenseIdeogram::ID3, 3, Number::Singular},
        {"parere", TenseIdeogram::ID3, 3, Number::Singular},
        {"parere", TenseIdeogram::ID4, 3, Number::Singular},
        {"volgere", TenseIdeogram::ID4, 3, Number::Singular},
        {"salutare", TenseIdeogram::ID4, 3, Number::Singular},
        {"avvenire", TenseIdeogram::ID4, 3, Number::Singular},
    };
    for (const Cell& cell : cells) {
        const LexiconEntry& e = lex().translate_lemma(cell.lemma, PartOfSpeech::Verb);
        MorphFeatures f;
        f.tense = cell.tense;
        f.person = PersonNumber{cell.person, cell.number};
        std::string form = lex().realize_source(e, f);
        CAPTURE(cell.lemma);
        CAPTURE(form);
        CHECK(has_analysis(lex().analyze(form), cell.lemma, cell.tense, cell.person,
                           cell.number));
    }
}

TEST_CASE("loader validation") {
    SUBCASE("empty file gives empty lexicon") {
        TempFile f("");
        CHECK(Lexicon::load(f.path).size() == 0);
    }
    SUBCASE("single valid noun line") {
        TempFile f("donna\tnoun\tf\tfemme\tf\t-\n");
        Lexicon l = Lexicon::load(f.path);
        CHECK(l.size() == 1);
        CHECK(l.translate_lemma("donna", PartOfSpeech::Noun).target_lemma == "femme");
        // load is idempotent
        Lexicon again = Lexicon::load(f.path);
        CHECK(again.size() == 1);
    }
    SUBCASE("conflicting duplicate reported with its line number") {
        TempFile f("donna\tnoun\tf\tfemme\tf\t-\ndonna\tnoun\tf\tdame\tf\t-\n");
        try {
            Lexicon::load(f.path);
            FAIL("expected LoadError");
        } catch (const LoadError& e) {
            CHECK(std::string(e.what()).find(":2") != std::string::npos);
        }
    }
    SUBCASE("malformed line reported with its line number") {
        TempFile f("donna\tnoun\tf\n");
        try {
            Lexicon::load(f.path);
            FAIL("expected LoadError");
        } catch (const LoadError& e) {
            CHECK(std::string(e.what()).find(":1") != std::string::npos);
        }
    }
    SUBCASE("noun without gender rejected") {
        TempFile f("cosa\tnoun\t-\tchose\tf\t-\n");
        CHECK_THROWS_AS(Lexicon::load(f.path), LoadError);
    }
    SUBCASE("verb with gender rejected") {
        TempFile f("amare\tverb\tm\taimer\t-\t-\n");
        CHECK_THROWS_AS(Lexicon::load(f.path), LoadError);
    }
}

TEST_CASE("simplification rule loader") {
    auto rules = load_simplification_rules(std::string(PUCCI_DATA_DIR) + "/simplify.tsv");
    CHECK(rules.size() > 10);
    for (const SimplificationRule& r : rules) CHECK_FALSE(r.pattern.empty());
}
