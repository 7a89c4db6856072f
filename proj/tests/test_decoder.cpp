#include <doctest.h>

#include "pucci/corpus.hpp"
#include "pucci/decoder.hpp"
#include "pucci/errors.hpp"

using namespace pucci;

namespace {

const Engine& engine() {
    static const Engine e = Engine::load(PUCCI_DATA_DIR);
    return e;
}

const CorpusRegistry& corpus() {
    static const CorpusRegistry c = CorpusRegistry::load(PUCCI_DATA_DIR);
    return c;
}

std::string surfaces(const std::vector<DraftToken>& toks) {
    std::string out;
    for (const DraftToken& t : toks) {
        if (!out.empty()) out += ' ';
        out += t.surface;
    }
    return out;
}

std::vector<DraftToken> realize_notation(const std::string& notation) {
    return realize(parse_stream(notation), engine().target_keys, engine().lexicon);
}

DraftToken word(const std::string& s, PartOfSpeech pos = PartOfSpeech::Other,
                std::optional<Gender> g = std::nullopt,
                std::optional<Number> n = std::nullopt) {
    DraftToken t;
    t.surface = s;
    t.lemma = s;
    t.pos = pos;
    t.gender = g;
    t.number = n;
    return t;
}

} // namespace

TEST_CASE("realize produces the raw draft before differential repair") {
    CHECK(surfaces(realize_notation("M2 occhio+")) == "aux mes yeux");
    CHECK(surfaces(realize_notation("a1 glorioso-f donna")) == "la glorieuse femme");
    CHECK(surfaces(realize_notation("\"Beatrice\"")) == "Beatrice");
}

TEST_CASE("realize reports coverage gaps by token") {
    try {
        realize_notation("sconosciuto");
        FAIL("expected CoverageError");
    } catch (const CoverageError& e) {
        CHECK(std::string(e.what()).find("sconosciuto") != std::string::npos);
    }
}

TEST_CASE("syntactic correction: clitic placement and negation") {
    // object clitic moves before the finite verb
    std::vector<DraftToken> salua{word("salua"), word("me")};
    salua[0].pos = PartOfSpeech::Verb;
    salua[0].finite = true;
    salua[0].lemma = "saluer";
    auto fixed = correct_syntax(salua, engine().corrections);
    CHECK(surfaces(fixed) == "me salua");

    // tonic pronoun before the verb becomes a clitic
    std::vector<DraftToken> tonic{word("à"), word("moi"), word("parut")};
    tonic[2].pos = PartOfSpeech::Verb;
    tonic[2].finite = true;
    auto fixed2 = correct_syntax(tonic, engine().corrections);
    CHECK(surfaces(fixed2) == "me parut");

    // negation completion
    std::vector<DraftToken> neg{word("ne"), word("paraissait"), word("fille")};
    neg[1].pos = PartOfSpeech::Verb;
    neg[1].finite = true;
    neg[2].pos = PartOfSpeech::Noun;
    auto fixed3 = correct_syntax(neg, engine().corrections);
    CHECK(surfaces(fixed3) == "ne paraissait pas fille");

    // a draft with no matches is unchanged
    std::vector<DraftToken> none{word("la"), word("femme")};
    CHECK(surfaces(correct_syntax(none, engine().corrections)) == "la femme");
}

TEST_CASE("syntactic correction is idempotent") {
    std::vector<DraftToken> neg{word("ne"), word("paraissait"), word("fille")};
    neg[1].finite = true;
    auto once = correct_syntax(neg, engine().corrections);
    auto twice = correct_syntax(once, engine().corrections);
    CHECK(surfaces(once) == surfaces(twice));
}

TEST_CASE("morphological correction: agreement and irregular plurals") {
    std::vector<DraftToken> adj{word("glorieux", PartOfSpeech::Adjective),
                                word("femme", PartOfSpeech::Noun, Gender::Feminine,
                                     Number::Singular)};
    adj[0].lemma = "glorieux";
    auto fixed = correct_morphology(adj, engine().corrections, engine().lexicon);
    CHECK(surfaces(fixed) == "glorieuse femme");

    std::vector<DraftToken> eye{word("œil", PartOfSpeech::Noun, Gender::Masculine,
                                     Number::Plural)};
    eye[0].lemma = "œil";
    auto fixed2 = correct_morphology(eye, engine().corrections, engine().lexicon);
    CHECK(surfaces(fixed2) == "yeux");

    auto fixed3 = correct_morphology(fixed, engine().corrections, engine().lexicon);
    CHECK(surfaces(fixed3) == "glorieuse femme"); // already agreed: unchanged
}

TEST_CASE("differential repairs contractions and elisions") {
    std::vector<DraftToken> aux{word("aux"), word("mes"), word("yeux")};
    aux[1].possessive = true;
    CHECK(apply_differential(aux, engine().corrections) == "À mes yeux");

    std::vector<DraftToken> dele{word("de"), word("le"), word("esprit")};
    CHECK(apply_differential(dele, engine().corrections) == "De l'esprit");

    std::vector<DraftToken> plain{word("la"), word("femme"), word(".")};
    plain[2].punct = true;
    CHECK(apply_differential(plain, engine().corrections) == "La femme.");
}

TEST_CASE("differential stage is idempotent over the corpus outputs") {
    std::string out = translate(corpus().fixture("dante_it").text, engine());
    for (const char* trigger : {"aux mes", "de le ", "à les ", "de la ma", "à la sa",
                                "que il", "que on", "ma année"}) {
        CAPTURE(trigger);
        CHECK(out.find(trigger) == std::string::npos);
    }
}

TEST_CASE("translate reproduces the printed opening sentence") {
    std::string out = translate(
        "Ai miei occhi apparve la gloriosa donna della mia mente", engine());
    CHECK(out == "À mes yeux apparut la glorieuse femme de ma pensée");
}

TEST_CASE("translate of empty text is empty") {
    CHECK(translate("", engine()) == "");
}

TEST_CASE("translate is deterministic") {
    const std::string& src = corpus().fixture("dante_it").text;
    CHECK(translate(src, engine()) == translate(src, engine()));
}

TEST_CASE("correction rule loader validates input") {
    CHECK_THROWS_AS(load_correction_rules("no_such_file.tsv"), LoadError);
    CHECK(load_correction_rules(std::string(PUCCI_DATA_DIR) + "/correct.tsv").size() > 10);
}
