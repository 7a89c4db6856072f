#include <doctest.h>

#include <random>

#include "pucci/corpus.hpp"
#include "pucci/evalmetrics.hpp"
#include "pucci/textutil.hpp"

using namespace pucci;

namespace {
const CorpusRegistry& corpus() {
    static const CorpusRegistry c = CorpusRegistry::load(PUCCI_DATA_DIR);
    return c;
}
} // namespace

TEST_CASE("bleu identity and disjoint extremes") {
    BleuScore same = bleu("la femme apparut à mes yeux", "la femme apparut à mes yeux");
    CHECK(same.score == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(same.brevity_penalty == 1.0);

    BleuScore none = bleu("rien commun ici", "tout autre texte absolument");
    CHECK(none.score == 0.0);

    BleuScore empty = bleu("", "la femme");
    CHECK(empty.score == 0.0);
    CHECK(empty.empty_candidate);
}

TEST_CASE("bleu brevity penalty never rises when the candidate shortens") {
    const std::string reference =
        "la glorieuse femme de ma pensée apparut à mes yeux vers la fin de mon année";
    std::string candidate = reference;
    double prev = bleu(candidate, reference).brevity_penalty;
    auto toks = text::word_tokens(candidate, false);
    while (toks.size() > 1) {
        toks.pop_back();
        std::string shorter;
        for (const auto& t : toks) shorter += (shorter.empty() ? "" : " ") + t;
        double bp = bleu(shorter, reference).brevity_penalty;
        CHECK(bp <= prev + 1e-12);
        prev = bp;
    }
}

TEST_CASE("chrf identity, disjoint and component symmetry") {
    ChrfScore same = chrf("apparut la femme", "apparut la femme");
    CHECK(same.score == doctest::Approx(100.0).epsilon(1e-9));
    for (int n = 0; n < 6; ++n) CHECK(same.precisions[n] == doctest::Approx(1.0));

    ChrfScore none = chrf("aeiou", "xzwqk");
    CHECK(none.score == 0.0);

    ChrfScore ab = chrf("la femme apparut", "la femme disparut");
    ChrfScore ba = chrf("la femme disparut", "la femme apparut");
    for (int n = 0; n < 6; ++n) {
        CHECK(ab.precisions[n] == doctest::Approx(ba.recalls[n]).epsilon(1e-12));
        CHECK(ab.recalls[n] == doctest::Approx(ba.precisions[n]).epsilon(1e-12));
    }
}

TEST_CASE("meteor identity follows the closed form") {
    // identical texts: one chunk, so score = 100 (1 - 0.5/m^3)
    std::string ten = "un deux trois quatre cinq six sept huit neuf dix";
    MeteorScore s = meteor(ten, ten);
    CHECK(s.matches == 10);
    CHECK(s.chunks == 1);
    CHECK(s.score == doctest::Approx(99.95).epsilon(1e-9));

    MeteorScore none = meteor("rien du tout", "autre chose complète");
    CHECK(none.score == 0.0);
}

TEST_CASE("meteor stem matching links inflected forms") {
    MeteorScore s = meteor("les glorieuses femmes", "la glorieuse femme");
    CHECK(s.matches >= 2); // glorieuse/glorieuses and femme/femmes via stems
}

TEST_CASE("french stemmer strips plural and feminine endings") {
    CHECK(french_stem("femmes") == french_stem("femme"));
    CHECK(french_stem("glorieuse") == french_stem("glorieux"));
    CHECK(french_stem("nobles") == french_stem("noble"));
    CHECK(french_stem("apparaissait") == french_stem("apparaissaient"));
    CHECK(french_stem("roi") == "roi"); // short words stay intact
}

TEST_CASE("identity over every text fixture") {
    for (const Fixture& f : corpus().all()) {
        if (f.role == FixtureRole::Encoding) continue;
        CAPTURE(f.id);
        CHECK(bleu(f.text, f.text).score == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(chrf(f.text, f.text).score == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(meteor(f.text, f.text).score >= 99.9);
    }
}

TEST_CASE("scores are deterministic") {
    const std::string& cand = corpus().fixture("cochin_1905").text;
    const std::string& ref = corpus().fixture("pucci_fr_1931").text;
    MetricScores a = score_all(cand, ref);
    MetricScores b = score_all(cand, ref);
    CHECK(a.bleu.score == b.bleu.score);
    CHECK(a.chrf.score == b.chrf.score);
    CHECK(a.meteor.score == b.meteor.score);
}
