#include <doctest.h>

#include "pucci/corpus.hpp"
#include "pucci/errors.hpp"

using namespace pucci;

namespace {
const CorpusRegistry& corpus() {
    static const CorpusRegistry c = CorpusRegistry::load(PUCCI_DATA_DIR);
    return c;
}
} // namespace

TEST_CASE("registry covers the full fixture set") {
    const char* required[] = {
        "dante_it",     "pucci_fr_1931", "chatgpt_pucci", "claude_pucci",
        "grok_pucci",   "gpt5_pucci",    "grok4_pucci",   "fardel_1898",
        "godefroy_1901", "cochin_1905",  "gpt5_nmt",      "chatgpt_encoding",
        "claude_encoding", "gpt5_encoding"};
    for (const char* id : required) {
        CAPTURE(id);
        CHECK(corpus().has(id));
    }
    CHECK(corpus().all().size() == 14);
}

TEST_CASE("fixture texts start as printed") {
    CHECK(corpus().fixture("dante_it").text.rfind(
              "Ai miei occhi apparve la gloriosa donna", 0) == 0);
    CHECK(corpus().fixture("pucci_fr_1931").text.rfind(
              "À mes yeux apparut la glorieuse femme", 0) == 0);
    // stored as printed, including the typo kept from the source
    CHECK(corpus().fixture("claude_pucci").text.find("poulis") != std::string::npos);
    CHECK(corpus().fixture("grok4_pucci").text.rfind("Aux mes yeux", 0) == 0);
}

TEST_CASE("unknown id reports the available ids") {
    try {
        corpus().fixture("missing_id");
        FAIL("expected LookupError");
    } catch (const LookupError& e) {
        std::string msg = e.what();
        CHECK(msg.find("missing_id") != std::string::npos);
        CHECK(msg.find("dante_it") != std::string::npos);
    }
}

TEST_CASE("provenance names a figure or section") {
    for (const Fixture& f : corpus().all()) {
        CAPTURE(f.id);
        CHECK_FALSE(f.provenance.empty());
        bool located = f.provenance.find("Figure") != std::string::npos ||
                       f.provenance.find("Appendix") != std::string::npos ||
                       f.provenance.find("sec.") != std::string::npos;
        CHECK(located);
    }
}

TEST_CASE("published comparison counts") {
    const auto& counts = published_comparisons();
    CHECK(counts.size() == 15);
    int g1 = 0, rest = 0;
    long long sum1 = 0, sum23 = 0;
    for (const ComparisonCount& c : counts) {
        if (c.group == 1) {
            ++g1;
            sum1 += c.removals + c.additions;
        } else {
            ++rest;
            sum23 += c.removals + c.additions;
        }
        if (!c.a.empty()) CHECK(corpus().has(c.a));
        if (!c.b.empty()) CHECK(corpus().has(c.b));
    }
    CHECK(g1 == 3);
    CHECK(rest == 12);
    CHECK(sum1 == 128);
    CHECK(sum23 == 568);
}
