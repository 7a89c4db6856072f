#include <doctest.h>

#include <cmath>
#include <random>

#include "pucci/corpus.hpp"
#include "pucci/diffalign.hpp"
#include "pucci/errors.hpp"

using namespace pucci;

namespace {
const CorpusRegistry& corpus() {
    static const CorpusRegistry c = CorpusRegistry::load(PUCCI_DATA_DIR);
    return c;
}

// independent oracle: plain recursive LCS length, for small inputs
size_t lcs_len(const std::vector<std::string>& a, const std::vector<std::string>& b,
               size_t i = 0, size_t j = 0) {
    if (i == a.size() || j == b.size()) return 0;
    if (a[i] == b[j]) return 1 + lcs_len(a, b, i + 1, j + 1);
    return std::max(lcs_len(a, b, i + 1, j), lcs_len(a, b, i, j + 1));
}
} // namespace

TEST_CASE("identical inputs have no hunks") {
    DiffReport d = word_diff("a b c", "a b c");
    CHECK(d.removals == 0);
    CHECK(d.additions == 0);
    CHECK(d.hunks.empty());
    for (const Fixture& f : corpus().all()) {
        DiffReport self = word_diff(f.text, f.text);
        CHECK(self.removals == 0);
        CHECK(self.additions == 0);
    }
}

TEST_CASE("a single substitution is one hunk on each side") {
    DiffReport d = word_diff("a b c", "a x c");
    CHECK(d.removals == 1);
    CHECK(d.additions == 1);
    REQUIRE(d.hunks.size() == 1);
    CHECK(d.hunks[0].first == Span{1, 2});
    CHECK(d.hunks[0].second == Span{1, 2});
}

TEST_CASE("pure insertion and deletion") {
    DiffReport ins = word_diff("a c", "a b c");
    CHECK(ins.removals == 0);
    CHECK(ins.additions == 1);
    DiffReport del = word_diff("a b c", "a c");
    CHECK(del.removals == 1);
    CHECK(del.additions == 0);
}

TEST_CASE("alignment agrees with an exhaustive LCS oracle on small inputs") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> len(0, 8), sym(0, 3);
    const std::vector<std::string> alphabet = {"a", "b", "c", "d"};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::string> a, b;
        for (int i = len(rng); i-- > 0;) a.push_back(alphabet[sym(rng)]);
        for (int i = len(rng); i-- > 0;) b.push_back(alphabet[sym(rng)]);
        DiffReport d = word_diff_tokens(a, b);
        // tokens outside the hunks form the matched common subsequence:
        // both sides must leave the identical sequence behind
        std::vector<std::string> kept_a = a, kept_b = b;
        std::vector<bool> drop_a(a.size(), false), drop_b(b.size(), false);
        size_t removed = 0, added = 0;
        for (const auto& [sa, sb] : d.hunks) {
            for (size_t k = sa.begin; k < sa.end; ++k) drop_a[k] = true;
            for (size_t k = sb.begin; k < sb.end; ++k) drop_b[k] = true;
            removed += sa.end - sa.begin;
            added += sb.end - sb.begin;
        }
        kept_a.clear();
        kept_b.clear();
        for (size_t k = 0; k < a.size(); ++k)
            if (!drop_a[k]) kept_a.push_back(a[k]);
        for (size_t k = 0; k < b.size(); ++k)
            if (!drop_b[k]) kept_b.push_back(b[k]);
        CHECK(kept_a == kept_b);
        CHECK(a.size() - removed == b.size() - added);
        // never longer than the true longest common subsequence
        CHECK(a.size() - removed <= lcs_len(a, b));
    }
}

TEST_CASE("diff symmetry over all fixture pairs") {
    const auto ids = corpus().ids();
    for (size_t i = 0; i < ids.size(); ++i) {
        for (size_t j = i + 1; j < ids.size(); ++j) {
            DiffReport ab = word_diff(corpus().fixture(ids[i]).text,
                                      corpus().fixture(ids[j]).text);
            DiffReport ba = word_diff(corpus().fixture(ids[j]).text,
                                      corpus().fixture(ids[i]).text);
            CAPTURE(ids[i]);
            CAPTURE(ids[j]);
            CHECK(ab.removals == ba.additions);
            CHECK(ab.additions == ba.removals);
        }
    }
}

TEST_CASE("group means over the published counts") {
    std::vector<std::vector<std::pair<int, int>>> groups(2);
    for (const ComparisonCount& c : published_comparisons())
        groups[c.group == 1 ? 0 : 1].push_back({c.removals, c.additions});
    std::vector<double> means = group_stats(groups);
    REQUIRE(means.size() == 2);
    // 128/6 and 568/24, exact before rounding
    CHECK(means[0] == doctest::Approx(128.0 / 6.0).epsilon(1e-12));
    CHECK(means[1] == doctest::Approx(568.0 / 24.0).epsilon(1e-12));

    std::vector<std::vector<std::pair<int, int>>> single = {{{5, 5}, {5, 5}, {5, 5}}};
    CHECK(group_stats(single)[0] == 5.0);

    CHECK_THROWS_AS(group_stats({{}}), Error);
}

TEST_CASE("effect size decomposition") {
    // equal group means: no between-group variance
    EffectSize none = effect_size({{1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}});
    CHECK(none.eta_squared == doctest::Approx(0.0));
    CHECK(none.cohens_f == doctest::Approx(0.0));

    // all variance between groups
    EffectSize all = effect_size({{0.0, 0.0}, {1.0, 1.0}});
    CHECK(all.eta_squared == doctest::Approx(1.0));
    CHECK(std::isinf(all.cohens_f));

    // zero total variance
    EffectSize flat = effect_size({{2.0, 2.0}, {2.0, 2.0}});
    CHECK(flat.eta_squared == 0.0);

    CHECK_THROWS_AS(effect_size({{1.0}}), Error);
}

TEST_CASE("cohens f identity") {
    CHECK(cohens_f_from_eta_squared(0.077) ==
          doctest::Approx(std::sqrt(0.077 / 0.923)).epsilon(1e-12));
    // shifting every value leaves eta squared unchanged
    EffectSize base = effect_size({{1.0, 2.0}, {4.0, 6.0}});
    EffectSize shifted = effect_size({{11.0, 12.0}, {14.0, 16.0}});
    CHECK(base.eta_squared == doctest::Approx(shifted.eta_squared).epsilon(1e-12));
    // identity holds for computed outputs
    CHECK(base.cohens_f ==
          doctest::Approx(std::sqrt(base.eta_squared / (1 - base.eta_squared)))
              .epsilon(1e-9));
}
