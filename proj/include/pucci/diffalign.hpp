// diffalign.hpp - word-level diff hunks and comparison statistics
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pucci {

struct Span {
    size_t begin{0};
    size_t end{0}; // half-open
    bool empty() const { return begin == end; }
    bool operator==(const Span&) const = default;
};

// Changed regions between two token sequences. removals counts hunks with a
// non-empty A side, additions those with a non-empty B side; identical
// inputs yield zero of each.
struct DiffReport {
    int removals{0};
    int additions{0};
    std::vector<std::pair<Span, Span>> hunks;
};

// Case-sensitive word diff: whitespace tokens with punctuation split off,
// common-subsequence alignment preferring contiguous match runs, maximal
// non-matching runs grouped into hunks. Isolated one-token matches inside
// larger changed regions count as part of the change.
DiffReport word_diff(const std::string& a, const std::string& b);
DiffReport word_diff_tokens(const std::vector<std::string>& a,
                            const std::vector<std::string>& b);

// Mean of the flattened removal+addition values of each group, computed in
// exact integer arithmetic before the final division.
std::vector<double> group_stats(const std::vector<std::vector<std::pair<int, int>>>& groups);

struct EffectSize {
    double eta_squared{0.0};
    double cohens_f{0.0};
    std::vector<double> group_means;
};

// One-way ANOVA decomposition over the supplied arrangement. Zero total
// variance yields eta squared 0; eta squared 1 yields an infinite f.
EffectSize effect_size(const std::vector<std::vector<double>>& groups);

// f = sqrt(eta^2 / (1 - eta^2))
double cohens_f_from_eta_squared(double eta_squared);

} // namespace pucci
