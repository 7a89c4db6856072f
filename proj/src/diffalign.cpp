#include "pucci/diffalign.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pucci/errors.hpp"
#include "pucci/textutil.hpp"

namespace pucci {

namespace {

// Among maximum-length common subsequences, picks one with the fewest
// contiguous match blocks, so incidental matches fragment as little as
// possible. State tracks whether the previous step was a match.
std::vector<std::pair<size_t, size_t>> align(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    const size_t n = a.size(), m = b.size();
    struct Cell {
        int len;
        int breaks;
    };
    // f[s][i][j], s = 1 when (i-1, j-1) was consumed as a match
    std::vector<Cell> f0((n + 1) * (m + 1)), f1((n + 1) * (m + 1));
    std::vector<unsigned char> c0((n + 1) * (m + 1)), c1((n + 1) * (m + 1));
    auto at = [m](size_t i, size_t j) { return i * (m + 1) + j; };
    const int inf = std::numeric_limits<int>::max() / 2;
    for (size_t i = n + 1; i-- > 0;) {
        for (size_t j = m + 1; j-- > 0;) {
            for (int s = 0; s < 2; ++s) {
                auto& f = s ? f1 : f0;
                auto& c = s ? c1 : c0;
                if (i == n || j == m) {
                    f[at(i, j)] = {0, 0};
                    c[at(i, j)] = 0;
                    continue;
                }
                Cell best{-1, inf};
                unsigned char choice = 2;
                if (a[i] == b[j]) {
                    Cell next = f1[at(i + 1, j + 1)];
                    Cell cand{next.len + 1, next.breaks + (s ? 0 : 1)};
                    best = cand;
                    choice = 1;
                }
                Cell skip_a = f0[at(i + 1, j)];
                if (skip_a.len > best.len ||
                    (skip_a.len == best.len && skip_a.breaks < best.breaks)) {
                    best = skip_a;
                    choice = 2;
                }
                Cell skip_b = f0[at(i, j + 1)];
                if (skip_b.len > best.len ||
                    (skip_b.len == best.len && skip_b.breaks < best.breaks)) {
                    best = skip_b;
                    choice = 3;
                }
                f[at(i, j)] = best;
                c[at(i, j)] = choice;
            }
        }
    }
    std::vector<std::pair<size_t, size_t>> matches;
    size_t i = 0, j = 0;
    int s = 0;
    while (i < n && j < m) {
        unsigned char choice = (s ? c1 : c0)[at(i, j)];
        if (choice == 1) {
            matches.emplace_back(i, j);
            ++i;
            ++j;
            s = 1;
        } else if (choice == 2) {
            ++i;
            s = 0;
        } else {
            ++j;
            s = 0;
        }
    }
    return matches;
}

DiffReport diff_of_matches(std::vector<std::pair<size_t, size_t>> matches, size_t n,
                           size_t m) {
    // group into contiguous blocks
    std::vector<std::vector<std::pair<size_t, size_t>>> blocks;
    for (auto [mi, mj] : matches) {
        if (!blocks.empty() && mi == blocks.back().back().first + 1 &&
            mj == blocks.back().back().second + 1)
            blocks.back().emplace_back(mi, mj);
        else
            blocks.push_back({{mi, mj}});
    }
    // a lone matching token amid changes on either side belongs to the change
    std::vector<bool> keep(blocks.size(), true);
    for (size_t k = 1; k + 1 < blocks.size(); ++k) {
        if (blocks[k].size() != 1) continue;
        auto [pi, pj] = blocks[k - 1].back();
        auto [ni, nj] = blocks[k + 1].front();
        size_t da1 = blocks[k][0].first - pi - 1, db1 = blocks[k][0].second - pj - 1;
        size_t da2 = ni - blocks[k][0].first - 1, db2 = nj - blocks[k][0].second - 1;
        if (std::max(da1, db1) >= 2 || std::max(da2, db2) >= 2) keep[k] = false;
    }
    matches.clear();
    for (size_t k = 0; k < blocks.size(); ++k)
        if (keep[k])
            for (auto p : blocks[k]) matches.push_back(p);

    DiffReport report;
    size_t pi = 0, pj = 0;
    matches.emplace_back(n, m); // sentinel
    for (auto [mi, mj] : matches) {
        if (mi > pi || mj > pj) {
            report.hunks.push_back({Span{pi, mi}, Span{pj, mj}});
            if (mi > pi) ++report.removals;
            if (mj > pj) ++report.additions;
        }
        pi = mi + 1;
        pj = mj + 1;
    }
    return report;
}

} // namespace

DiffReport word_diff_tokens(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
    // canonical orientation keeps the alignment symmetric under swapping
    if (b < a) {
        DiffReport mirrored = word_diff_tokens(b, a);
        DiffReport report;
        report.removals = mirrored.additions;
        report.additions = mirrored.removals;
        for (auto& [sa, sb] : mirrored.hunks) report.hunks.push_back({sb, sa});
        return report;
    }
    return diff_of_matches(align(a, b), a.size(), b.size());
}

DiffReport word_diff(const std::string& a, const std::string& b) {
    return word_diff_tokens(text::word_tokens(a, false), text::word_tokens(b, false));
}

std::vector<double> group_stats(
    const std::vector<std::vector<std::pair<int, int>>>& groups) {
    std::vector<double> means;
    for (const auto& group : groups) {
        if (group.empty()) throw Error("group_stats: empty group");
        long long sum = 0;
        for (auto [removals, additions] : group) sum += removals + additions;
        means.push_back(static_cast<double>(sum) / (2.0 * group.size()));
    }
    return means;
}

double cohens_f_from_eta_squared(double eta_squared) {
    if (eta_squared >= 1.0) return std::numeric_limits<double>::infinity();
    if (eta_squared <= 0.0) return 0.0;
    return std::sqrt(eta_squared / (1.0 - eta_squared));
}

EffectSize effect_size(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) throw Error("effect_size: need at least two groups");
    size_t total_n = 0;
    double grand_sum = 0.0;
    EffectSize result;
    for (const auto& g : groups) {
        if (g.empty()) throw Error("effect_size: empty group");
        double sum = 0.0;
        for (double v : g) sum += v;
        result.group_means.push_back(sum / g.size());
        grand_sum += sum;
        total_n += g.size();
    }
    double grand_mean = grand_sum / total_n;
    double ss_between = 0.0, ss_total = 0.0;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        double d = result.group_means[gi] - grand_mean;
        ss_between += groups[gi].size() * d * d;
        for (double v : groups[gi]) ss_total += (v - grand_mean) * (v - grand_mean);
    }
    result.eta_squared = ss_total == 0.0 ? 0.0 : ss_between / ss_total;
    result.cohens_f = cohens_f_from_eta_squared(result.eta_squared);
    return result;
}

} // namespace pucci
