#pragma once

/**
 * @file cellcomb.hpp
 * @brief Combinatorial cell labels for the affine symmetric group and the
 *        affine q-Schur algebra.
 *
 *  - sigma_partition: Greene-type invariants of d-chains of w;
 *  - rho_partition:   the same for anti-diagonal paths in a periodic matrix;
 *  - mdc_blocks / shi_tableau: maximal descending chain forms and the left-cell tableau;
 *  - tableaux_enumerate, h_map, left_cell_count, descents_from_tableau.
 *
 * Both sigma and rho are computed by exhaustive search. One period of
 * classes is fixed by translation, and a single chain can only span a
 * bounded window (2 * max |(i)w - i| for sigma, 2 * max |j - i| over the
 * support for rho), so the search is exact. d_j is then the best union of
 * j chains, each congruence class counted once.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cellkit/affine_perm.hpp"
#include "cellkit/periodic_matrix.hpp"
#include "cellkit/partition.hpp"

namespace cellkit {

namespace detail {

/// Given chains as bitmasks over classes with the given weights, returns the
/// partition (d_1, d_2 - d_1, ...) where d_j is the heaviest union of j chains.
inline Partition greene_partition(const std::unordered_set<std::uint64_t>& chains, const std::vector<int>& weights,
                                  int num_steps) {
    auto weight_of = [&](std::uint64_t m) {
        int s = 0;
        for (std::size_t c = 0; c < weights.size(); ++c)
            if (m >> c & 1U) s += weights[c];
        return s;
    };
    std::unordered_set<std::uint64_t> reach{0};
    std::vector<int> d{0};
    for (int j = 1; j <= num_steps; ++j) {
        std::unordered_set<std::uint64_t> next(reach);
        for (auto r : reach)
            for (auto c : chains) next.insert(r | c);
        reach = std::move(next);
        int best = 0;
        for (auto r : reach) best = std::max(best, weight_of(r));
        d.push_back(best);
    }
    std::vector<int> parts;
    for (int j = 1; j <= num_steps; ++j) parts.push_back(d[j] - d[j - 1]);
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    try {
        return Partition(parts);
    } catch (const Error&) {
        throw Error("InvariantViolation", "chain invariants do not form a partition");
    }
}

}  // namespace detail

/// sigma(w): lambda = (d_1, d_2 - d_1, ...) where d_j is the largest number of
/// pairwise incongruent indices covered by j d-chains.
inline Partition sigma_partition(const AffinePermutation& w) {
    const int D = w.period();
    if (D > 63) throw Error("Unsupported", "period too large for exhaustive d-chain search");
    int spread = 0;
    for (int i = 1; i <= D; ++i) spread = std::max(spread, std::abs(w(i) - i));
    const int window = 2 * spread + 1;

    std::unordered_set<std::uint64_t> chains;
    std::set<std::pair<int, std::uint64_t>> visited;
    auto extend = [&](auto&& self, int first, int last, std::uint64_t mask) -> void {
        if (!visited.emplace(last, mask).second) return;
        chains.insert(mask);
        for (int p = last + 1; p < first + window; ++p) {
            if (w(p) >= w(last)) continue;
            const auto bit = std::uint64_t{1} << mod_pos(p, D);
            if (mask & bit) continue;
            self(self, first, p, mask | bit);
        }
    };
    for (int first = 1; first <= D; ++first) {
        visited.clear();
        extend(extend, first, first, std::uint64_t{1} << mod_pos(first, D));
    }
    return detail::greene_partition(chains, std::vector<int>(D, 1), D);
}

/// rho(A): lambda = (d_1, ..., d_n - d_{n-1}) where d_j is the largest entry sum of
/// a union of j anti-diagonal paths (moves up or right), each periodic class once.
inline Partition rho_partition(const PeriodicMatrix& a) {
    const int n = a.n();
    const auto& support = a.support();  // (row in 1..n, column, value)
    if (support.size() > 63) throw Error("Unsupported", "too many nonzero entries for exhaustive path search");
    std::vector<int> weights;
    int spread = 0;
    for (const auto& e : support) {
        weights.push_back(e.value);
        spread = std::max(spread, std::abs(e.col - e.row));
    }
    const int window = 2 * spread;

    // Nonzero entries in the region rows [r0 - window, r0], columns [c0, c0 + window].
    struct Point {
        int row, col, cls;
    };
    auto region = [&](int r0, int c0) {
        std::vector<Point> pts;
        for (std::size_t k = 0; k < support.size(); ++k) {
            const auto& e = support[k];
            // translates (e.row + t n, e.col + t n)
            for (int t = floor_div(r0 - window - e.row, n); e.row + t * n <= r0; ++t) {
                const int r = e.row + t * n, c = e.col + t * n;
                if (r < r0 - window || c < c0 || c > c0 + window) continue;
                pts.push_back({r, c, static_cast<int>(k)});
            }
        }
        return pts;
    };

    std::unordered_set<std::uint64_t> chains;
    for (std::size_t k = 0; k < support.size(); ++k) {
        const auto& e = support[k];
        const auto pts = region(e.row, e.col);
        std::set<std::pair<std::size_t, std::uint64_t>> visited;
        // index of the anchor inside pts
        std::size_t anchor = 0;
        for (std::size_t p = 0; p < pts.size(); ++p)
            if (pts[p].row == e.row && pts[p].col == e.col) anchor = p;
        auto extend = [&](auto&& self, std::size_t last, std::uint64_t mask) -> void {
            if (!visited.emplace(last, mask).second) return;
            chains.insert(mask);
            for (std::size_t p = 0; p < pts.size(); ++p) {
                if (p == last) continue;
                if (pts[p].row > pts[last].row || pts[p].col < pts[last].col) continue;
                const auto bit = std::uint64_t{1} << pts[p].cls;
                if (mask & bit) continue;
                self(self, p, mask | bit);
            }
        };
        extend(extend, anchor, std::uint64_t{1} << k);
    }
    Partition lambda = detail::greene_partition(chains, weights, n);
    if (lambda.weight() != a.D())
        throw Error("InvariantViolation", "n anti-diagonal paths do not exhaust a period", a.to_string());
    return lambda;
}

// ---- maximal descending chains ----------------------------------------------

/// One MDC block of the permutation matrix of w: rows first_row .. first_row + size - 1
/// with strictly decreasing columns.
struct MdcBlock {
    int first_row;
    std::vector<int> columns;
    int size() const { return static_cast<int>(columns.size()); }
    friend bool operator==(const MdcBlock& a, const MdcBlock& b) {
        return a.first_row == b.first_row && a.columns == b.columns;
    }
};

/// The MDC blocks covering rows i+1 .. i+D, in row order, when w has full MDC form at i.
inline std::optional<std::vector<MdcBlock>> mdc_blocks(const AffinePermutation& w, int i) {
    const int D = w.period();
    // A block boundary sits between rows r and r+1 exactly when (r)w < (r+1)w.
    if (!(w(i) < w(i + 1))) return std::nullopt;
    std::vector<MdcBlock> blocks;
    for (int r = i + 1; r <= i + D; ++r) {
        if (r == i + 1 || w(r - 1) < w(r)) blocks.push_back({r, {}});
        blocks.back().columns.push_back(w(r));
    }
    return blocks;
}

/// Shi's tableau of the left cell of w, read from a normal full MDC form;
/// std::nullopt when no normal form exists at any i (w is then not in N_lambda).
/// Residue 0 is written as D, and each column lists its residues in decreasing order.
inline std::optional<Tableau> shi_tableau(const AffinePermutation& w) {
    const int D = w.period();
    for (int i = 0; i < D; ++i) {
        auto blocks = mdc_blocks(w, i);
        if (!blocks) continue;
        // In row order the blocks are A_l, ..., A_1 and must weakly increase in size.
        bool increasing = true;
        for (std::size_t b = 1; b < blocks->size(); ++b)
            if ((*blocks)[b].size() < (*blocks)[b - 1].size()) increasing = false;
        if (!increasing) continue;
        std::vector<MdcBlock> by_t(blocks->rbegin(), blocks->rend());  // by_t[t-1] = A_t
        const int width = by_t.front().size();
        bool normal = true;
        for (int u = 0; u < width && normal; ++u) {
            const int top = by_t[0].columns[u];
            int prev = top - D;
            for (std::size_t t = by_t.size(); t-- > 0;) {
                if (u >= by_t[t].size()) continue;
                const int j = by_t[t].columns[u];
                if (t == 0) {
                    if (!(prev < j)) normal = false;
                } else {
                    if (!(prev < j && j < top)) normal = false;
                    prev = j;
                }
            }
        }
        if (!normal) continue;
        std::vector<std::vector<int>> rows;
        for (const auto& blk : by_t) {
            std::vector<int> row;
            for (int c : blk.columns) {
                const int r = mod_pos(c, D);
                row.push_back(r == 0 ? D : r);
            }
            rows.push_back(std::move(row));
        }
        for (int u = 0; u < width; ++u) {
            std::vector<int> col;
            for (const auto& row : rows)
                if (u < static_cast<int>(row.size())) col.push_back(row[u]);
            std::sort(col.rbegin(), col.rend());
            for (std::size_t t = 0; t < col.size(); ++t) rows[t][u] = col[t];
        }
        return Tableau(std::move(rows));
    }
    return std::nullopt;
}

// ---- tableaux ----------------------------------------------------------------

/// All tableaux of shape lambda with entries in 1..n strictly decreasing down columns.
inline std::vector<Tableau> tableaux_enumerate(int n, const Partition& lambda) {
    if (lambda.num_parts() > n || lambda.num_parts() == 0) return {};
    const Partition cols = lambda.dual();
    // every column independently: a strictly decreasing sequence from 1..n
    std::vector<std::vector<std::vector<int>>> column_choices;
    for (int len : cols.parts()) {
        std::vector<std::vector<int>> choices;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int max_entry) -> void {
            if (static_cast<int>(cur.size()) == len) {
                choices.push_back(cur);
                return;
            }
            for (int x = max_entry; x >= len - static_cast<int>(cur.size()); --x) {
                cur.push_back(x);
                self(self, x - 1);
                cur.pop_back();
            }
        };
        rec(rec, n);
        column_choices.push_back(std::move(choices));
    }
    std::vector<Tableau> out;
    std::vector<std::size_t> idx(column_choices.size(), 0);
    while (true) {
        std::vector<std::vector<int>> rows(lambda.num_parts());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            const auto& col = column_choices[c][idx[c]];
            for (std::size_t r = 0; r < col.size(); ++r) rows[r].push_back(col[r]);
        }
        out.emplace_back(std::move(rows));
        std::size_t c = idx.size();
        while (c > 0) {
            --c;
            if (++idx[c] < column_choices[c].size()) break;
            idx[c] = 0;
            if (c == 0) return out;
        }
        if (idx.empty()) return out;
    }
}

/// prod_{i=1}^{n-1} binom(n, i)^{lambda_i - lambda_{i+1}}; zero when lambda has more than n parts.
inline boost::multiprecision::cpp_int left_cell_count(int n, const Partition& lambda) {
    using boost::multiprecision::cpp_int;
    if (lambda.num_parts() > n) return 0;
    cpp_int total = 1;
    for (int i = 1; i <= n - 1; ++i) {
        cpp_int binom = 1;
        for (int k = 1; k <= i; ++k) binom = binom * (n - i + k) / k;
        const int e = lambda.part(i) - lambda.part(i + 1);
        for (int k = 0; k < e; ++k) total *= binom;
    }
    return total;
}

struct HMapResult {
    Tableau standard;
    std::vector<int> composition;
};

/// Orders the boxes by label, right to left within a label, and relabels each box by its position.
inline HMapResult h_map(const Tableau& t, int n) {
    struct Box {
        int label, col, row;
    };
    std::vector<Box> boxes;
    std::vector<int> comp(n, 0);
    for (int r = 0; r < static_cast<int>(t.rows().size()); ++r)
        for (int c = 0; c < static_cast<int>(t.rows()[r].size()); ++c) {
            const int label = t.at(r, c);
            if (label < 1 || label > n) throw Error("InvalidTableau", "label out of range 1..n", t.to_string());
            boxes.push_back({label, c, r});
            ++comp[label - 1];
        }
    std::stable_sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
        return a.label != b.label ? a.label < b.label : a.col > b.col;
    });
    std::vector<std::vector<int>> rows = t.rows();
    for (std::size_t k = 0; k < boxes.size(); ++k) rows[boxes[k].row][boxes[k].col] = static_cast<int>(k) + 1;
    return {Tableau(std::move(rows)), std::move(comp)};
}

/// {s_i : i appears strictly to the right of i+1}, reading i = D, i+1 = 1 for s_0.
inline std::vector<int> descents_from_tableau(const Tableau& t, int D) {
    std::vector<int> out;
    for (int i = 0; i < D; ++i) {
        const int lo = i == 0 ? D : i;
        const int hi = i == 0 ? 1 : i + 1;
        if (t.column_of(lo) > t.column_of(hi)) out.push_back(i);
    }
    return out;
}

}  // namespace cellkit
