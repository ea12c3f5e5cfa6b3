#pragma once

/**
 * @file periodic_matrix.hpp
 * @brief Periodic Z x Z matrices with a_{i+n,j+n} = a_{i,j} and the dictionary
 *        A <-> (r(A), c(A), w_A) with double cosets of the extended affine Weyl group.
 *
 * Block convention: a composition a of D tiles Z by row blocks
 * R_I = {q D + a_1 + ... + a_{r-1} + 1, ..., q D + a_1 + ... + a_r} for I = q n + r.
 * For a permutation w, A_{I,J} = #{p in R_I : (p)w in C_J}, with C_J built from c(A).
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/affine_perm.hpp"
#include "cellkit/error.hpp"

namespace cellkit {

/// n nonnegative integers summing to D.
using Composition = std::vector<int>;

inline int composition_weight(const Composition& a) { return std::accumulate(a.begin(), a.end(), 0); }

/// Length of the longest element w_a of the parabolic subgroup S_a.
inline int longest_length(const Composition& a) {
    int s = 0;
    for (int x : a) s += x * (x - 1) / 2;
    return s;
}

/// |a|^2 = sum a_i^2.
inline int squared_norm(const Composition& a) {
    int s = 0;
    for (int x : a) s += x * x;
    return s;
}

/// All compositions of D into n nonnegative parts, lexicographically increasing.
inline std::vector<Composition> compositions_of(int D, int n) {
    std::vector<Composition> out;
    Composition cur;
    auto rec = [&](auto&& self, int left, int slots) -> void {
        if (slots == 1) {
            cur.push_back(left);
            out.push_back(cur);
            cur.pop_back();
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur.push_back(x);
            self(self, left - x, slots - 1);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(rec, D, n);
    return out;
}

/// Periodic block decomposition of Z by a composition.
class BlockTiling {
public:
    explicit BlockTiling(Composition a) : a_(std::move(a)), D_(composition_weight(a_)) {
        if (a_.empty()) throw Error("MalformedMatrix", "empty composition");
        for (int x : a_)
            if (x < 0) throw Error("MalformedMatrix", "negative composition entry");
        if (D_ == 0) throw Error("MalformedMatrix", "composition of zero");
        starts_.assign(a_.size() + 1, 1);
        for (std::size_t r = 0; r < a_.size(); ++r) starts_[r + 1] = starts_[r] + a_[r];
    }

    int n() const { return static_cast<int>(a_.size()); }
    int D() const { return D_; }
    const Composition& composition() const { return a_; }

    /// First index of block I (the block may be empty).
    int start(int I) const {
        const int q = floor_div(I - 1, n());
        const int r = I - q * n();  // 1..n
        return q * D_ + starts_[r - 1];
    }
    int size(int I) const { return a_[mod_pos(I - 1, n())]; }

    /// The block containing position p.
    int block_of(int p) const {
        const int q = floor_div(p - 1, D_);
        const int local = p - q * D_;  // 1..D
        int r = 1;
        while (starts_[r] <= local) ++r;
        return q * n() + r;
    }

    /// Generators s_k (1 <= k < D) of the parabolic subgroup S_a.
    std::vector<int> parabolic_generators() const {
        std::vector<int> g;
        for (int k = 1; k < D_; ++k)
            if (block_of(k) == block_of(k + 1)) g.push_back(k);
        return g;
    }

private:
    Composition a_;
    int D_;
    std::vector<int> starts_;
};

class PeriodicMatrix {
public:
    struct Entry {
        int row;  ///< 1..n
        int col;
        int value;
    };

    PeriodicMatrix() : entries_{{{1, 1}, 1}} {}

    /// Entries are (row in 1..n, column, positive value). Validates the weight.
    PeriodicMatrix(int D, int n, const std::vector<Entry>& entries) : D_(D), n_(n) {
        if (D <= 0 || n <= 0) throw Error("MalformedMatrix", "D and n must be positive");
        for (const auto& e : entries) {
            if (e.row < 1 || e.row > n) throw Error("MalformedMatrix", "stored rows must lie in 1..n");
            if (e.value < 0) throw Error("MalformedMatrix", "entries must be nonnegative");
            if (e.value == 0) continue;
            entries_[{e.row, e.col}] += e.value;
        }
        int total = 0;
        for (const auto& [k, v] : entries_) total += v;
        if (total != D) throw Error("MalformedMatrix", "entries of one period must sum to D", to_string());
    }

    /// i_a: the diagonal matrix with a_{i,i} = a_i.
    static PeriodicMatrix diagonal(const Composition& a) {
        std::vector<Entry> es;
        for (std::size_t i = 0; i < a.size(); ++i) es.push_back({static_cast<int>(i) + 1, static_cast<int>(i) + 1, a[i]});
        return PeriodicMatrix(composition_weight(a), static_cast<int>(a.size()), es);
    }

    int D() const { return D_; }
    int n() const { return n_; }

    /// a_{i,j} for arbitrary integers.
    int at(int i, int j) const {
        const int q = floor_div(i - 1, n_);
        auto it = entries_.find({i - q * n_, j - q * n_});
        return it == entries_.end() ? 0 : it->second;
    }

    /// Nonzero entries of rows 1..n, ordered by (row, column).
    std::vector<Entry> support() const {
        std::vector<Entry> out;
        for (const auto& [k, v] : entries_) out.push_back({k.first, k.second, v});
        return out;
    }

    Composition row_sums() const {
        Composition r(n_, 0);
        for (const auto& [k, v] : entries_) r[k.first - 1] += v;
        return r;
    }
    Composition col_sums() const {
        Composition c(n_, 0);
        for (const auto& [k, v] : entries_) c[mod_pos(k.second - 1, n_)] += v;
        return c;
    }

    PeriodicMatrix transpose() const {
        std::vector<Entry> es;
        for (const auto& [k, v] : entries_) {
            // a^t_{j,i} = a_{i,j}; bring j into 1..n.
            const int q = floor_div(k.second - 1, n_);
            es.push_back({k.second - q * n_, k.first - q * n_, v});
        }
        return PeriodicMatrix(D_, n_, es);
    }

    /// sum over i in 1..n, i >= k, j < l of a_{i,j} a_{k,l}.
    long long d_exponent() const {
        long long d = 0;
        const auto sup = support();
        for (const auto& x : sup)
            for (const auto& y : sup) {
                // translates (y.row + t n, y.col + t n) with y.row + t n <= x.row and y.col + t n > x.col
                const int t_max = floor_div(x.row - y.row, n_);
                const int t_min = floor_div(x.col - y.col, n_) + 1;
                if (t_max >= t_min) d += static_cast<long long>(t_max - t_min + 1) * x.value * y.value;
            }
        return d;
    }

    bool is_diagonal() const {
        for (const auto& [k, v] : entries_)
            if (k.first != k.second) return false;
        return true;
    }

    friend bool operator==(const PeriodicMatrix& a, const PeriodicMatrix& b) {
        return a.D_ == b.D_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const PeriodicMatrix& a, const PeriodicMatrix& b) { return !(a == b); }
    friend bool operator<(const PeriodicMatrix& a, const PeriodicMatrix& b) {
        if (a.D_ != b.D_) return a.D_ < b.D_;
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.entries_ < b.entries_;
    }

    /// "{(1,1):1, (1,2):1}"
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : entries_) {
            if (!first) s += ", ";
            first = false;
            s += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "):" + std::to_string(v);
        }
        return s + "}";
    }
    friend std::ostream& operator<<(std::ostream& os, const PeriodicMatrix& a) { return os << a.to_string(); }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(D_) * 131 + static_cast<std::size_t>(n_);
        for (const auto& [k, v] : entries_) {
            h = (h ^ static_cast<std::size_t>(k.first)) * 0x100000001b3ULL;
            h = (h ^ static_cast<std::size_t>(k.second + 0x4000)) * 0x100000001b3ULL;
            h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
        }
        return h;
    }

private:
    int D_ = 1;
    int n_ = 1;
    std::map<std::pair<int, int>, int> entries_;
};

struct PeriodicMatrixHash {
    std::size_t operator()(const PeriodicMatrix& a) const noexcept { return a.hash(); }
};

struct MatrixTriple {
    Composition a;
    Composition b;
    AffinePermutation w;
};

/// The orbit matrix of w for row blocks a and column blocks b.
inline PeriodicMatrix from_triple(const Composition& a, const Composition& b, const AffinePermutation& w) {
    if (a.size() != b.size()) throw dimension_mismatch("compositions of different lengths");
    const BlockTiling rows(a), cols(b);
    if (rows.D() != w.period() || cols.D() != w.period()) throw dimension_mismatch("composition weight differs from D");
    std::map<std::pair<int, int>, int> counts;
    for (int p = 1; p <= w.period(); ++p) ++counts[{rows.block_of(p), cols.block_of(w(p))}];
    std::vector<PeriodicMatrix::Entry> es;
    for (const auto& [k, v] : counts) es.push_back({k.first, k.second, v});
    return PeriodicMatrix(w.period(), rows.n(), es);
}

/// The permutation matrix A_w (n = D): a_{i,(i)w} = 1.
inline PeriodicMatrix to_matrix(const AffinePermutation& w) {
    const Composition ones(w.period(), 1);
    return from_triple(ones, ones, w);
}

/// Inverse of to_matrix; requires n = D and all row and column sums equal to 1.
inline AffinePermutation from_matrix(const PeriodicMatrix& A) {
    const Composition ones(A.n(), 1);
    if (A.n() != A.D() || A.row_sums() != ones || A.col_sums() != ones)
        throw Error("NotPermutation", "row and column sums must all be 1", A.to_string());
    std::vector<int> window(A.D());
    for (const auto& e : A.support()) window[e.row - 1] = e.col;
    return AffinePermutation(A.D(), window);
}

namespace detail {

/// The shortest element of the double coset S_a w S_b attached to A.
inline AffinePermutation minimal_representative(const PeriodicMatrix& A) {
    const BlockTiling rows(A.row_sums()), cols(A.col_sums());
    const int D = A.D(), n = A.n();
    const auto sup = A.support();
    std::vector<int> window(D);
    for (int I = 1; I <= n; ++I) {
        int pos = rows.start(I);
        std::vector<std::pair<int, int>> targets;  // (J, count) increasing in J
        for (const auto& e : sup)
            if (e.row == I) targets.emplace_back(e.col, e.value);
        std::sort(targets.begin(), targets.end());
        for (auto [J, cnt] : targets) {
            // values of C_J already claimed by earlier row blocks I' < I
            int offset = 0;
            for (const auto& e : sup) {
                // translates of e landing in column J: row e.row + t n with t = (J - e.col) / n
                if ((J - e.col) % n != 0) continue;
                const int t = (J - e.col) / n;
                if (e.row + t * n < I) offset += e.value;
            }
            for (int k = 0; k < cnt; ++k) window[pos - 1 + k] = cols.start(J) + offset + k;
            pos += cnt;
        }
    }
    return AffinePermutation(D, window);
}

}  // namespace detail

/// (r(A), c(A), w_A) with w_A the longest element of its double coset.
inline MatrixTriple to_triple(const PeriodicMatrix& A) {
    const Composition a = A.row_sums(), b = A.col_sums();
    const auto left_gens = BlockTiling(a).parabolic_generators();
    const auto right_gens = BlockTiling(b).parabolic_generators();
    AffinePermutation w = detail::minimal_representative(A);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int k : left_gens)
            if (!w.is_left_descent(k)) {
                w = w.left_mul_simple(k);
                grew = true;
            }
        for (int k : right_gens)
            if (!w.is_right_descent(k)) {
                w = w.right_mul_simple(k);
                grew = true;
            }
    }
    if (from_triple(a, b, w) != A) throw Error("InvariantViolation", "double coset representative mismatch", A.to_string());
    return {a, b, w};
}

}  // namespace cellkit

template <>
struct std::hash<cellkit::PeriodicMatrix> {
    std::size_t operator()(const cellkit::PeriodicMatrix& a) const noexcept { return a.hash(); }
};
