#pragma once

/**
 * @file asymptotic.hpp
 * @brief The asymptotic ring J_c of a two-sided cell of the q-Schur algebra, its model as a
 *        matrix ring over a representation ring, and the map Phi into it.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cellkit/cellcomb.hpp"
#include "cellkit/schur.hpp"

namespace cellkit {

/// gamma_{A,B}^C = gamma_{w_A,w_B}^{w_C}; zero when the blocks do not compose.
inline BigInt gamma(SchurAlgebra& S, const PeriodicMatrix& A, const PeriodicMatrix& B, const PeriodicMatrix& C) {
    const auto ta = S.triple(A), tb = S.triple(B), tc = S.triple(C);
    if (ta.b != tb.a || tc.a != ta.a || tc.b != tb.b) return 0;
    return S.hecke().gamma(ta.w, tb.w, tc.w);
}

namespace detail {

/// sum over (A,B) of x_A y_B gamma_{A,B}^C t_C, restricted to C in the cell lambda.
template <class Coeff>
std::map<PeriodicMatrix, Coeff> j_product(SchurAlgebra& S, const Partition& cell,
                                          const std::map<PeriodicMatrix, Coeff>& x,
                                          const std::map<PeriodicMatrix, Coeff>& y) {
    std::map<PeriodicMatrix, Coeff> out;
    for (const auto& [A, p] : x)
        for (const auto& [B, q] : y) {
            const auto ta = S.triple(A), tb = S.triple(B);
            if (ta.b != tb.a) continue;
            const HeckeElement h = S.hecke().h_constants(ta.w, tb.w);
            for (const auto& [z, poly] : h.terms()) {
                const Partition lam = sigma_partition(z);
                if (lam != cell) continue;
                const BigInt g = poly.coeff(lam.a_value());
                if (g == 0) continue;
                out[from_triple(ta.a, tb.b, z)] += Coeff(p * q) * Coeff(g);
            }
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == Coeff(0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

/// Integer combination of the basis t_A of J_c, A ranging over one two-sided cell.
class JElement {
public:
    using Terms = std::map<PeriodicMatrix, BigInt>;

    explicit JElement(Partition cell) : cell_(std::move(cell)) {}
    static JElement basis(const Partition& cell, const PeriodicMatrix& A) {
        JElement e(cell);
        e.add(A, 1);
        return e;
    }

    const Partition& cell() const noexcept { return cell_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    BigInt coeff(const PeriodicMatrix& A) const {
        auto it = terms_.find(A);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add(const PeriodicMatrix& A, const BigInt& c) {
        if (rho_partition(A) != cell_) throw Error("CellMismatch", "label lies outside the cell " + cell_.to_string(), A.to_string());
        if (c == 0) return;
        auto& slot = terms_[A];
        slot += c;
        if (slot == 0) terms_.erase(A);
    }

    friend bool operator==(const JElement& a, const JElement& b) { return a.cell_ == b.cell_ && a.terms_ == b.terms_; }
    friend bool operator!=(const JElement& a, const JElement& b) { return !(a == b); }

private:
    friend JElement j_multiply(SchurAlgebra&, const JElement&, const JElement&);
    Partition cell_;
    Terms terms_;
};

/// t_A t_B = sum_C gamma_{A,B}^C t_C.
inline JElement j_multiply(SchurAlgebra& S, const JElement& x, const JElement& y) {
    if (x.cell() != y.cell()) throw Error("CellMismatch", "factors lie in different cells", x.cell().to_string() + " vs " + y.cell().to_string());
    JElement r(x.cell());
    r.terms_ = detail::j_product(S, x.cell(), x.terms(), y.terms());
    return r;
}

/// The distinguished labels of the cell lambda, found in growing balls until their number
/// reaches the left-cell count; throws NotFound past `max_radius`.
inline std::vector<PeriodicMatrix> distinguished_in_cell(SchurAlgebra& S, const Partition& lambda, int max_radius = 16) {
    const BigInt want = left_cell_count(S.n(), lambda);
    std::vector<PeriodicMatrix> out;
    for (int r = 0; r <= max_radius; ++r) {
        out.clear();
        for (const auto& A : S.ball(r))
            if (rho_partition(A) == lambda && S.is_distinguished(A)) out.push_back(A);
        if (BigInt(out.size()) == want) return out;
    }
    throw Error("NotFound", "distinguished labels of the cell not all found", lambda.to_string());
}

using PhiImage = std::map<PeriodicMatrix, LaurentPoly>;

/// Phi({A}) = sum over distinguished E and B in the cell of nu_{A,E}^B t_B.
inline PhiImage phi(SchurAlgebra& S, const PeriodicMatrix& A, const Partition& cell,
                    const std::vector<PeriodicMatrix>& distinguished) {
    PhiImage out;
    for (const auto& E : distinguished)
        for (const auto& [B, p] : S.nu(A, E))
            if (rho_partition(B) == cell) out[B] += p;
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Product in Q(v) (x) J_c.
inline PhiImage phi_multiply(SchurAlgebra& S, const Partition& cell, const PhiImage& x, const PhiImage& y) {
    return detail::j_product(S, cell, x, y);
}

// ---------------------------------------------------------------- representation-ring model

/// Dominant weight of GL_m: weakly decreasing integers.
using GLFactorWeight = std::vector<int>;

inline void check_dominant(const GLFactorWeight& k) {
    for (std::size_t i = 1; i < k.size(); ++i)
        if (k[i] > k[i - 1]) throw Error("InvalidWeight", "GL weight must be weakly decreasing");
}

namespace detail {

/// Number of LR tableaux of skew shape outer/inner with the given content.
inline long long lr_tableaux(const std::vector<int>& outer, const std::vector<int>& inner, const std::vector<int>& content) {
    const int rows = static_cast<int>(outer.size());
    auto in = [&](int r) { return r < static_cast<int>(inner.size()) ? inner[r] : 0; };
    for (int r = 0; r < rows; ++r)
        if (in(r) > outer[r]) return 0;
    if (static_cast<int>(inner.size()) > rows) return 0;
    // reading order: rows top to bottom, right to left
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = outer[r] - 1; c >= in(r); --c) cells.emplace_back(r, c);
    const int labels = static_cast<int>(content.size());
    std::vector<std::vector<int>> fill(rows);
    for (int r = 0; r < rows; ++r) fill[r].assign(outer[r], 0);
    std::vector<int> used(labels + 1, 0);
    long long count = 0;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            ++count;
            return;
        }
        const auto [r, c] = cells[k];
        int hi = labels;
        if (c + 1 < outer[r]) hi = std::min(hi, fill[r][c + 1]);
        int lo = 1;
        if (r > 0 && c >= in(r - 1) && c < outer[r - 1]) lo = fill[r - 1][c] + 1;
        for (int x = lo; x <= hi; ++x) {
            if (used[x] >= content[x - 1]) continue;
            if (x > 1 && used[x] + 1 > used[x - 1]) continue;
            ++used[x];
            fill[r][c] = x;
            self(self, k + 1);
            fill[r][c] = 0;
            --used[x];
        }
    };
    rec(rec, 0);
    return count;
}

inline std::vector<int> shifted(const GLFactorWeight& k, int t) {
    std::vector<int> p(k);
    for (int& x : p) x += t;
    return p;
}

inline std::vector<int> strip_zeros(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

}  // namespace detail

/// Multiplicity of kappa2 in kappa0 (x) kappa1 for GL_m.
inline long long lr_coefficient(const GLFactorWeight& k0, const GLFactorWeight& k1, const GLFactorWeight& k2) {
    if (k0.size() != k1.size() || k1.size() != k2.size())
        throw Error("FactorMismatch", "weights belong to different GL_m");
    check_dominant(k0);
    check_dominant(k1);
    check_dominant(k2);
    if (k0.empty()) return 1;
    // determinant twists make everything a partition
    const int t0 = std::max(0, -k0.back()), t1 = std::max(0, -k1.back());
    const auto p0 = detail::shifted(k0, t0), p1 = detail::shifted(k1, t1), p2 = detail::shifted(k2, t0 + t1);
    if (p2.back() < 0) return 0;
    auto sum = [](const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); };
    if (sum(p0) + sum(p1) != sum(p2)) return 0;
    return detail::lr_tableaux(detail::strip_zeros(p2), detail::strip_zeros(p0), detail::strip_zeros(p1));
}

/// kappa0 (x) kappa1 as a map from dominant weights to multiplicities.
inline std::map<GLFactorWeight, long long> lr_expand(const GLFactorWeight& k0, const GLFactorWeight& k1) {
    if (k0.size() != k1.size()) throw Error("FactorMismatch", "weights belong to different GL_m");
    std::map<GLFactorWeight, long long> out;
    const int m = static_cast<int>(k0.size());
    if (m == 0) {
        out[{}] = 1;
        return out;
    }
    check_dominant(k0);
    check_dominant(k1);
    const int t0 = std::max(0, -k0.back()), t1 = std::max(0, -k1.back());
    const auto p0 = detail::shifted(k0, t0), p1 = detail::shifted(k1, t1);
    const int total = std::accumulate(p0.begin(), p0.end(), 0) + std::accumulate(p1.begin(), p1.end(), 0);
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (static_cast<int>(cur.size()) == m) {
            if (remaining != 0) return;
            bool contains = true;
            for (int i = 0; i < m; ++i) contains = contains && cur[i] >= p0[i] && cur[i] >= p1[i];
            if (!contains) return;
            const long long c = detail::lr_tableaux(detail::strip_zeros(cur), detail::strip_zeros(p0), detail::strip_zeros(p1));
            if (c) out[detail::shifted(cur, -t0 - t1)] = c;
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 0; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, total, total);
    return out;
}

/// lambda(i) = lambda_i - lambda_{i+1} for i = 1..n.
inline std::vector<int> gl_factor_sizes(const Partition& lambda, int n) {
    std::vector<int> s;
    for (int i = 1; i <= n; ++i) s.push_back(lambda.part(i) - lambda.part(i + 1));
    return s;
}

/// Irreducible representation of G_lambda = prod_{i=1..n} GL_{lambda(i)}.
struct GLWeight {
    std::vector<GLFactorWeight> factors;

    static GLWeight trivial(const Partition& lambda, int n) {
        GLWeight w;
        for (int m : gl_factor_sizes(lambda, n)) w.factors.emplace_back(m, 0);
        return w;
    }
    void validate(const Partition& lambda, int n) const {
        const auto sizes = gl_factor_sizes(lambda, n);
        if (sizes.size() != factors.size()) throw Error("ShapeMismatch", "wrong number of GL factors");
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (static_cast<int>(factors[i].size()) != sizes[i]) throw Error("ShapeMismatch", "GL factor has wrong rank");
            check_dominant(factors[i]);
        }
    }
    friend auto operator<=>(const GLWeight&, const GLWeight&) = default;
};

struct JTriple {
    PeriodicMatrix e1;
    PeriodicMatrix e2;
    GLWeight kappa;
    friend bool operator==(const JTriple& a, const JTriple& b) {
        return a.e1 == b.e1 && a.e2 == b.e2 && a.kappa == b.kappa;
    }
    friend bool operator<(const JTriple& a, const JTriple& b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.kappa < b.kappa;
    }
};

/// (E1,E2,k)(E1',E2',k') = delta_{E2,E1'} sum_k'' c_{k,k'}^{k''} (E1,E2',k'').
inline std::map<JTriple, long long> j_lambda_multiply(const JTriple& x, const JTriple& y) {
    if (x.kappa.factors.size() != y.kappa.factors.size()) throw Error("ShapeMismatch", "triples belong to different cells");
    for (std::size_t i = 0; i < x.kappa.factors.size(); ++i)
        if (x.kappa.factors[i].size() != y.kappa.factors[i].size())
            throw Error("ShapeMismatch", "triples belong to different cells");
    std::map<JTriple, long long> out;
    if (x.e2 != y.e1) return out;
    std::vector<std::pair<GLWeight, long long>> acc{{GLWeight{}, 1}};
    for (std::size_t i = 0; i < x.kappa.factors.size(); ++i) {
        const auto ex = lr_expand(x.kappa.factors[i], y.kappa.factors[i]);
        std::vector<std::pair<GLWeight, long long>> next;
        for (const auto& [w, c] : acc)
            for (const auto& [k, m] : ex) {
                GLWeight g = w;
                g.factors.push_back(k);
                next.emplace_back(std::move(g), c * m);
            }
        acc = std::move(next);
    }
    for (auto& [w, c] : acc) out[JTriple{x.e1, y.e2, std::move(w)}] += c;
    return out;
}

}  // namespace cellkit
