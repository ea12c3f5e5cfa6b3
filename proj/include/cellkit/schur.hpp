#pragma once

/**
 * @file schur.hpp
 * @brief The affine q-Schur algebra over the bases [A] and {A}, realized inside the
 *        affine Hecke algebra through double cosets.
 *
 * [A] is modelled by Theta_A = sum over y in S_a w_A S_b of v^{l(y) - l(w_A)} T_y, and {A}
 * by C_{w_A}. Products of two such elements land in p_c times the span of the third, where
 * c = c(A) = r(B) and p_c is the shifted Poincare polynomial of S_c; dividing by p_c gives the
 * structure constants eta (standard basis) and nu (canonical basis).
 */

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cellkit/cellcomb.hpp"
#include "cellkit/hecke.hpp"
#include "cellkit/periodic_matrix.hpp"

namespace cellkit {

/// p_c = v^{-l(w_c)} sum_{x in S_c} v^{2 l(x)} = prod_i [c_i]!.
inline LaurentPoly shifted_poincare(const Composition& c) {
    LaurentPoly p = 1;
    for (int m : c)
        for (int k = 2; k <= m; ++k) p *= poly::quantum_integer(k);
    return p;
}

/// Finite linear combination of basis labels of the q-Schur algebra.
class SchurElement {
public:
    using Terms = std::map<PeriodicMatrix, LaurentPoly>;

    SchurElement() = default;
    static SchurElement basis(const PeriodicMatrix& A, LaurentPoly c = 1) {
        SchurElement e;
        e.add(A, std::move(c));
        return e;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentPoly coeff(const PeriodicMatrix& A) const {
        auto it = terms_.find(A);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }
    void add(const PeriodicMatrix& A, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(A, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const SchurElement& o, const LaurentPoly& c) {
        for (const auto& [A, p] : o.terms_) add(A, p * c);
    }
    SchurElement& operator+=(const SchurElement& o) {
        add_scaled(o, 1);
        return *this;
    }
    SchurElement& operator-=(const SchurElement& o) {
        add_scaled(o, -1);
        return *this;
    }
    friend SchurElement operator+(SchurElement a, const SchurElement& b) { return a += b; }
    friend SchurElement operator-(SchurElement a, const SchurElement& b) { return a -= b; }
    friend bool operator==(const SchurElement& a, const SchurElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

enum class CellSide { Left, Right, TwoSided };

using StructureConstants = std::map<PeriodicMatrix, LaurentPoly>;

class SchurAlgebra {
public:
    SchurAlgebra(int D, int n, std::shared_ptr<HeckeAlgebra> hecke = nullptr)
        : D_(D), n_(n), hecke_(hecke ? std::move(hecke) : std::make_shared<HeckeAlgebra>(D)) {
        if (n < 1) throw Error("InvalidArgument", "n must be positive");
        if (hecke_->period() != D) throw dimension_mismatch("Hecke algebra period differs from D");
    }

    int D() const noexcept { return D_; }
    int n() const noexcept { return n_; }
    HeckeAlgebra& hecke() noexcept { return *hecke_; }

    /// (r(A), c(A), w_A), memoized.
    const MatrixTriple& triple(const PeriodicMatrix& A) {
        check(A);
        std::lock_guard lock(mutex_);
        if (auto it = triples_.find(A); it != triples_.end()) return it->second;
        return triples_.emplace(A, to_triple(A)).first->second;
    }

    /// The double coset S_a w S_b.
    static std::vector<AffinePermutation> double_coset(const Composition& a, const AffinePermutation& w,
                                                       const Composition& b) {
        const auto lg = BlockTiling(a).parabolic_generators();
        const auto rg = BlockTiling(b).parabolic_generators();
        std::unordered_set<AffinePermutation, AffinePermutationHash> seen{w};
        std::vector<AffinePermutation> out{w};
        for (std::size_t i = 0; i < out.size(); ++i) {
            const AffinePermutation x = out[i];
            for (int k : lg)
                if (auto y = x.left_mul_simple(k); seen.insert(y).second) out.push_back(y);
            for (int k : rg)
                if (auto y = x.right_mul_simple(k); seen.insert(y).second) out.push_back(y);
        }
        return out;
    }

    /// Theta_A in the T-basis.
    const HeckeElement& theta(const PeriodicMatrix& A) {
        const MatrixTriple t = triple(A);
        std::lock_guard lock(mutex_);
        if (auto it = thetas_.find(A); it != thetas_.end()) return it->second;
        HeckeElement h;
        const int top = t.w.length();
        for (const auto& y : double_coset(t.a, t.w, t.b)) h.add(y, LaurentPoly::monomial(y.length() - top));
        return thetas_.emplace(A, std::move(h)).first->second;
    }

    /// F_{A,B}^C: coefficient of T_{w_C} in Theta_A Theta_B, for every C in the product.
    StructureConstants f_transfer(const PeriodicMatrix& A, const PeriodicMatrix& B) {
        const auto ta = triple(A), tb = triple(B);
        if (ta.b != tb.a) return {};
        const HeckeElement prod = hecke_->t_multiply(theta(A), theta(B));
        StructureConstants out;
        for (const auto& [z, p] : prod.terms()) {
            const auto C = from_triple(ta.a, tb.b, z);
            if (triple(C).w == z) out.emplace(C, p);
        }
        // Every T_y in the product must be accounted for by some Theta_C.
        HeckeElement check_sum;
        for (const auto& [C, p] : out) check_sum.add_scaled(theta(C), p);
        if (!(check_sum == prod))
            throw Error("InvariantViolation", "product of double-coset sums is not a combination of double-coset sums",
                        A.to_string() + " * " + B.to_string());
        return out;
    }

    /// h_{w_A,w_B}^{w_C} for every C in the product {A}{B} (before division by p_c).
    StructureConstants h_transfer(const PeriodicMatrix& A, const PeriodicMatrix& B) {
        const auto ta = triple(A), tb = triple(B);
        if (ta.b != tb.a) return {};
        StructureConstants out;
        const HeckeElement h = hecke_->h_constants(ta.w, tb.w);
        for (const auto& [z, p] : h.terms()) {
            const auto C = from_triple(ta.a, tb.b, z);
            if (triple(C).w != z)
                throw Error("InvariantViolation", "C_{w_A} C_{w_B} has a term off the longest double-coset elements",
                            z.to_string());
            out.emplace(C, p);
        }
        return out;
    }

    /// [A][B] = sum_C eta_{A,B}^C [C]; empty when c(A) != r(B).
    StructureConstants eta(const PeriodicMatrix& A, const PeriodicMatrix& B) {
        auto f = f_transfer(A, B);
        if (f.empty()) return f;
        const LaurentPoly pc = shifted_poincare(triple(A).b);
        for (auto& [C, p] : f) p = p.div_exact(pc);
        return f;
    }

    /// {A}{B} = sum_C nu_{A,B}^C {C}; empty when c(A) != r(B).
    StructureConstants nu(const PeriodicMatrix& A, const PeriodicMatrix& B) {
        auto h = h_transfer(A, B);
        if (h.empty()) return h;
        const LaurentPoly pc = shifted_poincare(triple(A).b);
        for (auto& [C, p] : h) {
            p = p.div_exact(pc);
            if (!p.all_coefficients_nonnegative())
                throw Error("InvariantViolation", "negative canonical structure constant", C.to_string());
        }
        return h;
    }

    SchurElement multiply_standard(const SchurElement& x, const SchurElement& y) {
        return multiply(x, y, [this](const auto& A, const auto& B) { return eta(A, B); });
    }
    SchurElement multiply_canonical(const SchurElement& x, const SchurElement& y) {
        return multiply(x, y, [this](const auto& A, const auto& B) { return nu(A, B); });
    }

    /// a_D(A) = a'(w_A) - l(w_{c(A)}).
    int a_value(const PeriodicMatrix& A) {
        const auto& t = triple(A);
        return HeckeAlgebra::a_prime(t.w) - longest_length(t.b);
    }

    /// {A} is distinguished iff w_A is; distinguished labels are symmetric.
    bool is_distinguished(const PeriodicMatrix& A) {
        if (A != A.transpose()) return false;
        const auto t = triple(A);
        if (t.a != t.b) return false;
        return hecke_->is_distinguished(t.w);
    }

    bool cell_compare(const PeriodicMatrix& A, const PeriodicMatrix& B, CellSide side) {
        const auto ta = triple(A), tb = triple(B);
        if (rho_partition(A) != rho_partition(B)) return false;
        switch (side) {
            case CellSide::TwoSided: return true;
            case CellSide::Left: return ta.b == tb.b && hecke_->left_equivalent(ta.w, tb.w);
            case CellSide::Right: return ta.a == tb.a && hecke_->right_equivalent(ta.w, tb.w);
        }
        return false;
    }

    /// All A with l(w_A) <= radius and Omega-component of w_A in [k_lo, k_hi], sorted.
    std::vector<PeriodicMatrix> ball(int radius, int k_lo = 0, int k_hi = 0) {
        std::set<PeriodicMatrix> found;
        const auto comps = compositions_of(D_, n_);
        const auto elements = ball_enumerate(D_, radius, k_lo, k_hi);
        for (const auto& a : comps)
            for (const auto& b : comps)
                for (const auto& w : elements) {
                    auto A = from_triple(a, b, w);
                    if (found.count(A)) continue;
                    if (triple(A).w.length() <= radius) found.insert(std::move(A));
                }
        return {found.begin(), found.end()};
    }

private:
    void check(const PeriodicMatrix& A) const {
        if (A.D() != D_ || A.n() != n_) throw dimension_mismatch(A.to_string());
    }

    template <class Fn>
    SchurElement multiply(const SchurElement& x, const SchurElement& y, Fn&& constants) {
        SchurElement r;
        for (const auto& [A, p] : x.terms())
            for (const auto& [B, q] : y.terms()) {
                const LaurentPoly pq = p * q;
                for (const auto& [C, c] : constants(A, B)) r.add(C, c * pq);
            }
        return r;
    }

    int D_;
    int n_;
    std::shared_ptr<HeckeAlgebra> hecke_;
    std::recursive_mutex mutex_;
    std::unordered_map<PeriodicMatrix, MatrixTriple, PeriodicMatrixHash> triples_;
    std::unordered_map<PeriodicMatrix, HeckeElement, PeriodicMatrixHash> thetas_;
};

}  // namespace cellkit
