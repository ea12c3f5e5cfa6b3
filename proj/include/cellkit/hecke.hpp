#pragma once

/**
 * @file hecke.hpp
 * @brief The affine Hecke algebra of GL_D in the Iwahori presentation.
 *
 * Normalization: (T_s - v)(T_s + v^{-1}) = 0, so T_s^2 = 1 + (v - v^{-1}) T_s,
 * and the Kazhdan-Lusztig basis element C_w = sum_y p_{y,w} T_y is
 * bar-invariant with p_{w,w} = 1 and p_{y,w} in v^{-1} Z[v^{-1}] otherwise.
 * For extended elements C_{pi^k u} = T_pi^k C_u.
 *
 * KL elements are built by the recursion C_s C_w = C_{sw} + sum mu(z,w) C_z
 * (z < w, sz < z); Bruhat order is only ever implicit in supports.
 */

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellkit/affine_perm.hpp"
#include "cellkit/cellcomb.hpp"
#include "cellkit/laurent_poly.hpp"

namespace cellkit {

/// A finitely supported map from group elements to Laurent polynomials.
/// Whether keys index the T-basis or the C-basis is up to the caller.
class HeckeElement {
public:
    using Terms = std::unordered_map<AffinePermutation, LaurentPoly, AffinePermutationHash>;

    HeckeElement() = default;
    static HeckeElement basis(const AffinePermutation& w, LaurentPoly c = 1) {
        HeckeElement h;
        h.add(w, c);
        return h;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    LaurentPoly coeff(const AffinePermutation& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly{} : it->second;
    }

    void add(const AffinePermutation& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    /// this += c * o
    void add_scaled(const HeckeElement& o, const LaurentPoly& c) {
        for (const auto& [w, p] : o.terms_) add(w, p * c);
    }

    HeckeElement& operator+=(const HeckeElement& o) {
        for (const auto& [w, p] : o.terms_) add(w, p);
        return *this;
    }
    HeckeElement& operator-=(const HeckeElement& o) {
        for (const auto& [w, p] : o.terms_) add(w, -p);
        return *this;
    }

    /// Relabels every key w as pi^k w.
    HeckeElement left_shifted(int k) const {
        if (k == 0) return *this;
        HeckeElement r;
        for (const auto& [w, p] : terms_) r.terms_.emplace(w.left_mul_pi(k), p);
        return r;
    }

    /// Terms in the deterministic AffinePermutation order.
    std::vector<std::pair<AffinePermutation, LaurentPoly>> sorted() const {
        std::vector<std::pair<AffinePermutation, LaurentPoly>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

struct PermPairHash {
    std::size_t operator()(const std::pair<AffinePermutation, AffinePermutation>& p) const noexcept {
        return p.first.hash() * 0x9e3779b97f4a7c15ULL ^ p.second.hash();
    }
};

/**
 * Memoizing engine for one period D. Caches KL elements, mu-lists and
 * C-basis products. All public members lock an internal mutex, so one
 * instance may be shared between threads; results never depend on cache state.
 */
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(int D) : D_(D) {
        if (D < 1) throw Error("InvalidArgument", "period must be positive");
    }

    int period() const noexcept { return D_; }

    // ---- T-basis arithmetic -------------------------------------------------

    /// T_{s_i} * X for X in the T-basis.
    HeckeElement t_left_simple(int i, const HeckeElement& x) const {
        HeckeElement r;
        const LaurentPoly v_minus = LaurentPoly::from_terms({{1, 1}, {-1, -1}});
        for (const auto& [y, p] : x.terms()) {
            r.add(y.left_mul_simple(i), p);
            if (y.is_left_descent(i)) r.add(y, p * v_minus);
        }
        return r;
    }

    /// T_x * Y for a single group element x.
    HeckeElement t_left_element(const AffinePermutation& x, HeckeElement y) const {
        check_period(x);
        const auto [k, u] = x.omega_decompose();
        const auto word = u.reduced_word();
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = t_left_simple(*it, y);
        return y.left_shifted(k);
    }

    HeckeElement t_multiply(const HeckeElement& x, const HeckeElement& y) const {
        HeckeElement r;
        for (const auto& [w, p] : x.terms()) r.add_scaled(t_left_element(w, y), p);
        return r;
    }

    /// Bar involution on a T-basis expansion: v -> v^-1 and T_y -> T_{y^-1}^{-1}.
    HeckeElement bar(const HeckeElement& x) const {
        const LaurentPoly v_minus = LaurentPoly::from_terms({{1, 1}, {-1, -1}});
        HeckeElement r;
        for (const auto& [y, p] : x.terms()) {
            const auto [k, u] = y.omega_decompose();
            const auto word = u.reduced_word();
            HeckeElement acc = HeckeElement::basis(AffinePermutation::identity(D_));
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                HeckeElement next = t_left_simple(*it, acc);
                next.add_scaled(acc, -v_minus);
                acc = std::move(next);
            }
            r.add_scaled(acc.left_shifted(k), p.bar());
        }
        return r;
    }

    // ---- Kazhdan-Lusztig basis ----------------------------------------------

    /// C_w expanded in the T-basis.
    HeckeElement kl_element(const AffinePermutation& w) {
        check_period(w);
        std::lock_guard lock(mutex_);
        const auto [k, u] = w.omega_decompose();
        return kl_coxeter(u).left_shifted(k);
    }

    /// p_{y,w}; zero unless y <= w in the Bruhat order.
    LaurentPoly kl_poly(const AffinePermutation& y, const AffinePermutation& w) {
        check_period(y);
        check_period(w);
        std::lock_guard lock(mutex_);
        const auto [k, u] = w.omega_decompose();
        return kl_coxeter(u).coeff(y.left_mul_pi(-k));
    }

    /// mu(z, w) = coefficient of v^{-1} in p_{z,w}, for all z != w where it is nonzero.
    std::vector<std::pair<AffinePermutation, BigInt>> mu_list(const AffinePermutation& w) {
        std::lock_guard lock(mutex_);
        const auto [k, u] = w.omega_decompose();
        std::vector<std::pair<AffinePermutation, BigInt>> out;
        for (const auto& [z, m] : mu_coxeter(u)) out.emplace_back(z.left_mul_pi(k), m);
        return out;
    }

    /// C_{s_i} * X for X in the C-basis, returned in the C-basis.
    HeckeElement c_left_simple(int i, const HeckeElement& x) {
        std::lock_guard lock(mutex_);
        HeckeElement r;
        const LaurentPoly v_plus = LaurentPoly::from_terms({{1, 1}, {-1, 1}});
        for (const auto& [w, p] : x.terms()) {
            if (w.is_left_descent(i)) {
                r.add(w, p * v_plus);
                continue;
            }
            r.add(w.left_mul_simple(i), p);
            const auto [k, u] = w.omega_decompose();
            for (const auto& [z0, m] : mu_coxeter(u)) {
                const auto z = z0.left_mul_pi(k);
                if (z.is_left_descent(i)) r.add(z, p * LaurentPoly(m));
            }
        }
        return r;
    }

    /// h_{x,y}^z: C_x C_y = sum_z h_{x,y}^z C_z.
    HeckeElement h_constants(const AffinePermutation& x, const AffinePermutation& y) {
        check_period(x);
        check_period(y);
        std::lock_guard lock(mutex_);
        return h_product(x, y);
    }

    /// f_{x,y}^z: T_x T_y = sum_z f_{x,y}^z C_z.
    HeckeElement f_constants(const AffinePermutation& x, const AffinePermutation& y) {
        return to_c_basis(t_left_element(x, HeckeElement::basis(y)));
    }

    /// Rewrites a T-basis expansion in the C-basis by unitriangular back-substitution.
    HeckeElement to_c_basis(HeckeElement t) {
        std::lock_guard lock(mutex_);
        HeckeElement c;
        while (!t.is_zero()) {
            auto top = t.terms().begin();
            int top_len = top->first.length();
            for (auto it = t.terms().begin(); it != t.terms().end(); ++it) {
                const int l = it->first.length();
                if (l > top_len || (l == top_len && it->first < top->first)) {
                    top = it;
                    top_len = l;
                }
            }
            const AffinePermutation z = top->first;
            const LaurentPoly coef = top->second;
            c.add(z, coef);
            const auto [k, u] = z.omega_decompose();
            t.add_scaled(kl_coxeter(u).left_shifted(k), -coef);
        }
        return c;
    }

    /// Expands a C-basis combination in the T-basis.
    HeckeElement from_c_basis(const HeckeElement& c) {
        std::lock_guard lock(mutex_);
        HeckeElement t;
        for (const auto& [z, p] : c.terms()) {
            const auto [k, u] = z.omega_decompose();
            t.add_scaled(kl_coxeter(u).left_shifted(k), p);
        }
        return t;
    }

    // ---- a-function, Delta, distinguished elements --------------------------

    /// Lusztig's a-function, read off the two-sided cell: (sum lambda_i^2 - D) / 2 with lambda = sigma(w).
    static int a_prime(const AffinePermutation& w) { return sigma_partition(w).a_value(); }

    /// Minus the highest power of v in p_{1,u} for the Coxeter factor u of w.
    int delta(const AffinePermutation& w) {
        check_period(w);
        std::lock_guard lock(mutex_);
        const auto u = w.omega_decompose().second;
        return -kl_coxeter(u).coeff(AffinePermutation::identity(D_)).degree();
    }

    /// a'(w) = Delta(w). Elements with nonzero Omega-component are never distinguished.
    bool is_distinguished(const AffinePermutation& w) {
        if (w.shift() != 0) return false;
        const bool d = a_prime(w) == delta(w);
        if (d && !w.is_involution())
            throw Error("InvariantViolation", "distinguished element is not an involution", w.to_string());
        return d;
    }

    /// gamma_{x,y}^z: coefficient of v^{a'(z)} in h_{x,y}^z.
    BigInt gamma(const AffinePermutation& x, const AffinePermutation& y, const AffinePermutation& z) {
        return h_constants(x, y).coeff(z).coeff(a_prime(z));
    }

    /// The distinguished involution d of the left cell of x: the unique distinguished d
    /// with gamma_{x^{-1},x}^d != 0.
    AffinePermutation left_cell_distinguished(const AffinePermutation& x) {
        const auto h = h_constants(x.inverse(), x);
        std::vector<AffinePermutation> found;
        for (const auto& [z, p] : h.terms()) {
            if (p.coeff(a_prime(z)) == 0) continue;
            if (is_distinguished(z)) found.push_back(z);
        }
        if (found.size() != 1)
            throw Error("InvariantViolation", "expected exactly one distinguished element in C_{x^-1} C_x",
                        x.to_string());
        return found.front();
    }

    bool left_equivalent(const AffinePermutation& x, const AffinePermutation& y) {
        if (x.right_descents() != y.right_descents()) return false;
        if (sigma_partition(x) != sigma_partition(y)) return false;
        return left_cell_distinguished(x) == left_cell_distinguished(y);
    }
    bool right_equivalent(const AffinePermutation& x, const AffinePermutation& y) {
        return left_equivalent(x.inverse(), y.inverse());
    }
    static bool two_sided_equivalent(const AffinePermutation& x, const AffinePermutation& y) {
        return sigma_partition(x) == sigma_partition(y);
    }

    // ---- cache export / import ----------------------------------------------

    /// Snapshot of the KL table: (u, C_u) for all cached Coxeter elements of length <= max_length.
    std::vector<std::pair<AffinePermutation, HeckeElement>> kl_table(int max_length) {
        std::lock_guard lock(mutex_);
        for (const auto& u : ball_enumerate(D_, max_length)) kl_coxeter(u);
        std::vector<std::pair<AffinePermutation, HeckeElement>> out;
        for (const auto& [u, c] : kl_cache_)
            if (u.length() <= max_length) out.emplace_back(u, c);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

    /// Seeds the KL cache; entries must be genuine KL elements (not re-verified).
    void seed_kl(const AffinePermutation& u, HeckeElement c) {
        std::lock_guard lock(mutex_);
        kl_cache_.emplace(u, std::move(c));
    }

    std::size_t cached_kl_count() const {
        std::lock_guard lock(mutex_);
        return kl_cache_.size();
    }

private:
    void check_period(const AffinePermutation& w) const {
        if (w.period() != D_) throw dimension_mismatch(w.to_string());
    }

    const HeckeElement& kl_coxeter(const AffinePermutation& u) {
        if (auto it = kl_cache_.find(u); it != kl_cache_.end()) return it->second;
        HeckeElement c;
        if (u.is_identity()) {
            c = HeckeElement::basis(u);
        } else {
            const int s = u.left_descents().front();
            const auto shorter = u.left_mul_simple(s);
            // C_s C_{u'} in the T-basis: T_s T_y + v^-1 T_y.
            const HeckeElement& cu = kl_coxeter(shorter);
            for (const auto& [y, p] : cu.terms()) {
                c.add(y.left_mul_simple(s), p);
                c.add(y, p.shifted(y.is_left_descent(s) ? 1 : -1));
            }
            for (const auto& [z, m] : mu_coxeter(shorter)) {
                if (!z.is_left_descent(s)) continue;
                c.add_scaled(kl_coxeter(z), LaurentPoly(-m));
            }
            for (const auto& [y, p] : c.terms()) {
                if (y == u) {
                    if (p != LaurentPoly(1)) throw Error("InvariantViolation", "p_{w,w} != 1", u.to_string());
                } else if (p.degree() >= 0 || !p.all_coefficients_nonnegative()) {
                    throw Error("InvariantViolation", "KL polynomial outside v^-1 N[v^-1]",
                                y.to_string() + " <= " + u.to_string() + ": " + p.to_string());
                }
            }
        }
        return kl_cache_.emplace(u, std::move(c)).first->second;
    }

    const std::vector<std::pair<AffinePermutation, BigInt>>& mu_coxeter(const AffinePermutation& u) {
        if (auto it = mu_cache_.find(u); it != mu_cache_.end()) return it->second;
        std::vector<std::pair<AffinePermutation, BigInt>> mus;
        for (const auto& [z, p] : kl_coxeter(u).terms()) {
            if (z == u) continue;
            BigInt m = p.coeff(-1);
            if (m != 0) mus.emplace_back(z, std::move(m));
        }
        std::sort(mus.begin(), mus.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return mu_cache_.emplace(u, std::move(mus)).first->second;
    }

    const HeckeElement& h_product(const AffinePermutation& x, const AffinePermutation& y) {
        const auto key = std::make_pair(x, y);
        if (auto it = h_cache_.find(key); it != h_cache_.end()) return it->second;
        HeckeElement r;
        const auto [k, u] = x.omega_decompose();
        if (k != 0) {
            r = h_product(u, y).left_shifted(k);
        } else if (u.is_identity()) {
            r = HeckeElement::basis(y);
        } else {
            const int s = u.left_descents().front();
            const auto shorter = u.left_mul_simple(s);
            r = c_left_simple(s, h_product(shorter, y));
            for (const auto& [z, m] : mu_coxeter(shorter)) {
                if (!z.is_left_descent(s)) continue;
                r.add_scaled(h_product(z, y), LaurentPoly(-m));
            }
        }
        return h_cache_.emplace(key, std::move(r)).first->second;
    }

    int D_;
    mutable std::recursive_mutex mutex_;
    std::unordered_map<AffinePermutation, HeckeElement, AffinePermutationHash> kl_cache_;
    std::unordered_map<AffinePermutation, std::vector<std::pair<AffinePermutation, BigInt>>, AffinePermutationHash>
        mu_cache_;
    std::unordered_map<std::pair<AffinePermutation, AffinePermutation>, HeckeElement, PermPairHash> h_cache_;
};

}  // namespace cellkit
