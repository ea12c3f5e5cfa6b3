#pragma once

/**
 * @file laurent_poly.hpp
 * @brief Exact Laurent polynomials in one variable v over the integers.
 *
 * Coefficients are arbitrary precision (boost::multiprecision::cpp_int) and
 * the representation is sparse: only nonzero coefficients are stored, so the
 * zero polynomial is the empty map.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cellkit/error.hpp"

namespace cellkit {

using BigInt = boost::multiprecision::cpp_int;

class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c) { if (c != 0) terms_.emplace(0, BigInt(c)); }  // NOLINT: implicit constant
    LaurentPoly(const BigInt& c) { if (c != 0) terms_.emplace(0, c); }     // NOLINT

    /// c * v^e
    static LaurentPoly monomial(int e, const BigInt& c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }
    static LaurentPoly v() { return monomial(1); }
    static LaurentPoly v_inv() { return monomial(-1); }

    /// Builds from (exponent, coefficient) pairs, summing repeats and dropping zeros.
    static LaurentPoly from_terms(std::initializer_list<std::pair<int, long long>> ts) {
        LaurentPoly p;
        for (auto [e, c] : ts) p.add_term(e, BigInt(c));
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Highest exponent. Precondition: nonzero.
    int degree() const {
        if (is_zero()) throw Error("ZeroPolynomial", "degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    /// Lowest exponent. Precondition: nonzero.
    int low_degree() const {
        if (is_zero()) throw Error("ZeroPolynomial", "low degree of the zero polynomial");
        return terms_.begin()->first;
    }

    BigInt coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(int e, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    /// this += c * v^shift * o
    void add_scaled(const LaurentPoly& o, int shift = 0, const BigInt& c = 1) {
        if (c == 0) return;
        for (const auto& [e, oc] : o.terms_) add_term(e + shift, oc * c);
    }
    /// this += a * b
    void add_product(const LaurentPoly& a, const LaurentPoly& b) {
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) add_term(ea + eb, ca * cb);
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.add_product(a, b);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiplication by v^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
        return r;
    }

    /// The bar involution v -> v^{-1}.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
        return r;
    }

    /// Exact quotient p / q; throws NotDivisible when q does not divide p in Z[v, v^-1].
    LaurentPoly div_exact(const LaurentPoly& q) const {
        if (q.is_zero()) throw Error("DivisionByZero", "division by the zero polynomial");
        LaurentPoly quot;
        if (is_zero()) return quot;
        const int q_top = q.degree();
        const BigInt& q_lead = q.terms_.rbegin()->second;
        const int min_exp = low_degree() - q.low_degree();
        LaurentPoly rem(*this);
        while (!rem.is_zero()) {
            const auto& [e, c] = *rem.terms_.rbegin();
            const int qe = e - q_top;
            if (qe < min_exp || c % q_lead != 0) throw not_divisible(to_string() + " / " + q.to_string());
            const BigInt qc = c / q_lead;
            quot.add_term(qe, qc);
            rem.add_scaled(q, qe, -qc);
        }
        return quot;
    }

    std::optional<LaurentPoly> try_div(const LaurentPoly& q) const {
        try {
            return div_exact(q);
        } catch (const Error&) {
            return std::nullopt;
        }
    }

    bool all_coefficients_nonnegative() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

    /// Human readable, highest power first, e.g. "v^2 + 2 - 3v^-1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            BigInt c = it->second;
            const int e = it->first;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            if (e == 0) { os << c; continue; }
            if (c != 1) os << c;
            os << "v";
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

private:
    Terms terms_;
};

/// Small polynomial helpers shared across modules.
namespace poly {

/// Quantum integer [m] = (v^m - v^-m) / (v - v^-1).
inline LaurentPoly quantum_integer(int m) {
    LaurentPoly r;
    const int sign = m < 0 ? -1 : 1;
    const int a = m < 0 ? -m : m;
    for (int k = 0; k < a; ++k) r.add_term(a - 1 - 2 * k, sign);
    return r;
}

}  // namespace poly

}  // namespace cellkit
