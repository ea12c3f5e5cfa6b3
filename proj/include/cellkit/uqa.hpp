#pragma once

/**
 * @file uqa.hpp
 * @brief The image of the modified quantum group of affine sl_n inside the q-Schur algebra:
 *        aperiodic labels, generator images, relation checks, the transfer map A -> A - I,
 *        dominant weights and the a-function on the quantum-group side.
 */

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cellkit/cellcomb.hpp"
#include "cellkit/schur.hpp"

namespace cellkit {

/// Every diagonal k != 0 has a zero entry (the main diagonal may be full).
inline bool is_aperiodic(const PeriodicMatrix& A) {
    std::map<int, int> filled;  // offset k -> number of rows with a_{p,p+k} != 0
    for (const auto& e : A.support()) ++filled[e.col - e.row];
    for (const auto& [k, cnt] : filled)
        if (k != 0 && cnt == A.n()) return false;
    return true;
}

/// Some diagonal, the main one included, has no zero entry.
inline bool has_full_diagonal(const PeriodicMatrix& A) {
    std::map<int, int> filled;
    for (const auto& e : A.support()) ++filled[e.col - e.row];
    for (const auto& [k, cnt] : filled)
        if (cnt == A.n()) return true;
    return false;
}

/// The vector i in Z^n: +1 at i, -1 at i+1 (indices mod n, 1-based).
inline std::vector<int> simple_root(int n, int i) {
    std::vector<int> r(n, 0);
    const int a = mod_pos(i - 1, n), b = mod_pos(i, n);
    r[a] += 1;
    r[b] -= 1;
    return r;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

class QuantumGroupImage {
public:
    QuantumGroupImage(std::shared_ptr<SchurAlgebra> S) : S_(std::move(S)) {
        if (S_->n() < 2) throw Error("InvalidArgument", "quantum group images need n >= 2");
    }

    SchurAlgebra& schur() { return *S_; }
    int n() const { return S_->n(); }
    int D() const { return S_->D(); }

    /// E_i(D) = sum over a = a' + i of [i_a - E^{i,i} + E^{i,i+1}].
    SchurElement E(int i) const { return raising(i, true); }
    /// F_i(D) = sum over a = a' + i of [i_{a'} - E^{i+1,i+1} + E^{i+1,i}].
    SchurElement F(int i) const { return raising(i, false); }

    /// K_a(D) = sum_b v^{a.b} [i_b].
    SchurElement K(const std::vector<int>& a) const {
        if (static_cast<int>(a.size()) != n()) throw dimension_mismatch("weight length differs from n");
        SchurElement out;
        for (const auto& b : compositions_of(D(), n()))
            out.add(PeriodicMatrix::diagonal(b), LaurentPoly::monomial(dot(a, b)));
        return out;
    }

    /// sum_b [b_i - b_{i+1}] [i_b], the right side of E_iF_i - F_iE_i.
    SchurElement cartan(int i) const {
        SchurElement out;
        const auto r = simple_root(n(), i);
        for (const auto& b : compositions_of(D(), n()))
            out.add(PeriodicMatrix::diagonal(b), poly::quantum_integer(dot(r, b)));
        return out;
    }

    SchurElement mul(const SchurElement& x, const SchurElement& y) const { return S_->multiply_standard(x, y); }

private:
    /// Both sums run over the row weight w of the matrix: w = a for E, w = a' for F.
    SchurElement raising(int i, bool e) const {
        const int N = n();
        const int p = mod_pos(i - 1, N) + 1;  // i as a stored row
        const int q = mod_pos(i, N) + 1;      // i + 1 as a stored row
        const int wrap = p == N ? N : 0;      // column shift when i + 1 wraps past n
        const int row = e ? p : q;
        const int col = e ? p + 1 : p - wrap;
        SchurElement out;
        for (const auto& w : compositions_of(D(), N)) {
            if (w[row - 1] < 1) continue;
            std::vector<PeriodicMatrix::Entry> ents;
            for (int k = 1; k <= N; ++k) ents.push_back({k, k, w[k - 1] - (k == row ? 1 : 0)});
            ents.push_back({row, col, 1});
            out.add(PeriodicMatrix(D(), N, ents), 1);
        }
        return out;
    }

    std::shared_ptr<SchurAlgebra> S_;
};

/// One evaluated relation.
struct RelationCheck {
    std::string relation;
    std::string status;  ///< "pass", "fail" or "skipped"
    std::string detail;  ///< offending label and residue on failure, reason when skipped
};

struct RelationReport {
    int n = 0;
    int D = 0;
    std::vector<RelationCheck> checks;

    bool passed() const {
        return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == "fail"; });
    }
    std::size_t count(const std::string& status) const {
        return static_cast<std::size_t>(
            std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == status; }));
    }
};

namespace detail {

inline RelationCheck compare(std::string name, const SchurElement& lhs, const SchurElement& rhs) {
    const SchurElement diff = lhs - rhs;
    if (diff.is_zero()) return {std::move(name), "pass", {}};
    const auto& [A, p] = *diff.terms().begin();
    return {std::move(name), "fail", "residue " + p.to_string() + " at " + A.to_string()};
}

inline std::string ij(int i, int j) { return " i=" + std::to_string(i) + " j=" + std::to_string(j); }

}  // namespace detail

/// x_i^2 x_j + c x_i x_j x_i + x_j x_i^2 for the given middle coefficient c.
inline SchurElement serre_residue(const QuantumGroupImage& U, const SchurElement& xi, const SchurElement& xj,
                                  const LaurentPoly& c) {
    SchurElement r = U.mul(U.mul(xi, xi), xj);
    r.add_scaled(U.mul(U.mul(xi, xj), xi), c);
    r += U.mul(xj, U.mul(xi, xi));
    return r;
}

/// Evaluates the defining relations on the generator images inside the q-Schur algebra.
/// q-Serre uses the middle coefficient -(v + v^-1); for n = 2 (i.j = -2) it is skipped.
inline RelationReport serre_check(int n, int D) {
    auto S = std::make_shared<SchurAlgebra>(D, n);
    const QuantumGroupImage U(S);
    RelationReport rep;
    rep.n = n;
    rep.D = D;
    std::vector<SchurElement> E, F;
    for (int i = 1; i <= n; ++i) {
        E.push_back(U.E(i));
        F.push_back(U.F(i));
    }
    SchurElement one;
    for (const auto& b : compositions_of(D, n)) one.add(PeriodicMatrix::diagonal(b), 1);
    rep.checks.push_back(detail::compare("K_0 = 1", U.K(std::vector<int>(n, 0)), one));
    for (int k = 1; k <= n; ++k) {
        std::vector<int> mu(n, 0), neg(n, 0);
        mu[k - 1] = 1;
        neg[k - 1] = -1;
        const auto Kp = U.K(mu), Km = U.K(neg);
        rep.checks.push_back(detail::compare("K_mu K_-mu = 1 k=" + std::to_string(k), U.mul(Kp, Km), one));
        for (int i = 1; i <= n; ++i) {
            const int e = dot(mu, simple_root(n, i));
            SchurElement rhsE, rhsF;
            rhsE.add_scaled(E[i - 1], LaurentPoly::monomial(e));
            rhsF.add_scaled(F[i - 1], LaurentPoly::monomial(-e));
            const std::string tag = " k=" + std::to_string(k) + " i=" + std::to_string(i);
            rep.checks.push_back(detail::compare("K E K^-1" + tag, U.mul(U.mul(Kp, E[i - 1]), Km), rhsE));
            rep.checks.push_back(detail::compare("K F K^-1" + tag, U.mul(U.mul(Kp, F[i - 1]), Km), rhsF));
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const auto lhs = U.mul(E[i - 1], F[j - 1]) - U.mul(F[j - 1], E[i - 1]);
            rep.checks.push_back(detail::compare("EF - FE" + detail::ij(i, j), lhs, i == j ? U.cartan(i) : SchurElement()));
        }
    const LaurentPoly c = -(LaurentPoly::v() + LaurentPoly::v_inv());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const int pairing = dot(simple_root(n, i), simple_root(n, j));
            if (pairing == 0) {
                rep.checks.push_back(detail::compare("E commute" + detail::ij(i, j), U.mul(E[i - 1], E[j - 1]),
                                                     U.mul(E[j - 1], E[i - 1])));
                rep.checks.push_back(detail::compare("F commute" + detail::ij(i, j), U.mul(F[i - 1], F[j - 1]),
                                                     U.mul(F[j - 1], F[i - 1])));
            } else if (pairing == -1) {
                rep.checks.push_back(detail::compare("q-Serre E" + detail::ij(i, j),
                                                     serre_residue(U, E[i - 1], E[j - 1], c), {}));
                rep.checks.push_back(detail::compare("q-Serre F" + detail::ij(i, j),
                                                     serre_residue(U, F[i - 1], F[j - 1], c), {}));
            } else {
                rep.checks.push_back({"q-Serre" + detail::ij(i, j), "skipped",
                                      "i.j = " + std::to_string(pairing) + ": datum not simply laced"});
            }
        }
    return rep;
}

// ---------------------------------------------------------------- transfer map

struct TransferResult {
    enum class Kind { Zero, EmptyMatrix, Matrix };
    Kind kind = Kind::Zero;
    std::optional<PeriodicMatrix> matrix;  ///< set when kind == Matrix
};

/// {A} -> {A - I} when A - I has nonnegative entries, zero otherwise.
/// For D = n the only survivor is A = I, whose image is the zero matrix of weight 0.
inline TransferResult psi_transfer(const PeriodicMatrix& A) {
    const int n = A.n(), D = A.D();
    if (D < n) throw Error("InvalidArgument", "transfer needs D >= n", A.to_string());
    std::vector<PeriodicMatrix::Entry> ents;
    for (const auto& e : A.support()) ents.push_back(e);
    for (int i = 1; i <= n; ++i) {
        auto it = std::find_if(ents.begin(), ents.end(), [i](const auto& e) { return e.row == i && e.col == i; });
        if (it == ents.end()) return {};
        --it->value;
    }
    if (D == n) return {TransferResult::Kind::EmptyMatrix, std::nullopt};
    return {TransferResult::Kind::Matrix, PeriodicMatrix(D - n, n, ents)};
}

// ---------------------------------------------------------------- dominant weights

/// Dominant weight of affine sl_n, stored as its representative in Z^n with last entry 0.
class DominantWeight {
public:
    /// Any representative of the coset (entries modulo adding a constant); must be weakly decreasing.
    static DominantWeight from_representative(std::vector<int> x) {
        if (x.empty()) throw Error("NotDominant", "empty weight");
        const int last = x.back();
        for (int& a : x) a -= last;
        for (std::size_t i = 1; i < x.size(); ++i)
            if (x[i] > x[i - 1]) throw Error("NotDominant", "weight has a negative pairing with some i in I_0");
        DominantWeight w;
        w.rep_ = std::move(x);
        return w;
    }
    /// The coset of (lambda_1, ..., lambda_n).
    static DominantWeight from_partition(const Partition& lambda, int n) {
        if (lambda.num_parts() > n) throw Error("NotDominant", "partition has more than n parts", lambda.to_string());
        std::vector<int> x(n);
        for (int i = 1; i <= n; ++i) x[i - 1] = lambda.part(i);
        return from_representative(std::move(x));
    }

    int n() const { return static_cast<int>(rep_.size()); }
    const std::vector<int>& representative() const noexcept { return rep_; }
    /// mu(i) = <i, mu> for i in 1..n-1.
    int value(int i) const { return rep_.at(i - 1) - rep_.at(i); }
    /// The partition lambda~ whose cell carries this weight.
    Partition partition() const { return Partition(rep_); }

    friend bool operator==(const DominantWeight& a, const DominantWeight& b) { return a.rep_ == b.rep_; }

private:
    std::vector<int> rep_;
};

/// a(b) = (sum lambda~_i^2 - sum upsilon_i^2) / 2 for b = b 1_nu, upsilon the representative of nu
/// with the same coordinate sum as lambda~.
inline int a_udot(const DominantWeight& mu, const std::vector<int>& upsilon) {
    if (static_cast<int>(upsilon.size()) != mu.n()) throw dimension_mismatch("weight length differs from n");
    const auto& lam = mu.representative();
    if (std::accumulate(lam.begin(), lam.end(), 0) != std::accumulate(upsilon.begin(), upsilon.end(), 0))
        throw Error("NormalizationError", "representative must have the same coordinate sum as the dominant weight");
    const int d = dot(lam, lam) - dot(upsilon, upsilon);
    return d / 2;
}

/// The pair (mu, upsilon) attached to a label {A}: mu from rho(A), upsilon = c(A) shifted like lambda.
inline std::pair<DominantWeight, std::vector<int>> udot_weights(const PeriodicMatrix& A) {
    const Partition lam = rho_partition(A);
    const auto mu = DominantWeight::from_partition(lam, A.n());
    std::vector<int> ups = A.col_sums();
    for (int& x : ups) x -= lam.part(A.n());
    return {mu, ups};
}

}  // namespace cellkit
