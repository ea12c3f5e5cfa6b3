#pragma once

// Littlewood-Richardson coefficients from characters: c_{a,b}^c is the coefficient of
// x^{c + delta} in a_delta * s_a * s_b, with s_a expanded over semistandard tableaux.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace cellkit::lr_oracle {

using Monomials = std::map<std::vector<int>, long long>;

/// s_lambda(x_1..x_m) for a partition padded to length m.
inline Monomials schur_polynomial(const std::vector<int>& lambda) {
    const int m = static_cast<int>(lambda.size());
    std::vector<std::pair<int, int>> boxes;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < lambda[r]; ++c) boxes.emplace_back(r, c);
    std::vector<std::vector<int>> t(m);
    for (int r = 0; r < m; ++r) t[r].assign(lambda[r], 0);
    Monomials out;
    std::vector<int> expo(m, 0);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == boxes.size()) {
            ++out[expo];
            return;
        }
        const auto [r, c] = boxes[k];
        int lo = 1;
        if (c > 0) lo = std::max(lo, t[r][c - 1]);
        if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
        for (int x = lo; x <= m; ++x) {
            t[r][c] = x;
            ++expo[x - 1];
            self(self, k + 1);
            --expo[x - 1];
        }
    };
    rec(rec, 0);
    return out;
}

inline Monomials multiply(const Monomials& a, const Monomials& b) {
    Monomials out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

/// Expansion of s_a s_b for GL_m weights with nonnegative entries.
inline std::map<std::vector<int>, long long> expand(const std::vector<int>& a, const std::vector<int>& b) {
    const int m = static_cast<int>(a.size());
    Monomials alt;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) inv += perm[i] > perm[j];
        std::vector<int> e(m);
        for (int i = 0; i < m; ++i) e[i] = m - 1 - perm[i];
        alt[e] += inv % 2 ? -1 : 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const auto prod = multiply(alt, multiply(schur_polynomial(a), schur_polynomial(b)));
    std::map<std::vector<int>, long long> out;
    for (const auto& [e, c] : prod) {
        if (c == 0) continue;
        std::vector<int> lam(m);
        bool strict = true;
        for (int i = 0; i < m; ++i) {
            lam[i] = e[i] - (m - 1 - i);
            if (i > 0 && e[i] >= e[i - 1]) strict = false;
        }
        if (strict) out[lam] = c;
    }
    return out;
}

}  // namespace cellkit::lr_oracle
