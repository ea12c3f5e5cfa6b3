#pragma once

/**
 * @file affine_perm.hpp
 * @brief The extended affine Weyl group of GL_D as periodic permutations of Z.
 *
 * An element w is stored by its window ((1)w, ..., (D)w) and extended by
 * (i + D)w = (i)w + D. The group acts on the right: (i)(wu) = ((i)w)u, so
 * left multiplication by a simple reflection permutes positions and right
 * multiplication permutes values.
 *
 * Simple reflections are s_0, ..., s_{D-1}, where s_i swaps i and i+1
 * (mod D), and pi is the length-zero shift (i)pi = i + 1.
 */

#include <algorithm>
#include <cstddef>
#include <deque>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cellkit/error.hpp"

namespace cellkit {

/// floor(a / b) for b > 0.
inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
/// a mod b in [0, b) for b > 0.
inline int mod_pos(int a, int b) { return ((a % b) + b) % b; }

class AffinePermutation {
public:
    AffinePermutation() = default;

    /// Validates that residues of the window form a permutation of Z/D.
    AffinePermutation(int D, std::vector<int> window) : D_(D), window_(std::move(window)) {
        if (D_ <= 0 || static_cast<int>(window_.size()) != D_)
            throw Error("InvalidPermutation", "window length must equal the period D");
        std::vector<bool> seen(D_, false);
        for (int x : window_) {
            const int r = mod_pos(x, D_);
            if (seen[r]) throw Error("InvalidPermutation", "window residues are not a permutation", to_string());
            seen[r] = true;
        }
    }

    static AffinePermutation identity(int D) {
        std::vector<int> w(D);
        std::iota(w.begin(), w.end(), 1);
        return AffinePermutation(D, std::move(w), Unchecked{});
    }

    /// s_i for i in [0, D); indices are taken mod D.
    static AffinePermutation simple(int D, int i) {
        if (D < 2) throw Error("InvalidGenerator", "no simple reflections for D = 1");
        i = mod_pos(i, D);
        auto w = identity(D);
        if (i == 0) {
            w.window_[0] = 0;
            w.window_[D - 1] = D + 1;
        } else {
            std::swap(w.window_[i - 1], w.window_[i]);
        }
        return w;
    }

    /// pi^k, the length-zero element with (i)pi^k = i + k.
    static AffinePermutation pi(int D, int k = 1) {
        std::vector<int> w(D);
        for (int i = 0; i < D; ++i) w[i] = i + 1 + k;
        return AffinePermutation(D, std::move(w), Unchecked{});
    }

    int period() const noexcept { return D_; }
    const std::vector<int>& window() const noexcept { return window_; }

    /// (i)w for any integer i.
    int operator()(int i) const {
        const int r = mod_pos(i - 1, D_);
        return window_[r] + (i - 1 - r);
    }

    /// The Omega-component k, with w = pi^k u and u in the Coxeter subgroup.
    int shift() const {
        long long s = 0;
        for (int i = 0; i < D_; ++i) s += window_[i] - (i + 1);
        return static_cast<int>(s / D_);
    }

    /// (i)(w*u) = ((i)w)u.
    friend AffinePermutation operator*(const AffinePermutation& w, const AffinePermutation& u) {
        if (w.D_ != u.D_) throw dimension_mismatch();
        std::vector<int> r(w.D_);
        for (int i = 0; i < w.D_; ++i) r[i] = u(w.window_[i]);
        return AffinePermutation(w.D_, std::move(r), Unchecked{});
    }

    AffinePermutation inverse() const {
        std::vector<int> r(D_);
        for (int i = 0; i < D_; ++i) {
            const int x = window_[i];
            const int res = mod_pos(x - 1, D_);
            // (x)w^{-1} = i+1, so (res+1)w^{-1} = i+1 - (x - 1 - res).
            r[res] = i + 1 - (x - 1 - res);
        }
        return AffinePermutation(D_, std::move(r), Unchecked{});
    }

    /// Number of pairs (i, j), 1 <= i <= D, i < j, with (i)w > (j)w.
    int length() const {
        int len = 0;
        for (int i = 1; i <= D_; ++i) {
            const int wi = window_[i - 1];
            for (int j0 = 1; j0 <= D_; ++j0) {
                const int wj0 = window_[j0 - 1];
                // j = j0 + kD with j > i and wj0 + kD < wi.
                const int k_min = floor_div(i - j0, D_) + 1;
                const int k_max = floor_div(wi - wj0 - 1, D_);
                if (k_max >= k_min) len += k_max - k_min + 1;
            }
        }
        return len;
    }

    /// s_i * w: swaps positions i and i+1.
    AffinePermutation left_mul_simple(int i) const {
        i = mod_pos(i, D_);
        AffinePermutation r(*this);
        if (i == 0) {
            const int a = window_[0];
            const int b = window_[D_ - 1];
            r.window_[0] = b - D_;
            r.window_[D_ - 1] = a + D_;
        } else {
            std::swap(r.window_[i - 1], r.window_[i]);
        }
        return r;
    }

    /// w * s_i: swaps values i and i+1.
    AffinePermutation right_mul_simple(int i) const {
        i = mod_pos(i, D_);
        AffinePermutation r(*this);
        for (auto& x : r.window_) {
            const int res = mod_pos(x, D_);
            if (res == i) ++x;
            else if (res == mod_pos(i + 1, D_)) --x;
        }
        return r;
    }

    /// pi^k * w.
    AffinePermutation left_mul_pi(int k) const {
        std::vector<int> r(D_);
        for (int i = 0; i < D_; ++i) r[i] = (*this)(i + 1 + k);
        return AffinePermutation(D_, std::move(r), Unchecked{});
    }

    /// l(s_i w) < l(w), i.e. (i)w > (i+1)w.
    bool is_left_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
    /// l(w s_i) < l(w), i.e. i+1 occurs at an earlier position than i.
    bool is_right_descent(int i) const { return inverse().is_left_descent(i); }

    std::vector<int> left_descents() const {
        std::vector<int> d;
        for (int i = 0; i < D_; ++i)
            if (is_left_descent(i)) d.push_back(i);
        return d;
    }
    std::vector<int> right_descents() const { return inverse().left_descents(); }

    bool is_identity() const {
        for (int i = 0; i < D_; ++i)
            if (window_[i] != i + 1) return false;
        return true;
    }
    bool is_involution() const { return (*this) * (*this) == identity(D_); }

    /// w = pi^k u with u of shift zero; returns (k, u).
    std::pair<int, AffinePermutation> omega_decompose() const {
        const int k = shift();
        return {k, left_mul_pi(-k)};
    }

    /// A reduced word for the Coxeter factor u: u = s_{w[0]} s_{w[1]} ... (left to right).
    std::vector<int> reduced_word() const {
        auto [k, u] = omega_decompose();
        std::vector<int> word;
        while (!u.is_identity()) {
            const int s = u.left_descents().front();
            word.push_back(s);
            u = u.left_mul_simple(s);
        }
        return word;
    }

    friend bool operator==(const AffinePermutation& a, const AffinePermutation& b) {
        return a.D_ == b.D_ && a.window_ == b.window_;
    }
    friend bool operator!=(const AffinePermutation& a, const AffinePermutation& b) { return !(a == b); }
    /// Deterministic order: period, then length, then window lexicographically.
    friend bool operator<(const AffinePermutation& a, const AffinePermutation& b) {
        if (a.D_ != b.D_) return a.D_ < b.D_;
        const int la = a.length(), lb = b.length();
        if (la != lb) return la < lb;
        return a.window_ < b.window_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < D_; ++i) {
            if (i) s += ",";
            s += std::to_string(window_[i]);
        }
        return s + "]";
    }
    friend std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) { return os << w.to_string(); }

    std::size_t hash() const noexcept {
        std::size_t h = static_cast<std::size_t>(D_) * 0x9e3779b97f4a7c15ULL;
        for (int x : window_) h = (h ^ static_cast<std::size_t>(x + 0x40000000)) * 0x100000001b3ULL;
        return h;
    }

private:
    struct Unchecked {};
    AffinePermutation(int D, std::vector<int> window, Unchecked) : D_(D), window_(std::move(window)) {}

    int D_ = 1;
    std::vector<int> window_{1};
};

struct AffinePermutationHash {
    std::size_t operator()(const AffinePermutation& w) const noexcept { return w.hash(); }
};

/// All elements pi^k u with k in [k_lo, k_hi] and l(u) <= max_length, in BFS order
/// (by k, then by length, then by the order of discovery via right multiplication by s_0..s_{D-1}).
inline std::vector<AffinePermutation> ball_enumerate(int D, int max_length, int k_lo = 0, int k_hi = 0) {
    if (max_length < 0) throw Error("InvalidArgument", "ball radius must be nonnegative");
    std::vector<AffinePermutation> coxeter{AffinePermutation::identity(D)};
    if (D >= 2) {
        std::unordered_set<AffinePermutation, AffinePermutationHash> seen{coxeter.front()};
        std::size_t layer_begin = 0;
        for (int len = 1; len <= max_length; ++len) {
            const std::size_t layer_end = coxeter.size();
            for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
                for (int s = 0; s < D; ++s) {
                    if (coxeter[idx].is_right_descent(s)) continue;
                    auto next = coxeter[idx].right_mul_simple(s);
                    if (seen.insert(next).second) coxeter.push_back(std::move(next));
                }
            }
            layer_begin = layer_end;
        }
    }
    std::vector<AffinePermutation> out;
    out.reserve(coxeter.size() * static_cast<std::size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k)
        for (const auto& u : coxeter) out.push_back(u.left_mul_pi(k));
    return out;
}

}  // namespace cellkit

template <>
struct std::hash<cellkit::AffinePermutation> {
    std::size_t operator()(const cellkit::AffinePermutation& w) const noexcept { return w.hash(); }
};
