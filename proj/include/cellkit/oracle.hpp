#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force cells of a based algebra restricted to a finite window of its basis.
 *
 * Every product b * y of two window labels is expanded once. Its support gives the edge
 * y -> x for the left preorder and b -> x for the right preorder. Because only a finite
 * window is visible, answers are three-valued:
 *  - Related:   a path of edges inside the window exists;
 *  - Unrelated: no path, and the set reachable from y never produced a label outside the
 *               window (only meaningful when the window contains algebra generators);
 *  - Unknown:   otherwise.
 */

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/strong_components.hpp>

#include "cellkit/hecke.hpp"
#include "cellkit/laurent_poly.hpp"
#include "cellkit/schur.hpp"

namespace cellkit {

enum class Side { Left, Right, TwoSided };
enum class Relation { Related, Unrelated, Unknown };

inline const char* to_string(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "twosided";
    }
    return "?";
}
inline const char* to_string(Relation r) {
    switch (r) {
        case Relation::Related: return "related";
        case Relation::Unrelated: return "unrelated";
        case Relation::Unknown: return "unknown";
    }
    return "?";
}

template <class Label>
struct BasedAlgebraView {
    using Product = std::vector<std::pair<Label, LaurentPoly>>;
    /// Window of basis labels; order fixes component numbering.
    std::vector<Label> basis;
    /// Expansion of x * y in the basis (labels may fall outside the window).
    std::function<Product(const Label&, const Label&)> product;
    /// Added to deg_v of the coefficient of z in x * y before taking maxima (zero if unset).
    std::function<int(const Label&, const Label&, const Label&)> degree_shift;
    /// Whether the window contains a generating set, which licenses Unrelated answers.
    bool contains_generators = false;
};

/// Strongly connected components of a digraph, each sorted, listed by smallest member.
inline std::vector<std::vector<int>> strongly_connected(const std::vector<std::vector<int>>& adj) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS>;
    Graph g(adj.size());
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (int w : adj[u]) boost::add_edge(u, static_cast<std::size_t>(w), g);
    std::vector<int> comp(adj.size());
    const int count = adj.empty() ? 0 : boost::strong_components(g, comp.data());
    std::vector<std::vector<int>> out(count);
    for (std::size_t u = 0; u < adj.size(); ++u) out[comp[u]].push_back(static_cast<int>(u));
    std::sort(out.begin(), out.end());
    return out;
}

template <class Label, class Hash = std::hash<Label>>
class CellOracle {
public:
    explicit CellOracle(BasedAlgebraView<Label> view) : view_(std::move(view)) {
        const std::size_t N = view_.basis.size();
        for (std::size_t i = 0; i < N; ++i) index_.emplace(view_.basis[i], static_cast<int>(i));
        left_.assign(N, {});
        right_.assign(N, {});
        left_escape_.assign(N, false);
        right_escape_.assign(N, false);
        a_max_.assign(N, INT_MIN);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const auto& x = view_.basis[i];
                const auto& y = view_.basis[j];
                for (const auto& [z, p] : view_.product(x, y)) {
                    if (p.is_zero()) continue;
                    auto it = index_.find(z);
                    if (it == index_.end()) {
                        left_escape_[j] = true;
                        right_escape_[i] = true;
                        ++escapes_;
                        continue;
                    }
                    const int k = it->second;
                    left_[j].push_back(k);
                    right_[i].push_back(k);
                    const int shift = view_.degree_shift ? view_.degree_shift(x, y, z) : 0;
                    a_max_[k] = std::max(a_max_[k], p.degree() + shift);
                }
            }
        for (auto* adj : {&left_, &right_})
            for (auto& e : *adj) {
                std::sort(e.begin(), e.end());
                e.erase(std::unique(e.begin(), e.end()), e.end());
            }
        two_.resize(N);
        for (std::size_t u = 0; u < N; ++u) {
            std::merge(left_[u].begin(), left_[u].end(), right_[u].begin(), right_[u].end(),
                       std::back_inserter(two_[u]));
            two_[u].erase(std::unique(two_[u].begin(), two_[u].end()), two_[u].end());
        }
    }

    const std::vector<Label>& basis() const noexcept { return view_.basis; }
    std::size_t size() const noexcept { return view_.basis.size(); }
    std::size_t escape_count() const noexcept { return escapes_; }

    std::optional<int> index(const Label& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Some product with label i on the relevant side left the window.
    bool escapes(int i, Side side) const {
        switch (side) {
            case Side::Left: return left_escape_[i];
            case Side::Right: return right_escape_[i];
            case Side::TwoSided: return left_escape_[i] || right_escape_[i];
        }
        return true;
    }

    /// Window indices reachable from y (including y).
    std::vector<int> reachable(int y, Side side) const {
        const auto& adj = edges(side);
        std::vector<char> seen(size(), 0);
        std::vector<int> stack{y}, out;
        seen[y] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            out.push_back(u);
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// x precedes y: x lies in every based ideal (of the given side) containing y.
    Relation relation(const Label& x, const Label& y, Side side) const {
        const auto ix = index(x), iy = index(y);
        if (!ix || !iy) return Relation::Unknown;
        const auto reach = reachable(*iy, side);
        if (std::binary_search(reach.begin(), reach.end(), *ix)) return Relation::Related;
        if (!view_.contains_generators) return Relation::Unknown;
        for (int u : reach)
            if (escapes(u, side)) return Relation::Unknown;
        return Relation::Unrelated;
    }

    /// Certified equivalence: x and y are mutually Related.
    Relation equivalence(const Label& x, const Label& y, Side side) const {
        const auto a = relation(x, y, side), b = relation(y, x, side);
        if (a == Relation::Related && b == Relation::Related) return Relation::Related;
        if (a == Relation::Unrelated || b == Relation::Unrelated) return Relation::Unrelated;
        return Relation::Unknown;
    }

    /// Strongly connected components of the in-window preorder, as index lists.
    std::vector<std::vector<int>> cell_indices(Side side) const { return strongly_connected(edges(side)); }

    std::vector<std::vector<Label>> cells(Side side) const {
        std::vector<std::vector<Label>> out;
        for (const auto& comp : cell_indices(side)) {
            std::vector<Label> c;
            for (int i : comp) c.push_back(view_.basis[i]);
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Max over window pairs of the (shifted) degree of the coefficient of each label; absent if never hit.
    std::optional<int> empirical_a(int i) const {
        if (a_max_[i] == INT_MIN) return std::nullopt;
        return a_max_[i];
    }

    const std::vector<std::vector<int>>& edges(Side side) const {
        switch (side) {
            case Side::Left: return left_;
            case Side::Right: return right_;
            case Side::TwoSided: break;
        }
        return two_;
    }

private:
    BasedAlgebraView<Label> view_;
    std::unordered_map<Label, int, Hash> index_;
    std::vector<std::vector<int>> left_, right_, two_;
    std::vector<bool> left_escape_, right_escape_;
    std::vector<int> a_max_;
    std::size_t escapes_ = 0;
};

/// C-basis of the Hecke algebra restricted to `window`; s_i in the window make Unrelated answers sound.
inline BasedAlgebraView<AffinePermutation> hecke_view(std::shared_ptr<HeckeAlgebra> H,
                                                     std::vector<AffinePermutation> window) {
    BasedAlgebraView<AffinePermutation> v;
    std::sort(window.begin(), window.end());
    const int D = H->period();
    int gens = 0;
    for (const auto& w : window)
        if (w.length() == 1) ++gens;
    v.contains_generators = gens >= (D == 1 ? 0 : D);
    v.basis = std::move(window);
    v.product = [H](const AffinePermutation& x, const AffinePermutation& y) {
        BasedAlgebraView<AffinePermutation>::Product out;
        const HeckeElement h = H->h_constants(x, y);
        for (const auto& [z, p] : h.terms()) out.emplace_back(z, p);
        return out;
    };
    return v;
}

/// Canonical basis {A} of the q-Schur algebra restricted to `window`.
/// The a-value shift l(w_{c(X)}) - l(w_{c(Z)}) turns deg nu into deg h - l(w_{c(Z)}).
inline BasedAlgebraView<PeriodicMatrix> schur_view(std::shared_ptr<SchurAlgebra> S, std::vector<PeriodicMatrix> window) {
    BasedAlgebraView<PeriodicMatrix> v;
    std::sort(window.begin(), window.end());
    v.basis = std::move(window);
    v.product = [S](const PeriodicMatrix& A, const PeriodicMatrix& B) {
        BasedAlgebraView<PeriodicMatrix>::Product out;
        for (auto& [C, p] : S->nu(A, B)) out.emplace_back(C, std::move(p));
        return out;
    };
    v.degree_shift = [](const PeriodicMatrix& A, const PeriodicMatrix&, const PeriodicMatrix& C) {
        return longest_length(A.col_sums()) - longest_length(C.col_sums());
    };
    return v;
}

}  // namespace cellkit
