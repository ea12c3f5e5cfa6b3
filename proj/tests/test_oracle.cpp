#include <gtest/gtest.h>

#include <set>

#include "cellkit/oracle.hpp"

using namespace cellkit;

namespace {

using HeckeOracle = CellOracle<AffinePermutation, AffinePermutationHash>;
using SchurOracle = CellOracle<PeriodicMatrix, PeriodicMatrixHash>;

/// Toy algebras on labels 0..n-1.
BasedAlgebraView<int> toy(int n, bool idempotents) {
    BasedAlgebraView<int> v;
    for (int i = 0; i < n; ++i) v.basis.push_back(i);
    v.contains_generators = true;
    v.product = [n, idempotents](int x, int y) {
        BasedAlgebraView<int>::Product out;
        if (idempotents) {
            if (x == y) out.emplace_back(x, LaurentPoly(1));
        } else {
            for (int z = 0; z < n; ++z) out.emplace_back(z, LaurentPoly(1));
        }
        return out;
    };
    return v;
}

AffinePermutation s(int D, int i) { return AffinePermutation::simple(D, i); }

}  // namespace

TEST(Oracle, OneElementAlgebra) {
    CellOracle<int> o(toy(1, true));
    EXPECT_EQ(o.cell_indices(Side::Left), (std::vector<std::vector<int>>{{0}}));
    EXPECT_EQ(o.relation(0, 0, Side::TwoSided), Relation::Related);
    EXPECT_EQ(o.empirical_a(0), 0);
}

TEST(Oracle, DiscreteAndTotalRelations) {
    CellOracle<int> d(toy(3, true));
    EXPECT_EQ(d.cells(Side::TwoSided), (std::vector<std::vector<int>>{{0}, {1}, {2}}));
    EXPECT_EQ(d.relation(0, 1, Side::Left), Relation::Unrelated);
    CellOracle<int> t(toy(3, false));
    EXPECT_EQ(t.cells(Side::Left), (std::vector<std::vector<int>>{{0, 1, 2}}));
    EXPECT_EQ(t.equivalence(0, 2, Side::Right), Relation::Related);
}

TEST(Oracle, StronglyConnectedOrdering) {
    // 0 -> 1 -> 2 -> 1, 3 isolated
    const std::vector<std::vector<int>> adj{{1}, {2}, {1}, {}};
    EXPECT_EQ(strongly_connected(adj), (std::vector<std::vector<int>>{{0}, {1, 2}, {3}}));
    EXPECT_TRUE(strongly_connected({}).empty());
}

TEST(Oracle, LabelsOutsideWindowAreUnknown) {
    CellOracle<int> o(toy(2, true));
    EXPECT_EQ(o.relation(0, 7, Side::Left), Relation::Unknown);
    auto v = toy(2, true);
    v.contains_generators = false;
    CellOracle<int> g(v);
    EXPECT_EQ(g.relation(0, 1, Side::Left), Relation::Unknown);
}

TEST(Oracle, InfiniteDihedralBall) {
    auto H = std::make_shared<HeckeAlgebra>(2);
    HeckeOracle o(hecke_view(H, ball_enumerate(2, 3)));
    ASSERT_EQ(o.size(), 7u);
    const auto e = AffinePermutation::identity(2);
    const auto two = o.cells(Side::TwoSided);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], std::vector<AffinePermutation>{e});
    EXPECT_EQ(two[1].size(), 6u);
    // Left cells of non-identity elements are fixed by the last letter.
    const auto left = o.cells(Side::Left);
    EXPECT_EQ(left.size(), 3u);
    for (const auto& c : left)
        for (const auto& w : c) EXPECT_EQ(w.right_descents(), c.front().right_descents());
    EXPECT_GT(o.escape_count(), 0u);
    EXPECT_EQ(o.relation(e, s(2, 1), Side::TwoSided), Relation::Unknown);
    EXPECT_EQ(o.relation(s(2, 1), e, Side::TwoSided), Relation::Related);
}

TEST(Oracle, EmpiricalAOnHeckeBall) {
    auto H = std::make_shared<HeckeAlgebra>(2);
    HeckeOracle o(hecke_view(H, ball_enumerate(2, 3)));
    EXPECT_EQ(o.empirical_a(*o.index(AffinePermutation::identity(2))), 0);
    EXPECT_EQ(o.empirical_a(*o.index(s(2, 1))), 1);
    for (std::size_t i = 0; i < o.size(); ++i) {
        const auto a = o.empirical_a(static_cast<int>(i));
        ASSERT_TRUE(a.has_value());
        EXPECT_LE(*a, HeckeAlgebra::a_prime(o.basis()[i]));
    }
}

TEST(Oracle, HeckeCellsRefineSigmaFibers) {
    auto H = std::make_shared<HeckeAlgebra>(3);
    HeckeOracle o(hecke_view(H, ball_enumerate(3, 5)));
    for (const auto& c : o.cells(Side::TwoSided)) {
        const Partition lam = sigma_partition(c.front());
        int best = INT_MIN;
        for (const auto& w : c) {
            EXPECT_EQ(sigma_partition(w), lam) << w.to_string();
            best = std::max(best, o.empirical_a(*o.index(w)).value_or(INT_MIN));
        }
        EXPECT_LE(best, lam.a_value());
    }
}

TEST(Oracle, SchurCellsMatchRhoFibers) {
    auto S = std::make_shared<SchurAlgebra>(2, 2);
    SchurOracle o(schur_view(S, S->ball(4)));
    std::set<Partition> seen;
    for (const auto& c : o.cells(Side::TwoSided)) {
        const Partition lam = rho_partition(c.front());
        for (const auto& A : c) EXPECT_EQ(rho_partition(A), lam) << A.to_string();
        seen.insert(lam);
    }
    EXPECT_EQ(seen.size(), 2u);
    for (std::size_t i = 0; i < o.size(); ++i) {
        const auto& A = o.basis()[i];
        const auto a = o.empirical_a(static_cast<int>(i));
        ASSERT_TRUE(a.has_value()) << A.to_string();
        EXPECT_LE(*a, S->a_value(A)) << A.to_string();
        if (A.is_diagonal()) EXPECT_EQ(*a, 0);
    }
}
