#include <gtest/gtest.h>

#include <random>

#include "cellkit/cellcomb.hpp"
#include "test_support.hpp"

using namespace cellkit;

namespace {

AffinePermutation W(int D, std::vector<int> w) { return AffinePermutation(D, std::move(w)); }
Partition P(std::vector<int> p) { return Partition(std::move(p)); }

/// The D=5, n=2 matrix of the worked example: row 1 has ones in columns 1, 2, 4; row 2 in columns 2, 4.
PeriodicMatrix example_matrix() {
    return PeriodicMatrix(5, 2, {{1, 1, 1}, {1, 2, 1}, {1, 4, 1}, {2, 2, 1}, {2, 4, 1}});
}

}  // namespace

TEST(Partition, BasicsAndDual) {
    const auto p = P({3, 2, 2, 1});
    EXPECT_EQ(p.weight(), 8);
    EXPECT_EQ(p.dual(), P({4, 3, 1}));
    EXPECT_EQ(p.dual().dual(), p);
    EXPECT_EQ(p.a_value(), 3 + 1 + 1);
    EXPECT_THROW(P({1, 2}), Error);
    EXPECT_EQ(P({2, 1, 0, 0}), P({2, 1}));
    for (int d = 1; d <= 7; ++d)
        for (const auto& q : partitions_of(d)) EXPECT_EQ(q.dual().dual(), q);
    EXPECT_EQ(partitions_of(6).size(), 11u);
}

TEST(Sigma, Examples) {
    for (int D = 1; D <= 5; ++D) EXPECT_EQ(sigma_partition(AffinePermutation::identity(D)), P(std::vector<int>(D, 1)));
    EXPECT_EQ(sigma_partition(AffinePermutation::simple(2, 1)), P({2}));
    EXPECT_EQ(sigma_partition(W(5, {3, 2, 5, 4, 1})), P({3, 2}));
}

TEST(Sigma, FiniteLongestElementAndPiInvariance) {
    for (int D = 2; D <= 6; ++D) {
        std::vector<int> w0(D);
        for (int i = 0; i < D; ++i) w0[i] = D - i;
        EXPECT_EQ(sigma_partition(W(D, w0)), P({D}));
    }
    for (const auto& w : ball_enumerate(3, 4, -2, 2)) {
        EXPECT_EQ(sigma_partition(w), sigma_partition(w.inverse()));
        EXPECT_EQ(sigma_partition(w).weight(), 3);
    }
}

TEST(Rho, Examples) {
    EXPECT_EQ(rho_partition(PeriodicMatrix::diagonal({4})), P({4}));
    EXPECT_EQ(rho_partition(example_matrix()), P({4, 1}));
    for (int D = 1; D <= 5; ++D)
        EXPECT_EQ(rho_partition(PeriodicMatrix::diagonal(Composition(D, 1))), P(std::vector<int>(D, 1)));
}

TEST(Rho, AgreesWithSigmaOnPermutationMatrices) {
    for (int D = 2; D <= 4; ++D)
        for (const auto& w : ball_enumerate(D, D == 4 ? 5 : 6, -1, 1))
            EXPECT_EQ(rho_partition(to_matrix(w)), sigma_partition(w)) << w;
}

TEST(Rho, AgreesWithSigmaOfDoubleCosetMaximum) {
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        const int D = 2 + t % 4, n = 1 + t % 3;
        const auto A = test_support::random_matrix(rng, D, n, 3);
        const auto lam = rho_partition(A);
        EXPECT_EQ(lam.weight(), D);
        EXPECT_LE(lam.num_parts(), n);
        EXPECT_EQ(lam, sigma_partition(to_triple(A).w)) << A;
    }
}

TEST(Mdc, Examples) {
    const auto blocks = mdc_blocks(W(5, {3, 2, 5, 4, 1}), 0);
    ASSERT_TRUE(blocks);
    ASSERT_EQ(blocks->size(), 2u);
    EXPECT_EQ((*blocks)[0].columns, (std::vector<int>{3, 2}));
    EXPECT_EQ((*blocks)[1].columns, (std::vector<int>{5, 4, 1}));
    EXPECT_EQ((*blocks)[1].first_row, 3);
    const auto id = mdc_blocks(AffinePermutation::identity(4), 0);
    ASSERT_TRUE(id);
    EXPECT_EQ(id->size(), 4u);
    const auto s = mdc_blocks(AffinePermutation::simple(2, 1), 0);
    ASSERT_TRUE(s);
    ASSERT_EQ(s->size(), 1u);
    EXPECT_EQ((*s)[0].size(), 2);
    EXPECT_FALSE(mdc_blocks(W(5, {3, 2, 5, 4, 1}), 1));
}

TEST(ShiTableau, Examples) {
    const auto t = shi_tableau(W(5, {3, 2, 5, 4, 1}));
    ASSERT_TRUE(t);
    EXPECT_EQ(t->rows(), (std::vector<std::vector<int>>{{5, 4, 1}, {3, 2}}));
    const auto id = shi_tableau(AffinePermutation::identity(3));
    ASSERT_TRUE(id);
    EXPECT_EQ(id->rows(), (std::vector<std::vector<int>>{{3}, {2}, {1}}));
    const auto s = shi_tableau(AffinePermutation::simple(2, 1));
    ASSERT_TRUE(s);
    EXPECT_EQ(s->rows(), (std::vector<std::vector<int>>{{2, 1}}));
}

TEST(ShiTableau, ShapeAndDescentsOnBalls) {
    for (int D = 2; D <= 4; ++D) {
        int found = 0;
        for (const auto& w : ball_enumerate(D, D == 4 ? 6 : 8)) {
            const auto t = shi_tableau(w);
            if (!t) continue;
            ++found;
            EXPECT_EQ(t->shape(), sigma_partition(w)) << w;
            EXPECT_TRUE(t->columns_strictly_decreasing());
            EXPECT_EQ(descents_from_tableau(*t, D), w.right_descents()) << w;
        }
        EXPECT_GT(found, 0);
    }
}

TEST(Tableaux, EnumerateExamples) {
    EXPECT_EQ(tableaux_enumerate(3, P({2, 2, 1})).size(), 3u);
    EXPECT_TRUE(tableaux_enumerate(2, P({1, 1, 1})).empty());
    for (int D = 1; D <= 6; ++D) EXPECT_EQ(tableaux_enumerate(2, P({D})).size(), std::size_t{1} << D);
}

TEST(Tableaux, CountMatchesFormula) {
    for (int D = 1; D <= 6; ++D)
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : partitions_of(D)) {
                const auto ts = tableaux_enumerate(n, lam);
                EXPECT_EQ(boost::multiprecision::cpp_int(ts.size()), left_cell_count(n, lam)) << n << " " << lam;
                for (const auto& t : ts) EXPECT_TRUE(t.columns_strictly_decreasing());
            }
    EXPECT_EQ(left_cell_count(3, P({2, 2, 1})), 3);
    EXPECT_EQ(left_cell_count(4, P({1, 1, 1, 1})), 1);
    EXPECT_EQ(left_cell_count(2, P({5})), 32);
    EXPECT_EQ(left_cell_count(2, P({1, 1, 1})), 0);
}

TEST(HMap, Examples) {
    const auto r = h_map(Tableau({{3, 2}, {2, 1}, {1}}), 3);
    EXPECT_EQ(r.standard.rows(), (std::vector<std::vector<int>>{{5, 3}, {4, 1}, {2}}));
    EXPECT_EQ(r.composition, (std::vector<int>{2, 2, 1}));
    const auto one = h_map(Tableau(std::vector<std::vector<int>>{{1}}), 1);
    EXPECT_EQ(one.standard.rows(), (std::vector<std::vector<int>>{{1}}));
    EXPECT_EQ(one.composition, std::vector<int>{1});
    const auto two = h_map(Tableau({{2, 1}}), 2);
    EXPECT_EQ(two.standard.rows(), (std::vector<std::vector<int>>{{2, 1}}));
    EXPECT_EQ(two.composition, (std::vector<int>{1, 1}));
}

TEST(HMap, LandsInStandardTableaux) {
    for (int D = 1; D <= 5; ++D)
        for (const auto& lam : partitions_of(D))
            for (const auto& t : tableaux_enumerate(3, lam)) {
                const auto r = h_map(t, 3);
                EXPECT_TRUE(r.standard.columns_strictly_decreasing()) << t;
                std::vector<int> seen;
                for (const auto& row : r.standard.rows()) seen.insert(seen.end(), row.begin(), row.end());
                std::sort(seen.begin(), seen.end());
                for (int k = 0; k < D; ++k) EXPECT_EQ(seen[k], k + 1);
                EXPECT_EQ(composition_weight(r.composition), D);
            }
}

TEST(DescentsFromTableau, Examples) {
    EXPECT_EQ(descents_from_tableau(Tableau({{5, 4, 1}, {3, 2}}), 5), (std::vector<int>{1, 2, 4}));
    EXPECT_TRUE(descents_from_tableau(Tableau({{4}, {3}, {2}, {1}}), 4).empty());
    EXPECT_EQ(descents_from_tableau(Tableau({{4, 3, 2, 1}}), 4), (std::vector<int>{1, 2, 3}));
}
