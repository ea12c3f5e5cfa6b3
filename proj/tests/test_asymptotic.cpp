#include <gtest/gtest.h>

#include <random>

#include "cellkit/asymptotic.hpp"
#include "checks/lr_oracle.hpp"

using namespace cellkit;

namespace {

std::vector<PeriodicMatrix> in_cell(SchurAlgebra& S, int radius, const Partition& lam) {
    std::vector<PeriodicMatrix> out;
    for (const auto& A : S.ball(radius))
        if (rho_partition(A) == lam) out.push_back(A);
    return out;
}

/// n = 1: the GL_D weight attached to A (its column multiset, descending, shifted by one).
GLFactorWeight column_weight(const PeriodicMatrix& A) {
    GLFactorWeight k;
    for (const auto& e : A.support())
        for (int i = 0; i < e.value; ++i) k.push_back(e.col - 1);
    std::sort(k.rbegin(), k.rend());
    return k;
}

}  // namespace

TEST(Gamma, SimpleReflectionLabel) {
    SchurAlgebra S(2, 2);
    const auto A = to_matrix(AffinePermutation::simple(2, 1));
    EXPECT_EQ(gamma(S, A, A, A), 1);
    EXPECT_EQ(S.a_value(A), 1);
}

TEST(Gamma, IncompatibleBlocksGiveZero) {
    SchurAlgebra S(3, 2);
    const auto A = PeriodicMatrix::diagonal({2, 1});
    const auto B = PeriodicMatrix::diagonal({1, 2});
    EXPECT_EQ(gamma(S, A, B, A), 0);
}

TEST(Gamma, CyclicSymmetryOnSchurLabels) {
    SchurAlgebra S(3, 2);
    const auto ball = S.ball(5);
    for (const auto& A : ball)
        for (const auto& B : ball)
            for (const auto& [C, p] : S.nu(A, B)) {
                const BigInt g = gamma(S, A, B, C);
                EXPECT_EQ(g, gamma(S, B, C.transpose(), A.transpose()));
                EXPECT_EQ(g, gamma(S, C.transpose(), A, B.transpose()));
            }
}

TEST(Gamma, DistinguishedCorollaries) {
    for (int D : {2, 3})
        for (int n : {2, 3}) {
            SchurAlgebra S(D, n);
            for (const auto& lam : partitions_of(D)) {
                if (lam.num_parts() > n) continue;
                const auto Ds = distinguished_in_cell(S, lam);
                for (const auto& E : Ds) EXPECT_EQ(E, E.transpose()) << E;
                const auto labels = in_cell(S, 4, lam);
                for (const auto& B : labels) {
                    int hits = 0;
                    for (const auto& E : Ds) {
                        if (gamma(S, B, B.transpose(), E) != 0) {
                            ++hits;
                            EXPECT_GT(gamma(S, B, B.transpose(), E), 0);
                        }
                        for (const auto& C : labels)
                            if (C != B.transpose()) EXPECT_EQ(gamma(S, B, C, E), 0) << B << " " << C << " " << E;
                    }
                    EXPECT_EQ(hits, 1) << "D=" << D << " n=" << n << " " << B;
                }
            }
        }
}

TEST(JRing, RankMatchesLeftCellCount) {
    for (int D : {2, 3})
        for (int n : {1, 2, 3}) {
            SchurAlgebra S(D, n);
            for (const auto& lam : partitions_of(D)) {
                if (lam.num_parts() > n) continue;
                const auto Ds = distinguished_in_cell(S, lam);
                EXPECT_EQ(BigInt(Ds.size()), left_cell_count(n, lam));
                int extra = 0;
                for (const auto& A : S.ball(10))
                    if (rho_partition(A) == lam && S.is_distinguished(A)) ++extra;
                EXPECT_EQ(extra, static_cast<int>(Ds.size())) << "D=" << D << " n=" << n << " " << lam;
            }
        }
}

TEST(JRing, OrthogonalIdempotents) {
    for (int D : {2, 3}) {
        SchurAlgebra S(D, 2);
        for (const auto& lam : partitions_of(D)) {
            if (lam.num_parts() > 2) continue;
            const auto Ds = distinguished_in_cell(S, lam);
            for (const auto& E : Ds)
                for (const auto& F : Ds) {
                    const auto p = j_multiply(S, JElement::basis(lam, E), JElement::basis(lam, F));
                    EXPECT_EQ(p, E == F ? JElement::basis(lam, E) : JElement(lam));
                }
        }
    }
}

TEST(JRing, IdempotentsActAsUnitsOnTheirCells) {
    SchurAlgebra S(3, 2);
    for (const auto& lam : partitions_of(3)) {
        if (lam.num_parts() > 2) continue;
        const auto Ds = distinguished_in_cell(S, lam);
        for (const auto& A : in_cell(S, 6, lam)) {
            const auto tA = JElement::basis(lam, A);
            int right = 0, left = 0;
            for (const auto& E : Ds) {
                const auto r = j_multiply(S, tA, JElement::basis(lam, E));
                const auto l = j_multiply(S, JElement::basis(lam, E), tA);
                if (!r.is_zero()) {
                    ++right;
                    EXPECT_EQ(r, tA);
                    EXPECT_TRUE(S.cell_compare(A, E, CellSide::Left)) << A << " " << E;
                }
                if (!l.is_zero()) {
                    ++left;
                    EXPECT_EQ(l, tA);
                    EXPECT_TRUE(S.cell_compare(A, E, CellSide::Right)) << A << " " << E;
                }
            }
            EXPECT_EQ(right, 1) << A;
            EXPECT_EQ(left, 1) << A;
        }
    }
}

TEST(JRing, Associativity) {
    SchurAlgebra S(3, 2);
    const Partition lam({2, 1});
    const auto cell = in_cell(S, 6, lam);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, cell.size() - 1);
    for (int t = 0; t < 40; ++t) {
        const auto x = JElement::basis(lam, cell[pick(rng)]);
        const auto y = JElement::basis(lam, cell[pick(rng)]);
        const auto z = JElement::basis(lam, cell[pick(rng)]);
        EXPECT_EQ(j_multiply(S, j_multiply(S, x, y), z), j_multiply(S, x, j_multiply(S, y, z)));
    }
}

TEST(JRing, CellMismatch) {
    SchurAlgebra S(2, 2);
    const auto s1 = to_matrix(AffinePermutation::simple(2, 1));
    EXPECT_THROW(JElement::basis(Partition({1, 1}), s1), Error);
    EXPECT_THROW(j_multiply(S, JElement(Partition({2})), JElement(Partition({1, 1}))), Error);
}

TEST(JRing, RankOneFactorsGiveMonomialProducts) {
    // all lambda(i) in {0, 1}: J is a matrix ring over a Laurent polynomial ring
    SchurAlgebra S(3, 3);
    for (const Partition lam : {Partition({2, 1}), Partition({1, 1, 1})}) {
        const auto cell = in_cell(S, 6, lam);
        for (const auto& A : cell)
            for (const auto& B : cell) {
                const auto p = j_multiply(S, JElement::basis(lam, A), JElement::basis(lam, B));
                ASSERT_LE(p.terms().size(), 1u);
                for (const auto& [C, g] : p.terms()) EXPECT_EQ(g, 1);
            }
    }
}

TEST(JRing, SingleBlockMatchesGLRepresentationRing) {
    for (int D : {2, 3}) {
        SchurAlgebra S(D, 1);
        const Partition lam({D});
        const auto ball = S.ball(D == 2 ? 14 : 16);
        ASSERT_GE(ball.size(), 7u);
        for (const auto& A : ball)
            for (const auto& B : ball) {
                const auto p = j_multiply(S, JElement::basis(lam, A), JElement::basis(lam, B));
                auto ex = lr_expand(column_weight(A), column_weight(B));
                for (const auto& C : ball) {
                    const auto it = ex.find(column_weight(C));
                    EXPECT_EQ(p.coeff(C), it == ex.end() ? 0 : it->second) << A << B << C;
                }
            }
    }
}

TEST(Phi, DistinguishedLabelHasUnitTopTerm) {
    SchurAlgebra S(3, 2);
    for (const auto& lam : partitions_of(3)) {
        if (lam.num_parts() > 2) continue;
        const auto Ds = distinguished_in_cell(S, lam);
        for (const auto& E : Ds) {
            const auto img = phi(S, E, lam, Ds);
            ASSERT_TRUE(img.count(E));
            const int a = S.a_value(E);
            EXPECT_EQ(img.at(E).degree(), a);
            EXPECT_EQ(img.at(E).coeff(a), 1);
        }
    }
}

TEST(Phi, IncompatibleLabelMapsToZero) {
    SchurAlgebra S(3, 3);
    const Partition lam({1, 1, 1});
    const auto Ds = distinguished_in_cell(S, lam);
    ASSERT_EQ(Ds.size(), 1u);
    EXPECT_EQ(Ds[0], PeriodicMatrix::diagonal({1, 1, 1}));
    EXPECT_TRUE(phi(S, PeriodicMatrix::diagonal({3, 0, 0}), lam, Ds).empty());
}

TEST(Phi, IsMultiplicative) {
    for (int D : {2, 3}) {
        SchurAlgebra S(D, 2);
        const auto ball = S.ball(D == 2 ? 3 : 2);
        for (const auto& lam : partitions_of(D)) {
            if (lam.num_parts() > 2) continue;
            const auto Ds = distinguished_in_cell(S, lam);
            for (const auto& X : ball)
                for (const auto& Y : ball) {
                    const auto lhs = phi_multiply(S, lam, phi(S, X, lam, Ds), phi(S, Y, lam, Ds));
                    PhiImage rhs;
                    for (const auto& [C, p] : S.nu(X, Y))
                        for (const auto& [B, q] : phi(S, C, lam, Ds)) rhs[B] += p * q;
                    for (auto it = rhs.begin(); it != rhs.end();) it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
                    EXPECT_EQ(lhs, rhs) << X << " " << Y;
                }
        }
    }
}

TEST(LittlewoodRichardson, Examples) {
    EXPECT_EQ(lr_coefficient({1, 0}, {1, 0}, {2, 0}), 1);
    EXPECT_EQ(lr_coefficient({1, 0}, {1, 0}, {1, 1}), 1);
    EXPECT_EQ(lr_coefficient({2, 1, 0}, {2, 1, 0}, {3, 2, 1}), 2);
    EXPECT_EQ(lr_coefficient({3, -1}, {0, 0}, {3, -1}), 1);
    EXPECT_EQ(lr_coefficient({1, 0}, {1, 0}, {3, -1}), 0);
    EXPECT_EQ(lr_coefficient({0, -1}, {1, 0}, {0, 0}), 1);  // dual times standard contains the trivial
    EXPECT_EQ(lr_coefficient({}, {}, {}), 1);
    EXPECT_THROW(lr_coefficient({1}, {1, 0}, {2, 0}), Error);
    EXPECT_THROW(lr_coefficient({0, 1}, {1, 0}, {2, 0}), Error);
}

TEST(LittlewoodRichardson, MatchesSchurPolynomialOracle) {
    for (int m = 1; m <= 4; ++m) {
        std::vector<GLFactorWeight> ws;
        for (int d = 0; d <= 4; ++d)
            for (const auto& p : partitions_of(d)) {
                if (p.num_parts() > m) continue;
                GLFactorWeight w(p.parts());
                w.resize(m, 0);
                ws.push_back(w);
            }
        for (const auto& a : ws)
            for (const auto& b : ws) {
                const auto oracle = lr_oracle::expand(a, b);
                const auto fast = lr_expand(a, b);
                EXPECT_EQ(fast, oracle);
                EXPECT_EQ(fast, lr_expand(b, a));
                for (const auto& [c, mult] : oracle) EXPECT_EQ(lr_coefficient(a, b, c), mult);
            }
    }
}

TEST(JLambda, Multiplication) {
    SchurAlgebra S(3, 2);
    const Partition lam({2, 1});
    const auto Ds = distinguished_in_cell(S, lam);
    ASSERT_EQ(Ds.size(), 2u);
    const auto triv = GLWeight::trivial(lam, 2);
    EXPECT_EQ(triv.factors.size(), 2u);
    const JTriple a{Ds[0], Ds[1], triv}, b{Ds[1], Ds[0], triv}, c{Ds[0], Ds[1], triv};
    EXPECT_EQ(j_lambda_multiply(a, b), (std::map<JTriple, long long>{{JTriple{Ds[0], Ds[0], triv}, 1}}));
    EXPECT_TRUE(j_lambda_multiply(a, c).empty());

    GLWeight k1{{{3}, {-2}}}, k2{{{1}, {5}}};
    k1.validate(lam, 2);
    const auto p = j_lambda_multiply(JTriple{Ds[0], Ds[0], k1}, JTriple{Ds[0], Ds[1], k2});
    EXPECT_EQ(p, (std::map<JTriple, long long>{{JTriple{Ds[0], Ds[1], GLWeight{{{4}, {3}}}}, 1}}));

    const Partition big({3});
    GLWeight g{{{1, 0, 0}, {}}};
    g.validate(big, 2);
    const auto q = j_lambda_multiply(JTriple{Ds[0], Ds[0], g}, JTriple{Ds[0], Ds[0], g});
    EXPECT_EQ(q.size(), 2u);
    EXPECT_THROW(j_lambda_multiply(JTriple{Ds[0], Ds[0], g}, a), Error);
    EXPECT_THROW(GLWeight({{{1, 0}}}).validate(lam, 2), Error);
}
