#pragma once

#include <random>
#include <utility>
#include <vector>

#include "cellkit/periodic_matrix.hpp"
#include "cellkit/schur.hpp"

namespace cellkit::checks {

/// A random element of S_{D,n,n}: D units scattered over rows 1..n and columns within +-spread of the row.
inline PeriodicMatrix random_matrix(std::mt19937& rng, int D, int n, int spread) {
    std::uniform_int_distribution<int> row(1, n), off(-spread, spread);
    std::vector<PeriodicMatrix::Entry> es;
    for (int k = 0; k < D; ++k) {
        const int r = row(rng);
        es.push_back({r, r + off(rng), 1});
    }
    return PeriodicMatrix(D, n, es);
}

/// Rejection-sampled pair with c(A) = r(B).
inline std::pair<PeriodicMatrix, PeriodicMatrix> random_pair(std::mt19937& rng, int D, int n, int spread) {
    while (true) {
        auto A = random_matrix(rng, D, n, spread);
        auto B = random_matrix(rng, D, n, spread);
        if (A.col_sums() == B.row_sums()) return {A, B};
    }
}

}  // namespace cellkit::checks
