#pragma once

#include <random>
#include <vector>

#include "matpow/matrix.hpp"

namespace testsupport {

using matpow::Complex;
using matpow::Matrix;

// 6x6 integer matrix with eigenvalue multiset {-3, 2, 2, 1, 1, 1}; entry
// (2,5) of its n-th power for n = 1..6 is 59, 229, 764, 1915, 5270, 11377.
inline Matrix spectral_demo_6x6() {
    return Matrix{{66, 83, 95, 31, -50, -63},   {-71, -79, -86, -22, 59, 72},
                  {83, 74, 69, 4, -77, -90},    {-74, -50, -34, 16, 77, 86},
                  {-7, -31, -47, -32, -12, -5}, {65, 89, 105, 41, -40, -56}};
}

inline Matrix random_real_matrix(std::mt19937& rng, int dim, double lo = -1.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = Complex{u(rng), 0.0};
    }
    return m;
}

inline Matrix random_complex_matrix(std::mt19937& rng, int dim) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) m(i, j) = Complex{u(rng), u(rng)};
    }
    return m;
}

// Greedy nearest matching of two multisets of complex values.
inline bool multiset_matches(const std::vector<Complex>& a, const std::vector<Complex>& b,
                             double tol) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (const Complex& va : a) {
        double best = tol;
        std::size_t best_j = b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(va - b[j]);
            if (d <= best) {
                best = d;
                best_j = j;
            }
        }
        if (best_j == b.size()) return false;
        used[best_j] = true;
    }
    return true;
}

}  // namespace testsupport
