#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "matpow/eigen.hpp"
#include "matpow/lu.hpp"
#include "support/fixtures.hpp"

using namespace matpow;
using testsupport::multiset_matches;
using testsupport::random_real_matrix;
using testsupport::spectral_demo_6x6;

TEST_CASE("hessenberg_reduce leaves Hessenberg input unchanged") {
    const Matrix h{{1, 2, 3}, {4, 5, 6}, {0, 7, 8}};
    CHECK(max_abs(hessenberg_reduce(h) - h) == 0.0);

    const Matrix diag{{5, 0, 0}, {0, -1, 0}, {0, 0, 3}};
    CHECK(max_abs(hessenberg_reduce(diag) - diag) == 0.0);
}

TEST_CASE("hessenberg_reduce zeroes below the subdiagonal and keeps the trace") {
    std::mt19937 rng(101);
    const Matrix a = random_real_matrix(rng, 5);
    const Matrix h = hessenberg_reduce(a);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j + 1 < i; ++j) CHECK(h(i, j) == Complex{0, 0});
    }
    CHECK(std::abs(trace(h) - trace(a)) <= 1e-10);
}

TEST_CASE("eigenvalues of the 6x6 demo matrix") {
    const RawSpectrum raw = eigenvalues(spectral_demo_6x6());
    CHECK(raw.converged);
    const std::vector<Complex> expected{{-3, 0}, {2, 0}, {2, 0}, {1, 0}, {1, 0}, {1, 0}};
    CHECK(multiset_matches(raw.values, expected, 1e-5));
}

TEST_CASE("eigenvalues of a diagonal matrix") {
    const RawSpectrum raw = eigenvalues(Matrix{{5, 0, 0}, {0, -1, 0}, {0, 0, 0}});
    CHECK(multiset_matches(raw.values, {{5, 0}, {-1, 0}, {0, 0}}, 1e-12));
}

TEST_CASE("eigenvalues of a rotation generator are +/- i") {
    const RawSpectrum raw = eigenvalues(Matrix{{0, -1}, {1, 0}});
    CHECK(multiset_matches(raw.values, {{0, 1}, {0, -1}}, 1e-12));
}

TEST_CASE("eigenvalue sum equals the trace") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 8);
        const Matrix a = random_real_matrix(rng, dim);
        const RawSpectrum raw = eigenvalues(a);
        Complex sum{0, 0};
        for (const auto& v : raw.values) sum += v;
        CHECK(std::abs(sum - trace(a)) <= 1e-8 * (1.0 + frobenius_norm(a)));
    }
}

TEST_CASE("eigenvalue product equals the determinant") {
    std::mt19937 rng(121);
    int tested = 0;
    for (int trial = 0; trial < 40 && tested < 15; ++trial) {
        const int dim = 1 + static_cast<int>(rng() % 8);
        const Matrix a = random_real_matrix(rng, dim);
        const Complex det = determinant(a);
        if (std::abs(det) < 1e-3) continue;  // keep the relative comparison meaningful
        ++tested;
        Complex prod{1, 0};
        for (const auto& v : eigenvalues(a).values) prod *= v;
        CHECK(std::abs(prod - det) <= 1e-6 * std::abs(det));
    }
    CHECK(tested >= 10);
}

TEST_CASE("eigenvalues are invariant under permutation similarity") {
    std::mt19937 rng(131);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 6);
        const Matrix a = random_real_matrix(rng, dim);

        std::vector<int> p(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) p[static_cast<std::size_t>(i)] = i;
        std::shuffle(p.begin(), p.end(), rng);
        Matrix permuted(dim);  // (P A P^-1)(i,j) = A(p(i), p(j))
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                permuted(i, j) = a(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            }
        }
        CHECK(multiset_matches(eigenvalues(a).values, eigenvalues(permuted).values, 1e-6));
    }
}

TEST_CASE("real input spectra are closed under conjugation") {
    std::mt19937 rng(141);
    for (int trial = 0; trial < 15; ++trial) {
        const int dim = 2 + static_cast<int>(rng() % 7);
        const RawSpectrum raw = eigenvalues(random_real_matrix(rng, dim));
        std::vector<Complex> conjugated;
        conjugated.reserve(raw.values.size());
        for (const auto& v : raw.values) conjugated.push_back(std::conj(v));
        CHECK(multiset_matches(raw.values, conjugated, 1e-8));
    }
}

TEST_CASE("sweep budget is enforced") {
    CHECK_THROWS_AS(eigenvalues(spectral_demo_6x6(), EigenConfig{1, true}), NoConvergence);
    try {
        eigenvalues(spectral_demo_6x6(), EigenConfig{1, true});
    } catch (const NoConvergence& e) {
        CHECK(e.partial_values.size() == 6);
        CHECK(e.iterations_used >= 1);
    }
    CHECK_THROWS_AS(eigenvalues(spectral_demo_6x6(), EigenConfig{-2, true}),
                    std::invalid_argument);
}

TEST_CASE("balancing can be disabled") {
    const RawSpectrum raw = eigenvalues(spectral_demo_6x6(), EigenConfig{0, false});
    const std::vector<Complex> expected{{-3, 0}, {2, 0}, {2, 0}, {1, 0}, {1, 0}, {1, 0}};
    CHECK(multiset_matches(raw.values, expected, 1e-5));
}
