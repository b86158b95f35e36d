#pragma once

#include <span>
#include <vector>

#include "matpow/matrix.hpp"

namespace matpow {

/// Relative pivot threshold: a factorization is flagged singular when some
/// pivot magnitude drops below kSingularRelTol * max(1, largest pivot).
inline constexpr double kSingularRelTol = 1e-13;

/// inverse() residual gate is kInverseTolPerDim * dim in Frobenius norm.
inline constexpr double kInverseTolPerDim = 1e-8;

/// PA = LU with partial pivoting, L unit lower triangular, packed in one grid.
struct LuFactorization {
    int dim = 0;
    std::vector<Complex> lu;  // row-major; L below diagonal, U on and above
    std::vector<int> perm;    // permuted row i of the input is original row perm[i]
    bool singular = false;
    int swap_count = 0;
    double max_pivot = 0.0;  // largest |U(k,k)|
    double min_pivot = 0.0;  // smallest |U(k,k)|
};

/// Factors any square matrix; singularity is reported in the flag, not thrown.
LuFactorization lu_factor(const Matrix& a);

/// Solves A x = rhs from the factorization; throws SingularSystem if flagged.
std::vector<Complex> lu_solve(const LuFactorization& f, std::span<const Complex> rhs);

/// Throws SingularMatrix when the factorization is flagged singular or the
/// inverse fails the A * inv(A) ~ I residual gate.
Matrix inverse(const Matrix& a);

Complex determinant(const Matrix& a);

}  // namespace matpow
