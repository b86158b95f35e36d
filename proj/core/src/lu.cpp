#include "matpow/lu.hpp"

#include <cmath>
#include <numeric>

namespace matpow {

LuFactorization lu_factor(const Matrix& a) {
    const int n = a.dim();
    LuFactorization f;
    f.dim = n;
    f.lu = a.entries();
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);

    auto at = [&f, n](int i, int j) -> Complex& { return f.lu[static_cast<std::size_t>(i) * n + j]; };

    for (int k = 0; k < n; ++k) {
        int pivot_row = k;
        double pivot_mag = std::abs(at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(at(i, k));
            if (m > pivot_mag) {
                pivot_mag = m;
                pivot_row = i;
            }
        }
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot_row, j));
            std::swap(f.perm[k], f.perm[pivot_row]);
            ++f.swap_count;
        }
        if (pivot_mag == 0.0) continue;  // column already eliminated; U(k,k) stays 0
        const Complex pivot = at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex mult = at(i, k) / pivot;
            at(i, k) = mult;
            if (mult == Complex{0.0, 0.0}) continue;
            for (int j = k + 1; j < n; ++j) at(i, j) -= mult * at(k, j);
        }
    }

    f.max_pivot = 0.0;
    f.min_pivot = std::abs(at(0, 0));
    for (int k = 0; k < n; ++k) {
        const double m = std::abs(at(k, k));
        f.max_pivot = std::max(f.max_pivot, m);
        f.min_pivot = std::min(f.min_pivot, m);
    }
    f.singular = f.min_pivot < kSingularRelTol * std::max(1.0, f.max_pivot);
    return f;
}

std::vector<Complex> lu_solve(const LuFactorization& f, std::span<const Complex> rhs) {
    if (f.singular) throw SingularSystem("matrix is singular to working precision");
    const int n = f.dim;
    if (static_cast<int>(rhs.size()) != n) {
        throw DimensionMismatch("right-hand side length does not match factorization");
    }
    auto at = [&f, n](int i, int j) -> const Complex& {
        return f.lu[static_cast<std::size_t>(i) * n + j];
    };

    std::vector<Complex> x(n);
    for (int i = 0; i < n; ++i) {  // forward: L y = P rhs
        Complex s = rhs[f.perm[i]];
        for (int j = 0; j < i; ++j) s -= at(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {  // back: U x = y
        Complex s = x[i];
        for (int j = i + 1; j < n; ++j) s -= at(i, j) * x[j];
        x[i] = s / at(i, i);
    }
    return x;
}

Matrix inverse(const Matrix& a) {
    const LuFactorization f = lu_factor(a);
    if (f.singular) throw SingularMatrix("matrix is singular");
    const int n = a.dim();
    Matrix inv(n);
    std::vector<Complex> e(n, Complex{0.0, 0.0});
    for (int j = 0; j < n; ++j) {
        e[j] = Complex{1.0, 0.0};
        const std::vector<Complex> col = lu_solve(f, e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
        e[j] = Complex{0.0, 0.0};
    }
    const double residual = frobenius_norm(mat_mul(a, inv) - Matrix::identity(n));
    if (!(residual <= kInverseTolPerDim * n)) {
        throw SingularMatrix("matrix is numerically singular (inverse residual " +
                             std::to_string(residual) + ")");
    }
    return inv;
}

Complex determinant(const Matrix& a) {
    const LuFactorization f = lu_factor(a);
    Complex det{(f.swap_count % 2 == 0) ? 1.0 : -1.0, 0.0};
    for (int k = 0; k < f.dim; ++k) det *= f.lu[static_cast<std::size_t>(k) * f.dim + k];
    return det;
}

}  // namespace matpow
