#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "matpow/errors.hpp"

namespace matpow {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
///
/// Entries are validated to be finite when a matrix is constructed from
/// data; element access through operator() is unchecked.
class Matrix {
public:
    Matrix() = default;

    /// Zero matrix of the given dimension (dim >= 1).
    explicit Matrix(int dim);

    /// Takes ownership of row-major entries; rejects non-finite values.
    Matrix(int dim, std::vector<Complex> entries);

    /// Row-list constructor, mostly for tests and small fixtures.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * dim_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * dim_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    /// True when every imaginary part is exactly zero.
    bool is_real() const;

    bool all_finite() const;

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix& operator+=(const Matrix& rhs);

    friend Matrix operator*(const Complex& s, const Matrix& m);

private:
    int dim_ = 0;
    std::vector<Complex> entries_;
};

/// Standard matrix product; throws DimensionMismatch on unequal dims.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// a^n for n >= 0 by repeated squaring; a^0 is the identity.
Matrix mat_pow(const Matrix& a, long long n);

/// Number of matrix products mat_pow performs for exponent n.
int mat_pow_mul_count(long long n);

double frobenius_norm(const Matrix& a);

/// Largest entry magnitude.
double max_abs(const Matrix& a);

Complex trace(const Matrix& a);

}  // namespace matpow
