#include "matpow/matrix.hpp"

#include <cmath>
#include <utility>

namespace matpow {

namespace {

bool finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void require_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
}

void require_same_dim(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
}

}  // namespace

Matrix::Matrix(int dim) : dim_(dim) {
    require_dim(dim);
    entries_.assign(static_cast<std::size_t>(dim) * dim, Complex{0.0, 0.0});
}

Matrix::Matrix(int dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
    require_dim(dim);
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw std::invalid_argument("entry count does not match dimension");
    }
    if (!all_finite()) throw std::invalid_argument("matrix entries must be finite");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    dim_ = static_cast<int>(rows.size());
    require_dim(dim_);
    entries_.reserve(static_cast<std::size_t>(dim_) * dim_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_) {
            throw std::invalid_argument("row length does not match row count");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite()) throw std::invalid_argument("matrix entries must be finite");
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

bool Matrix::is_real() const {
    for (const auto& z : entries_) {
        if (z.imag() != 0.0) return false;
    }
    return true;
}

bool Matrix::all_finite() const {
    for (const auto& z : entries_) {
        if (!finite(z)) return false;
    }
    return true;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_dim(*this, rhs);
    Matrix out(dim_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] + rhs.entries_[t];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_dim(*this, rhs);
    Matrix out(dim_);
    for (std::size_t t = 0; t < entries_.size(); ++t) out.entries_[t] = entries_[t] - rhs.entries_[t];
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += rhs.entries_[t];
    return *this;
}

Matrix Matrix::operator*(const Matrix& rhs) const { return mat_mul(*this, rhs); }

Matrix operator*(const Complex& s, const Matrix& m) {
    Matrix out(m.dim());
    for (std::size_t t = 0; t < m.entries_.size(); ++t) out.entries_[t] = s * m.entries_[t];
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b);
    const int n = a.dim();
    Matrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix mat_pow(const Matrix& a, long long n) {
    if (n < 0) throw std::invalid_argument("mat_pow requires n >= 0");
    Matrix result = Matrix::identity(a.dim());
    Matrix base = a;
    bool accumulated = false;
    while (n > 0) {
        if (n & 1) {
            result = accumulated ? mat_mul(result, base) : base;
            accumulated = true;
        }
        n >>= 1;
        if (n > 0) base = mat_mul(base, base);
    }
    return result;
}

int mat_pow_mul_count(long long n) {
    int count = 0;
    bool accumulated = false;
    while (n > 0) {
        if (n & 1) {
            if (accumulated) ++count;
            accumulated = true;
        }
        n >>= 1;
        if (n > 0) ++count;
    }
    return count;
}

double frobenius_norm(const Matrix& a) {
    double sum = 0.0;
    for (const auto& z : a.entries()) sum += std::norm(z);
    return std::sqrt(sum);
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

Complex trace(const Matrix& a) {
    Complex t{0.0, 0.0};
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

}  // namespace matpow
