#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matpow {

/// Base class for all matpow failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// LU-backed solve was asked to run on a factorization flagged singular.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Inversion of a (numerically) singular matrix.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A computation produced a non-finite value.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// 0^e with e < 0 requested while the binomial factor is nonzero.
class ZeroToNegativePower : public Error {
public:
    using Error::Error;
};

/// evaluate(cf, n) with n <= 0 on a spectrum containing a zero eigenvalue.
class SingularNegativePower : public Error {
public:
    using Error::Error;
};

/// A real-sourced closed form produced an imaginary part above tolerance.
class RealnessViolation : public Error {
public:
    using Error::Error;
};

/// QR iteration exhausted its sweep budget; carries the partial spectrum.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& msg, std::vector<std::complex<double>> partial,
                  int iterations)
        : Error(msg), partial_values(std::move(partial)), iterations_used(iterations) {}

    std::vector<std::complex<double>> partial_values;
    int iterations_used;
};

/// Malformed textual input; line/column are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}

    int line;
    int column;
};

/// Parsed matrix has unequal row/column counts.
class NonSquare : public Error {
public:
    using Error::Error;
};

}  // namespace matpow
