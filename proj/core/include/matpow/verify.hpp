#pragma once

#include <vector>

#include "matpow/closed_form.hpp"
#include "matpow/matrix.hpp"

namespace matpow {

/// Per-power comparison of the closed form against direct multiplication.
struct VerificationReport {
    struct Line {
        long long n = 0;
        double max_err = 0.0;    // max |evaluate - oracle| over entries
        double tolerance = 0.0;  // 1e-6 * (1 + ||M^n||_F)
        bool pass = true;
    };

    std::vector<Line> lines;
    double max_err = 0.0;
    bool pass = true;
};

/// Checks evaluate(cf, n) against the repeated-squaring oracle for every n
/// in [n_lo, n_hi]; negative powers compare against powers of the LU
/// inverse. Requires n_lo <= n_hi, and n_lo >= 1 when m is singular.
VerificationReport run_verify(const Matrix& m, const ClosedForm& cf, long long n_lo,
                              long long n_hi);

}  // namespace matpow
