#include "matpow/verify.hpp"

#include <cmath>

#include "matpow/lu.hpp"

namespace matpow {

VerificationReport run_verify(const Matrix& m, const ClosedForm& cf, long long n_lo,
                              long long n_hi) {
    if (n_lo > n_hi) throw std::invalid_argument("verify range is empty (lo > hi)");
    if (cf.spectrum.is_singular && n_lo < 1) {
        throw SingularNegativePower("singular matrix: verify range must start at n >= 1");
    }

    VerificationReport report;
    Matrix inv(1);
    if (n_lo < 0) inv = inverse(m);  // oracle for negative powers

    for (long long n = n_lo; n <= n_hi; ++n) {
        const Matrix oracle = (n >= 0) ? mat_pow(m, n) : mat_pow(inv, -n);
        const Matrix got = evaluate(cf, n);
        VerificationReport::Line line;
        line.n = n;
        line.max_err = max_abs(got - oracle);
        line.tolerance = 1e-6 * (1.0 + frobenius_norm(oracle));
        line.pass = line.max_err <= line.tolerance;
        report.max_err = std::max(report.max_err, line.max_err);
        report.pass = report.pass && line.pass;
        report.lines.push_back(line);
    }
    return report;
}

}  // namespace matpow
