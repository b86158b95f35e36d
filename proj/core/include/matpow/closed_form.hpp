#pragma once

#include <string>
#include <vector>

#include "matpow/matrix.hpp"
#include "matpow/spectrum.hpp"

namespace matpow {

/// Condition estimates above this attach an ill-conditioning warning.
inline constexpr double kIllConditionedThreshold = 1e12;

/// Imaginary residue allowed when stripping a real-sourced result,
/// per unit of the |lambda|_max^n magnitude scale.
inline constexpr double kRealnessTol = 1e-7;

/// The function n -> C(n-1, k-1) * lambda^(n-k); k is 1-based within its
/// eigenvalue group and at most the group multiplicity.
struct BasisFunction {
    Complex lambda;
    int k = 1;
};

/// C(top, bottom) extended to negative top by the falling factorial
/// top * (top-1) * ... * (top-bottom+1) / bottom!. Zero when
/// 0 <= top < bottom.
double generalized_binomial(long long top, int bottom);

/// z^e for integer e by repeated squaring; z must be nonzero when e < 0.
Complex complex_ipow(Complex z, long long e);

/// Evaluates the basis function at any integer n. The binomial factor is
/// checked first; when it vanishes the power of lambda is never formed.
/// For lambda == 0 the conventions are 0^0 = 1 and 0^e = 0 for e > 0;
/// 0^e with e < 0 throws ZeroToNegativePower.
Complex basis_eval(const BasisFunction& b, long long n);

/// M^1 .. M^dim by incremental multiplication.
struct PowerSamples {
    int dim = 0;
    std::vector<Matrix> samples;  // samples[t] = M^(t+1)
};

/// Throws OverflowError if an entry becomes non-finite.
PowerSamples power_samples(const Matrix& m);

/// The N x N collocation matrix V with V(n-1, col) = basis_eval(col, n) for
/// n = 1..N, columns enumerating (group, k) pairs in spectrum order. This is
/// a confluent-Vandermonde-type matrix with binomial-weighted columns.
Matrix build_system_matrix(const Spectrum& spec);

/// The derived representation: per eigenvalue group g a stack of
/// multiplicity-many coefficient matrices C[g][k-1], with
/// (M^n)(i,j) = sum over g, k of C(n-1,k-1) * lambda_g^(n-k) * C[g][k-1](i,j).
struct ClosedForm {
    int dim = 0;
    Spectrum spectrum;
    std::vector<std::vector<Matrix>> coefficients;  // [group][k-1], each dim x dim
    bool source_is_real = false;
    double residual = 0.0;            // max entry mismatch re-evaluating n = 1..dim
    double condition_estimate = 0.0;  // LU pivot-magnitude ratio of the system matrix
    ClusterConfig tolerances;         // clustering tolerances in effect when derived

    bool ill_conditioned() const { return condition_estimate > kIllConditionedThreshold; }
};

/// Solves the collocation system: one LU factorization of the system matrix,
/// reused for all dim^2 right-hand sides (the per-entry power sample
/// sequences). Throws SingularSystem when the system matrix is singular,
/// which indicates a clustering failure.
ClosedForm solve_coefficients(const Matrix& m, const Spectrum& spec);

/// eigenvalues -> cluster -> solve_coefficients in one call.
ClosedForm derive_closed_form(const Matrix& m, const EigenConfig& eig_cfg = {},
                              const ClusterConfig& cluster_cfg = {});

/// M^n for any integer n (n >= 1 only when the spectrum is singular).
/// Real-sourced results have their imaginary round-off stripped; an
/// imaginary part above tolerance throws RealnessViolation.
Matrix evaluate(const ClosedForm& cf, long long n);

/// Single-entry version of evaluate, O(dim) work; i, j are 1-based.
Complex evaluate_entry(const ClosedForm& cf, int i, int j, long long n);

struct FormatOptions {
    double drop_tol = 1e-8;  // terms with |coefficient| below this are omitted
    bool unicode = false;    // superscript powers and stacked binomials
};

/// Renders the formula for entry (i, j) (1-based), one term per nonzero
/// coefficient in spectrum order then k. Coefficients display as integers
/// when within 1e-6 of one (display only, stored values untouched).
std::string format_formula(const ClosedForm& cf, int i, int j, const FormatOptions& opts = {});

}  // namespace matpow
