#pragma once

#include <vector>

#include "matpow/matrix.hpp"

namespace matpow {

struct EigenConfig {
    /// Total QR sweep budget; 0 selects the default of 40 * dim.
    int max_sweeps = 0;
    /// Diagonal similarity scaling before the Hessenberg reduction.
    bool balance = true;
};

/// Unclustered eigenvalues as they come out of the QR iteration.
struct RawSpectrum {
    std::vector<Complex> values;
    int iterations_used = 0;
    bool converged = false;
};

/// Unitary similarity reduction to upper Hessenberg form. Entries below the
/// first subdiagonal are set exactly to zero. An input that is already
/// Hessenberg passes through unchanged.
Matrix hessenberg_reduce(const Matrix& a);

/// All eigenvalues of a dense complex matrix: balancing (optional),
/// Householder Hessenberg reduction, then single-shift QR iteration with
/// Wilkinson shifts. Throws NoConvergence (with partial values) when the
/// sweep budget runs out. The returned values are unordered.
RawSpectrum eigenvalues(const Matrix& a, const EigenConfig& cfg = {});

}  // namespace matpow
