#pragma once

#include <vector>

#include "matpow/eigen.hpp"
#include "matpow/matrix.hpp"

namespace matpow {

/// Clustering radius is max(absolute, relative * scale) where scale is the
/// Frobenius norm of the source matrix.
struct ClusterConfig {
    double absolute = 1e-10;
    double relative = 1e-8;
};

/// One unique eigenvalue with its algebraic multiplicity.
struct EigenvalueGroup {
    Complex lambda;            // cluster representative
    int multiplicity = 0;      // equals members.size()
    std::vector<Complex> members;
};

struct Spectrum {
    int dim = 0;
    std::vector<EigenvalueGroup> groups;
    bool is_singular = false;  // some group has lambda exactly zero

    int group_count() const { return static_cast<int>(groups.size()); }
};

/// Partitions raw eigenvalues into multiplicity groups.
///
/// Values are sorted by (Re, Im), adjacent values within the radius are
/// merged (single linkage), and group representatives -- arithmetic means of
/// their members -- are pairwise-merged until stable. Representatives with
/// magnitude below the radius snap to exactly zero. When the source matrix
/// is real, groups are paired by conjugation so the spectrum is exactly
/// conjugate-closed. Groups come out sorted by descending magnitude, then
/// ascending phase.
Spectrum cluster(const RawSpectrum& raw, double scale, const ClusterConfig& cfg = {},
                 bool source_is_real = false);

/// Builds a spectrum from explicitly supplied groups (a known spectrum
/// bypassing the eigensolver). Group order is preserved. Missing member
/// lists are filled with the representative. Throws std::invalid_argument
/// when multiplicities do not sum to dim.
Spectrum make_spectrum(std::vector<EigenvalueGroup> groups, int dim);

}  // namespace matpow
