#include "matpow/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace matpow {

namespace {

Complex mean_of(const std::vector<Complex>& vs) {
    Complex s{0.0, 0.0};
    for (const auto& v : vs) s += v;
    return s / static_cast<double>(vs.size());
}

struct Cluster {
    Complex rep;
    std::vector<Complex> members;

    void absorb(Cluster& other) {
        members.insert(members.end(), other.members.begin(), other.members.end());
        rep = mean_of(members);
    }
};

}  // namespace

Spectrum cluster(const RawSpectrum& raw, double scale, const ClusterConfig& cfg,
                 bool source_is_real) {
    if (!raw.converged) throw std::invalid_argument("cluster requires a converged spectrum");
    if (raw.values.empty()) throw std::invalid_argument("cluster requires a nonempty spectrum");
    const double radius = std::max(cfg.absolute, cfg.relative * scale);

    std::vector<Complex> values = raw.values;
    std::sort(values.begin(), values.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    // Single-linkage pass over the sorted values.
    std::vector<Cluster> clusters;
    for (const Complex& v : values) {
        if (!clusters.empty() && std::abs(v - clusters.back().members.back()) <= radius) {
            clusters.back().members.push_back(v);
            clusters.back().rep = mean_of(clusters.back().members);
        } else {
            clusters.push_back(Cluster{v, {v}});
        }
    }

    // Merge representatives until every pair is separated by more than the
    // radius. Sorting above makes the outcome input-order independent.
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < clusters.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                if (std::abs(clusters[i].rep - clusters[j].rep) <= radius) {
                    clusters[i].absorb(clusters[j]);
                    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }

    // Snap near-zero representatives to exactly zero, coalescing duplicates.
    std::vector<Cluster> snapped;
    int zero_index = -1;
    for (auto& c : clusters) {
        if (std::abs(c.rep) < radius) {
            c.rep = Complex{0.0, 0.0};
            if (zero_index < 0) {
                zero_index = static_cast<int>(snapped.size());
                snapped.push_back(std::move(c));
            } else {
                auto& z = snapped[static_cast<std::size_t>(zero_index)];
                z.members.insert(z.members.end(), c.members.begin(), c.members.end());
            }
        } else {
            snapped.push_back(std::move(c));
        }
    }
    clusters = std::move(snapped);

    if (source_is_real) {
        // A real matrix has a conjugate-closed spectrum; repair round-off.
        for (auto& c : clusters) {
            if (c.rep.imag() != 0.0 && std::abs(c.rep.imag()) < radius) {
                c.rep = Complex{c.rep.real(), 0.0};
            }
        }
        std::vector<bool> paired(clusters.size(), false);
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (paired[i] || clusters[i].rep.imag() <= 0.0) continue;
            std::size_t best = clusters.size();
            double best_dist = 2.0 * radius;
            for (std::size_t j = 0; j < clusters.size(); ++j) {
                if (paired[j] || clusters[j].rep.imag() >= 0.0) continue;
                if (clusters[j].members.size() != clusters[i].members.size()) continue;
                const double d = std::abs(std::conj(clusters[i].rep) - clusters[j].rep);
                if (d <= best_dist) {
                    best_dist = d;
                    best = j;
                }
            }
            if (best < clusters.size()) {
                const Complex m = (clusters[i].rep + std::conj(clusters[best].rep)) * 0.5;
                clusters[i].rep = m;
                clusters[best].rep = std::conj(m);
                paired[i] = paired[best] = true;
            }
        }
    }

    std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
        const double ma = std::abs(a.rep);
        const double mb = std::abs(b.rep);
        if (ma != mb) return ma > mb;
        return std::arg(a.rep) < std::arg(b.rep);
    });

    Spectrum spec;
    spec.dim = static_cast<int>(raw.values.size());
    for (auto& c : clusters) {
        EigenvalueGroup g;
        g.lambda = c.rep;
        g.multiplicity = static_cast<int>(c.members.size());
        g.members = std::move(c.members);
        if (g.lambda == Complex{0.0, 0.0}) spec.is_singular = true;
        spec.groups.push_back(std::move(g));
    }
    return spec;
}

Spectrum make_spectrum(std::vector<EigenvalueGroup> groups, int dim) {
    if (dim < 1) throw std::invalid_argument("spectrum dimension must be >= 1");
    int total = 0;
    Spectrum spec;
    spec.dim = dim;
    for (auto& g : groups) {
        if (g.multiplicity < 1) throw std::invalid_argument("group multiplicity must be >= 1");
        if (!std::isfinite(g.lambda.real()) || !std::isfinite(g.lambda.imag())) {
            throw std::invalid_argument("eigenvalue must be finite");
        }
        if (g.members.empty()) {
            g.members.assign(static_cast<std::size_t>(g.multiplicity), g.lambda);
        } else if (static_cast<int>(g.members.size()) != g.multiplicity) {
            throw std::invalid_argument("member count does not match multiplicity");
        }
        total += g.multiplicity;
        if (g.lambda == Complex{0.0, 0.0}) spec.is_singular = true;
    }
    if (total != dim) {
        throw std::invalid_argument("multiplicities sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(dim));
    }
    spec.groups = std::move(groups);
    return spec;
}

}  // namespace matpow
