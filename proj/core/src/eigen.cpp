#include "matpow/eigen.hpp"

#include <cmath>

namespace matpow {

namespace {

constexpr double kDeflationRelTol = 1e-14;
constexpr int kStagnantSweepsPerExceptionalShift = 10;
constexpr int kDefaultSweepsPerDim = 40;

// Diagonal similarity scaling with power-of-two factors so that row and
// column norms of each index are comparable (Parlett-Reinsch).
void balance_in_place(Matrix& a) {
    const int n = a.dim();
    const double radix = 2.0;
    const double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(a(i, j));
                c += std::abs(a(j, i));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double fac = 1.0;
            const double s = c + r;
            while (c < g) {
                fac *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                fac /= radix;
                c /= sqrdx;
            }
            if ((c + r) / fac < 0.95 * s) {
                done = false;
                const double inv = 1.0 / fac;
                for (int j = 0; j < n; ++j) a(i, j) *= inv;
                for (int j = 0; j < n; ++j) a(j, i) *= fac;
            }
        }
    }
}

// Scaled 2-norm of the part of column k strictly below row `from`.
double column_tail_norm(const Matrix& h, int k, int from, double& amax) {
    const int n = h.dim();
    amax = 0.0;
    for (int i = from; i < n; ++i) amax = std::max(amax, std::abs(h(i, k)));
    if (amax == 0.0) return 0.0;
    double sum = 0.0;
    for (int i = from; i < n; ++i) {
        const double t = std::abs(h(i, k)) / amax;
        sum += t * t;
    }
    return amax * std::sqrt(sum);
}

// Complex Givens rotation [c, s; -conj(s), c] with real c zeroing g.
void make_givens(const Complex& f, const Complex& g, double& c, Complex& s, Complex& r) {
    const double fa = std::abs(f);
    const double ga = std::abs(g);
    if (ga == 0.0) {
        c = 1.0;
        s = Complex{0.0, 0.0};
        r = f;
        return;
    }
    if (fa == 0.0) {
        c = 0.0;
        s = std::conj(g) / ga;
        r = Complex{ga, 0.0};
        return;
    }
    const double d = std::hypot(fa, ga);
    const Complex fs = f / fa;
    c = fa / d;
    s = fs * std::conj(g) / d;
    r = fs * d;
}

// Eigenvalues of [[a, b], [c, d]] via the stable quadratic formula.
void eig_2x2(const Complex& a, const Complex& b, const Complex& c, const Complex& d,
             Complex& l1, Complex& l2) {
    const Complex mu = (a + d) * 0.5;
    const Complex det = a * d - b * c;
    const Complex rad = std::sqrt(mu * mu - det);
    const Complex z = (std::abs(mu + rad) >= std::abs(mu - rad)) ? mu + rad : mu - rad;
    if (z == Complex{0.0, 0.0}) {
        l1 = mu;
        l2 = mu;
        return;
    }
    l1 = z;
    l2 = det / z;
}

}  // namespace

Matrix hessenberg_reduce(const Matrix& a) {
    const int n = a.dim();
    Matrix h = a;
    std::vector<Complex> v(n);

    for (int k = 0; k + 2 < n; ++k) {
        // Nothing to annihilate below the subdiagonal: leave the column as is.
        double below = 0.0;
        for (int i = k + 2; i < n; ++i) below += std::abs(h(i, k));
        if (below == 0.0) continue;

        double amax = 0.0;
        const double norm = column_tail_norm(h, k, k + 1, amax);
        const Complex x0 = h(k + 1, k);
        const Complex phase = (std::abs(x0) == 0.0) ? Complex{1.0, 0.0} : x0 / std::abs(x0);
        const Complex alpha = -phase * norm;

        double vnorm2 = 0.0;
        v[k + 1] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) v[i] = h(i, k);
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // H <- P H with P = I - beta v v^H (rows k+1..n-1)
        for (int j = k; j < n; ++j) {
            Complex dot{0.0, 0.0};
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
            dot *= beta;
            for (int i = k + 1; i < n; ++i) h(i, j) -= dot * v[i];
        }
        // H <- H P (columns k+1..n-1)
        for (int i = 0; i < n; ++i) {
            Complex dot{0.0, 0.0};
            for (int j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
            dot *= beta;
            for (int j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(v[j]);
        }

        h(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) h(i, k) = Complex{0.0, 0.0};
    }
    return h;
}

RawSpectrum eigenvalues(const Matrix& a, const EigenConfig& cfg) {
    if (cfg.max_sweeps < 0) throw std::invalid_argument("max_sweeps must be >= 1 (0 = default)");
    const int n = a.dim();
    const int budget = cfg.max_sweeps > 0 ? cfg.max_sweeps : kDefaultSweepsPerDim * n;

    Matrix work = a;
    if (cfg.balance) balance_in_place(work);
    Matrix h = hessenberg_reduce(work);

    RawSpectrum out;
    out.values.assign(n, Complex{0.0, 0.0});

    std::vector<double> cs(n);
    std::vector<Complex> sn(n);

    int hi = n - 1;
    int sweeps = 0;
    int stagnant = 0;
    while (hi >= 0) {
        if (hi == 0) {
            out.values[0] = h(0, 0);
            break;
        }

        // Deflation scan from the bottom of the active block.
        int lo = hi;
        while (lo > 0) {
            const double eps = kDeflationRelTol * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)));
            if (std::abs(h(lo, lo - 1)) <= eps) {
                h(lo, lo - 1) = Complex{0.0, 0.0};
                break;
            }
            --lo;
        }

        if (lo == hi) {  // 1x1 block converged
            out.values[hi] = h(hi, hi);
            --hi;
            stagnant = 0;
            continue;
        }
        if (lo == hi - 1) {  // 2x2 block: solve its quadratic directly
            eig_2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi), out.values[hi], out.values[hi - 1]);
            hi -= 2;
            stagnant = 0;
            continue;
        }

        if (sweeps >= budget) {
            for (int i = 0; i <= hi; ++i) out.values[i] = h(i, i);
            out.iterations_used = sweeps;
            out.converged = false;
            throw NoConvergence("QR iteration did not converge within " + std::to_string(budget) +
                                    " sweeps",
                                out.values, sweeps);
        }
        ++sweeps;
        ++stagnant;

        Complex shift;
        if (stagnant % kStagnantSweepsPerExceptionalShift == 0) {
            // Ad-hoc perturbation to break shift cycling on a stubborn block.
            double ts = std::abs(h(hi, hi - 1));
            if (hi - 2 >= lo) ts += std::abs(h(hi - 1, hi - 2));
            shift = h(hi, hi) + Complex{ts, 0.0};
        } else {
            Complex l1, l2;
            eig_2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi), l1, l2);
            shift = (std::abs(l1 - h(hi, hi)) <= std::abs(l2 - h(hi, hi))) ? l1 : l2;
        }

        // Explicit shifted QR sweep on the decoupled block [lo, hi]:
        // H - shift = Q R, then H <- R Q + shift. Only eigenvalues are
        // needed, so the transform is never accumulated.
        for (int i = lo; i <= hi; ++i) h(i, i) -= shift;
        for (int k = lo; k < hi; ++k) {
            Complex r;
            make_givens(h(k, k), h(k + 1, k), cs[k], sn[k], r);
            h(k, k) = r;
            h(k + 1, k) = Complex{0.0, 0.0};
            for (int j = k + 1; j <= hi; ++j) {
                const Complex t1 = h(k, j);
                const Complex t2 = h(k + 1, j);
                h(k, j) = cs[k] * t1 + sn[k] * t2;
                h(k + 1, j) = -std::conj(sn[k]) * t1 + cs[k] * t2;
            }
        }
        for (int k = lo; k < hi; ++k) {
            const int last = std::min(k + 1, hi);
            for (int i = lo; i <= last; ++i) {
                const Complex t1 = h(i, k);
                const Complex t2 = h(i, k + 1);
                h(i, k) = cs[k] * t1 + std::conj(sn[k]) * t2;
                h(i, k + 1) = -sn[k] * t1 + cs[k] * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += shift;
    }

    out.iterations_used = sweeps;
    out.converged = true;
    return out;
}

}  // namespace matpow
