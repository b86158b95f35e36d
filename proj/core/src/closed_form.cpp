#include "matpow/closed_form.hpp"

#include <cmath>
#include <cstdio>

#include "matpow/lu.hpp"
#include "matpow/numfmt.hpp"

namespace matpow {

double generalized_binomial(long long top, int bottom) {
    if (bottom < 0) return 0.0;
    double num = 1.0;
    double den = 1.0;
    for (int t = 0; t < bottom; ++t) {
        num *= static_cast<double>(top - t);
        den *= static_cast<double>(t + 1);
    }
    return num / den;
}

Complex complex_ipow(Complex z, long long e) {
    if (e < 0) {
        z = Complex{1.0, 0.0} / z;
        e = -e;
    }
    Complex result{1.0, 0.0};
    while (e > 0) {
        if (e & 1) result *= z;
        e >>= 1;
        if (e > 0) z *= z;
    }
    return result;
}

Complex basis_eval(const BasisFunction& b, long long n) {
    const double binom = generalized_binomial(n - 1, b.k - 1);
    if (binom == 0.0) return Complex{0.0, 0.0};
    const long long e = n - b.k;
    if (b.lambda == Complex{0.0, 0.0}) {
        if (e == 0) return Complex{binom, 0.0};
        if (e > 0) return Complex{0.0, 0.0};
        throw ZeroToNegativePower("0^" + std::to_string(e) + " requested with nonzero binomial");
    }
    return binom * complex_ipow(b.lambda, e);
}

PowerSamples power_samples(const Matrix& m) {
    const int n = m.dim();
    PowerSamples ps;
    ps.dim = n;
    ps.samples.reserve(static_cast<std::size_t>(n));
    ps.samples.push_back(m);
    for (int t = 1; t < n; ++t) {
        ps.samples.push_back(mat_mul(ps.samples.back(), m));
        if (!ps.samples.back().all_finite()) {
            throw OverflowError("overflow while forming M^" + std::to_string(t + 1));
        }
    }
    return ps;
}

Matrix build_system_matrix(const Spectrum& spec) {
    int total = 0;
    for (const auto& g : spec.groups) total += g.multiplicity;
    if (total != spec.dim) throw std::invalid_argument("spectrum multiplicities do not sum to dim");

    Matrix v(spec.dim);
    int col = 0;
    for (const auto& g : spec.groups) {
        for (int k = 1; k <= g.multiplicity; ++k, ++col) {
            for (int n = 1; n <= spec.dim; ++n) {
                v(n - 1, col) = basis_eval(BasisFunction{g.lambda, k}, n);
            }
        }
    }
    return v;
}

namespace {

// Plain basis-weighted sum, no gates or realness stripping.
Matrix evaluate_raw(const ClosedForm& cf, long long n) {
    Matrix out(cf.dim);
    for (std::size_t g = 0; g < cf.spectrum.groups.size(); ++g) {
        const EigenvalueGroup& grp = cf.spectrum.groups[g];
        for (int k = 1; k <= grp.multiplicity; ++k) {
            const Complex w = basis_eval(BasisFunction{grp.lambda, k}, n);
            if (w == Complex{0.0, 0.0}) continue;
            out += w * cf.coefficients[g][static_cast<std::size_t>(k) - 1];
        }
    }
    return out;
}

double spectral_radius(const Spectrum& spec) {
    double rho = 0.0;
    for (const auto& g : spec.groups) rho = std::max(rho, std::abs(g.lambda));
    return rho;
}

// Magnitude scale of M^n for the realness tolerance: |lambda|_max^n.
double realness_scale(const ClosedForm& cf, long long n) {
    const double rho = spectral_radius(cf.spectrum);
    if (rho == 0.0) return 1.0;
    return std::max(1.0, std::pow(rho, static_cast<double>(n)));
}

}  // namespace

ClosedForm solve_coefficients(const Matrix& m, const Spectrum& spec) {
    if (spec.dim != m.dim()) {
        throw DimensionMismatch("spectrum dimension does not match the matrix");
    }
    const int n = m.dim();

    const PowerSamples ps = power_samples(m);
    const Matrix v = build_system_matrix(spec);
    const LuFactorization f = lu_factor(v);
    if (f.singular) {
        throw SingularSystem(
            "coefficient system is singular; the eigenvalue clustering is likely wrong");
    }

    ClosedForm cf;
    cf.dim = n;
    cf.spectrum = spec;
    cf.source_is_real = m.is_real();
    cf.condition_estimate = f.max_pivot / f.min_pivot;
    for (const auto& g : spec.groups) {
        cf.coefficients.emplace_back(static_cast<std::size_t>(g.multiplicity), Matrix(n));
    }

    // One factorization serves all n^2 entries; the right-hand side for
    // entry (i, j) is the sample sequence (M^1)_(i,j) .. (M^N)_(i,j).
    std::vector<Complex> rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int t = 0; t < n; ++t) rhs[static_cast<std::size_t>(t)] = ps.samples[t](i, j);
            const std::vector<Complex> x = lu_solve(f, rhs);
            int col = 0;
            for (std::size_t g = 0; g < cf.coefficients.size(); ++g) {
                for (auto& ck : cf.coefficients[g]) ck(i, j) = x[static_cast<std::size_t>(col++)];
            }
        }
    }

    cf.residual = 0.0;
    for (int p = 1; p <= n; ++p) {
        const Matrix diff = evaluate_raw(cf, p) - ps.samples[static_cast<std::size_t>(p) - 1];
        cf.residual = std::max(cf.residual, max_abs(diff));
    }
    return cf;
}

ClosedForm derive_closed_form(const Matrix& m, const EigenConfig& eig_cfg,
                              const ClusterConfig& cluster_cfg) {
    const RawSpectrum raw = eigenvalues(m, eig_cfg);
    const Spectrum spec = cluster(raw, frobenius_norm(m), cluster_cfg, m.is_real());
    ClosedForm cf = solve_coefficients(m, spec);
    cf.tolerances = cluster_cfg;
    return cf;
}

Matrix evaluate(const ClosedForm& cf, long long n) {
    if (cf.spectrum.is_singular && n <= 0) {
        throw SingularNegativePower("singular matrix: the closed form is valid for n >= 1 only");
    }
    Matrix out(cf.dim);
    for (std::size_t g = 0; g < cf.spectrum.groups.size(); ++g) {
        const EigenvalueGroup& grp = cf.spectrum.groups[g];
        for (int k = 1; k <= grp.multiplicity; ++k) {
            const Complex w = basis_eval(BasisFunction{grp.lambda, k}, n);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
                throw OverflowError("closed-form term overflow at n = " + std::to_string(n));
            }
            if (w == Complex{0.0, 0.0}) continue;
            out += w * cf.coefficients[g][static_cast<std::size_t>(k) - 1];
        }
    }
    if (!out.all_finite()) {
        throw OverflowError("closed-form evaluation overflow at n = " + std::to_string(n));
    }
    if (cf.source_is_real) {
        const double tol = kRealnessTol * realness_scale(cf, n);
        Matrix real_out(cf.dim);
        for (int i = 0; i < cf.dim; ++i) {
            for (int j = 0; j < cf.dim; ++j) {
                const Complex z = out(i, j);
                if (std::abs(z.imag()) > tol) {
                    throw RealnessViolation("imaginary residue " + format_double(z.imag(), 6) +
                                            " exceeds tolerance at n = " + std::to_string(n));
                }
                real_out(i, j) = Complex{z.real(), 0.0};
            }
        }
        return real_out;
    }
    return out;
}

Complex evaluate_entry(const ClosedForm& cf, int i, int j, long long n) {
    if (i < 1 || i > cf.dim || j < 1 || j > cf.dim) {
        throw std::out_of_range("entry index out of range (indices are 1-based)");
    }
    if (cf.spectrum.is_singular && n <= 0) {
        throw SingularNegativePower("singular matrix: the closed form is valid for n >= 1 only");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t g = 0; g < cf.spectrum.groups.size(); ++g) {
        const EigenvalueGroup& grp = cf.spectrum.groups[g];
        for (int k = 1; k <= grp.multiplicity; ++k) {
            const Complex w = basis_eval(BasisFunction{grp.lambda, k}, n);
            sum += w * cf.coefficients[g][static_cast<std::size_t>(k) - 1](i - 1, j - 1);
        }
    }
    if (!std::isfinite(sum.real()) || !std::isfinite(sum.imag())) {
        throw OverflowError("closed-form evaluation overflow at n = " + std::to_string(n));
    }
    if (cf.source_is_real) {
        const double tol = kRealnessTol * realness_scale(cf, n);
        if (std::abs(sum.imag()) > tol) {
            throw RealnessViolation("imaginary residue exceeds tolerance at n = " +
                                    std::to_string(n));
        }
        return Complex{sum.real(), 0.0};
    }
    return sum;
}

namespace {

// Display rule for one real component: integers within 1e-6 print as
// integers (never hiding a component at or above drop_tol), everything else
// at 15 significant digits.
std::string display_component(double x, double drop_tol) {
    if (std::abs(x) < drop_tol) return "0";
    const double r = std::round(x);
    if (std::abs(x - r) < 1e-6 && r != 0.0 && std::abs(r) < 9.0e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", r);
        return buf;
    }
    return format_double(x, 15);
}

struct ScalarText {
    std::string text;      // magnitude rendering, sign stripped for reals
    bool negative = false; // real and negative
    bool is_one = false;   // renders as exactly "1"
    bool compound = false; // needs parentheses when used as a power base
};

ScalarText render_scalar(const Complex& z, double drop_tol) {
    ScalarText out;
    const std::string im = display_component(z.imag(), drop_tol);
    if (im == "0") {
        const std::string re = display_component(z.real(), drop_tol);
        if (!re.empty() && re[0] == '-') {
            out.negative = true;
            out.text = re.substr(1);
        } else {
            out.text = re;
        }
        out.is_one = out.text == "1";
        return out;
    }
    const std::string re = display_component(z.real(), drop_tol);
    std::string s;
    if (re != "0") {
        s = re;
        s += (im[0] == '-') ? "-" : "+";
        s += (im[0] == '-') ? im.substr(1) : im;
    } else {
        s = im;
    }
    s += "i";
    out.text = "(" + s + ")";
    out.compound = true;
    return out;
}

const char* superscript_digit(char d) {
    switch (d) {
        case '0': return "⁰";
        case '1': return "¹";
        case '2': return "²";
        case '3': return "³";
        case '4': return "⁴";
        case '5': return "⁵";
        case '6': return "⁶";
        case '7': return "⁷";
        case '8': return "⁸";
        default: return "⁹";
    }
}

const char* subscript_digit(char d) {
    static const char* map[10] = {"₀", "₁", "₂", "₃", "₄",
                                  "₅", "₆", "₇", "₈", "₉"};
    return map[d - '0'];
}

std::string superscript_exponent(int k) {
    // n-k as a superscript: "n" U+207F, "-" U+207B, digits.
    std::string s = "ⁿ⁻";
    for (char c : std::to_string(k)) s += superscript_digit(c);
    return s;
}

std::string render_power(const ScalarText& base, int k, bool unicode) {
    std::string b = base.text;
    if (base.negative) b = "(-" + b + ")";
    if (unicode) return b + superscript_exponent(k);
    return b + "^(n-" + std::to_string(k) + ")";
}

std::string render_binomial(int k, bool unicode) {
    if (!unicode) return "C(n-1," + std::to_string(k - 1) + ")";
    std::string s = "(ⁿ⁻¹";
    for (char c : std::to_string(k - 1)) s += subscript_digit(c);
    s += ")";
    return s;
}

}  // namespace

std::string format_formula(const ClosedForm& cf, int i, int j, const FormatOptions& opts) {
    if (i < 1 || i > cf.dim || j < 1 || j > cf.dim) {
        throw std::out_of_range("entry index out of range (indices are 1-based)");
    }
    const char* times = opts.unicode ? "·" : "*";
    std::string out;
    for (std::size_t g = 0; g < cf.spectrum.groups.size(); ++g) {
        const EigenvalueGroup& grp = cf.spectrum.groups[g];
        for (int k = 1; k <= grp.multiplicity; ++k) {
            const Complex c = cf.coefficients[g][static_cast<std::size_t>(k) - 1](i - 1, j - 1);
            if (std::abs(c) < opts.drop_tol) continue;

            const ScalarText coeff = render_scalar(c, opts.drop_tol);
            const ScalarText base = render_scalar(grp.lambda, opts.drop_tol);

            if (out.empty()) {
                if (coeff.negative) out += "-";
            } else {
                out += coeff.negative ? " - " : " + ";
            }
            if (!coeff.is_one) {
                out += coeff.text;
                out += times;
            }
            if (k > 1) {
                out += render_binomial(k, opts.unicode);
                out += times;
            }
            out += render_power(base, k, opts.unicode);
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace matpow
