#include "matpow/recurrence.hpp"

#include <cmath>

#include "matpow/closed_form.hpp"

namespace matpow {

namespace {

void validate(const RecurrenceSpec& r) {
    if (r.coefficients.empty()) throw std::invalid_argument("recurrence order must be >= 1");
    if (r.initial.size() != r.coefficients.size()) {
        throw std::invalid_argument("initial terms must match the recurrence order");
    }
    for (double a : r.coefficients) {
        if (!std::isfinite(a)) throw std::invalid_argument("recurrence coefficients must be finite");
    }
    for (double t : r.initial) {
        if (!std::isfinite(t)) throw std::invalid_argument("initial terms must be finite");
    }
}

}  // namespace

Matrix companion_matrix(const RecurrenceSpec& r) {
    validate(r);
    const int d = r.order();
    Matrix c(d);
    for (int j = 0; j < d; ++j) c(0, j) = Complex{r.coefficients[static_cast<std::size_t>(j)], 0.0};
    for (int i = 1; i < d; ++i) c(i, i - 1) = Complex{1.0, 0.0};
    return c;
}

double recurrence_term(const RecurrenceSpec& r, long long n) {
    validate(r);
    if (n < 0) throw std::invalid_argument("recurrence term index must be >= 0");
    const int d = r.order();
    if (n < d) return r.initial[static_cast<std::size_t>(n)];

    // state(m) = (term(m), ..., term(m-d+1)); advancing by the companion
    // power: state(n) = C^(n-d+1) * state(d-1).
    const ClosedForm cf = derive_closed_form(companion_matrix(r));
    const long long steps = n - (d - 1);
    Complex sum{0.0, 0.0};
    for (int j = 0; j < d; ++j) {
        const double state0 = r.initial[static_cast<std::size_t>(d - 1 - j)];
        if (state0 == 0.0) continue;
        sum += evaluate_entry(cf, 1, j + 1, steps) * state0;
    }
    return sum.real();
}

double recurrence_term_iterative(const RecurrenceSpec& r, long long n) {
    validate(r);
    if (n < 0) throw std::invalid_argument("recurrence term index must be >= 0");
    const int d = r.order();
    if (n < d) return r.initial[static_cast<std::size_t>(n)];
    std::vector<double> window = r.initial;  // window[j] = term(m-d+1+j)
    for (long long m = d; m <= n; ++m) {
        double next = 0.0;
        for (int i = 0; i < d; ++i) {
            next += r.coefficients[static_cast<std::size_t>(i)] *
                    window[static_cast<std::size_t>(d - 1 - i)];
        }
        for (int j = 0; j + 1 < d; ++j) window[static_cast<std::size_t>(j)] = window[static_cast<std::size_t>(j) + 1];
        window[static_cast<std::size_t>(d) - 1] = next;
    }
    return window[static_cast<std::size_t>(d) - 1];
}

}  // namespace matpow
