#pragma once

#include <vector>

#include "matpow/matrix.hpp"

namespace matpow {

/// Linear recurrence term(n) = a1*term(n-1) + ... + ad*term(n-d) with
/// initial terms term(0) .. term(d-1).
struct RecurrenceSpec {
    std::vector<double> coefficients;  // a1 .. ad
    std::vector<double> initial;       // term(0) .. term(d-1)

    int order() const { return static_cast<int>(coefficients.size()); }
};

/// d x d companion matrix: first row a1 .. ad, ones on the subdiagonal, so
/// that (term(n), ..., term(n-d+1)) = C * (term(n-1), ..., term(n-d)).
Matrix companion_matrix(const RecurrenceSpec& r);

/// term(n) through the closed form of the companion matrix power.
double recurrence_term(const RecurrenceSpec& r, long long n);

/// term(n) by direct iteration; the oracle for recurrence_term.
double recurrence_term_iterative(const RecurrenceSpec& r, long long n);

}  // namespace matpow
