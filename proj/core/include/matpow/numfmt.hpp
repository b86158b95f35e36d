#pragma once

#include <string>

#include "matpow/matrix.hpp"

namespace matpow {

/// printf "%.{significant}g" — deterministic, locale-independent.
std::string format_double(double v, int significant);

/// Complex literal in the CSV forms "a", "bi", "a+bi", "a-bi".
std::string format_complex(const Complex& z, int significant);

}  // namespace matpow
