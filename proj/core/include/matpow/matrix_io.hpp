#pragma once

#include <string>
#include <string_view>

#include "matpow/matrix.hpp"

namespace matpow {

enum class MatrixFormat { csv, json };

/// A parsed matrix plus what the source text looked like.
struct MatrixDocument {
    MatrixFormat format = MatrixFormat::csv;
    Matrix matrix;
    bool declared_real = true;  // no imaginary part appears in the source
};

/// One complex entry: "a", "bi", "a+bi", "a-bi" (also bare "i", "-i").
/// Throws ParseError with a 1-based column on malformed input.
Complex parse_complex_literal(std::string_view text);

/// CSV: rows are lines, entries comma-separated; blank lines and lines
/// starting with '#' are ignored. JSON: {"dim": N, "rows": [[entry, ...]]}
/// where an entry is a number or {"re": ..., "im": ...}.
/// Throws ParseError / NonSquare.
MatrixDocument parse_matrix(std::string_view text, MatrixFormat format);

/// 17 significant digits; round-trips entries exactly.
std::string serialize_matrix_csv(const Matrix& m);
std::string serialize_matrix_json(const Matrix& m);

}  // namespace matpow
