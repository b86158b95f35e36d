#include "matpow/matrix_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "matpow/numfmt.hpp"

namespace matpow {

namespace {

std::string_view trim(std::string_view s, int& column_offset) {
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    std::size_t e = s.size();
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    column_offset += static_cast<int>(b);
    return s.substr(b, e - b);
}

// Reads a double at s[pos..]; returns false when no number starts there.
bool read_number(std::string_view s, std::size_t& pos, double& out) {
    const char* begin = s.data() + pos;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec != std::errc{} || ptr == begin) return false;
    pos += static_cast<std::size_t>(ptr - begin);
    return true;
}

Complex parse_complex_at(std::string_view text, int line, int column) {
    int col = column;
    const std::string_view s = trim(text, col);
    if (s.empty()) throw ParseError("empty entry", line, col);

    std::size_t pos = 0;
    double first = 0.0;
    bool first_is_number = true;

    // Leading bare "i" / "+i" / "-i".
    if (s[pos] == 'i' || ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() &&
                          s[pos + 1] == 'i')) {
        first = (s[pos] == '-') ? -1.0 : 1.0;
        pos += (s[pos] == 'i') ? 1 : 2;
        first_is_number = false;
    } else if (!read_number(s, pos, first)) {
        throw ParseError("malformed complex literal '" + std::string(s) + "'", line, col);
    }

    if (!first_is_number || (pos < s.size() && s[pos] == 'i')) {
        // Pure imaginary: "bi" or bare "i".
        if (first_is_number) ++pos;  // consume 'i'
        if (pos != s.size()) {
            throw ParseError("trailing characters in complex literal '" + std::string(s) + "'",
                             line, col + static_cast<int>(pos));
        }
        return Complex{0.0, first};
    }
    if (pos == s.size()) return Complex{first, 0.0};

    if (s[pos] != '+' && s[pos] != '-') {
        throw ParseError("expected '+' or '-' in complex literal '" + std::string(s) + "'", line,
                         col + static_cast<int>(pos));
    }
    double second = 0.0;
    if ((s[pos] == '+' || s[pos] == '-') && pos + 1 < s.size() && s[pos + 1] == 'i') {
        second = (s[pos] == '-') ? -1.0 : 1.0;  // "a+i" / "a-i"
        pos += 2;
    } else {
        if (!read_number(s, pos, second)) {
            throw ParseError("malformed imaginary part in '" + std::string(s) + "'", line,
                             col + static_cast<int>(pos));
        }
        if (pos >= s.size() || s[pos] != 'i') {
            throw ParseError("imaginary part must end in 'i' in '" + std::string(s) + "'", line,
                             col + static_cast<int>(pos));
        }
        ++pos;
    }
    if (pos != s.size()) {
        throw ParseError("trailing characters in complex literal '" + std::string(s) + "'", line,
                         col + static_cast<int>(pos));
    }
    return Complex{first, second};
}

MatrixDocument parse_csv(std::string_view text) {
    std::vector<std::vector<Complex>> rows;
    bool saw_imag = false;

    std::size_t line_start = 0;
    int line_no = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        ++line_no;

        int c0 = 0;
        const std::string_view stripped = trim(line, c0);
        if (!stripped.empty() && stripped[0] != '#') {
            std::vector<Complex> row;
            std::size_t field_start = 0;
            int column = 1;
            while (field_start <= line.size()) {
                std::size_t comma = line.find(',', field_start);
                if (comma == std::string_view::npos) comma = line.size();
                const std::string_view field = line.substr(field_start, comma - field_start);
                const Complex z =
                    parse_complex_at(field, line_no, column + static_cast<int>(field_start));
                if (z.imag() != 0.0) saw_imag = true;
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                    throw ParseError("non-finite entry", line_no,
                                     column + static_cast<int>(field_start));
                }
                row.push_back(z);
                if (comma == line.size()) break;
                field_start = comma + 1;
            }
            rows.push_back(std::move(row));
        }

        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    if (rows.empty()) throw ParseError("no matrix rows found", 1, 1);
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw NonSquare("matrix is not square: " + std::to_string(n) + " rows but row " +
                            std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                            " entries");
        }
    }

    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());

    MatrixDocument doc;
    doc.format = MatrixFormat::csv;
    doc.matrix = Matrix(static_cast<int>(n), std::move(entries));
    doc.declared_real = !saw_imag;
    return doc;
}

MatrixDocument parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("rows")) {
        throw ParseError("matrix JSON must be an object with \"dim\" and \"rows\"", 1, 1);
    }
    const int dim = j.at("dim").get<int>();
    const auto& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
        throw NonSquare("\"rows\" must hold exactly dim rows");
    }

    bool saw_imag = false;
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw NonSquare("every row must hold exactly dim entries");
        }
        for (const auto& cell : row) {
            Complex z;
            if (cell.is_number()) {
                z = Complex{cell.get<double>(), 0.0};
            } else if (cell.is_object() && cell.contains("re")) {
                const double re = cell.at("re").get<double>();
                const double im = cell.contains("im") ? cell.at("im").get<double>() : 0.0;
                z = Complex{re, im};
                if (cell.contains("im")) saw_imag = saw_imag || im != 0.0;
            } else {
                throw ParseError("matrix entry must be a number or {\"re\", \"im\"}", 1, 1);
            }
            if (z.imag() != 0.0) saw_imag = true;
            entries.push_back(z);
        }
    }

    MatrixDocument doc;
    doc.format = MatrixFormat::json;
    try {
        doc.matrix = Matrix(dim, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 1, 1);
    }
    doc.declared_real = !saw_imag;
    return doc;
}

}  // namespace

Complex parse_complex_literal(std::string_view text) { return parse_complex_at(text, 1, 1); }

MatrixDocument parse_matrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::csv ? parse_csv(text) : parse_json(text);
}

std::string serialize_matrix_csv(const Matrix& m) {
    std::string out;
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ",";
            out += format_complex(m(i, j), 17);
        }
        out += "\n";
    }
    return out;
}

std::string serialize_matrix_json(const Matrix& m) {
    std::string out = "{\"dim\":" + std::to_string(m.dim()) + ",\"rows\":[";
    for (int i = 0; i < m.dim(); ++i) {
        if (i > 0) out += ",";
        out += "[";
        for (int j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ",";
            const Complex z = m(i, j);
            if (z.imag() == 0.0) {
                out += format_double(z.real(), 17);
            } else {
                out += "{\"re\":" + format_double(z.real(), 17) +
                       ",\"im\":" + format_double(z.imag(), 17) + "}";
            }
        }
        out += "]";
    }
    out += "]}\n";
    return out;
}

}  // namespace matpow
