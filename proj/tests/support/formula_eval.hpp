#pragma once

// Test-side evaluator for the ASCII formula text produced by
// format_formula. Deliberately independent of the library: plain loops for
// binomials and powers, its own literal scanner.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace testsupport {

namespace formula_detail {

inline double parse_number(const std::string& s, std::size_t& pos) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) throw std::runtime_error("expected number in formula at '" + s.substr(pos) + "'");
    pos += static_cast<std::size_t>(end - begin);
    return v;
}

inline std::complex<double> parse_complex_token(const std::string& tok) {
    // Forms: "3", "-9", "1.5e-07", "(a+bi)", "(bi)", "(a-bi)"
    if (tok.empty()) throw std::runtime_error("empty factor");
    if (tok.front() != '(') {
        std::size_t pos = 0;
        const double v = parse_number(tok, pos);
        if (pos != tok.size()) throw std::runtime_error("trailing junk in number '" + tok + "'");
        return {v, 0.0};
    }
    if (tok.back() != ')') throw std::runtime_error("unbalanced parens in '" + tok + "'");
    const std::string inner = tok.substr(1, tok.size() - 2);
    std::size_t pos = 0;
    const double first = parse_number(inner, pos);
    if (pos < inner.size() && inner[pos] == 'i') {
        if (pos + 1 != inner.size()) throw std::runtime_error("trailing junk in '" + tok + "'");
        return {0.0, first};
    }
    if (pos == inner.size()) return {first, 0.0};
    const double second = parse_number(inner, pos);
    if (pos >= inner.size() || inner[pos] != 'i' || pos + 1 != inner.size()) {
        throw std::runtime_error("malformed complex factor '" + tok + "'");
    }
    return {first, second};
}

inline double binomial_loop(long long n_minus_1, int bottom) {
    double r = 1.0;
    for (int t = 1; t <= bottom; ++t) {
        r *= static_cast<double>(n_minus_1 - (t - 1)) / static_cast<double>(t);
    }
    return r;
}

inline std::complex<double> power_loop(std::complex<double> base, long long e) {
    std::complex<double> r{1.0, 0.0};
    const bool neg = e < 0;
    if (neg) e = -e;
    for (long long t = 0; t < e; ++t) r *= base;
    return neg ? std::complex<double>{1.0, 0.0} / r : r;
}

struct Term {
    std::complex<double> coefficient{1.0, 0.0};
    int binomial_bottom = -1;          // C(n-1, bottom); -1 = absent
    std::complex<double> base{0.0, 0.0};
    int power_k = 0;                   // exponent n-k; 0 = no power factor
};

inline std::vector<std::string> split_factors(const std::string& term) {
    // '*' at paren depth zero separates factors.
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : term) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline Term parse_term(std::string text, bool negative) {
    Term term;
    if (negative) term.coefficient = {-1.0, 0.0};
    for (const std::string& f : split_factors(text)) {
        if (f.rfind("C(n-1,", 0) == 0) {
            if (f.back() != ')') throw std::runtime_error("malformed binomial '" + f + "'");
            term.binomial_bottom = std::stoi(f.substr(6, f.size() - 7));
            continue;
        }
        const std::size_t caret = f.find("^(");
        if (caret != std::string::npos) {
            if (f.back() != ')') throw std::runtime_error("malformed power '" + f + "'");
            term.base = parse_complex_token(f.substr(0, caret));
            const std::string exp = f.substr(caret + 2, f.size() - caret - 3);
            if (exp.rfind("n-", 0) != 0) throw std::runtime_error("malformed exponent '" + exp + "'");
            term.power_k = std::stoi(exp.substr(2));
            continue;
        }
        term.coefficient *= parse_complex_token(f);
    }
    return term;
}

}  // namespace formula_detail

// Parses an ASCII closed-form formula and evaluates it at integer n.
inline std::complex<double> eval_formula(const std::string& formula, long long n) {
    using namespace formula_detail;
    if (formula == "0") return {0.0, 0.0};

    std::vector<Term> terms;
    std::size_t pos = 0;
    bool negative = formula.rfind("-", 0) == 0;
    if (negative) pos = 1;
    while (pos < formula.size()) {
        std::size_t next_plus = formula.find(" + ", pos);
        std::size_t next_minus = formula.find(" - ", pos);
        std::size_t next = std::min(next_plus, next_minus);
        const std::string chunk = formula.substr(pos, next == std::string::npos ? next : next - pos);
        terms.push_back(parse_term(chunk, negative));
        if (next == std::string::npos) break;
        negative = next == next_minus;
        pos = next + 3;
    }

    std::complex<double> sum{0.0, 0.0};
    for (const Term& t : terms) {
        std::complex<double> v = t.coefficient;
        if (t.binomial_bottom >= 0) v *= binomial_loop(n - 1, t.binomial_bottom);
        if (t.power_k > 0) {
            const long long e = n - t.power_k;
            if (t.base == std::complex<double>{0.0, 0.0}) {
                v *= (e == 0) ? 1.0 : 0.0;
            } else {
                v *= power_loop(t.base, e);
            }
        }
        sum += v;
    }
    return sum;
}

}  // namespace testsupport
