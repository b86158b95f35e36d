#include "matpow/numfmt.hpp"

#include <cstdio>

namespace matpow {

std::string format_double(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

std::string format_complex(const Complex& z, int significant) {
    if (z.imag() == 0.0) return format_double(z.real(), significant);
    const std::string im = format_double(z.imag(), significant);
    if (z.real() == 0.0) return im + "i";
    std::string out = format_double(z.real(), significant);
    if (im[0] == '-') {
        out += "-";
        out += im.substr(1);
    } else {
        out += "+";
        out += im;
    }
    out += "i";
    return out;
}

}  // namespace matpow
