#pragma once

#include <gmpxx.h>

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dihilb {

/// Gaussian rational: re + im*i with exact rational components.
struct GaussRat {
    mpq_class re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(long r) : re(r), im(0) {}
    GaussRat(const mpq_class& r) : re(r), im(0) {}
    GaussRat(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat unit_i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return GaussRat(re, -im); }

    /// re^2 + im^2, the multiplicative norm (a nonnegative rational).
    mpq_class norm() const { return re * re + im * im; }

    GaussRat operator-() const { return GaussRat(-re, -im); }

    GaussRat operator+(const GaussRat& o) const { return GaussRat(re + o.re, im + o.im); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re - o.re, im - o.im); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GaussRat operator/(const GaussRat& o) const {
        mpq_class n = o.norm();
        if (n == 0) throw std::domain_error("GaussRat: division by zero");
        return GaussRat((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }

    GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
    GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
    GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

    GaussRat inv() const { return GaussRat(1) / *this; }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    /// Total order (re, then im); used only for canonical printing and maps.
    bool operator<(const GaussRat& o) const {
        if (re != o.re) return re < o.re;
        return im < o.im;
    }
};

inline GaussRat pow_i(long e) {
    // i^e for any integer e
    switch (((e % 4) + 4) % 4) {
        case 0: return GaussRat(1);
        case 1: return GaussRat::unit_i();
        case 2: return GaussRat(-1);
        default: return -GaussRat::unit_i();
    }
}

inline std::string to_string(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

/// Canonical rendering: "a/b", "c/d*i", "a/b+c/d*i" (zero parts suppressed).
inline std::string to_string(const GaussRat& z) {
    if (z.is_zero()) return "0";
    std::string out;
    if (z.re != 0) out += to_string(z.re);
    if (z.im != 0) {
        if (z.im == 1) out += (z.re != 0 ? "+i" : "i");
        else if (z.im == -1) out += "-i";
        else {
            if (z.re != 0 && z.im > 0) out += "+";
            out += to_string(z.im) + "*i";
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

/// Parses "p", "p/q", "p/q+r/s*i", "i", "-i", "3*i", ... (no whitespace, no floats).
inline GaussRat parse_gauss_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    // split into one or two signed parts
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '+' && s[i - 1] != '-') {
            parts.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    parts.push_back(s.substr(start));
    if (parts.size() > 2) throw std::invalid_argument("bad rational literal: " + s);
    GaussRat out;
    for (auto part : parts) {
        bool neg = false;
        if (part[0] == '+' || part[0] == '-') {
            neg = part[0] == '-';
            part = part.substr(1);
        }
        bool imag = false;
        if (!part.empty() && part.back() == 'i') {
            imag = true;
            part.pop_back();
            if (!part.empty() && part.back() == '*') part.pop_back();
        }
        if (part.empty()) part = "1";
        mpq_class q;
        if (q.set_str(part, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        q.canonicalize();
        if (neg) q = -q;
        if (imag) out.im += q;
        else out.re += q;
    }
    return out;
}

}  // namespace dihilb
