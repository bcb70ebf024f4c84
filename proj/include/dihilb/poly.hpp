#pragma once

#include <map>
#include <string>

#include "dihilb/gauss.hpp"

namespace dihilb {

/// Monomial x^px * y^py.
struct Monomial {
    int px = 0, py = 0;

    int degree() const { return px + py; }

    Monomial operator*(const Monomial& o) const { return {px + o.px, py + o.py}; }

    bool divides(const Monomial& o) const { return px <= o.px && py <= o.py; }

    bool operator==(const Monomial& o) const { return px == o.px && py == o.py; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Graded lexicographic order with x > y.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    if (a.px != b.px) return a.px < b.px ? -1 : 1;
    return 0;
}

/// Map comparator putting the grlex-largest monomial first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

inline std::string to_string(const Monomial& m) {
    if (m.px == 0 && m.py == 0) return "1";
    std::string out;
    if (m.px > 0) {
        out += "x";
        if (m.px > 1) out += "^" + std::to_string(m.px);
    }
    if (m.py > 0) {
        if (!out.empty()) out += "*";
        out += "y";
        if (m.py > 1) out += "^" + std::to_string(m.py);
    }
    return out;
}

/// Bivariate polynomial over Gaussian rationals. Terms are kept in descending
/// graded-lex order; zero coefficients are never stored.
class GaussPoly {
  public:
    using TermMap = std::map<Monomial, GaussRat, GrlexGreater>;

    GaussPoly() = default;
    GaussPoly(const GaussRat& c) {
        if (!c.is_zero()) terms_[Monomial{0, 0}] = c;
    }
    GaussPoly(long c) : GaussPoly(GaussRat(c)) {}

    static GaussPoly monomial(int px, int py, GaussRat c = GaussRat(1)) {
        GaussPoly p;
        if (!c.is_zero()) p.terms_[Monomial{px, py}] = c;
        return p;
    }
    static GaussPoly x() { return monomial(1, 0); }
    static GaussPoly y() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    GaussRat coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussRat() : it->second;
    }

    /// Largest monomial present (grlex); polynomial must be nonzero.
    Monomial leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading_monomial of zero");
        return terms_.begin()->first;
    }
    GaussRat leading_coeff() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussPoly operator-() const {
        GaussPoly out;
        for (auto& [m, c] : terms_) out.terms_[m] = -c;
        return out;
    }

    GaussPoly operator+(const GaussPoly& o) const {
        GaussPoly out = *this;
        for (auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }
    GaussPoly operator-(const GaussPoly& o) const {
        GaussPoly out = *this;
        for (auto& [m, c] : o.terms_) out.add_term(m, -c);
        return out;
    }
    GaussPoly operator*(const GaussPoly& o) const {
        GaussPoly out;
        for (auto& [m1, c1] : terms_)
            for (auto& [m2, c2] : o.terms_) out.add_term(m1 * m2, c1 * c2);
        return out;
    }
    GaussPoly operator*(const GaussRat& c) const {
        GaussPoly out;
        if (c.is_zero()) return out;
        for (auto& [m, k] : terms_) out.terms_[m] = k * c;
        return out;
    }

    GaussPoly& operator+=(const GaussPoly& o) { *this = *this + o; return *this; }
    GaussPoly& operator-=(const GaussPoly& o) { *this = *this - o; return *this; }
    GaussPoly& operator*=(const GaussPoly& o) { *this = *this * o; return *this; }

    bool operator==(const GaussPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const GaussPoly& o) const { return !(*this == o); }

    /// Scales so the leading coefficient becomes 1; zero stays zero.
    GaussPoly monic() const {
        if (terms_.empty()) return *this;
        return *this * leading_coeff().inv();
    }

  private:
    TermMap terms_;
};

inline GaussPoly operator*(const GaussRat& c, const GaussPoly& p) { return p * c; }

/// poly_mul: collected product with zero terms dropped.
inline GaussPoly poly_mul(const GaussPoly& f, const GaussPoly& g) { return f * g; }

/// Canonical text: terms in graded-lex descending order, e.g. "x^14+y^14",
/// "x^7-i*y^7", "(1/2+i)*x*y". Mixed-part coefficients get parentheses.
inline std::string to_string(const GaussPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        bool constant_term = m.px == 0 && m.py == 0;
        std::string cs;
        bool negated = false;
        GaussRat cc = c;
        if (cc.re < 0 || (cc.re == 0 && cc.im < 0)) {
            negated = true;
            cc = -cc;
        }
        bool mixed = cc.re != 0 && cc.im != 0;
        if (constant_term) {
            cs = to_string(cc);
        } else if (cc == GaussRat(1)) {
            cs = "";
        } else if (mixed) {
            cs = "(" + to_string(cc) + ")*";
        } else {
            cs = to_string(cc) + "*";
        }
        if (first) {
            if (negated) out += "-";
        } else {
            out += negated ? "-" : "+";
        }
        out += cs;
        if (!constant_term) out += to_string(m);
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GaussPoly& p) { return os << to_string(p); }

}  // namespace dihilb
