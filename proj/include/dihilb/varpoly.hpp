#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihilb/gauss.hpp"

namespace dihilb {

/// Registry of chart variables; ids are assigned in registration order and
/// all orderings below are by name, so output is deterministic.
struct VarTable {
    std::vector<std::string> names;
    std::map<std::string, int> index;

    int intern(const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = (int)names.size();
        names.push_back(name);
        index[name] = id;
        return id;
    }
    const std::string& name(int id) const { return names[id]; }
};

/// Sorted (variable, exponent) list; the constant term is the empty vector.
using VarTerm = std::vector<std::pair<int, int>>;

/// Multivariate polynomial in chart variables over Gaussian rationals.
class VarPoly {
  public:
    using TermMap = std::map<VarTerm, GaussRat>;

    VarPoly() = default;
    VarPoly(const GaussRat& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    static VarPoly variable(int id, GaussRat c = GaussRat(1)) {
        VarPoly p;
        if (!c.is_zero()) p.terms_[{{id, 1}}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    GaussRat constant_value() const {
        auto it = terms_.find({});
        return it == terms_.end() ? GaussRat() : it->second;
    }

    void add_term(const VarTerm& t, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(t);
        if (it == terms_.end()) terms_[t] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VarPoly operator-() const {
        VarPoly p;
        for (auto& [t, c] : terms_) p.terms_[t] = -c;
        return p;
    }
    VarPoly operator+(const VarPoly& o) const {
        VarPoly p = *this;
        for (auto& [t, c] : o.terms_) p.add_term(t, c);
        return p;
    }
    VarPoly operator-(const VarPoly& o) const {
        VarPoly p = *this;
        for (auto& [t, c] : o.terms_) p.add_term(t, -c);
        return p;
    }
    VarPoly operator*(const VarPoly& o) const {
        VarPoly p;
        for (auto& [t1, c1] : terms_)
            for (auto& [t2, c2] : o.terms_) p.add_term(mul_terms(t1, t2), c1 * c2);
        return p;
    }
    VarPoly operator*(const GaussRat& c) const {
        VarPoly p;
        if (c.is_zero()) return p;
        for (auto& [t, k] : terms_) p.terms_[t] = k * c;
        return p;
    }
    VarPoly& operator+=(const VarPoly& o) { *this = *this + o; return *this; }
    VarPoly& operator-=(const VarPoly& o) { *this = *this - o; return *this; }

    bool operator==(const VarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const VarPoly& o) const { return !(*this == o); }

    bool contains_var(int id) const {
        for (auto& [t, c] : terms_)
            for (auto& [v, e] : t)
                if (v == id) return true;
        return false;
    }

    std::vector<int> variables() const {
        std::vector<int> out;
        for (auto& [t, c] : terms_)
            for (auto& [v, e] : t)
                if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// If the polynomial is c*v + rest with c a nonzero constant and v absent
    /// from rest, returns the pair (c, rest); otherwise nullopt-style false.
    bool split_linear(int v, GaussRat& coeff, VarPoly& rest) const {
        coeff = GaussRat();
        rest = VarPoly();
        for (auto& [t, c] : terms_) {
            bool has = false;
            for (auto& [var, e] : t)
                if (var == v) has = true;
            if (!has) {
                rest.add_term(t, c);
                continue;
            }
            if (t.size() != 1 || t[0].second != 1 || !coeff.is_zero()) return false;
            coeff = c;
        }
        return !coeff.is_zero();
    }

    VarPoly substitute(int v, const VarPoly& value) const {
        VarPoly out;
        for (auto& [t, c] : terms_) {
            VarTerm rest;
            int exp = 0;
            for (auto& [var, e] : t) {
                if (var == v) exp = e;
                else rest.push_back({var, e});
            }
            VarPoly base;
            base.add_term(rest, c);
            for (int i = 0; i < exp; ++i) base = base * value;
            out += base;
        }
        return out;
    }

    GaussRat evaluate(const std::map<int, GaussRat>& vals) const {
        GaussRat out;
        for (auto& [t, c] : terms_) {
            GaussRat prod = c;
            for (auto& [v, e] : t) {
                auto it = vals.find(v);
                if (it == vals.end()) throw std::domain_error("evaluate: unbound variable");
                for (int i = 0; i < e; ++i) prod *= it->second;
            }
            out += prod;
        }
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (auto& [t, c] : terms_) {
            int td = 0;
            for (auto& [v, e] : t) td += e;
            d = std::max(d, td);
        }
        return d;
    }

    /// Scales so the canonical leading coefficient is 1.
    VarPoly normalized() const {
        if (terms_.empty()) return *this;
        return *this * leading_coeff().inv();
    }
    GaussRat leading_coeff() const {
        // canonical leading term: highest total degree, then largest term map key
        auto best = terms_.begin();
        int bd = -1;
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            int td = 0;
            for (auto& [v, e] : it->first) td += e;
            if (td > bd || (td == bd && it->first > best->first)) {
                bd = td;
                best = it;
            }
        }
        return best->second;
    }

    std::string to_string(const VarTable& vars) const {
        if (terms_.empty()) return "0";
        // render terms sorted by (total degree, term) ascending for stability
        std::vector<std::pair<VarTerm, GaussRat>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) {
            int da = 0, db = 0;
            for (auto& [v, e] : a.first) da += e;
            for (auto& [v, e] : b.first) db += e;
            if (da != db) return da < db;
            return a.first < b.first;
        });
        std::string out;
        bool first = true;
        for (auto& [t, c] : ts) {
            GaussRat cc = c;
            bool neg = cc.re < 0 || (cc.re == 0 && cc.im < 0);
            if (neg) cc = -cc;
            if (first) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            first = false;
            bool mixed = cc.re != 0 && cc.im != 0;
            std::string cs;
            if (t.empty()) {
                cs = mixed ? "(" + dihilb::to_string(cc) + ")" : dihilb::to_string(cc);
            } else if (cc == GaussRat(1)) {
                cs = "";
            } else {
                cs = (mixed ? "(" + dihilb::to_string(cc) + ")" : dihilb::to_string(cc)) + "*";
            }
            out += cs;
            for (size_t i = 0; i < t.size(); ++i) {
                if (i) out += "*";
                out += vars.name(t[i].first);
                if (t[i].second > 1) out += "^" + std::to_string(t[i].second);
            }
        }
        return out;
    }

  private:
    static VarTerm mul_terms(const VarTerm& a, const VarTerm& b) {
        VarTerm out;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) out.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first) out.push_back(b[j++]);
            else {
                out.push_back({a[i].first, a[i].second + b[j].second});
                ++i;
                ++j;
            }
        }
        return out;
    }

    TermMap terms_;
};

/// Equality up to a nonzero scalar.
inline bool equal_up_to_unit(const VarPoly& a, const VarPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return a * (b.leading_coeff() / a.leading_coeff()) == b;
}

}  // namespace dihilb
