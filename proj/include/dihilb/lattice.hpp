#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "dihilb/group.hpp"

namespace dihilb {

/// Minus-sign (Hirzebruch-Jung) continued fraction num/den = [d1, d2, ...]:
/// num/den = d1 - 1/(d2 - 1/(...)), every digit >= 2.
struct HJExpansion {
    int num = 0, den = 0;
    std::vector<int> digits;

    bool palindromic() const {
        auto rev = digits;
        std::reverse(rev.begin(), rev.end());
        return rev == digits;
    }
};

inline HJExpansion hj_expand(int num, int den) {
    if (den <= 0 || den >= num) throw std::invalid_argument("hj_expand: need 0 < den < num");
    if (std::gcd(num, den) != 1) throw std::invalid_argument("hj_expand: gcd(num, den) != 1");
    HJExpansion out{num, den, {}};
    int n = num, d = den;
    while (d > 0) {
        int c = (n + d - 1) / d;  // ceil(n/d)
        out.digits.push_back(c);
        int r = c * d - n;
        n = d;
        d = r;
    }
    return out;
}

/// Point (r, s) of the congruence lattice s = a*r (mod modulus).
struct LatticePoint {
    int r = 0, s = 0;
    bool operator==(const LatticePoint& o) const { return r == o.r && s == o.s; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
};

inline std::string to_string(const LatticePoint& p) {
    return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

namespace detail {

/// Boundary points of the Newton polygon of {(r,s) : s = a*r mod modulus}
/// by the continued-fraction recursion e_{i+1} = c_i e_i - e_{i-1},
/// starting from e_0 = (0, modulus), e_1 = (1, a).
/// stop_at_diagonal: cut at the first point with r == s (dihedral use);
/// otherwise run to the s = 0 axis (cyclic use).
inline std::vector<LatticePoint> boundary_by_recursion(int modulus, int a, bool stop_at_diagonal) {
    std::vector<LatticePoint> pts;
    pts.push_back({0, modulus});
    pts.push_back({1, a});
    if (stop_at_diagonal && a == 1) return pts;  // e_1 = (q, q) degenerate case
    auto digits = hj_expand(modulus, a).digits;
    for (size_t t = 1; t <= digits.size(); ++t) {
        int c = digits[t - 1];
        LatticePoint e{c * pts[t].r - pts[t - 1].r, c * pts[t].s - pts[t - 1].s};
        pts.push_back(e);
        if (stop_at_diagonal && e.r == e.s) return pts;
        if (!stop_at_diagonal && e.s == 0) return pts;
        if (e.s < 0 || (stop_at_diagonal && e.r > e.s)) break;
    }
    throw std::runtime_error("newton_boundary: recursion did not reach the expected endpoint");
}

}  // namespace detail

/// Newton-polygon boundary points e_0 = (0, 2n), e_1 = (1, a), ...,
/// truncated at and including (q, q).
inline std::vector<LatticePoint> newton_boundary(const GroupParams& g) {
    auto pts = detail::boundary_by_recursion(g.two_n, g.a, true);
    auto& last = pts.back();
    if (last.r != g.q || last.s != g.q)
        throw std::runtime_error("newton_boundary: boundary does not end at (q, q)");
    return pts;
}

/// Cyclic variant for the helper pipeline: full boundary of
/// {s = a*r mod modulus} from (0, modulus) down to the s = 0 axis.
inline std::vector<LatticePoint> newton_boundary_cyclic(int modulus, int a) {
    if (modulus < 2 || a < 1 || a >= modulus || std::gcd(a, modulus) != 1)
        throw std::invalid_argument("newton_boundary_cyclic: bad parameters");
    if (a == 1) return {{0, modulus}, {1, 1}, {modulus, 0}};
    return detail::boundary_by_recursion(modulus, a, false);
}

namespace detail {

/// Lower-left hull chain of a set given as s_min per r, returning every
/// lattice point of the input that lies on the hull boundary.
inline std::vector<LatticePoint> hull_chain(const std::vector<LatticePoint>& mins) {
    // Andrew-style lower hull on points sorted by r.
    std::vector<LatticePoint> hull;
    for (auto& p : mins) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = long(b.r - a.r) * (p.s - a.s) - long(b.s - a.s) * (p.r - a.r);
            if (cross <= 0) hull.pop_back();  // b above or on segment a-p
            else break;
        }
        hull.push_back(p);
    }
    return hull;
}

}  // namespace detail

/// Independent oracle: boundary points from the convex hull of all lattice
/// points {(r, s) in [0, box]^2 \ {0} : s = a*r mod modulus}, ordered by
/// increasing r.  Points of the congruence lattice lying on hull edges are
/// included.  stop_at_diagonal as above.
inline std::vector<LatticePoint> newton_boundary_bruteforce_mod(int modulus, int a, int box,
                                                                bool stop_at_diagonal) {
    if (box < modulus) throw std::invalid_argument("newton_boundary_bruteforce: box < modulus");
    auto cls = [&](long r) { return int(((a * r) % modulus + modulus) % modulus); };
    std::vector<LatticePoint> mins;
    for (int r = 0; r <= box; ++r) {
        int s = cls(r);
        if (r == 0 && s == 0) s = modulus;  // exclude the origin
        mins.push_back({r, s});
    }
    auto hull = detail::hull_chain(mins);
    // expand hull edges with congruence-lattice points lying on them
    std::vector<LatticePoint> out;
    for (size_t i = 0; i + 1 < hull.size(); ++i) {
        LatticePoint p = hull[i], qpt = hull[i + 1];
        out.push_back(p);
        int dr = qpt.r - p.r, ds = qpt.s - p.s;
        int g = std::gcd(dr, std::abs(ds));
        for (int t = 1; t < g; ++t) {
            LatticePoint mid{p.r + dr / g * t, p.s + ds / g * t};
            if (cls(mid.r) == mid.s) out.push_back(mid);
        }
    }
    out.push_back(hull.back());
    // truncate
    std::vector<LatticePoint> res;
    for (auto& p : out) {
        res.push_back(p);
        if (stop_at_diagonal && p.r == p.s) return res;
        if (!stop_at_diagonal && p.s == 0) return res;
    }
    throw std::runtime_error("newton_boundary_bruteforce: endpoint not reached within box");
}

inline std::vector<LatticePoint> newton_boundary_bruteforce(const GroupParams& g, int box) {
    return newton_boundary_bruteforce_mod(g.two_n, g.a, box, true);
}

}  // namespace dihilb
