#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "dihilb/poly.hpp"

namespace dihilb {

/// A binary dihedral group of order 4n acting on C^2, generated by
/// alpha = diag(e, e^a) with e a primitive 2n-th root of unity and the
/// quarter turn beta: (x, y) -> (y, -x).  Requires gcd(a, 2n) = 1 and
/// a^2 = 1 (mod 2n).
struct GroupParams {
    int two_n = 0;
    int a = 0;
    int n = 0;
    int q = 0;  // 2n / gcd(a-1, 2n)
    int k = 0;  // n / q; also the least i > 0 with (xy)^i alpha-invariant
    bool small = false;
    bool k_odd = false;
    int det_twist_index = 0;  // (a + 1) mod 2n
    /// Charts and the dihedral quiver need small, k odd and q >= 2.
    bool supported_for_charts = false;

    int order() const { return 2 * two_n; }
    int mod(long v) const { return int(((v % two_n) + two_n) % two_n); }
};

/// Irreducible representation label.  One-dimensional reps rho_j^{sign}
/// sit at the alpha-classes j fixed by multiplication by a; two-dimensional
/// reps V_r are labelled by the canonical orbit representative min(r, a*r).
struct Irrep {
    enum Kind { OneDim, TwoDim } kind;
    int index = 0;   // j (one-dim) or canonical r (two-dim)
    int sign = +1;   // one-dim only

    int dim() const { return kind == OneDim ? 1 : 2; }

    bool operator==(const Irrep& o) const {
        return kind == o.kind && index == o.index && (kind == TwoDim || sign == o.sign);
    }
    bool operator<(const Irrep& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (index != o.index) return index < o.index;
        return sign > o.sign;  // '+' before '-'
    }
};

inline std::string to_string(const Irrep& r) {
    if (r.kind == Irrep::OneDim)
        return "rho_" + std::to_string(r.index) + (r.sign > 0 ? "+" : "-");
    return "V_" + std::to_string(r.index);
}

inline GroupParams make_group(int two_n, int a) {
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("make_group: 2n must be even and >= 4");
    if (a < 1 || a >= two_n)
        throw std::invalid_argument("make_group: a must lie in [1, 2n)");
    if (std::gcd(a, two_n) != 1)
        throw std::invalid_argument("make_group: gcd(a, 2n) != 1");
    if ((long(a) * a) % two_n != 1)
        throw std::invalid_argument("make_group: a^2 != 1 (mod 2n)");
    GroupParams g;
    g.two_n = two_n;
    g.a = a;
    g.n = two_n / 2;
    g.q = two_n / std::gcd(a - 1, two_n);
    g.k = g.n / g.q;
    g.small = g.n % std::gcd(a + 1, two_n) != 0;
    g.k_odd = g.k % 2 == 1;
    g.det_twist_index = (a + 1) % two_n;
    g.supported_for_charts = g.small && g.k_odd && g.q >= 2;
    return g;
}

/// All small BD groups with k odd, 4 <= 2n <= max_two_n, sorted by (2n, a).
/// Groups with q = 1 (a = 1) are omitted: they have no two-dimensional
/// irreducibles and fall outside the quiver/chart machinery.
inline std::vector<GroupParams> enumerate_small_groups(int max_two_n) {
    if (max_two_n < 4) throw std::invalid_argument("enumerate_small_groups: max < 4");
    std::vector<GroupParams> out;
    for (int two_n = 4; two_n <= max_two_n; two_n += 2) {
        for (int a = 2; a < two_n; ++a) {
            if (std::gcd(a, two_n) != 1 || (long(a) * a) % two_n != 1) continue;
            GroupParams g = make_group(two_n, a);
            if (g.small && g.k_odd && g.q >= 2) out.push_back(g);
        }
    }
    return out;
}

/// alpha-eigenvalue exponent of a monomial: (px + a*py) mod 2n.
inline int alpha_class(const Monomial& m, const GroupParams& g) {
    return g.mod(long(m.px) + long(g.a) * m.py);
}

inline bool is_fixed_class(int j, const GroupParams& g) {
    return g.mod(long(g.a) * j) == j;
}

/// beta action on polynomials: f(x, y) -> f(y, -x).
inline GaussPoly act_beta(const GaussPoly& f) {
    GaussPoly out;
    for (auto& [m, c] : f.terms()) {
        GaussRat cc = (m.py % 2 == 0) ? c : -c;
        out.add_term(Monomial{m.py, m.px}, cc);
    }
    return out;
}

/// beta-eigenvalue attached to the '+' label at a fixed class j: 1 for j
/// even, -i for j odd.  (Polynomials transform in the dual of the abstract
/// representation, whose beta-value at rho^+ is i on odd classes.)
inline GaussRat plus_eigenvalue(int j) {
    return j % 2 == 0 ? GaussRat(1) : -GaussRat::unit_i();
}

inline std::vector<Irrep> irreps(const GroupParams& g) {
    std::vector<Irrep> out;
    for (int j = 0; j < g.two_n; ++j) {
        if (!is_fixed_class(j, g)) continue;
        out.push_back({Irrep::OneDim, j, +1});
        out.push_back({Irrep::OneDim, j, -1});
    }
    for (int r = 0; r < g.two_n; ++r) {
        int ar = g.mod(long(g.a) * r);
        if (ar == r || ar < r) continue;
        out.push_back({Irrep::TwoDim, r, +1});
    }
    return out;
}

struct SemiInvariant {
    Irrep rep;
    /// For two-dim reps: 0 if the polynomial carries the canonical class r,
    /// 1 if it carries a*r (then (beta(f), f)-style pairing applies).
    int component = 0;
};

/// Classifies a homogeneous semi-invariant.  Returns nullopt when the
/// monomials of f do not share an alpha-class, or when the class is fixed
/// but f is not a beta-eigenvector.
inline std::optional<SemiInvariant> classify_semi_invariant(const GaussPoly& f,
                                                            const GroupParams& g) {
    if (f.is_zero()) throw std::invalid_argument("classify_semi_invariant: zero polynomial");
    int cls = -1;
    for (auto& [m, c] : f.terms()) {
        int mc = alpha_class(m, g);
        if (cls < 0) cls = mc;
        else if (mc != cls) return std::nullopt;
    }
    if (!is_fixed_class(cls, g)) {
        int ar = g.mod(long(g.a) * cls);
        int canon = std::min(cls, ar);
        return SemiInvariant{{Irrep::TwoDim, canon, +1}, cls == canon ? 0 : 1};
    }
    GaussPoly bf = act_beta(f);
    GaussRat lp = plus_eigenvalue(cls);
    if (bf == f * lp) return SemiInvariant{{Irrep::OneDim, cls, +1}, 0};
    if (bf == f * (-lp)) return SemiInvariant{{Irrep::OneDim, cls, -1}, 0};
    return std::nullopt;
}

/// Spanning set of the rho-semi-invariants up to total degree max_deg.
/// One-dim reps get symmetrized monomial combinations m + lambda^{-1}*beta(m);
/// two-dim reps get the monomials of the canonical class as first-component
/// representatives.
inline std::vector<GaussPoly> semi_invariant_basis(const GroupParams& g, const Irrep& rho,
                                                   int max_deg) {
    std::vector<GaussPoly> out;
    if (rho.kind == Irrep::TwoDim) {
        for (int d = 0; d <= max_deg; ++d)
            for (int px = d; px >= 0; --px) {
                Monomial m{px, d - px};
                if (alpha_class(m, g) == rho.index) out.push_back(GaussPoly::monomial(m.px, m.py));
            }
        return out;
    }
    GaussRat lambda = plus_eigenvalue(rho.index) * GaussRat(rho.sign);
    for (int d = 0; d <= max_deg; ++d) {
        for (int px = d; px >= 0; --px) {
            Monomial m{px, d - px};
            if (alpha_class(m, g) != rho.index) continue;
            if (m.px < m.py) continue;  // one representative per beta-orbit
            GaussPoly f = GaussPoly::monomial(m.px, m.py);
            GaussPoly bf = act_beta(f);
            if (m.px == m.py) {
                // diagonal monomial: eigenvalue is forced to (-1)^py
                if (bf == f * lambda) out.push_back(f);
                continue;
            }
            // f + lambda^{-1} beta(f) is the lambda-eigenvector supported on {m, mirror}
            GaussPoly cand = f + bf * lambda.inv();
            if (!cand.is_zero()) out.push_back(cand.monic());
        }
    }
    return out;
}

}  // namespace dihilb
