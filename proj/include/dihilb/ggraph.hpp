#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dihilb/lattice.hpp"
#include "dihilb/matrix.hpp"

namespace dihilb {

struct GGraphKind {
    enum Type { A, B1, B2, CA, CB, D } type;
    int sign = +1;  // CA/CB/D only

    bool is_special() const { return type == CA || type == CB || type == D; }

    bool operator==(const GGraphKind& o) const {
        return type == o.type && (!is_special() || sign == o.sign);
    }
};

inline std::string to_string(const GGraphKind& k) {
    switch (k.type) {
        case GGraphKind::A: return "A";
        case GGraphKind::B1: return "B1";
        case GGraphKind::B2: return "B2";
        case GGraphKind::CA: return k.sign > 0 ? "C+" : "C-";
        case GGraphKind::CB: return k.sign > 0 ? "C+" : "C-";
        case GGraphKind::D: return k.sign > 0 ? "D+" : "D-";
    }
    return "?";
}

/// Classification of the G-graphs on a consecutive boundary pair.
/// Non-final pairs carry one graph of type A or B; the final pair (ending at
/// (q,q)) carries the four special graphs C+, C-, D+, D-.
///
/// The A/B conditions (u < s-v vs u-r = s-v) overlap only when r = 0 and
/// u = s-v, where the two ideals coincide; that case is labelled A,
/// matching the usage on first boundary pairs.
inline std::vector<GGraphKind> classify_pair(const LatticePoint& e, const LatticePoint& enext,
                                             const GroupParams& g) {
    int r = e.r, s = e.s, u = enext.r, v = enext.s;
    bool consecutive = false;
    auto boundary = newton_boundary(g);
    for (size_t i = 0; i + 1 < boundary.size(); ++i)
        consecutive |= boundary[i] == e && boundary[i + 1] == enext;
    if (!consecutive)
        throw std::invalid_argument("classify_pair: not a consecutive boundary pair");
    if (u == g.q && v == g.q) {
        std::vector<GGraphKind> out;
        if (2 * g.q < s) {
            out.push_back({GGraphKind::CA, +1});
            out.push_back({GGraphKind::CA, -1});
        } else if (2 * g.q == r + s) {
            out.push_back({GGraphKind::CB, +1});
            out.push_back({GGraphKind::CB, -1});
        } else {
            throw std::runtime_error("classify_pair: final pair matches neither C subcase");
        }
        out.push_back({GGraphKind::D, +1});
        out.push_back({GGraphKind::D, -1});
        return out;
    }
    if (u < s - v || (r == 0 && u - r == s - v)) return {{GGraphKind::A, +1}};
    if (u - r == s - v) {
        int m = u - r;
        return {{u < 2 * m ? GGraphKind::B1 : GGraphKind::B2, +1}};
    }
    throw std::runtime_error("classify_pair: pair matches neither A nor B condition");
}

/// Defining ideal of the G-graph of the given kind on the pair
/// ((r,s),(u,v)).  Generators are emitted literally (redundancy allowed).
inline std::vector<GaussPoly> ggraph_ideal(const GGraphKind& kind, const LatticePoint& e,
                                           const LatticePoint& enext, const GroupParams& g) {
    int r = e.r, s = e.s, u = enext.r, v = enext.s;
    auto mono = [](int px, int py, GaussRat c = GaussRat(1)) {
        return GaussPoly::monomial(px, py, c);
    };
    auto sgn = [](int e_) { return e_ % 2 == 0 ? GaussRat(1) : GaussRat(-1); };
    int q = g.q;
    GaussRat pm(kind.sign);
    GaussRat mi_q = pow_i(-q);  // (-i)^q

    switch (kind.type) {
        case GGraphKind::A:
            return {mono(u, u),
                    mono(s - v, u - r) + mono(u - r, s - v, sgn(u - r)),
                    mono(r + s, 0) + mono(0, r + s, sgn(r))};
        case GGraphKind::B1: {
            int m = u - r;
            return {mono(r + s, 0) + mono(0, r + s, sgn(r)),
                    mono(m + s, m - r) + mono(m - r, m + s, sgn(m - r)),
                    mono(u, m), mono(m, u)};
        }
        case GGraphKind::B2: {
            int m = u - r;
            return {mono(2 * m, 2 * m), mono(s + m, 0), mono(0, s + m), mono(u, m), mono(m, u)};
        }
        case GGraphKind::CA: {
            int m1 = s - q, m2 = q - r;
            GaussPoly plus = mono(q, 0) + mono(0, q, pm * mi_q);
            // the third generator is the beta-invariant symmetrization of
            // x^m1 y^m2 (class 0); its inner sign does not track the C-sign
            return {plus * plus,
                    mono(s, m2) + mono(m2, s, pm * sgn(r) * pow_i(q)),
                    mono(m1, m2) + mono(m2, m1, sgn(m2))};
        }
        case GGraphKind::CB: {
            int m = q - r;  // = s - q here since 2q = r + s
            GaussPoly plus = mono(q, 0) + mono(0, q, pm * mi_q);
            return {mono(0, m) * plus, mono(m, 0) * plus, mono(s - r, s - r),
                    mono(s, m), mono(m, s)};
        }
        case GGraphKind::D:
            return {mono(q, 0) + mono(0, q, pm * mi_q), mono(s - r, s - r)};
    }
    throw std::logic_error("ggraph_ideal: unreachable");
}

// ---------------------------------------------------------------------------
// Bounded-degree quotient arithmetic
// ---------------------------------------------------------------------------

/// Row space of an ideal inside C[x,y], split per alpha-class and truncated
/// at a total-degree bound.  Supports normal forms, quotient dimensions and
/// the beta action on the quotient.  No Groebner machinery: the row space is
/// spanned by monomial multiples of the given generators.
class QuotientRing {
  public:
    QuotientRing(const GroupParams& g, std::vector<GaussPoly> gens, int deg_bound)
        : g_(g), gens_(std::move(gens)), deg_bound_(deg_bound), classes_(g.two_n) {
        build();
    }

    const GroupParams& group() const { return g_; }
    int deg_bound() const { return deg_bound_; }
    const std::vector<GaussPoly>& generators() const { return gens_; }

    /// Monomials of the class that survive in the quotient (grlex ascending).
    const std::vector<Monomial>& std_monomials(int cls) const {
        return classes_[cls].std_monos;
    }

    int class_dim(int cls) const { return (int)classes_[cls].std_monos.size(); }

    int total_dim() const {
        int d = 0;
        for (auto& c : classes_) d += (int)c.std_monos.size();
        return d;
    }

    /// Normal form: the representative of f supported on standard monomials.
    /// f may mix classes; every monomial must respect the degree bound.
    GaussPoly normal_form(const GaussPoly& f) const {
        GaussPoly out;
        for (auto& [m, c] : f.terms()) {
            if (m.degree() > deg_bound_)
                throw std::domain_error("normal_form: degree bound exceeded");
            GaussPoly red = reduce_monomial(m);
            out += red * c;
        }
        return out;
    }

    bool contains(const GaussPoly& f) const { return normal_form(f).is_zero(); }

    /// Coordinates of nf(f) in the standard-monomial basis of one class.
    std::vector<GaussRat> coords(const GaussPoly& f, int cls) const {
        GaussPoly nf = normal_form(f);
        auto& mon = classes_[cls].std_monos;
        std::vector<GaussRat> out(mon.size());
        for (auto& [m, c] : nf.terms()) {
            bool found = false;
            for (size_t i = 0; i < mon.size(); ++i)
                if (mon[i] == m) {
                    out[i] = c;
                    found = true;
                    break;
                }
            if (!found) throw std::domain_error("coords: polynomial leaves the class");
        }
        return out;
    }

    /// Pairs of monomials identified (up to scalar) by a two-term relation.
    std::vector<std::pair<Monomial, Monomial>> twins() const {
        std::vector<std::pair<Monomial, Monomial>> out;
        for (auto& cls : classes_)
            for (auto& row : cls.rows) {
                if (row.size() != 2) continue;
                const Monomial& a = cls.monos[row[0].first];
                const Monomial& b = cls.monos[row[1].first];
                if (a.degree() >= full_degree_ || b.degree() >= full_degree_) continue;
                out.push_back({a, b});
            }
        return out;
    }

  private:
    using SparseRow = std::vector<std::pair<int, GaussRat>>;  // (column, coeff), sorted

    struct ClassData {
        std::vector<Monomial> monos;      // all class monomials, grlex DESCENDING
        std::map<int, int> pivot_row;     // pivot column -> row index
        std::vector<SparseRow> rows;      // reduced rows, leading coeff 1
        std::vector<Monomial> std_monos;  // non-pivot monomials, grlex ascending
    };

    void build() {
        std::vector<std::map<Monomial, int, GrlexGreater>> col_of(g_.two_n);
        for (int d = deg_bound_; d >= 0; --d)
            for (int px = d; px >= 0; --px) {
                Monomial m{px, d - px};
                ClassData& cd = classes_[alpha_class(m, g_)];
                col_of[alpha_class(m, g_)][m] = (int)cd.monos.size();
                cd.monos.push_back(m);
            }
        for (auto& gen : gens_) {
            if (gen.is_zero()) continue;
            // all monomials of a generator must share an alpha-class
            int gcls = alpha_class(gen.leading_monomial(), g_);
            for (auto& [m, c] : gen.terms())
                if (alpha_class(m, g_) != gcls)
                    throw std::invalid_argument("QuotientRing: generator mixes alpha-classes");
            int gdeg = gen.degree();
            for (int d = 0; d + gdeg <= deg_bound_; ++d)
                for (int px = d; px >= 0; --px) {
                    Monomial mult{px, d - px};
                    int cls = g_.mod(alpha_class(mult, g_) + gcls);
                    ClassData& cd = classes_[cls];
                    SparseRow row;
                    bool in_range = true;
                    for (auto& [m, c] : gen.terms()) {
                        Monomial mm = mult * m;
                        if (mm.degree() > deg_bound_) { in_range = false; break; }
                        row.push_back({col_of[cls].at(mm), c});
                    }
                    if (!in_range) continue;
                    std::sort(row.begin(), row.end(),
                              [](auto& a, auto& b) { return a.first < b.first; });
                    insert_row(cd, std::move(row));
                }
        }
        for (auto& cd : classes_) back_substitute(cd);
        // Saturation cutoff: once every monomial of some degree is itself an
        // ideal member (a single-term reduced row), all higher monomials are
        // ideal members too, being multiples of monomials of that degree.
        // Standard monomials above the cutoff are truncation artifacts of
        // the bounded row space and are dropped.
        std::vector<int> deg_members(deg_bound_ + 1, 0);
        for (auto& cd : classes_)
            for (auto& [col, row] : cd.pivot_row)
                if (cd.rows[row].size() == 1) deg_members[cd.monos[col].degree()]++;
        full_degree_ = deg_bound_ + 1;
        for (int d = 0; d <= deg_bound_; ++d)
            if (deg_members[d] == d + 1) {
                full_degree_ = d;
                break;
            }
        for (auto& cd : classes_) {
            for (int i = (int)cd.monos.size() - 1; i >= 0; --i)
                if (!cd.pivot_row.count(i) && cd.monos[i].degree() < full_degree_)
                    cd.std_monos.push_back(cd.monos[i]);
        }
    }

    void insert_row(ClassData& cd, SparseRow row) {
        while (!row.empty()) {
            auto it = cd.pivot_row.find(row[0].first);
            if (it == cd.pivot_row.end()) break;
            row = axpy(row, cd.rows[it->second], -row[0].second);
        }
        if (row.empty()) return;
        GaussRat inv = row[0].second.inv();
        for (auto& [c, v] : row) v *= inv;
        cd.pivot_row[row[0].first] = (int)cd.rows.size();
        cd.rows.push_back(std::move(row));
    }

    /// row + f * other (sparse merge); keeps sorted order, drops zeros.
    static SparseRow axpy(const SparseRow& row, const SparseRow& other, const GaussRat& f) {
        SparseRow out;
        out.reserve(row.size() + other.size());
        size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(row[i++]);
            } else if (i == row.size() || other[j].first < row[i].first) {
                GaussRat v = other[j].second * f;
                if (!v.is_zero()) out.push_back({other[j].first, v});
                ++j;
            } else {
                GaussRat v = row[i].second + other[j].second * f;
                if (!v.is_zero()) out.push_back({row[i].first, v});
                ++i;
                ++j;
            }
        }
        return out;
    }

    void back_substitute(ClassData& cd) {
        // clear every pivot column from the other rows (full RREF)
        std::vector<int> order;
        for (auto& [col, ri] : cd.pivot_row) order.push_back(ri);
        for (int ri : order) {
            SparseRow& row = cd.rows[ri];
            SparseRow reduced;
            reduced.push_back(row[0]);
            SparseRow tail(row.begin() + 1, row.end());
            while (!tail.empty()) {
                auto it = cd.pivot_row.find(tail[0].first);
                if (it == cd.pivot_row.end()) {
                    reduced.push_back(tail[0]);
                    tail.erase(tail.begin());
                } else {
                    tail = axpy(tail, cd.rows[it->second], -tail[0].second);
                }
            }
            row = std::move(reduced);
        }
    }

    GaussPoly reduce_monomial(const Monomial& m) const {
        if (m.degree() >= full_degree_) return GaussPoly();
        int cls = alpha_class(m, g_);
        const ClassData& cd = classes_[cls];
        // locate column
        int col = -1;
        for (int i = 0; i < (int)cd.monos.size(); ++i)
            if (cd.monos[i] == m) { col = i; break; }
        if (col < 0) throw std::domain_error("reduce_monomial: monomial out of range");
        auto it = cd.pivot_row.find(col);
        if (it == cd.pivot_row.end()) return GaussPoly::monomial(m.px, m.py);
        GaussPoly out;
        const SparseRow& row = cd.rows[it->second];
        for (size_t i = 1; i < row.size(); ++i) {
            const Monomial& mm = cd.monos[row[i].first];
            if (mm.degree() >= full_degree_) continue;  // certified ideal member
            out.add_term(mm, -row[i].second);
        }
        return out;  // rows are fully reduced, so tails are standard monomials
    }

    GroupParams g_;
    std::vector<GaussPoly> gens_;
    int deg_bound_;
    int full_degree_ = 0;  // smallest degree fully inside the row space
    std::vector<ClassData> classes_;
};

// ---------------------------------------------------------------------------
// Graded basis, regular representation checks
// ---------------------------------------------------------------------------

struct GradedSlot {
    Irrep rep;
    GaussPoly poly;  // one-dim: beta-eigenvector; two-dim: first component
};

struct GradedBasis {
    std::vector<GradedSlot> slots;
    std::vector<std::pair<Monomial, Monomial>> twins;
    int dimension = 0;
    std::vector<Monomial> monomial_support;  // standard monomials plus twin partners
};

struct MultiplicityReport {
    bool ok = false;
    int dimension = 0;
    int expected_dimension = 0;
    std::vector<std::pair<Irrep, int>> multiplicities;
    std::string failure;
};

namespace detail {

/// beta-eigenbasis of the quotient of a fixed class: returns (slot poly,
/// sign) pairs.  Slots are exact beta-eigenvector lifts of quotient classes.
inline std::vector<std::pair<GaussPoly, int>> eigen_slots(const QuotientRing& qr, int cls) {
    const GroupParams& g = qr.group();
    auto& stds = qr.std_monomials(cls);
    int d = (int)stds.size();
    std::vector<std::pair<GaussPoly, int>> out;
    for (int sign : {+1, -1}) {
        GaussRat lambda = plus_eigenvalue(cls) * GaussRat(sign);
        // Greedily collect independent images of the eigenprojector
        // P(m) = (m + lambda^{-1} beta(m)) / 2 over the standard monomials.
        std::vector<std::vector<GaussRat>> rows;
        for (int i = 0; i < d; ++i) {
            GaussPoly m = GaussPoly::monomial(stds[i].px, stds[i].py);
            GaussPoly p = (m + act_beta(m) * lambda.inv()) * GaussRat(mpq_class(1, 2));
            if (p.is_zero()) continue;
            auto cand = qr.coords(p, cls);
            GaussMatrix test((int)rows.size() + 1, d);
            for (int ri = 0; ri < (int)rows.size(); ++ri)
                for (int j = 0; j < d; ++j) test.at(ri, j) = rows[ri][j];
            for (int j = 0; j < d; ++j) test.at((int)rows.size(), j) = cand[j];
            if (row_reduce(test).rank == (int)rows.size() + 1) {
                rows.push_back(cand);
                out.push_back({p.monic(), sign});
            }
        }
    }
    return out;
}

}  // namespace detail

/// Basis of C[x,y]/I organised per irreducible representation, with exact
/// semi-invariant lifts and the twin identifications.
inline GradedBasis quotient_basis(const std::vector<GaussPoly>& ideal, const GroupParams& g,
                                  int deg_bound = -1) {
    if (deg_bound < 0) deg_bound = 2 * g.two_n;
    QuotientRing qr(g, ideal, deg_bound);
    GradedBasis out;
    out.dimension = qr.total_dim();
    out.twins = qr.twins();
    for (int cls = 0; cls < g.two_n; ++cls) {
        auto& stds = qr.std_monomials(cls);
        if (is_fixed_class(cls, g)) {
            for (auto& [poly, sign] : detail::eigen_slots(qr, cls))
                out.slots.push_back({{Irrep::OneDim, cls, sign}, poly});
        } else if (cls == std::min(cls, g.mod(long(g.a) * cls))) {
            // two-dim slots listed once, on the canonical class
            for (auto& m : stds)
                out.slots.push_back({{Irrep::TwoDim, cls, +1}, GaussPoly::monomial(m.px, m.py)});
        }
        for (auto& m : stds) out.monomial_support.push_back(m);
    }
    for (auto& [a, b] : out.twins) {
        out.monomial_support.push_back(a);  // pivot partner excluded from std set
    }
    std::sort(out.monomial_support.begin(), out.monomial_support.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) < 0; });
    out.monomial_support.erase(
        std::unique(out.monomial_support.begin(), out.monomial_support.end()),
        out.monomial_support.end());
    return out;
}

/// Checks the regular-representation property: dim = 4n and each irrep
/// appears with multiplicity equal to its dimension.
inline MultiplicityReport verify_regular_rep(const GradedBasis& basis, const GroupParams& g) {
    MultiplicityReport rep;
    rep.dimension = basis.dimension;
    rep.expected_dimension = 2 * g.two_n;
    std::map<std::string, int> counts;
    for (auto& slot : basis.slots) counts[to_string(slot.rep)]++;
    bool ok = basis.dimension == rep.expected_dimension;
    for (auto& rho : irreps(g)) {
        int want = rho.dim();
        int got = counts.count(to_string(rho)) ? counts[to_string(rho)] : 0;
        rep.multiplicities.push_back({rho, got});
        if (got != want) {
            ok = false;
            if (rep.failure.empty())
                rep.failure = "multiplicity of " + to_string(rho) + " is " +
                              std::to_string(got) + ", expected " + std::to_string(want);
        }
    }
    if (basis.dimension != rep.expected_dimension && rep.failure.empty())
        rep.failure = "dimension " + std::to_string(basis.dimension) + " != " +
                      std::to_string(rep.expected_dimension);
    rep.ok = ok;
    return rep;
}

// ---------------------------------------------------------------------------
// G-graph enumeration
// ---------------------------------------------------------------------------

struct GGraph {
    GGraphKind kind;
    LatticePoint e, enext;
    std::vector<GaussPoly> ideal;
    std::string label;  // "A", "B1", "C+", "D-", possibly with "@i" suffix
    std::optional<GradedBasis> basis;
};

/// Drops generators lying in the ideal spanned by the others (bounded-degree
/// normal-form test), producing the shortened generator lists.
inline std::vector<GaussPoly> reduce_generators(const std::vector<GaussPoly>& gens,
                                                const GroupParams& g, int deg_bound = -1) {
    if (deg_bound < 0) deg_bound = 2 * g.two_n;
    std::vector<GaussPoly> kept;
    for (auto& gen : gens)
        if (!gen.is_zero()) kept.push_back(gen);
    for (size_t i = kept.size(); i-- > 0;) {
        std::vector<GaussPoly> others;
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (others.empty()) break;
        QuotientRing qr(g, others, deg_bound);
        if (qr.contains(kept[i])) kept.erase(kept.begin() + i);
    }
    return kept;
}

/// All G-graphs of the group: one A/B graph per non-final boundary pair and
/// the four special graphs on the final pair.
inline std::vector<GGraph> enumerate_ggraphs(const GroupParams& g, bool with_basis = false) {
    if (!g.small || !g.k_odd)
        throw std::invalid_argument("enumerate_ggraphs: group must be small with k odd");
    auto boundary = newton_boundary(g);
    std::vector<GGraph> out;
    std::map<std::string, int> kind_count;
    for (size_t i = 0; i + 1 < boundary.size(); ++i) {
        for (auto& kind : classify_pair(boundary[i], boundary[i + 1], g)) {
            GGraph gg;
            gg.kind = kind;
            gg.e = boundary[i];
            gg.enext = boundary[i + 1];
            gg.ideal = ggraph_ideal(kind, boundary[i], boundary[i + 1], g);
            gg.label = to_string(kind);
            kind_count[gg.label]++;
            out.push_back(std::move(gg));
        }
    }
    // disambiguate repeated kinds by boundary index
    std::map<std::string, int> seen;
    for (auto& gg : out) {
        if (kind_count[gg.label] > 1) {
            gg.label += "@" + std::to_string(seen[gg.label]++);
        }
    }
    if (with_basis)
        for (auto& gg : out) gg.basis = quotient_basis(gg.ideal, g);
    return out;
}

/// Mutual containment of two ideals: every generator of each lies in the
/// certified span of the other.  (Membership certificates are sound; a
/// failure may also mean the degree bound was too small.)
inline bool ideals_equal(const std::vector<GaussPoly>& lhs, const std::vector<GaussPoly>& rhs,
                         const GroupParams& g, int deg_bound = -1) {
    if (deg_bound < 0) deg_bound = 2 * g.two_n;
    QuotientRing qa(g, lhs, deg_bound), qb(g, rhs, deg_bound);
    for (auto& f : lhs)
        if (!qb.contains(f)) return false;
    for (auto& f : rhs)
        if (!qa.contains(f)) return false;
    return true;
}

}  // namespace dihilb
