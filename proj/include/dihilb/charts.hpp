#pragma once

#include <cctype>
#include <optional>
#include <random>
#include <set>

#include "dihilb/quiver.hpp"
#include "dihilb/varpoly.hpp"

namespace dihilb {

/// Value carried by one multiplicity slot of a vertex: the component
/// polynomials.  One-dimensional vertices use c1 only; two-dimensional
/// slots satisfy c2 = beta(c1).
struct PairVal {
    GaussPoly c1, c2;
};

/// A generator row discovered by the spanning normalization: row src_row of
/// the arrow becomes the dst_index-th basis vector of the head vertex.
struct PinnedRow {
    int arrow = 0, src_row = 0, dst_index = 0;
};

struct OpenConditions {
    std::string graph_label;
    std::vector<PinnedRow> pins;
    std::vector<std::string> nonzero_entries;  // the entries normalized to 1
};

/// Tautological theta-stable representation carried by the quotient ring of
/// a G-graph ideal: slots are reached breadth-first from rho_0^+ and every
/// arrow matrix is the multiplication map in that basis.
struct TautRep {
    QuiverData quiver;
    std::vector<std::vector<PairVal>> slots;
    std::vector<GaussMatrix> matrices;
    std::vector<PinnedRow> pins;
    int root = 0;
};

namespace detail {

inline PairVal contract(const PairVal& v, const PolyMat& t, int src_dim, int dst_dim) {
    PairVal out;
    if (src_dim == 1) {
        out.c1 = v.c1 * t.at(0, 0);
        if (dst_dim == 2) out.c2 = v.c1 * t.at(0, 1);
    } else {
        out.c1 = v.c1 * t.at(0, 0) + v.c2 * t.at(1, 0);
        if (dst_dim == 2) out.c2 = v.c1 * t.at(0, 1) + v.c2 * t.at(1, 1);
    }
    return out;
}

/// Minimal quotient interface used by the spanning normalization: the
/// dihedral path wraps QuotientRing, the cyclic path a monomial staircase.
struct CoordView {
    std::function<std::vector<GaussRat>(const GaussPoly&, int cls)> coords;
    std::function<int(int cls)> dim;
};

inline std::vector<GaussRat> mat_row(const GaussMatrix& m, int r) {
    std::vector<GaussRat> out(m.cols());
    for (int c = 0; c < m.cols(); ++c) out[c] = m.at(r, c);
    return out;
}

inline TautRep build_tautological(const QuiverData& qd, const CoordView& view) {
    TautRep tr;
    tr.quiver = qd;
    tr.root = qd.vertex_index(qd.cyclic ? "rho_0" : "rho_0+");
    int nv = (int)qd.vertices.size();
    tr.slots.resize(nv);
    std::vector<std::vector<std::vector<GaussRat>>> coord_rows(nv);
    auto templates = xy_templates(qd);

    // every component class must carry one quotient dimension per slot:
    // fixed classes host a +/- vertex pair, free classes one 2-dim vertex
    for (auto& v : qd.vertices)
        if (view.dim(v.cls1) != (qd.cyclic ? 1 : 2))
            throw std::runtime_error("tautological rep: quotient dimension mismatch at " +
                                     v.name);

    auto try_add = [&](int w, const PairVal& img, int arrow, int src_row) -> bool {
        auto& vtx = qd.vertices[w];
        if ((int)tr.slots[w].size() == vtx.dim) return false;
        auto co = view.coords(img.c1, vtx.cls1);
        bool zero = true;
        for (auto& c : co) zero &= c.is_zero();
        if (zero) return false;
        // independence against collected rows
        int d = (int)co.size();
        GaussMatrix test((int)coord_rows[w].size() + 1, d);
        for (int i = 0; i < (int)coord_rows[w].size(); ++i)
            for (int j = 0; j < d; ++j) test.at(i, j) = coord_rows[w][i][j];
        for (int j = 0; j < d; ++j) test.at((int)coord_rows[w].size(), j) = co[j];
        if (row_reduce(test).rank != (int)coord_rows[w].size() + 1) return false;
        coord_rows[w].push_back(co);
        tr.slots[w].push_back(img);
        tr.pins.push_back({arrow, src_row, (int)tr.slots[w].size() - 1});
        return true;
    };

    std::vector<std::pair<int, int>> queue;
    tr.slots[tr.root].push_back({GaussPoly(1), GaussPoly()});
    coord_rows[tr.root].push_back(view.coords(GaussPoly(1), qd.vertices[tr.root].cls1));
    queue.push_back({tr.root, 0});
    for (size_t head = 0; head < queue.size(); ++head) {
        auto [v, i] = queue[head];
        for (int a : qd.out_arrows(v)) {
            int w = qd.arrows[a].head;
            PairVal img = contract(tr.slots[v][i], templates[a], qd.vertices[v].dim,
                                   qd.vertices[w].dim);
            if (try_add(w, img, a, i)) queue.push_back({w, (int)tr.slots[w].size() - 1});
        }
    }
    for (int v = 0; v < nv; ++v)
        if ((int)tr.slots[v].size() != qd.vertices[v].dim)
            throw std::runtime_error("tautological rep: vertex " + qd.vertices[v].name +
                                     " not fully reached (not a cluster ideal?)");

    // multiplication matrices in the collected bases
    tr.matrices.resize(qd.arrows.size());
    for (int a = 0; a < (int)qd.arrows.size(); ++a) {
        auto& ar = qd.arrows[a];
        auto& vv = qd.vertices[ar.tail];
        auto& wv = qd.vertices[ar.head];
        GaussMatrix m(vv.dim, wv.dim);
        for (int i = 0; i < vv.dim; ++i) {
            PairVal img = contract(tr.slots[ar.tail][i], templates[a], vv.dim, wv.dim);
            auto sol = solve_in_rowspan(coord_rows[ar.head], view.coords(img.c1, wv.cls1));
            for (int j = 0; j < wv.dim; ++j) m.at(i, j) = sol[j];
            if (wv.dim == 2) {
                // the second components must be expressed by the same
                // coefficients; this pins the pair convention
                GaussPoly check = img.c2;
                for (int j = 0; j < wv.dim; ++j) check -= tr.slots[ar.head][j].c2 * sol[j];
                auto co = view.coords(check, wv.cls2);
                for (auto& c : co)
                    if (!c.is_zero())
                        throw std::runtime_error("tautological rep: pair mismatch on " +
                                                 ar.name);
            }
        }
        tr.matrices[a] = m;
    }
    return tr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Symbolic representation and chart solving
// ---------------------------------------------------------------------------

struct SymEntry {
    bool pinned = false;
    GaussRat value;  // pinned entries only
    int var = -1;    // variable id otherwise
};

struct SymMat {
    int rows = 0, cols = 0;
    std::vector<SymEntry> e;
    SymEntry& at(int r, int c) { return e[r * cols + c]; }
    const SymEntry& at(int r, int c) const { return e[r * cols + c]; }
};

struct SymbolicRep {
    QuiverData quiver;
    VarTable vars;
    std::vector<SymMat> mats;          // per arrow
    std::vector<GaussRat> var_origin;  // origin value per variable id
    std::vector<PinnedRow> pins;
};

namespace detail {

/// Entry names follow the (a, A), (b; B), (m, M; m', M') convention: the
/// lowercase family letter names the first row/column, uppercase the second
/// column, a prime the second row.
inline std::string entry_name(const QuiverArrow& ar, int row, int col, int rows, int cols) {
    std::string base = ar.name;
    std::string suffix = base.substr(1);
    char fam = base[0];
    std::string out;
    out += (cols == 2 && col == 1) ? char(std::toupper(fam)) : fam;
    if (rows == 2 && cols == 2 && row == 1) out += "'";
    out += suffix;
    if (rows == 2 && cols == 1 && row == 1) {
        // column vector: second row carries the uppercase name instead
        out = std::string(1, char(std::toupper(fam))) + suffix;
    }
    return out;
}

}  // namespace detail

/// Turns the tautological representation into the normalized symbolic one:
/// generator rows become literal unit rows, every other entry a variable.
inline SymbolicRep normalize_rep(const TautRep& tr) {
    SymbolicRep sr;
    sr.quiver = tr.quiver;
    sr.pins = tr.pins;
    std::map<std::pair<int, int>, int> pinned_row;  // (arrow, row) -> dst
    for (auto& p : tr.pins) pinned_row[{p.arrow, p.src_row}] = p.dst_index;
    for (int a = 0; a < (int)tr.quiver.arrows.size(); ++a) {
        auto& ar = tr.quiver.arrows[a];
        int rows = tr.quiver.vertices[ar.tail].dim;
        int cols = tr.quiver.vertices[ar.head].dim;
        SymMat m;
        m.rows = rows;
        m.cols = cols;
        m.e.resize(rows * cols);
        for (int r = 0; r < rows; ++r) {
            auto it = pinned_row.find({a, r});
            for (int c = 0; c < cols; ++c) {
                SymEntry& en = m.at(r, c);
                if (it != pinned_row.end()) {
                    en.pinned = true;
                    en.value = GaussRat(c == it->second ? 1 : 0);
                } else {
                    en.var = sr.vars.intern(detail::entry_name(ar, r, c, rows, cols));
                    if ((int)sr.var_origin.size() <= en.var) sr.var_origin.resize(en.var + 1);
                    sr.var_origin[en.var] = tr.matrices[a].at(r, c);
                }
            }
        }
        sr.mats.push_back(std::move(m));
    }
    return sr;
}

/// The open-set designation of a G-graph: which entries are set to 1 by the
/// spanning basis change (the "nonzero" conditions of the open set).
inline OpenConditions open_conditions(const TautRep& tr, const std::string& label) {
    OpenConditions oc;
    oc.graph_label = label;
    oc.pins = tr.pins;
    for (auto& p : tr.pins) {
        auto& ar = tr.quiver.arrows[p.arrow];
        int rows = tr.quiver.vertices[ar.tail].dim;
        int cols = tr.quiver.vertices[ar.head].dim;
        oc.nonzero_entries.push_back(
            detail::entry_name(ar, p.src_row, p.dst_index, rows, cols));
    }
    return oc;
}

struct ChartBinding {
    int var;
    VarPoly raw;       // as solved (may reference later-bound variables)
    VarPoly resolved;  // in free variables only
};

struct Chart {
    GroupParams group;
    bool cyclic = false;
    int cyclic_modulus = 0, cyclic_a = 0;
    std::string label;
    GGraphKind kind{GGraphKind::A, +1};
    LatticePoint e, enext;
    std::vector<GaussPoly> ideal;
    SymbolicRep sym;
    std::vector<int> free_vars;
    std::vector<ChartBinding> bindings;
    std::vector<VarPoly> equations;
    std::map<int, GaussRat> origin;  // origin value per free variable
    /// Cyclic pipeline: free coordinate -> monomial identification (x^p*y^q
    /// or a fraction of monomials).
    std::vector<std::pair<std::string, std::string>> identifications;

    std::string var_name(int id) const { return sym.vars.name(id); }
};

namespace detail {

inline VarPoly sym_entry_poly(const SymEntry& en) {
    return en.pinned ? VarPoly(en.value) : VarPoly::variable(en.var);
}

/// Substitutes the symbolic matrices into the bound-quiver relations and
/// returns the scalar equations.
inline std::vector<VarPoly> relation_equations(const SymbolicRep& sr) {
    struct VarMat {
        int rows = 0, cols = 0;
        std::vector<VarPoly> e;
    };
    std::vector<VarMat> mats;
    for (auto& m : sr.mats) {
        VarMat vm{m.rows, m.cols, {}};
        vm.e.resize(m.rows * m.cols);
        for (int i = 0; i < m.rows * m.cols; ++i) vm.e[i] = sym_entry_poly(m.e[i]);
        mats.push_back(std::move(vm));
    }
    auto mul = [](const VarMat& a, const VarMat& b) {
        VarMat out{a.rows, b.cols, {}};
        out.e.resize(a.rows * b.cols);
        for (int i = 0; i < a.rows; ++i)
            for (int k = 0; k < a.cols; ++k)
                for (int j = 0; j < b.cols; ++j)
                    out.e[i * b.cols + j] += a.e[i * a.cols + k] * b.e[k * b.cols + j];
        return out;
    };
    std::vector<VarPoly> eqs;
    for (auto& rel : relation_set(sr.quiver)) {
        VarMat sum;
        bool first = true;
        for (auto& term : rel.terms) {
            VarMat prod = mats[term.arrows[0]];
            for (size_t i = 1; i < term.arrows.size(); ++i) prod = mul(prod, mats[term.arrows[i]]);
            for (auto& p : prod.e) p = p * term.coeff;
            if (first) {
                sum = prod;
                first = false;
            } else {
                for (size_t i = 0; i < sum.e.size(); ++i) sum.e[i] += prod.e[i];
            }
        }
        for (auto& p : sum.e)
            if (!p.is_zero()) eqs.push_back(p);
    }
    return eqs;
}

}  // namespace detail

/// Eliminates every variable that occurs linearly with a constant
/// coefficient.  Deterministic order: candidates with the fewest terms in
/// their solved value go first (keeping the system sparse), then variables
/// with a nonzero origin value (so the surviving coordinates stay centered
/// at the distinguished cluster), then uppercase entry names (second
/// components) before lowercase ones, descending lexicographically within
/// each class, ties by equation order.  Remaining equations cut the chart.
inline void solve_chart(Chart& chart) {
    auto eqs = detail::relation_equations(chart.sym);
    const VarTable& vt = chart.sym.vars;
    auto rank = [&](int v) {
        int centered = chart.sym.var_origin[v].is_zero() ? 1 : 0;
        const std::string& n = vt.name(v);
        return 2 * centered + (std::islower((unsigned char)n[0]) ? 1 : 0);
    };
    auto better = [&](int v, size_t sz, int best, size_t best_sz) {
        if (best < 0) return true;
        if (sz != best_sz) return sz < best_sz;
        if (rank(v) != rank(best)) return rank(v) < rank(best);
        return vt.name(v) > vt.name(best);
    };
    std::set<int> bound;
    while (true) {
        int best_var = -1, best_eq = -1;
        size_t best_size = 0;
        GaussRat best_coeff;
        VarPoly best_rest;
        for (int e = 0; e < (int)eqs.size(); ++e) {
            for (int v : eqs[e].variables()) {
                GaussRat c;
                VarPoly rest;
                if (!eqs[e].split_linear(v, c, rest)) continue;
                size_t sz = rest.terms().size();
                if (better(v, sz, best_var, best_size)) {
                    best_var = v;
                    best_eq = e;
                    best_size = sz;
                    best_coeff = c;
                    best_rest = rest;
                }
            }
        }
        if (best_var < 0) break;
        VarPoly value = best_rest * (-best_coeff.inv());
        chart.bindings.push_back({best_var, value, value});
        bound.insert(best_var);
        eqs.erase(eqs.begin() + best_eq);
        std::vector<VarPoly> next;
        for (auto& eq : eqs) {
            VarPoly s = eq.substitute(best_var, value);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        eqs = std::move(next);
    }
    // drop equations that repeat an earlier one up to a unit
    std::vector<VarPoly> unique_eqs;
    for (auto& eq : eqs) {
        bool dup = false;
        for (auto& kept : unique_eqs) dup |= equal_up_to_unit(kept, eq);
        if (!dup) unique_eqs.push_back(eq);
    }
    chart.equations = std::move(unique_eqs);
    // resolve bindings down to free variables (reverse elimination order)
    for (int t = (int)chart.bindings.size() - 1; t >= 0; --t) {
        VarPoly r = chart.bindings[t].raw;
        for (int s = t + 1; s < (int)chart.bindings.size(); ++s)
            r = r.substitute(chart.bindings[s].var, chart.bindings[s].resolved);
        chart.bindings[t].resolved = r;
    }
    for (int v = 0; v < (int)vt.names.size(); ++v)
        if (!bound.count(v)) chart.free_vars.push_back(v);
    for (int v : chart.free_vars) chart.origin[v] = chart.sym.var_origin[v];

    // sanity: the tautological origin satisfies bindings and equations
    std::map<int, GaussRat> all;
    for (int v : chart.free_vars) all[v] = chart.origin.at(v);
    for (auto& b : chart.bindings) {
        GaussRat val = b.resolved.evaluate(all);
        if (val != chart.sym.var_origin[b.var])
            throw std::runtime_error("solve_chart: binding of " + vt.name(b.var) +
                                     " disagrees with the origin representation");
        all[b.var] = val;
    }
    for (auto& eq : chart.equations)
        if (!eq.evaluate(all).is_zero())
            throw std::runtime_error("solve_chart: chart equation nonzero at the origin");
}

/// Full pipeline for one G-graph.
inline Chart make_chart(const GroupParams& g, const GGraph& gg, const QuiverData& qd) {
    Chart chart;
    chart.group = g;
    chart.label = gg.label;
    chart.kind = gg.kind;
    chart.e = gg.e;
    chart.enext = gg.enext;
    chart.ideal = gg.ideal;
    QuotientRing qr(g, gg.ideal, 2 * g.two_n + 8);
    detail::CoordView view{
        [&qr](const GaussPoly& f, int cls) { return qr.coords(f, cls); },
        [&qr](int cls) { return qr.class_dim(cls); }};
    TautRep tr = detail::build_tautological(qd, view);
    chart.sym = normalize_rep(tr);
    solve_chart(chart);
    return chart;
}

inline std::vector<Chart> make_charts(const GroupParams& g) {
    if (!g.supported_for_charts)
        throw std::invalid_argument("make_charts: group not supported (needs small, k odd, q >= 2)");
    auto qd = dihedral_mckay(g);
    std::vector<Chart> out;
    for (auto& gg : enumerate_ggraphs(g)) out.push_back(make_chart(g, gg, qd));
    return out;
}

// ---------------------------------------------------------------------------
// Cyclic helper pipeline
// ---------------------------------------------------------------------------

namespace detail {

struct MonomialStaircase {
    int modulus = 0, a = 0;
    std::vector<GaussPoly> gens;  // monomial generators
    std::vector<std::vector<Monomial>> std_by_class;

    MonomialStaircase(int modulus_, int a_, const std::vector<GaussPoly>& gens_, int bound)
        : modulus(modulus_), a(a_), gens(gens_), std_by_class(modulus_) {
        for (int d = 0; d <= bound; ++d)
            for (int px = d; px >= 0; --px) {
                Monomial m{px, d - px};
                if (!member(m)) std_by_class[cls(m)].push_back(m);
            }
    }
    int cls(const Monomial& m) const { return int((long(m.px) + long(a) * m.py) % modulus); }
    bool member(const Monomial& m) const {
        for (auto& g : gens)
            if (g.leading_monomial().divides(m)) return true;
        return false;
    }
    std::vector<GaussRat> coords(const GaussPoly& f, int c) const {
        auto& stds = std_by_class[c];
        std::vector<GaussRat> out(stds.size());
        for (auto& [m, co] : f.terms()) {
            if (member(m)) continue;
            bool found = false;
            for (size_t i = 0; i < stds.size(); ++i)
                if (stds[i] == m) {
                    out[i] = co;
                    found = true;
                    break;
                }
            if (!found) throw std::domain_error("staircase coords: monomial out of range");
        }
        return out;
    }
};

}  // namespace detail

/// Charts of the cyclic helper pipeline: one free affine plane per boundary
/// pair, with the monomial identification of each free coordinate.
inline std::vector<Chart> cyclic_charts(int modulus, int a) {
    auto boundary = newton_boundary_cyclic(modulus, a);
    auto qd = cyclic_mckay(modulus, a);
    std::vector<Chart> out;
    for (size_t idx = 0; idx + 1 < boundary.size(); ++idx) {
        int r = boundary[idx].r, s = boundary[idx].s;
        int u = boundary[idx + 1].r, v = boundary[idx + 1].s;
        Chart chart;
        chart.cyclic = true;
        chart.cyclic_modulus = modulus;
        chart.cyclic_a = a % modulus;
        chart.label = "A@" + std::to_string(idx);
        chart.e = boundary[idx];
        chart.enext = boundary[idx + 1];
        chart.ideal = {GaussPoly::monomial(s, 0), GaussPoly::monomial(0, u),
                       GaussPoly::monomial(s - v, u - r)};
        detail::MonomialStaircase stair(modulus, a % modulus, chart.ideal, modulus + 2);
        detail::CoordView view{
            [&stair](const GaussPoly& f, int cls) { return stair.coords(f, cls); },
            [&stair](int cls) { return (int)stair.std_by_class[cls].size(); }};
        TautRep tr = detail::build_tautological(qd, view);
        chart.sym = normalize_rep(tr);
        solve_chart(chart);
        // identification of each free coordinate with a monomial fraction
        for (int fv : chart.free_vars) {
            // locate the arrow entry carrying this variable (cyclic arrows
            // are 1x1, so the entry is the arrow itself)
            for (int aI = 0; aI < (int)qd.arrows.size(); ++aI) {
                auto& en = chart.sym.mats[aI].at(0, 0);
                if (en.pinned || en.var != fv) continue;
                Monomial tail = tr.slots[qd.arrows[aI].tail][0].c1.leading_monomial();
                Monomial head = tr.slots[qd.arrows[aI].head][0].c1.leading_monomial();
                Monomial num = qd.arrows[aI].family == "x" ? Monomial{tail.px + 1, tail.py}
                                                           : Monomial{tail.px, tail.py + 1};
                int cx = std::min(num.px, head.px), cy = std::min(num.py, head.py);
                Monomial nn{num.px - cx, num.py - cy}, dd{head.px - cx, head.py - cy};
                std::string frac = to_string(nn);
                if (!(dd.px == 0 && dd.py == 0)) frac += "/" + to_string(dd);
                chart.identifications.push_back({chart.sym.vars.name(fv), frac});
            }
        }
        out.push_back(std::move(chart));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numeric representations, stability, xy action, cluster ideals
// ---------------------------------------------------------------------------

struct NumericRep {
    QuiverData quiver;
    std::vector<GaussMatrix> matrices;
    int root = 0;
};

/// Evaluates the chart at exact parameter values (one value per free
/// variable, in chart.free_vars order).  Rejects points off the chart.
inline NumericRep instantiate(const Chart& chart, const std::vector<GaussRat>& values) {
    if (values.size() != chart.free_vars.size())
        throw std::invalid_argument("instantiate: expected " +
                                    std::to_string(chart.free_vars.size()) + " parameters");
    std::map<int, GaussRat> vals;
    for (size_t i = 0; i < values.size(); ++i) vals[chart.free_vars[i]] = values[i];
    for (auto& eq : chart.equations) {
        GaussRat res = eq.evaluate(vals);
        if (!res.is_zero())
            throw std::invalid_argument("instantiate: chart equation violated, residue " +
                                        to_string(res) + " on " + eq.to_string(chart.sym.vars));
    }
    for (auto& b : chart.bindings) vals[b.var] = b.resolved.evaluate(vals);
    NumericRep nr;
    nr.quiver = chart.sym.quiver;
    nr.root = nr.quiver.vertex_index(nr.quiver.cyclic ? "rho_0" : "rho_0+");
    for (auto& sm : chart.sym.mats) {
        GaussMatrix m(sm.rows, sm.cols);
        for (int r = 0; r < sm.rows; ++r)
            for (int c = 0; c < sm.cols; ++c) {
                auto& en = sm.at(r, c);
                m.at(r, c) = en.pinned ? en.value : vals.at(en.var);
            }
        nr.matrices.push_back(std::move(m));
    }
    return nr;
}

inline NumericRep instantiate_origin(const Chart& chart) {
    std::vector<GaussRat> vals;
    for (int v : chart.free_vars) vals.push_back(chart.origin.at(v));
    return instantiate(chart, vals);
}

/// King stability in the G-Hilb chamber: from rho_0^+ there is a nonzero
/// path image into every one-dimensional vertex and a full two-dimensional
/// span into every two-dimensional vertex.
inline bool check_stability(const NumericRep& nr) {
    const QuiverData& qd = nr.quiver;
    int nv = (int)qd.vertices.size();
    std::vector<std::vector<std::vector<GaussRat>>> echelon(nv);
    auto add_vec = [&](int v, std::vector<GaussRat> vec) -> bool {
        for (auto& row : echelon[v]) {
            int lead = 0;
            while (lead < (int)row.size() && row[lead].is_zero()) ++lead;
            if (lead < (int)vec.size() && !vec[lead].is_zero()) {
                GaussRat f = vec[lead] / row[lead];
                for (int j = 0; j < (int)vec.size(); ++j) vec[j] -= f * row[j];
            }
        }
        bool zero = true;
        for (auto& c : vec) zero &= c.is_zero();
        if (zero) return false;
        echelon[v].push_back(vec);
        // keep rows ordered by leading position for the reduction above
        std::sort(echelon[v].begin(), echelon[v].end(), [](auto& a, auto& b) {
            int la = 0, lb = 0;
            while (la < (int)a.size() && a[la].is_zero()) ++la;
            while (lb < (int)b.size() && b[lb].is_zero()) ++lb;
            return la < lb;
        });
        return true;
    };
    std::vector<std::pair<int, std::vector<GaussRat>>> queue;
    std::vector<GaussRat> seed{GaussRat(1)};
    add_vec(nr.root, seed);
    queue.push_back({nr.root, seed});
    for (size_t h = 0; h < queue.size(); ++h) {
        auto [v, vec] = queue[h];
        for (int a : qd.out_arrows(v)) {
            const GaussMatrix& m = nr.matrices[a];
            std::vector<GaussRat> img(m.cols());
            for (int c = 0; c < m.cols(); ++c)
                for (int r = 0; r < m.rows(); ++r) img[c] += vec[r] * m.at(r, c);
            if (add_vec(qd.arrows[a].head, img)) queue.push_back({qd.arrows[a].head, img});
        }
    }
    for (int v = 0; v < nv; ++v)
        if ((int)echelon[v].size() != qd.vertices[v].dim) return false;
    return true;
}

/// The x/y action on the 4n-dimensional module of a numeric representation.
struct ClusterModule {
    GroupParams group;
    GaussMatrix X, Y;
    int dim = 0;
    int v0 = 0;
    std::vector<int> offsets;  // per vertex: base index of its block
};

/// Assembles the commuting multiplication matrices.  Basis vectors are the
/// component polynomials (vertex, slot, component); the split one-dim pairs
/// absorb a factor 1/2 from the eigen-projections.
inline ClusterModule assemble_xy_action(const NumericRep& nr, const GroupParams& g) {
    const QuiverData& qd = nr.quiver;
    if (qd.cyclic) throw std::invalid_argument("assemble_xy_action: dihedral quivers only");
    ClusterModule cm;
    cm.group = g;
    int nv = (int)qd.vertices.size();
    cm.offsets.resize(nv);
    int dim = 0;
    for (int v = 0; v < nv; ++v) {
        cm.offsets[v] = dim;
        dim += qd.vertices[v].dim * qd.vertices[v].dim;
    }
    cm.dim = dim;
    cm.X = GaussMatrix(dim, dim);
    cm.Y = GaussMatrix(dim, dim);
    cm.v0 = cm.offsets[nr.root];
    auto idx = [&](int v, int slot, int comp) {
        return cm.offsets[v] + slot * qd.vertices[v].dim + comp;
    };
    GaussRat half(mpq_class(1, 2));
    GaussRat ih = GaussRat::unit_i() * half;  // i/2
    bool q_odd = g.q % 2 == 1;
    for (int a = 0; a < (int)qd.arrows.size(); ++a) {
        const auto& ar = qd.arrows[a];
        const GaussMatrix& m = nr.matrices[a];
        int v = ar.tail, w = ar.head;
        char fam = ar.family[0];
        switch (fam) {
            case 'a':
            case 'c':
                for (int j = 0; j < 2; ++j) {
                    cm.X.at(idx(v, 0, 0), idx(w, j, 0)) += m.at(0, j);
                    cm.Y.at(idx(v, 0, 0), idx(w, j, 1)) +=
                        fam == 'a' ? m.at(0, j) : -m.at(0, j);
                }
                break;
            case 'f':
            case 'h':
                for (int j = 0; j < 2; ++j) {
                    cm.Y.at(idx(v, 0, 0), idx(w, j, 0)) += m.at(0, j);
                    GaussRat cf;
                    if (q_odd) cf = fam == 'f' ? -GaussRat::unit_i() : GaussRat::unit_i();
                    else cf = fam == 'f' ? GaussRat(-1) : GaussRat(1);
                    cm.X.at(idx(v, 0, 0), idx(w, j, 1)) += cf * m.at(0, j);
                }
                break;
            case 'r':
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        cm.X.at(idx(v, i, 0), idx(w, j, 0)) += m.at(i, j);
                        cm.Y.at(idx(v, i, 1), idx(w, j, 1)) += m.at(i, j);
                    }
                break;
            case 'u':
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) {
                        cm.Y.at(idx(v, i, 0), idx(w, j, 0)) += m.at(i, j);
                        cm.X.at(idx(v, i, 1), idx(w, j, 1)) += -m.at(i, j);
                    }
                break;
            case 'b':
            case 'd':
                for (int i = 0; i < 2; ++i) {
                    cm.Y.at(idx(v, i, 0), idx(w, 0, 0)) += half * m.at(i, 0);
                    cm.X.at(idx(v, i, 1), idx(w, 0, 0)) +=
                        (fam == 'b' ? -half : half) * m.at(i, 0);
                }
                break;
            case 'e':
            case 'g':
                for (int i = 0; i < 2; ++i) {
                    cm.X.at(idx(v, i, 0), idx(w, 0, 0)) += half * m.at(i, 0);
                    GaussRat cf;
                    if (q_odd) cf = fam == 'e' ? -ih : ih;
                    else cf = fam == 'e' ? half : -half;
                    cm.Y.at(idx(v, i, 1), idx(w, 0, 0)) += cf * m.at(i, 0);
                }
                break;
            default:
                throw std::logic_error("assemble_xy_action: unknown family");
        }
    }
    // commutation is forced by the relations; violation means upstream breakage
    GaussMatrix comm = cm.X * cm.Y - cm.Y * cm.X;
    if (!comm.is_zero())
        throw std::runtime_error("assemble_xy_action: X and Y do not commute");
    return cm;
}

/// Border-style generators of the annihilator ideal of the cyclic vector:
/// monomials are visited in graded-lex order; the first dependent vector in
/// each direction emits a generator m - sum(coeffs * standard monomials).
inline std::vector<GaussPoly> cluster_ideal(const ClusterModule& cm, int deg_bound = -1) {
    const GroupParams& g = cm.group;
    if (deg_bound < 0) deg_bound = 2 * g.two_n;
    struct GrlexLess {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return grlex_cmp(a, b) < 0;
        }
    };
    std::map<Monomial, int, GrlexLess> std_index;
    std::vector<std::vector<GaussRat>> std_vecs;
    std::vector<Monomial> std_monos;
    // echelon rows with polynomial bookkeeping: row.vec = row.expansion(X,Y)v0
    struct EchRow {
        std::vector<GaussRat> vec;
        GaussPoly expansion;
        int lead;
    };
    std::vector<EchRow> ech;
    std::vector<GaussPoly> gens;
    std::set<Monomial, GrlexLess> pending{Monomial{0, 0}};
    std::set<Monomial, GrlexLess> seen{Monomial{0, 0}};
    auto apply = [&](const GaussMatrix& m, const std::vector<GaussRat>& vec) {
        std::vector<GaussRat> out(cm.dim);
        for (int r = 0; r < cm.dim; ++r) {
            if (vec[r].is_zero()) continue;
            for (int c = 0; c < cm.dim; ++c)
                if (!m.at(r, c).is_zero()) out[c] += vec[r] * m.at(r, c);
        }
        return out;
    };
    while (!pending.empty()) {
        Monomial m = *pending.begin();
        pending.erase(pending.begin());
        if (m.degree() > deg_bound)
            throw std::runtime_error("cluster_ideal: degree bound exceeded");
        std::vector<GaussRat> vec;
        if (m.px == 0 && m.py == 0) {
            vec.assign(cm.dim, GaussRat());
            vec[cm.v0] = GaussRat(1);
        } else if (m.px > 0 && std_index.count(Monomial{m.px - 1, m.py})) {
            vec = apply(cm.X, std_vecs[std_index[Monomial{m.px - 1, m.py}]]);
        } else if (m.py > 0 && std_index.count(Monomial{m.px, m.py - 1})) {
            vec = apply(cm.Y, std_vecs[std_index[Monomial{m.px, m.py - 1}]]);
        } else {
            continue;  // parent already dependent: multiples stay in the span
        }
        // reduce against the echelon
        std::vector<GaussRat> w = vec;
        GaussPoly expansion = GaussPoly::monomial(m.px, m.py);
        for (auto& row : ech) {
            if (w[row.lead].is_zero()) continue;
            GaussRat f = w[row.lead];
            for (int j = 0; j < cm.dim; ++j) w[j] -= f * row.vec[j];
            expansion -= row.expansion * f;
        }
        int lead = 0;
        while (lead < cm.dim && w[lead].is_zero()) ++lead;
        if (lead == cm.dim) {
            gens.push_back(expansion);  // m - combination of earlier monomials
            continue;
        }
        GaussRat inv = w[lead].inv();
        for (auto& c : w) c *= inv;
        EchRow row{w, expansion * inv, lead};
        // keep echelon sorted by lead for a clean reduction sweep
        auto pos = std::lower_bound(ech.begin(), ech.end(), row,
                                    [](const EchRow& a, const EchRow& b) { return a.lead < b.lead; });
        ech.insert(pos, std::move(row));
        std_index[m] = (int)std_vecs.size();
        std_vecs.push_back(vec);
        std_monos.push_back(m);
        for (Monomial child : {Monomial{m.px + 1, m.py}, Monomial{m.px, m.py + 1}})
            if (!seen.count(child)) {
                seen.insert(child);
                pending.insert(child);
            }
    }
    if ((int)std_vecs.size() != cm.dim)
        throw std::runtime_error("cluster_ideal: quotient dimension " +
                                 std::to_string(std_vecs.size()) + " != " +
                                 std::to_string(cm.dim));
    return gens;
}

/// quotient_basis + verify_regular_rep on a candidate cluster ideal.
inline MultiplicityReport verify_cluster(const std::vector<GaussPoly>& ideal,
                                         const GroupParams& g, int deg_bound = -1) {
    auto basis = quotient_basis(ideal, g, deg_bound);
    return verify_regular_rep(basis, g);
}

// ---------------------------------------------------------------------------
// Exact random sampling on a chart
// ---------------------------------------------------------------------------

/// Draws exact Gaussian-rational points on the chart: random values for most
/// parameters, with remaining ones solved from equations where they occur
/// linearly.  Deterministic given the rng state.
inline std::optional<std::vector<GaussRat>> sample_chart_point(const Chart& chart,
                                                               std::mt19937_64& rng,
                                                               int max_attempts = 100) {
    std::uniform_int_distribution<int> numd(-3, 3), dend(1, 2);
    auto rand_rat = [&]() {
        mpq_class re(numd(rng), dend(rng)), im(numd(rng), dend(rng));
        re.canonicalize();
        im.canonicalize();
        return GaussRat(re, im);
    };
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::map<int, GaussRat> vals;
        std::vector<VarPoly> eqs = chart.equations;
        std::set<int> assigned;
        bool bad = false;
        while (!bad) {
            bool progress = false;
            std::vector<VarPoly> next;
            for (auto& eq : eqs) {
                VarPoly res = eq;
                for (auto& [v, val] : vals) res = res.substitute(v, VarPoly(val));
                if (res.is_constant()) {
                    if (!res.constant_value().is_zero()) bad = true;
                    progress = true;
                    continue;  // consumed
                }
                auto invars = res.variables();
                if (invars.size() == 1) {
                    GaussRat c;
                    VarPoly rest;
                    if (res.split_linear(invars[0], c, rest) && rest.is_constant()) {
                        vals[invars[0]] = -rest.constant_value() / c;
                        assigned.insert(invars[0]);
                        progress = true;
                        continue;
                    }
                    bad = true;  // single variable but nonlinear: retry
                    continue;
                }
                next.push_back(eq);
            }
            eqs = std::move(next);
            if (bad || eqs.empty()) break;
            if (!progress) {
                // assign a random value to the lex-largest unassigned
                // variable still occurring in an equation, keeping earlier
                // variables available as linear solve targets
                int pick = -1;
                for (auto& eq : eqs)
                    for (int v : eq.variables())
                        if (!vals.count(v) &&
                            (pick < 0 ||
                             chart.sym.vars.name(v) > chart.sym.vars.name(pick)))
                            pick = v;
                if (pick < 0) break;
                vals[pick] = rand_rat();
            }
        }
        if (bad) continue;
        std::vector<GaussRat> out;
        for (int v : chart.free_vars) {
            auto it = vals.find(v);
            out.push_back(it == vals.end() ? rand_rat() : it->second);
        }
        // final validation
        std::map<int, GaussRat> check;
        for (size_t i = 0; i < out.size(); ++i) check[chart.free_vars[i]] = out[i];
        bool ok = true;
        for (auto& eq : chart.equations) ok &= eq.evaluate(check).is_zero();
        if (ok) return out;
    }
    return std::nullopt;
}

}  // namespace dihilb
