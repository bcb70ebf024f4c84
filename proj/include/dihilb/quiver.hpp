#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihilb/ggraph.hpp"

namespace dihilb {

struct QuiverVertex {
    std::string name;
    Irrep rep;
    int dim = 1;
    int cls1 = 0;  // alpha-class of the first component
    int cls2 = 0;  // alpha-class of the second component (= a * cls1)
};

struct QuiverArrow {
    std::string name;
    std::string family;  // "a".."h", "r", "u" (dihedral); "x", "y" (cyclic)
    int t = 0, j = 0;    // segment index, chain index (r/u only)
    int tail = 0, head = 0;
};

/// A template or numeric matrix attached to an arrow: rows indexed by the
/// tail multiplicity space, columns by the head.  Entries act on row vectors
/// from the right, so a path p = p1 p2 has matrix M(p1) * M(p2).
struct PolyMat {
    int rows = 0, cols = 0;
    std::vector<GaussPoly> e;

    PolyMat() = default;
    PolyMat(int r, int c) : rows(r), cols(c), e(r * c) {}
    GaussPoly& at(int r, int c) { return e[r * cols + c]; }
    const GaussPoly& at(int r, int c) const { return e[r * cols + c]; }

    PolyMat operator*(const PolyMat& o) const {
        PolyMat out(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k).is_zero()) continue;
                for (int j2 = 0; j2 < o.cols; ++j2) out.at(i, j2) += at(i, k) * o.at(k, j2);
            }
        return out;
    }
    PolyMat operator+(const PolyMat& o) const {
        PolyMat out = *this;
        for (size_t i = 0; i < e.size(); ++i) out.e[i] += o.e[i];
        return out;
    }
    PolyMat operator*(const GaussRat& c) const {
        PolyMat out = *this;
        for (auto& v : out.e) v = v * c;
        return out;
    }
    bool is_zero() const {
        for (auto& v : e) if (!v.is_zero()) return false;
        return true;
    }
};

struct PathTerm {
    GaussRat coeff;
    std::vector<int> arrows;  // arrow indices, in composition order
};

struct Relation {
    std::vector<PathTerm> terms;  // sum of terms = 0; shared tail and head
};

struct FundamentalDomain {
    // parallelogram corners with opposite sides identified
    std::vector<std::pair<int, int>> corners;
    int lattice_points = 0;
};

struct QuiverData {
    GroupParams group;
    bool cyclic = false;
    int cyclic_modulus = 0, cyclic_a = 0;
    std::vector<QuiverVertex> vertices;
    std::vector<QuiverArrow> arrows;
    FundamentalDomain domain;

    int vertex_index(const std::string& name) const {
        for (int i = 0; i < (int)vertices.size(); ++i)
            if (vertices[i].name == name) return i;
        throw std::invalid_argument("quiver: no vertex " + name);
    }
    int arrow_index(const std::string& name) const {
        for (int i = 0; i < (int)arrows.size(); ++i)
            if (arrows[i].name == name) return i;
        throw std::invalid_argument("quiver: no arrow " + name);
    }
    /// Out-arrows of a vertex in the canonical traversal order
    /// (a, c, r, e, g, b, d, u, f, h, then by segment and chain index).
    std::vector<int> out_arrows(int v) const {
        static const std::string order = "acregbdufhxy";
        std::vector<int> out;
        for (int rank = 0; rank < (int)order.size(); ++rank)
            for (int i = 0; i < (int)arrows.size(); ++i)
                if (arrows[i].tail == v && arrows[i].family == std::string(1, order[rank]))
                    out.push_back(i);
        return out;
    }
    std::vector<int> in_arrows(int v) const {
        std::vector<int> out;
        for (int i = 0; i < (int)arrows.size(); ++i)
            if (arrows[i].head == v) out.push_back(i);
        return out;
    }
};

namespace detail {

inline std::string seg_name(const std::string& fam, int t, int k) {
    return k == 1 ? fam : fam + std::to_string(t);
}

inline std::string chain_name(const std::string& fam, int t, int j, int k) {
    return (k == 1 ? fam : fam + std::to_string(t)) + "_" + std::to_string(j);
}

}  // namespace detail

/// McKay quiver of the cyclic group 1/N(1, a): N one-dimensional vertices
/// rho_j with arrows x_j : j -> j+1 and y_j : j -> j+a.
inline QuiverData cyclic_mckay(int modulus, int a) {
    if (modulus < 2 || a < 1 || std::gcd(a, modulus) != 1)
        throw std::invalid_argument("cyclic_mckay: need gcd(a, N) = 1");
    QuiverData qd;
    qd.cyclic = true;
    qd.cyclic_modulus = modulus;
    qd.cyclic_a = a % modulus;
    for (int j = 0; j < modulus; ++j)
        qd.vertices.push_back({"rho_" + std::to_string(j), {Irrep::OneDim, j, +1}, 1, j, j});
    auto name = [&](bool isx, int j) -> std::string {
        if (modulus <= 26) return std::string(1, char((isx ? 'a' : 'A') + j));
        return std::string(isx ? "x" : "y") + std::to_string(j);
    };
    for (int j = 0; j < modulus; ++j)
        qd.arrows.push_back({name(true, j), "x", j, 0, j, (j + 1) % modulus});
    for (int j = 0; j < modulus; ++j)
        qd.arrows.push_back({name(false, j), "y", j, 0, j, (j + qd.cyclic_a) % modulus});
    return qd;
}

/// Orbifold McKay quiver of a BD group with k odd and q >= 2: the cyclic
/// quiver folded by the conjugation involution.  Fixed residues split into
/// +/- vertex pairs; free orbits merge into two-dimensional vertices.
/// Segment t holds P(t) = rho_{t(a+1)}^{+-}, the chain V_{t,1..q-1} at
/// classes t(a+1)+j, and Q(t) = rho_{(t-1)(a+1)+q}^{+-}.
inline QuiverData dihedral_mckay(const GroupParams& g) {
    if (!g.k_odd) throw std::invalid_argument("dihedral_mckay: k must be odd");
    if (g.q < 2) throw std::invalid_argument("dihedral_mckay: q must be >= 2");
    QuiverData qd;
    qd.group = g;
    int k = g.k, q = g.q;
    auto cls = [&](long v) { return g.mod(v); };
    std::map<std::pair<int, int>, int> vid;  // (kind, t*q + j) -> index

    auto add_vertex = [&](QuiverVertex v) {
        qd.vertices.push_back(std::move(v));
        return (int)qd.vertices.size() - 1;
    };
    std::vector<int> pplus(k), pminus(k), qplus(k), qminus(k);
    std::vector<std::vector<int>> vmid(k, std::vector<int>(q));  // [t][j], j in 1..q-1
    for (int t = 0; t < k; ++t) {
        int c = cls(long(t) * (g.a + 1));
        pplus[t] = add_vertex({"rho_" + std::to_string(c) + "+", {Irrep::OneDim, c, +1}, 1, c, c});
        pminus[t] = add_vertex({"rho_" + std::to_string(c) + "-", {Irrep::OneDim, c, -1}, 1, c, c});
    }
    for (int t = 0; t < k; ++t)
        for (int j = 1; j <= q - 1; ++j) {
            int c1 = cls(long(t) * (g.a + 1) + j);
            int c2 = cls(long(g.a) * c1);
            int canon = std::min(c1, c2);
            vmid[t][j] = add_vertex({"V_" + std::to_string(c1), {Irrep::TwoDim, canon, +1}, 2,
                                     c1, c2});
        }
    for (int t = 0; t < k; ++t) {
        int c = cls(long(t - 1) * (g.a + 1) + q);
        qplus[t] = add_vertex({"rho_" + std::to_string(c) + "+", {Irrep::OneDim, c, +1}, 1, c, c});
        qminus[t] = add_vertex({"rho_" + std::to_string(c) + "-", {Irrep::OneDim, c, -1}, 1, c, c});
    }
    (void)vid;

    using detail::chain_name;
    using detail::seg_name;
    auto mod_k = [&](int t) { return ((t % k) + k) % k; };
    for (int t = 0; t < k; ++t) {
        qd.arrows.push_back({seg_name("a", t, k), "a", t, 0, pplus[t], vmid[t][1]});
        qd.arrows.push_back({seg_name("c", t, k), "c", t, 0, pminus[t], vmid[t][1]});
        qd.arrows.push_back({seg_name("b", t, k), "b", t, 0, vmid[mod_k(t - 1)][1], pplus[t]});
        qd.arrows.push_back({seg_name("d", t, k), "d", t, 0, vmid[mod_k(t - 1)][1], pminus[t]});
        for (int j = 1; j <= q - 2; ++j) {
            qd.arrows.push_back({chain_name("r", t, j, k), "r", t, j,
                                 vmid[mod_k(t - 1)][j], vmid[mod_k(t - 1)][j + 1]});
            qd.arrows.push_back({chain_name("u", t, j, k), "u", t, j,
                                 vmid[mod_k(t - 1)][j + 1], vmid[t][j]});
        }
        qd.arrows.push_back({seg_name("e", t, k), "e", t, 0, vmid[mod_k(t - 1)][q - 1], qplus[t]});
        qd.arrows.push_back({seg_name("g", t, k), "g", t, 0, vmid[mod_k(t - 1)][q - 1], qminus[t]});
        qd.arrows.push_back({seg_name("f", t, k), "f", t, 0, qplus[t], vmid[t][q - 1]});
        qd.arrows.push_back({seg_name("h", t, k), "h", t, 0, qminus[t], vmid[t][q - 1]});
    }

    qd.domain.corners = {{0, 0}, {k, k}, {2 * q, 0}, {k + 2 * q, k}};
    qd.domain.lattice_points = 2 * k * q;
    return qd;
}

/// xy-multiplication template of one arrow: entries are scalars times x or y.
inline PolyMat xy_template(const QuiverData& qd, int arrow) {
    const auto& ar = qd.arrows[arrow];
    auto X = GaussPoly::x();
    auto Y = GaussPoly::y();
    GaussRat i = GaussRat::unit_i();
    bool q_odd = !qd.cyclic && qd.group.q % 2 == 1;
    auto row2 = [&](GaussPoly a, GaussPoly b) {
        PolyMat m(1, 2);
        m.at(0, 0) = a;
        m.at(0, 1) = b;
        return m;
    };
    auto col2 = [&](GaussPoly a, GaussPoly b) {
        PolyMat m(2, 1);
        m.at(0, 0) = a;
        m.at(1, 0) = b;
        return m;
    };
    auto diag = [&](GaussPoly a, GaussPoly b) {
        PolyMat m(2, 2);
        m.at(0, 0) = a;
        m.at(1, 1) = b;
        return m;
    };
    auto scalar = [&](GaussPoly a) {
        PolyMat m(1, 1);
        m.at(0, 0) = a;
        return m;
    };
    char f = ar.family[0];
    switch (f) {
        case 'x': return scalar(X);
        case 'y': return scalar(Y);
        case 'a': return row2(X, Y);
        case 'c': return row2(X, -Y);
        case 'b': return col2(Y, -X);
        case 'd': return col2(Y, X);
        case 'r': return diag(X, Y);
        case 'u': return diag(Y, -X);
        case 'e': return col2(X, q_odd ? Y * i : Y);
        case 'g': return col2(X, q_odd ? Y * (-i) : -Y);
        case 'f': return row2(Y, q_odd ? X * i : -X);
        case 'h': return row2(Y, q_odd ? X * (-i) : X);
    }
    throw std::logic_error("xy_template: unknown family");
}

/// All arrow templates, indexed like qd.arrows.
inline std::vector<PolyMat> xy_templates(const QuiverData& qd) {
    std::vector<PolyMat> out;
    for (int i = 0; i < (int)qd.arrows.size(); ++i) out.push_back(xy_template(qd, i));
    return out;
}

/// Relation set of the bound quiver.  Dihedral: per segment (mod k) the four
/// short relations a_i b_{i+1} = c_i d_{i+1} = f_i e_{i+1} = h_i g_{i+1} = 0
/// and the long ladder b_i a_i + d_i c_i = 2 r_{i,1} u_{i,1},
/// u_{i,j} r_{i+1,j} = r_{i,j+1} u_{i,j+1}, e_i f_i + g_i h_i =
/// 2 u_{i,q-2} r_{i+1,q-2}; for q = 2 the ladder contracts to
/// b_i a_i + d_i c_i = e_i f_i + g_i h_i.  Cyclic: commuting squares
/// x_j y_{j+1} = y_j x_{j+a}.
inline std::vector<Relation> relation_set(const QuiverData& qd) {
    std::vector<Relation> rels;
    auto ai = [&](const std::string& n) { return qd.arrow_index(n); };
    if (qd.cyclic) {
        int n = qd.cyclic_modulus, a = qd.cyclic_a;
        for (int j = 0; j < n; ++j) {
            std::string xj = qd.arrows[j].name, yj1 = qd.arrows[n + (j + 1) % n].name;
            std::string yj = qd.arrows[n + j].name, xja = qd.arrows[(j + a) % n].name;
            rels.push_back({{{GaussRat(1), {ai(xj), ai(yj1)}},
                             {GaussRat(-1), {ai(yj), ai(xja)}}}});
        }
        return rels;
    }
    int k = qd.group.k, q = qd.group.q;
    using detail::chain_name;
    using detail::seg_name;
    auto mod_k = [&](int t) { return ((t % k) + k) % k; };
    for (int t = 0; t < k; ++t) {
        int t1 = mod_k(t + 1);
        for (auto [fwd, back] : {std::pair{"a", "b"}, {"c", "d"}, {"f", "e"}, {"h", "g"}}) {
            rels.push_back({{{GaussRat(1),
                              {ai(seg_name(fwd, t, k)), ai(seg_name(back, t1, k))}}}});
        }
        Relation left{{{GaussRat(1), {ai(seg_name("b", t, k)), ai(seg_name("a", t, k))}},
                       {GaussRat(1), {ai(seg_name("d", t, k)), ai(seg_name("c", t, k))}}}};
        Relation right{{{GaussRat(1), {ai(seg_name("e", t, k)), ai(seg_name("f", t, k))}},
                        {GaussRat(1), {ai(seg_name("g", t, k)), ai(seg_name("h", t, k))}}}};
        if (q == 2) {
            // b_t a_t + d_t c_t - e_t f_t - g_t h_t = 0
            Relation rel = left;
            for (auto term : right.terms) {
                term.coeff = -term.coeff;
                rel.terms.push_back(term);
            }
            rels.push_back(rel);
        } else {
            left.terms.push_back({GaussRat(-2), {ai(chain_name("r", t, 1, k)),
                                                 ai(chain_name("u", t, 1, k))}});
            rels.push_back(left);
            for (int j = 1; j <= q - 3; ++j)
                rels.push_back({{{GaussRat(1), {ai(chain_name("u", t, j, k)),
                                                ai(chain_name("r", t1, j, k))}},
                                 {GaussRat(-1), {ai(chain_name("r", t, j + 1, k)),
                                                 ai(chain_name("u", t, j + 1, k))}}}});
            right.terms.push_back({GaussRat(-2), {ai(chain_name("u", t, q - 2, k)),
                                                  ai(chain_name("r", t1, q - 2, k))}});
            rels.push_back(right);
        }
    }
    return rels;
}

inline std::string to_string(const QuiverData& qd, const Relation& rel) {
    std::string out;
    for (size_t i = 0; i < rel.terms.size(); ++i) {
        const auto& term = rel.terms[i];
        GaussRat c = term.coeff;
        bool neg = c.re < 0 || (c.re == 0 && c.im < 0);
        if (neg) c = -c;
        if (i == 0) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (c != GaussRat(1)) out += to_string(c) + "*";
        for (size_t a = 0; a < term.arrows.size(); ++a) {
            if (a) out += "*";
            out += qd.arrows[term.arrows[a]].name;
        }
    }
    return out;
}

struct RelationCheck {
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> residues;  // relation, residue
};

/// Substitutes the xy-templates into every relation; each must vanish as a
/// polynomial matrix.  This single check pins every index convention in the
/// quiver construction.
inline RelationCheck verify_relations_symbolic(const QuiverData& qd) {
    auto templates = xy_templates(qd);
    RelationCheck out;
    for (auto& rel : relation_set(qd)) {
        PolyMat sum;
        bool first = true;
        for (auto& term : rel.terms) {
            PolyMat prod = templates[term.arrows[0]];
            for (size_t i = 1; i < term.arrows.size(); ++i)
                prod = prod * templates[term.arrows[i]];
            prod = prod * term.coeff;
            sum = first ? prod : sum + prod;
            first = false;
        }
        if (!sum.is_zero()) {
            out.ok = false;
            std::string res;
            for (auto& p : sum.e) res += to_string(p) + "; ";
            out.residues.push_back({to_string(qd, rel), res});
        }
    }
    return out;
}

/// Deterministic DOT rendering: vertices and arrows in construction order.
inline std::string export_dot(const QuiverData& qd) {
    std::string out = "digraph mckay {\n";
    for (auto& v : qd.vertices)
        out += "  \"" + v.name + "\" [shape=" + (v.dim == 2 ? "box" : "ellipse") + "];\n";
    for (auto& a : qd.arrows)
        out += "  \"" + qd.vertices[a.tail].name + "\" -> \"" + qd.vertices[a.head].name +
               "\" [label=\"" + a.name + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace dihilb
