#include <gtest/gtest.h>

#include <set>

#include "dihilb/quiver.hpp"

using namespace dihilb;

namespace {

TEST(CyclicMcKay, SmallCases) {
    auto q5 = cyclic_mckay(5, 2);
    EXPECT_EQ(q5.vertices.size(), 5u);
    EXPECT_EQ(q5.arrows.size(), 10u);
    EXPECT_EQ(q5.arrows[0].name, "a");   // x_0
    EXPECT_EQ(q5.arrows[5].name, "A");   // y_0
    EXPECT_EQ(q5.arrows[5].head, 2);     // y: 0 -> 0 + 2

    auto q30 = cyclic_mckay(30, 19);
    EXPECT_EQ(q30.vertices.size(), 30u);
    EXPECT_EQ(q30.arrows.size(), 60u);

    auto q2 = cyclic_mckay(2, 1);
    EXPECT_EQ(q2.vertices.size(), 2u);
    EXPECT_EQ(q2.arrows.size(), 4u);  // doubled arrows between the two vertices
    EXPECT_EQ(q2.arrows[0].head, q2.arrows[2].head);
}

TEST(CyclicMcKay, RelationsAreCommutingSquares) {
    auto qd = cyclic_mckay(5, 2);
    auto rels = relation_set(qd);
    EXPECT_EQ(rels.size(), 5u);
    EXPECT_EQ(to_string(qd, rels[0]), "a*B - A*c");
    auto check = verify_relations_symbolic(qd);
    EXPECT_TRUE(check.ok);
}

TEST(DihedralMcKay, D4Shape) {
    auto d4 = make_group(4, 3);
    auto qd = dihedral_mckay(d4);
    ASSERT_EQ(qd.vertices.size(), 5u);
    ASSERT_EQ(qd.arrows.size(), 8u);
    int one = 0, two = 0;
    for (auto& v : qd.vertices) (v.dim == 1 ? one : two)++;
    EXPECT_EQ(one, 4);
    EXPECT_EQ(two, 1);
    // relations: ab = cd = fe = hg = 0 and ba + dc = ef + gh
    auto rels = relation_set(qd);
    ASSERT_EQ(rels.size(), 5u);
    EXPECT_EQ(to_string(qd, rels[0]), "a*b");
    EXPECT_EQ(to_string(qd, rels[1]), "c*d");
    EXPECT_EQ(to_string(qd, rels[2]), "f*e");
    EXPECT_EQ(to_string(qd, rels[3]), "h*g");
    EXPECT_EQ(to_string(qd, rels[4]), "b*a + d*c - e*f - g*h");
}

TEST(DihedralMcKay, BD30Census) {
    auto g = make_group(30, 19);
    auto qd = dihedral_mckay(g);
    int one = 0, two = 0;
    for (auto& v : qd.vertices) (v.dim == 1 ? one : two)++;
    EXPECT_EQ(one, 12);
    EXPECT_EQ(two, 12);
    EXPECT_EQ(qd.vertices.size(), 24u);
    // one-dim labels rho_{0,5,10,15,20,25}^{+-}
    std::vector<std::string> names;
    for (auto& v : qd.vertices)
        if (v.dim == 1) names.push_back(v.name);
    for (int j : {0, 5, 10, 15, 20, 25}) {
        std::string p = "rho_" + std::to_string(j) + "+";
        std::string m = "rho_" + std::to_string(j) + "-";
        EXPECT_NE(std::find(names.begin(), names.end(), p), names.end()) << p;
        EXPECT_NE(std::find(names.begin(), names.end(), m), names.end()) << m;
    }
}

TEST(DihedralMcKay, BD42Census) {
    auto g = make_group(42, 13);
    auto qd = dihedral_mckay(g);
    int one = 0, two = 0;
    for (auto& v : qd.vertices) (v.dim == 1 ? one : two)++;
    EXPECT_EQ(one, 12);   // 4k = 12
    EXPECT_EQ(two, 18);   // k(q-1) = 3 * 6
    auto rels = relation_set(qd);
    // per segment: 4 short + (1 + (q-3) + 1) long
    EXPECT_EQ(rels.size(), size_t(g.k * (4 + g.q - 1)));
}

TEST(DihedralMcKay, RejectsUnsupported) {
    EXPECT_THROW(dihedral_mckay(make_group(8, 5)), std::invalid_argument);   // k even
    EXPECT_THROW(dihedral_mckay(make_group(6, 1)), std::invalid_argument);   // q = 1
}

TEST(XYTemplates, D4MatchesFigure) {
    auto qd = dihedral_mckay(make_group(4, 3));
    auto T = [&](const std::string& n) { return xy_template(qd, qd.arrow_index(n)); };
    EXPECT_EQ(to_string(T("a").at(0, 0)), "x");
    EXPECT_EQ(to_string(T("a").at(0, 1)), "y");
    EXPECT_EQ(to_string(T("c").at(0, 1)), "-y");
    EXPECT_EQ(to_string(T("b").at(0, 0)), "y");
    EXPECT_EQ(to_string(T("b").at(1, 0)), "-x");
    EXPECT_EQ(to_string(T("d").at(1, 0)), "x");
    // q even right edge
    EXPECT_EQ(to_string(T("e").at(1, 0)), "y");
    EXPECT_EQ(to_string(T("g").at(1, 0)), "-y");
    EXPECT_EQ(to_string(T("f").at(0, 1)), "-x");
    EXPECT_EQ(to_string(T("h").at(0, 1)), "x");
}

TEST(XYTemplates, OddQRightEdge) {
    auto qd = dihedral_mckay(make_group(42, 13));  // q = 7 odd
    auto T = [&](const std::string& n) { return xy_template(qd, qd.arrow_index(n)); };
    EXPECT_EQ(to_string(T("e0").at(1, 0)), "i*y");
    EXPECT_EQ(to_string(T("g0").at(1, 0)), "-i*y");
    EXPECT_EQ(to_string(T("f0").at(0, 1)), "i*x");
    EXPECT_EQ(to_string(T("h0").at(0, 1)), "-i*x");
    // composite r then u: diag(x, y) * diag(y, -x) = xy * diag(1, -1)
    auto ru = T("r0_1") * T("u0_1");
    EXPECT_EQ(to_string(ru.at(0, 0)), "x*y");
    EXPECT_EQ(to_string(ru.at(1, 1)), "-x*y");
    EXPECT_TRUE(ru.at(0, 1).is_zero());
}

TEST(VerifyRelations, D4) {
    auto qd = dihedral_mckay(make_group(4, 3));
    auto check = verify_relations_symbolic(qd);
    EXPECT_TRUE(check.ok);
    for (auto& [rel, res] : check.residues) ADD_FAILURE() << rel << " -> " << res;
}

TEST(VerifyRelations, Sweep60) {
    for (auto& g : enumerate_small_groups(60)) {
        auto qd = dihedral_mckay(g);
        auto check = verify_relations_symbolic(qd);
        EXPECT_TRUE(check.ok) << "(" << g.two_n << "," << g.a << ")";
    }
}

TEST(QuiverInvariants, DegreesAndDims) {
    for (auto& g : enumerate_small_groups(42)) {
        auto qd = dihedral_mckay(g);
        int total = 0;
        for (auto& v : qd.vertices) total += v.dim;
        EXPECT_EQ(total, g.two_n + 2 * g.k);  // sum of dims over vertices
        // one-dim vertices: exactly one in- and one out-arrow; two-dim
        // vertices have total degree 4 counting each split +- pair
        // (a/c, b/d, e/g, f/h) as a single orbifold arrow
        auto unit = [](const std::string& fam) -> std::string {
            if (fam == "a" || fam == "c") return "ac";
            if (fam == "b" || fam == "d") return "bd";
            if (fam == "e" || fam == "g") return "eg";
            if (fam == "f" || fam == "h") return "fh";
            return fam;
        };
        for (int v = 0; v < (int)qd.vertices.size(); ++v) {
            if (qd.vertices[v].dim == 1) {
                EXPECT_EQ(qd.out_arrows(v).size(), 1u) << qd.vertices[v].name;
                EXPECT_EQ(qd.in_arrows(v).size(), 1u) << qd.vertices[v].name;
            } else {
                std::set<std::string> in, out;
                for (int a : qd.in_arrows(v)) in.insert(unit(qd.arrows[a].family));
                for (int a : qd.out_arrows(v)) out.insert(unit(qd.arrows[a].family));
                EXPECT_EQ(in.size() + out.size(), 4u) << qd.vertices[v].name;
            }
        }
        // the dimension vector matches the irrep list
        std::map<std::string, int> by_name;
        for (auto& v : qd.vertices) by_name[v.name] = v.dim;
        int count = 0;
        for (auto& rho : irreps(g)) {
            if (rho.kind == Irrep::OneDim) {
                EXPECT_EQ(by_name.at(to_string(rho)), 1);
                ++count;
            }
        }
        EXPECT_EQ(count, 4 * g.k);
        // fundamental domain lattice point count
        EXPECT_EQ(qd.domain.lattice_points, g.two_n);
    }
}

TEST(QuiverInvariants, VertexClassesConsistent) {
    for (auto& g : enumerate_small_groups(42)) {
        auto qd = dihedral_mckay(g);
        for (auto& v : qd.vertices) {
            EXPECT_EQ(v.cls2, g.mod(long(g.a) * v.cls1));
            if (v.dim == 2)
                EXPECT_EQ(v.rep.index, std::min(v.cls1, v.cls2));
        }
        // every arrow moves classes by multiplication with x or y
        auto templates = xy_templates(qd);
        for (int a = 0; a < (int)qd.arrows.size(); ++a) {
            auto& ar = qd.arrows[a];
            auto& tv = qd.vertices[ar.tail];
            auto& hv = qd.vertices[ar.head];
            std::vector<int> tcls{tv.cls1, tv.cls2}, hcls{hv.cls1, hv.cls2};
            for (int r = 0; r < templates[a].rows; ++r)
                for (int c = 0; c < templates[a].cols; ++c) {
                    const GaussPoly& p = templates[a].at(r, c);
                    if (p.is_zero()) continue;
                    Monomial m = p.leading_monomial();
                    int shift = m.px == 1 ? 1 : g.a;
                    EXPECT_EQ(g.mod(tcls[r] + shift), hcls[c])
                        << ar.name << " entry " << r << "," << c;
                }
        }
    }
}

TEST(ExportDot, Deterministic) {
    auto d4 = dihedral_mckay(make_group(4, 3));
    auto dot = export_dot(d4);
    EXPECT_EQ(dot, export_dot(dihedral_mckay(make_group(4, 3))));
    // 5 nodes + 8 edges
    size_t nodes = 0, edges = 0;
    for (size_t i = 0; (i = dot.find("shape=", i)) != std::string::npos; ++i) ++nodes;
    for (size_t i = 0; (i = dot.find("->", i)) != std::string::npos; ++i) ++edges;
    EXPECT_EQ(nodes, 5u);
    EXPECT_EQ(edges, 8u);

    auto c5 = export_dot(cyclic_mckay(5, 2));
    size_t cn = 0, ce = 0;
    for (size_t i = 0; (i = c5.find("shape=", i)) != std::string::npos; ++i) ++cn;
    for (size_t i = 0; (i = c5.find("->", i)) != std::string::npos; ++i) ++ce;
    EXPECT_EQ(cn, 5u);
    EXPECT_EQ(ce, 10u);

    auto b30 = export_dot(dihedral_mckay(make_group(30, 19)));
    size_t bn = 0;
    for (size_t i = 0; (i = b30.find("shape=", i)) != std::string::npos; ++i) ++bn;
    EXPECT_EQ(bn, 24u);
}

}  // namespace
