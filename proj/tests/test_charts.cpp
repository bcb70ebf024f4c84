#include <gtest/gtest.h>

#include "dihilb/charts.hpp"

using namespace dihilb;

namespace {

GaussPoly mono(int px, int py, GaussRat c = GaussRat(1)) {
    return GaussPoly::monomial(px, py, c);
}

VarPoly var(const Chart& ch, const std::string& name) {
    return VarPoly::variable(ch.sym.vars.index.at(name));
}

const Chart& chart_by_label(const std::vector<Chart>& charts, const std::string& label) {
    for (auto& c : charts)
        if (c.label == label) return c;
    throw std::runtime_error("no chart " + label);
}

std::vector<std::string> free_names(const Chart& ch) {
    std::vector<std::string> out;
    for (int v : ch.free_vars) out.push_back(ch.sym.vars.name(v));
    return out;
}

TEST(D4Charts, FivePaperEquations) {
    auto g = make_group(4, 3);
    auto charts = make_charts(g);
    ASSERT_EQ(charts.size(), 5u);

    // type A: free {c, d, G}, equation c*d = (1 + c*d^2)*G
    {
        auto& ch = chart_by_label(charts, "A");
        EXPECT_EQ(free_names(ch), (std::vector<std::string>{"c", "d", "G"}));
        ASSERT_EQ(ch.equations.size(), 1u);
        VarPoly c = var(ch, "c"), d = var(ch, "d"), G = var(ch, "G");
        VarPoly expect = c * d - (VarPoly(GaussRat(1)) + c * d * d) * G;
        EXPECT_TRUE(equal_up_to_unit(ch.equations[0], expect))
            << ch.equations[0].to_string(ch.sym.vars);
        // bindings: H = -1 - c*d^2 and B = -c - G^2*H (resolved forms)
        VarPoly H_expect = -VarPoly(GaussRat(1)) - c * d * d;
        VarPoly B_expect = -c - G * G * H_expect;
        bool saw_h = false, saw_b = false;
        for (auto& b : ch.bindings) {
            if (ch.sym.vars.name(b.var) == "H") {
                EXPECT_EQ(b.resolved, H_expect);
                saw_h = true;
            }
            if (ch.sym.vars.name(b.var) == "B") {
                EXPECT_EQ(b.resolved, B_expect);
                saw_b = true;
            }
        }
        EXPECT_TRUE(saw_h);
        EXPECT_TRUE(saw_b);
        // origin is the all-zero point
        for (int v : ch.free_vars) EXPECT_TRUE(ch.origin.at(v).is_zero());
    }
    // type C+: free {D, G, H}, equation G*H = (1 + H)*D
    {
        auto& ch = chart_by_label(charts, "C+");
        EXPECT_EQ(free_names(ch), (std::vector<std::string>{"D", "G", "H"}));
        ASSERT_EQ(ch.equations.size(), 1u);
        VarPoly D = var(ch, "D"), G = var(ch, "G"), H = var(ch, "H");
        EXPECT_TRUE(equal_up_to_unit(ch.equations[0],
                                     G * H - (VarPoly(GaussRat(1)) + H) * D))
            << ch.equations[0].to_string(ch.sym.vars);
    }
    // type C-: free {D, E, F}, equation E*F = (F + 1)*D
    {
        auto& ch = chart_by_label(charts, "C-");
        EXPECT_EQ(free_names(ch), (std::vector<std::string>{"D", "E", "F"}));
        ASSERT_EQ(ch.equations.size(), 1u);
        VarPoly D = var(ch, "D"), E = var(ch, "E"), F = var(ch, "F");
        EXPECT_TRUE(equal_up_to_unit(ch.equations[0],
                                     E * F - (F + VarPoly(GaussRat(1))) * D))
            << ch.equations[0].to_string(ch.sym.vars);
    }
    // type D+: free {D, g, h}, equation g*h = (g^2*h - 1)*D
    {
        auto& ch = chart_by_label(charts, "D+");
        EXPECT_EQ(free_names(ch), (std::vector<std::string>{"D", "g", "h"}));
        ASSERT_EQ(ch.equations.size(), 1u);
        VarPoly D = var(ch, "D"), gg = var(ch, "g"), h = var(ch, "h");
        EXPECT_TRUE(equal_up_to_unit(ch.equations[0],
                                     gg * h - (gg * gg * h - VarPoly(GaussRat(1))) * D))
            << ch.equations[0].to_string(ch.sym.vars);
    }
    // type D-: free {D, e, f}, equation e*f = (e^2*f - 1)*D
    {
        auto& ch = chart_by_label(charts, "D-");
        EXPECT_EQ(free_names(ch), (std::vector<std::string>{"D", "e", "f"}));
        ASSERT_EQ(ch.equations.size(), 1u);
        VarPoly D = var(ch, "D"), e = var(ch, "e"), f = var(ch, "f");
        EXPECT_TRUE(equal_up_to_unit(ch.equations[0],
                                     e * f - (e * e * f - VarPoly(GaussRat(1))) * D))
            << ch.equations[0].to_string(ch.sym.vars);
    }
}

TEST(D4Charts, OpenConditionsTypeA) {
    auto g = make_group(4, 3);
    auto qd = dihedral_mckay(g);
    auto gg = enumerate_ggraphs(g)[0];  // type A
    QuotientRing qr(g, gg.ideal, 2 * g.two_n + 8);
    detail::CoordView view{
        [&qr](const GaussPoly& f, int cls) { return qr.coords(f, cls); },
        [&qr](int cls) { return qr.class_dim(cls); }};
    auto tr = detail::build_tautological(qd, view);
    auto oc = open_conditions(tr, gg.label);
    // a, F (second slot of f), e, g nonzero-normalized; D pinned on d's row 2
    std::vector<std::string> nz = oc.nonzero_entries;
    std::sort(nz.begin(), nz.end());
    EXPECT_EQ(nz, (std::vector<std::string>{"D", "F", "a", "e", "g"}));
}

TEST(D4Charts, InstantiateAndStability) {
    auto g = make_group(4, 3);
    auto charts = make_charts(g);
    auto& A = chart_by_label(charts, "A");
    // (0,0,0) and (1,0,0) satisfy the equation; (1,1,1) violates it
    auto origin = instantiate(A, {GaussRat(0), GaussRat(0), GaussRat(0)});
    EXPECT_TRUE(check_stability(origin));
    auto pt = instantiate(A, {GaussRat(1), GaussRat(0), GaussRat(0)});
    EXPECT_TRUE(check_stability(pt));
    EXPECT_THROW(instantiate(A, {GaussRat(1), GaussRat(1), GaussRat(1)}),
                 std::invalid_argument);
    // the all-zero representation is unstable: force a = (0, 0)
    NumericRep dead = origin;
    for (auto& m : dead.matrices)
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m.at(r, c) = GaussRat(0);
    EXPECT_FALSE(check_stability(dead));
}

TEST(D4Charts, OriginClusterIdealsMatchGraphs) {
    auto g = make_group(4, 3);
    auto graphs = enumerate_ggraphs(g);
    auto charts = make_charts(g);
    for (size_t i = 0; i < charts.size(); ++i) {
        auto nr = instantiate_origin(charts[i]);
        EXPECT_TRUE(check_stability(nr)) << charts[i].label;
        auto cm = assemble_xy_action(nr, g);
        auto ideal = cluster_ideal(cm);
        EXPECT_TRUE(ideals_equal(ideal, graphs[i].ideal, g)) << charts[i].label;
        auto rep = verify_cluster(ideal, g);
        EXPECT_TRUE(rep.ok) << charts[i].label << ": " << rep.failure;
    }
}

// The five type-A cluster generators of the paper worked example, with
// B = -c + G^2 (1 + c d^2).
std::vector<GaussPoly> d4_type_a_generators(const GaussRat& c, const GaussRat& d,
                                            const GaussRat& G) {
    GaussRat B = -c + G * G * (GaussRat(1) + c * d * d);
    GaussPoly x4y4 = mono(4, 0) - mono(0, 4);           // x^4 - y^4
    GaussPoly s2 = mono(2, 0) + mono(0, 2);             // x^2 + y^2
    GaussPoly a2 = mono(2, 0) - mono(0, 2);             // x^2 - y^2
    return {
        mono(1, 1, GaussRat(2)) + x4y4 * d,
        mono(1, 1, GaussRat(2)) * s2 - a2 * G,
        mono(1, 0) * x4y4 + mono(1, 0, c) - mono(0, 1) * s2 * (c * d),
        mono(0, 1) * x4y4 - mono(0, 1, c) - mono(1, 0) * s2 * (c * d),
        s2 * s2 - GaussPoly(B),
    };
}

TEST(D4Charts, TypeAClusterMatchesWorkedGeneratorsAtSamples) {
    auto g = make_group(4, 3);
    auto charts = make_charts(g);
    auto& A = chart_by_label(charts, "A");
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> numd(-3, 3), dend(1, 2);
    int done = 0;
    while (done < 10) {
        mpq_class cn(numd(rng), dend(rng)), dn(numd(rng), dend(rng));
        cn.canonicalize();
        dn.canonicalize();
        GaussRat c(cn), d(dn);
        GaussRat denom = GaussRat(1) + c * d * d;
        if (denom.is_zero()) continue;
        GaussRat G = c * d / denom;
        auto nr = instantiate(A, {c, d, G});
        auto cm = assemble_xy_action(nr, g);
        auto ideal = cluster_ideal(cm);
        EXPECT_TRUE(ideals_equal(ideal, d4_type_a_generators(c, d, G), g))
            << "at c=" << to_string(c) << " d=" << to_string(d) << " G=" << to_string(G);
        ++done;
    }
}

TEST(D4Charts, DroppingFifthGeneratorBreaksClusterProperty) {
    auto g = make_group(4, 3);
    auto gens = d4_type_a_generators(GaussRat(0), GaussRat(0), GaussRat(0));
    gens.pop_back();  // drop (x^2+y^2)^2 - B
    auto rep = verify_cluster(gens, g);
    EXPECT_FALSE(rep.ok);
    EXPECT_EQ(rep.dimension, 9);
}

TEST(D4Charts, RandomPointsSatisfyClusterProperty) {
    auto g = make_group(4, 3);
    auto charts = make_charts(g);
    std::mt19937_64 rng(7);
    for (auto& ch : charts) {
        for (int it = 0; it < 20; ++it) {
            auto pt = sample_chart_point(ch, rng);
            ASSERT_TRUE(pt.has_value()) << ch.label;
            auto nr = instantiate(ch, *pt);
            EXPECT_TRUE(check_stability(nr)) << ch.label;
            auto cm = assemble_xy_action(nr, g);         // checks commutation
            auto ideal = cluster_ideal(cm);              // checks dimension 4n
            EXPECT_EQ((int)ideal.size() > 0, true) << ch.label;
        }
    }
}

TEST(BD42Charts, ShapeAndOrigins) {
    auto g = make_group(42, 13);
    auto graphs = enumerate_ggraphs(g);
    auto charts = make_charts(g);
    ASSERT_EQ(charts.size(), 6u);
    for (size_t i = 0; i < charts.size(); ++i) {
        auto& ch = charts[i];
        EXPECT_EQ((int)ch.free_vars.size() - (int)ch.equations.size(), 2) << ch.label;
        auto nr = instantiate_origin(ch);
        EXPECT_TRUE(check_stability(nr)) << ch.label;
        auto cm = assemble_xy_action(nr, g);
        auto ideal = cluster_ideal(cm);
        EXPECT_TRUE(ideals_equal(ideal, graphs[i].ideal, g)) << ch.label;
    }
}

TEST(BD42Charts, SampledPoints) {
    auto g = make_group(42, 13);
    auto charts = make_charts(g);
    std::mt19937_64 rng(99);
    for (auto& ch : charts) {
        for (int it = 0; it < 2; ++it) {
            auto pt = sample_chart_point(ch, rng);
            ASSERT_TRUE(pt.has_value()) << ch.label;
            auto nr = instantiate(ch, *pt);
            EXPECT_TRUE(check_stability(nr)) << ch.label;
            auto cm = assemble_xy_action(nr, g);
            cluster_ideal(cm);  // throws unless the quotient has dimension 4n
        }
    }
}

TEST(ChartSweep, ShapeOriginAndClusterUpTo24) {
    for (auto& g : enumerate_small_groups(24)) {
        auto graphs = enumerate_ggraphs(g);
        auto charts = make_charts(g);
        ASSERT_EQ(charts.size(), graphs.size());
        for (size_t i = 0; i < charts.size(); ++i) {
            auto& ch = charts[i];
            EXPECT_EQ((int)ch.free_vars.size() - (int)ch.equations.size(), 2)
                << "(" << g.two_n << "," << g.a << ") " << ch.label;
            auto nr = instantiate_origin(ch);
            EXPECT_TRUE(check_stability(nr)) << ch.label;
            auto cm = assemble_xy_action(nr, g);
            auto ideal = cluster_ideal(cm);
            EXPECT_TRUE(ideals_equal(ideal, graphs[i].ideal, g))
                << "(" << g.two_n << "," << g.a << ") " << ch.label;
        }
    }
}

TEST(CyclicCharts, OneFifthOneTwo) {
    auto charts = cyclic_charts(5, 2);
    ASSERT_EQ(charts.size(), 3u);
    for (auto& ch : charts) {
        EXPECT_EQ(ch.free_vars.size(), 2u) << ch.label;
        EXPECT_TRUE(ch.equations.empty()) << ch.label;
    }
    // chart 0: coordinates A = y/x^2 and e = x^5
    EXPECT_EQ(free_names(charts[0]), (std::vector<std::string>{"e", "A"}));
    std::map<std::string, std::string> id0(charts[0].identifications.begin(),
                                           charts[0].identifications.end());
    EXPECT_EQ(id0.at("A"), "y/x^2");
    EXPECT_EQ(id0.at("e"), "x^5");
    // chart 1: b = x^2/y, E = y^3/x
    std::map<std::string, std::string> id1(charts[1].identifications.begin(),
                                           charts[1].identifications.end());
    EXPECT_EQ(id1.at("b"), "x^2/y");
    EXPECT_EQ(id1.at("E"), "y^3/x");
    // chart 2: identifications x/y^3 and y^5
    std::vector<std::string> fr2;
    for (auto& [v, f] : charts[2].identifications) fr2.push_back(f);
    std::sort(fr2.begin(), fr2.end());
    EXPECT_EQ(fr2, (std::vector<std::string>{"x/y^3", "y^5"}));

    // ideals: (x^5, y), (x^2, x*y^2, y^3), (x, y^5) after dropping
    // generators divisible by the others
    auto minimal = [](std::vector<GaussPoly> gens) {
        std::vector<std::string> out;
        for (size_t i = 0; i < gens.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < gens.size(); ++j)
                if (i != j && gens[j].leading_monomial().divides(gens[i].leading_monomial()) &&
                    !(gens[j].leading_monomial() == gens[i].leading_monomial() && j > i))
                    redundant = true;
            if (!redundant) out.push_back(to_string(gens[i]));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    EXPECT_EQ(minimal(charts[0].ideal), (std::vector<std::string>{"x^5", "y"}));
    EXPECT_EQ(minimal(charts[1].ideal), (std::vector<std::string>{"x*y^2", "x^2", "y^3"}));
    EXPECT_EQ(minimal(charts[2].ideal), (std::vector<std::string>{"x", "y^5"}));
}

TEST(CyclicCharts, TwoCharts) {
    auto charts = cyclic_charts(2, 1);
    EXPECT_EQ(charts.size(), 2u);
    for (auto& ch : charts) {
        EXPECT_EQ(ch.free_vars.size(), 2u);
        EXPECT_TRUE(ch.equations.empty());
    }
}

}  // namespace
