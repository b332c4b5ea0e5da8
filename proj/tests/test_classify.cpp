#include <gtest/gtest.h>

#include <random>

#include "curvesing/classify.hpp"
#include "curvesing/errors.hpp"

using namespace curvesing;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }
TypeExpr T(const std::string& s) { return parse_type(s); }
std::string N(const TypeExpr& t) { return type_to_string(normalize(t)); }
std::string classify(const std::string& f) { return N(type_from_resolution(P(f))); }

}  // namespace

TEST(TypeSyntax, PrintAtom) {
    EXPECT_EQ(type_to_string(TypeExpr::atom(5, 2)), "B_{5,2}");
}

TEST(TypeSyntax, TowerWithTwoSummands) {
    TypeExpr t = T("(B_{4,2}^2)^{B_{7,2}+B_{2,2}}");
    ASSERT_EQ(t.items.size(), 1u);
    const Tower& tw = std::get<Tower>(t.items[0]);
    EXPECT_EQ(tw.base.n, 4);
    EXPECT_EQ(tw.base.m, 2);
    EXPECT_EQ(tw.e, 2);
    ASSERT_EQ(tw.sup.size(), 2u);
    EXPECT_EQ(type_to_string(tw.sup[0].type), "B_{7,2}");
    EXPECT_EQ(type_to_string(tw.sup[1].type), "B_{2,2}");
}

TEST(TypeSyntax, CountedSummand) {
    TypeExpr t = T("(B_{10,2}^2)^{2B_{5,2}}");
    const Tower& tw = std::get<Tower>(t.items[0]);
    ASSERT_EQ(tw.sup.size(), 1u);
    EXPECT_EQ(tw.sup[0].count, 2);
    EXPECT_EQ(type_to_string(tw.sup[0].type), "B_{5,2}");
}

TEST(TypeSyntax, Variants) {
    EXPECT_EQ(N(T("(B_{6,2}^2)^{2{B}_{1,2}}")), N(T("(B_{6,2}^2)^{2B_{1,2}}")));
    EXPECT_EQ(N(T("{(B_{4,2}^2)}^{(B_{32,2}+B_{2,2})}")), "(B_{4,2}^2)^{B_{32,2}+B_{2,2}}");
    EXPECT_EQ(N(T("B_{23,2} \\circ B_{2,23}")), "B_{23,2}oB_{2,23}");
    EXPECT_EQ(N(T("B_{23,2}\xE2\x88\x98" "B_{2,23}")), "B_{23,2}oB_{2,23}");
    EXPECT_EQ(N(T("A_{49}")), "B_{50,2}");
    EXPECT_EQ(N(T("E_6")), "B_{4,3}");
}

TEST(TypeSyntax, Errors) {
    for (const char* bad : {"", "B_{3}", "B_{3,2", "(B_{3,2}^1)^{B_{3,2}}", "B_{3,2}oo", "C_{2,3}", "B_{0,2}"}) {
        try {
            parse_type(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::Syntax) << bad;
            EXPECT_NE(std::string(e.what()).find("position"), std::string::npos);
        }
    }
}

TEST(TypeSyntax, RoundTrip) {
    for (const char* s : {"B_{5,2}", "(B_{3,2}^2)^{B_{3,2}}", "(B_{4,2}^2)^{B_{32,2}+B_{2,2}}", "(B_{10,2}^2)^{2B_{5,2}}",
                          "B_{12,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}", "B_{6,4}o(B_{1,1}^2)^{B_{2,2}}oB_{2,9}",
                          "(B_{3,2}^2)^{B_{5,2}}o(B_{2,3}^2)^{B_{5,2}}", "(B_{4,2}^2)^{2{B_{3,2}oB_{2,1}}}"}) {
        TypeExpr n = normalize(T(s));
        EXPECT_EQ(type_to_string(parse_type(type_to_string(n))), type_to_string(n)) << s;
        EXPECT_EQ(N(n), type_to_string(n)) << s;  // idempotent
    }
}

TEST(Normalize, Basics) {
    EXPECT_EQ(N(T("A_49")), "B_{50,2}");
    EXPECT_EQ(N(T("B_{2,3}")), "B_{3,2}");
    EXPECT_EQ(N(T("B_{2,3}oB_{43,2}")), "B_{43,2}oB_{2,3}");
    EXPECT_EQ(N(T("B_{3,2}oB_{2,43}")), "B_{43,2}oB_{2,3}");
    EXPECT_EQ(N(T("B_{1,1}oB_{1,1}")), "B_{2,2}");
    EXPECT_EQ(N(T("B_{4,2}oB_{4,2}oB_{2,6}")), "B_{8,4}oB_{2,6}");
    EXPECT_EQ(N(T("(B_{2,1}^2)^{B_{32,2}}o(B_{2,1}^2)^{B_{2,2}}")), "(B_{4,2}^2)^{B_{32,2}+B_{2,2}}");
    EXPECT_EQ(N(T("(B_{4,2}^2)^{B_{2,2}+B_{7,2}}")), "(B_{4,2}^2)^{B_{7,2}+B_{2,2}}");
    EXPECT_EQ(N(T("(B_{4,2}^2)^{B_{2,2}+B_{2,2}}")), "(B_{4,2}^2)^{2B_{2,2}}");
}

TEST(Normalize, SymmetryRepresentative) {
    // The identity k1' = k2 - 4, k2' = k1 + 4; the representative keeps k1 + 4 >= k2.
    EXPECT_EQ(N(T("B_{13,2}oB_{2,1}o(B_{2,1}^2)^{B_{1,2}}")), "B_{5,2}oB_{2,1}o(B_{2,1}^2)^{B_{9,2}}");
    EXPECT_EQ(N(T("B_{5,2}oB_{2,1}o(B_{2,1}^2)^{B_{9,2}}")), "B_{5,2}oB_{2,1}o(B_{2,1}^2)^{B_{9,2}}");
    EXPECT_EQ(N(T("B_{9,2}oB_{2,1}o(B_{2,1}^2)^{B_{5,2}}")), "B_{9,2}oB_{2,1}o(B_{2,1}^2)^{B_{5,2}}");
    // Graph check of the identity itself.
    EXPECT_TRUE(germ_has_type(model_germ(T("B_{13,2}oB_{2,1}o(B_{2,1}^2)^{B_{1,2}}")),
                              T("B_{5,2}oB_{2,1}o(B_{2,1}^2)^{B_{9,2}}")));
    EXPECT_TRUE(germ_has_type(model_germ(T("B_{11,2}oB_{2,1}o(B_{2,1}^2)^{B_{3,2}}")),
                              T("B_{7,2}oB_{2,1}o(B_{2,1}^2)^{B_{7,2}}")));
    EXPECT_FALSE(germ_has_type(model_germ(T("B_{11,2}oB_{2,1}o(B_{2,1}^2)^{B_{3,2}}")),
                               T("B_{7,2}oB_{2,1}o(B_{2,1}^2)^{B_{6,2}}")));
}

TEST(TypeFromResolution, Examples) {
    EXPECT_EQ(classify("x^3+y^2"), "B_{3,2}");
    EXPECT_EQ(classify("(x^3+y^2)^2+x^3*y^3"), "(B_{3,2}^2)^{B_{3,2}}");
    EXPECT_EQ(classify("x^5*y^5+(y^3+x^5)^2"), "(B_{5,3}^2)^{B_{10,2}}");
    EXPECT_EQ(classify("x*y"), "B_{2,2}");
    EXPECT_EQ(classify("x^2+y^2"), "B_{2,2}");
    EXPECT_EQ(classify("y^5+x^2*y^2+x^5"), "B_{3,2}oB_{2,3}");
}

TEST(TypeFromResolution, AdmissibleStageZero) {
    // (y + x^2)^2 + x^7: y -> y - x^2 gives y^2 + x^7.
    EXPECT_EQ(classify("(y+x^2)^2+x^7"), "B_{7,2}");
    EXPECT_EQ(N(type_from_resolution(P("(y+x^2)^2+x^7"), {}, false)), "(B_{2,1}^2)^{B_{3,2}}");
    EXPECT_TRUE(is_equivalent(T("B_{7,2}"), T("(B_{2,1}^2)^{B_{3,2}}")));
}

TEST(TypeFromResolution, AxisBranches) {
    // y (y - x^3): two smooth branches with contact 3.
    EXPECT_TRUE(germ_has_type(P("y*(y-x^3)"), T("B_{6,2}")));
    EXPECT_TRUE(is_equivalent(type_from_resolution(P("y*(y-x^3)")), T("B_{6,2}")));
    // x (x^2 - y^5): the axis branch is read as B_{1,3}, steeper than the cusp face.
    EXPECT_EQ(N(type_from_resolution(P("x*(x^2-y^5)"))), N(T("B_{2,5}oB_{1,3}")));
    EXPECT_TRUE(is_equivalent(T("B_{2,5}oB_{1,3}"), T("B_{2,5}oB_{1,7}")));
    EXPECT_TRUE(germ_has_type(P("x*(x^2-y^5)"), T("B_{2,5}oB_{1,3}")));
}

TEST(ModelGerm, Atoms) {
    EXPECT_EQ(model_germ(T("B_{3,2}")), P("x^3+y^2"));
    // Vertices (0,5), (2,2), (5,0).
    Polynomial f = model_germ(T("B_{3,2}oB_{2,3}"));
    EXPECT_EQ(f, P("y^5+x^2*y^2+x^5"));
    auto np = newton_boundary(f);
    ASSERT_EQ(np.faces.size(), 2u);
    EXPECT_EQ(np.faces[0].width(), 2);
    EXPECT_EQ(np.faces[0].height(), 3);
    EXPECT_EQ(np.faces[1].width(), 3);
    EXPECT_EQ(np.faces[1].height(), 2);
    EXPECT_TRUE(np.faces[0].nondegenerate() && np.faces[1].nondegenerate());
}

TEST(ModelGerm, TowerMatchesWorkedExample) {
    Polynomial f = model_germ(T("(B_{3,2}^2)^{B_{3,2}}"));
    EXPECT_TRUE(graphs_isomorphic(minimize(resolve(f)), minimize(resolve(P("(x^3+y^2)^2+x^3*y^3")))));
    EXPECT_EQ(acampo_mu(resolve(f)), acampo_mu(resolve(P("(x^3+y^2)^2+x^3*y^3"))));
}

TEST(ModelGerm, PaperNames) {
    for (const char* s :
         {"(B_{4,2}^2)^{B_{32,2}+B_{2,2}}", "(B_{10,2}^2)^{2B_{5,2}}", "(B_{12,2}^2)^{2B_{1,2}}", "(B_{5,2}^2)^{B_{15,2}}",
          "(B_{5,3}^2)^{B_{10,2}}", "(B_{5,4}^2)^{B_{5,2}}", "(B_{3,2}^2)^{B_{5,2}}o(B_{2,3}^2)^{B_{5,2}}",
          "B_{12,2}o(B_{3,1}^2)^{B_{1,2}}oB_{2,1}", "B_{6,4}o(B_{1,1}^2)^{B_{7,2}}oB_{2,9}", "(B_{4,3}^2)^{B_{6,2}}",
          "B_{9,2}oB_{2,1}o(B_{2,1}^2)^{B_{8,2}}", "(B_{8,2}^2)^{2B_{2,2}}oB_{1,2}", "B_{3,1}oB_{5,2}oB_{4,2}",
          "B_{22,2}o(B_{4,1}^2)^{B_{2,2}}oB_{2,1}"}) {
        Polynomial f;
        ASSERT_NO_THROW(f = model_germ(T(s))) << s;
        EXPECT_EQ(N(type_from_resolution(f, {}, false)), N(T(s))) << s;
    }
}

TEST(ModelGerm, Unrepresentable) {
    try {
        model_germ(T("(B_{4,2}^2)^{B_{3,2}}"));  // two points, one superscript germ
        ADD_FAILURE();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ModelConstructionFailed);
    }
    EXPECT_THROW(model_germ(T("(B_{3,2}^2)^{B_{3,3}}")), Error);  // child of order 3 at a double point
}

TEST(Equivalence, Examples) {
    EXPECT_TRUE(is_equivalent(T("B_{50,2}"), T("A_49")));
    EXPECT_TRUE(is_equivalent(T("B_{3,2}"), T("B_{2,3}")));
    EXPECT_FALSE(is_equivalent(T("B_{3,2}"), T("B_{4,2}")));
    // x^5 y^5 + (y^5 + x y + x^5)^2: the engine's towers against the flat name.
    TypeExpr engine = type_from_resolution(P("x^5*y^5+(y^5+x*y+x^5)^2"));
    EXPECT_TRUE(is_equivalent(engine, T("B_{23,2}oB_{2,23}"))) << type_to_string(engine);
    EXPECT_FALSE(is_equivalent(engine, T("B_{22,2}oB_{2,23}")));
}

TEST(Equivalence, RelationOnCorpus) {
    std::vector<TypeExpr> corpus;
    for (const char* s : {"B_{7,2}", "(B_{2,1}^2)^{B_{3,2}}", "B_{50,2}", "A_49", "B_{3,2}oB_{2,3}", "B_{5,5}",
                          "(B_{3,2}^2)^{B_{3,2}}", "B_{2,3}oB_{3,2}"})
        corpus.push_back(T(s));
    const std::size_t n = corpus.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) eq[i][j] = is_equivalent(corpus[i], corpus[j]);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_TRUE(eq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_EQ(eq[i][j], eq[j][i]);
            for (std::size_t k = 0; k < n; ++k)
                if (eq[i][j] && eq[j][k]) EXPECT_TRUE(eq[i][k]) << i << j << k;
        }
    }
    EXPECT_TRUE(eq[0][1]);
    EXPECT_TRUE(eq[2][3]);
    EXPECT_TRUE(eq[4][7]);
    EXPECT_FALSE(eq[4][5]);
}

TEST(ClassifyProperty, AtomMilnorNumber) {
    for (int n = 1; n <= 9; ++n)
        for (int m = 1; m <= 9; ++m) {
            Polynomial f = model_germ(TypeExpr::atom(n, m));
            EXPECT_EQ(acampo_mu(resolve(f)), (n - 1) * (m - 1)) << n << "," << m;
        }
}

TEST(ClassifyProperty, BrieskornGrid) {
    for (int n = 2; n <= 8; ++n)
        for (int m = 2; m <= 8; ++m) {
            Polynomial f = Polynomial::monomial(1, n, 0) + Polynomial::monomial(1, 0, m);
            EXPECT_EQ(N(type_from_resolution(f)), type_to_string(TypeExpr::atom(std::max(n, m), std::min(n, m))));
            EXPECT_EQ(acampo_mu(resolve(f)), (n - 1) * (m - 1));
        }
}

TEST(ClassifyProperty, TypeDependsOnBoundaryOnly) {
    // Same convenient boundary, non-degenerate faces, different coefficients.
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(1, 3), sign(0, 1), pick(0, 9);
    int compared = 0;
    for (int iter = 0; iter < 200 && compared < 40; ++iter) {
        std::vector<Monomial> support;
        for (int i = 0; i <= 9; ++i)
            for (int j = 0; j <= 9; ++j)
                if (i + j > 0 && pick(rng) == 0) support.push_back({i, j});
        support.push_back({0, 2 + pick(rng) % 6});
        support.push_back({2 + pick(rng) % 7, 0});
        auto draw = [&] {
            Polynomial f;
            for (const auto& m : support) f += Polynomial::monomial((sign(rng) ? 1 : -1) * coef(rng), m.first, m.second);
            return f;
        };
        Polynomial f = draw(), g = draw();
        auto nf = newton_boundary(f), ng = newton_boundary(g);
        if (nf.vertices != ng.vertices) continue;
        bool ok = nf.convenient;
        for (const Face& fc : nf.faces) ok = ok && fc.nondegenerate();
        for (const Face& fc : ng.faces) ok = ok && fc.nondegenerate();
        if (!ok || nf.vertices.front() == Monomial{0, 0}) continue;
        ++compared;
        EXPECT_EQ(N(type_from_resolution(f, {}, false)), N(type_from_resolution(g, {}, false))) << f << " | " << g;
    }
    EXPECT_GE(compared, 20);
}

TEST(ClassifyProperty, ModelMuMatchesEngine) {
    // mu of the model equals mu of the germ it was read from.
    for (const char* s : {"(x^3+y^2)^2+x^3*y^3", "x^5*y^5+(y^3+x^5)^2", "(y^2-x^4)^2+x^9", "(y^2-x^4)^2+x^7*y",
                          "(y-x^2)^2*(y+x^2)+x^9", "x^5*y^5+(y^5+x*y+x^5)^2"}) {
        Polynomial f = P(s);
        TypeExpr t = type_from_resolution(f);
        EXPECT_EQ(acampo_mu(resolve(model_germ(t))), acampo_mu(resolve(f))) << s << " " << type_to_string(t);
        EXPECT_TRUE(germ_has_type(f, t)) << s << " " << type_to_string(t);
    }
}
