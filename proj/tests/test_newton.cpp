#include <gtest/gtest.h>

#include <random>

#include "curvesing/errors.hpp"
#include "curvesing/newton.hpp"

using namespace curvesing;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

// Number of standard monomials of Q[x,y]/(x^p, y^q).
int monomial_quotient_dim(int p, int q) {
    int n = 0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) ++n;
    return n;
}

Polynomial random_poly(std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg(0, max_deg), coef(-5, 5);
    Polynomial f;
    for (int k = 0; k < terms; ++k) {
        int i = deg(rng), j = deg(rng);
        if (i + j == 0 || i + j > max_deg) continue;
        int c = coef(rng);
        if (c == 0) continue;
        f += Polynomial::monomial(FieldElement(c), i, j);
    }
    return f;
}

}  // namespace

TEST(Newton, Cusp) {
    auto np = newton_boundary(P("y^2-x^3"));
    ASSERT_EQ(np.faces.size(), 1u);
    const Face& f = np.faces[0];
    EXPECT_EQ(f.start, Monomial(0, 2));
    EXPECT_EQ(f.end, Monomial(3, 0));
    EXPECT_EQ(f.a, 2);
    EXPECT_EQ(f.b, 3);
    EXPECT_EQ(f.d, 6);
    EXPECT_TRUE(np.convenient);
    ASSERT_EQ(f.roots.size(), 1u);
    EXPECT_EQ(f.roots[0].nu, 1);
    // y^2 - x^3 = y^2 + gamma x^3
    EXPECT_EQ(*f.roots[0].gamma, FieldElement(-1));
}

TEST(Newton, InteriorPointFamily) {
    for (int t : {-3, -2, -1, 1, 2, 3}) {
        Polynomial f = P("x^2+y^4") + Polynomial::monomial(FieldElement(t), 1, 2);
        auto np = newton_boundary(f);
        ASSERT_EQ(np.faces.size(), 1u);
        EXPECT_EQ(np.faces[0].start, Monomial(0, 4));
        EXPECT_EQ(np.faces[0].end, Monomial(2, 0));
        EXPECT_EQ(np.faces[0].length, 2);
        EXPECT_EQ(is_nondegenerate(f, np.faces[0]), t != 2 && t != -2) << t;
    }
}

TEST(Newton, MonomialHasNoFace) {
    auto np = newton_boundary(P("x^3*y"));
    EXPECT_TRUE(np.faces.empty());
    EXPECT_EQ(np.vertices.size(), 1u);
    EXPECT_EQ(np.x_power, 3);
    EXPECT_EQ(np.y_power, 1);
    EXPECT_FALSE(np.convenient);
}

TEST(Newton, ZeroPolynomialRejected) {
    EXPECT_THROW(newton_boundary(Polynomial()), Error);
}

TEST(Newton, DOfAndFaceOf) {
    Polynomial cusp = P("y^2-x^3");
    EXPECT_EQ(d_of(1, 1, cusp), 2);
    auto v = face_of(1, 1, cusp);
    EXPECT_FALSE(v.is_face);
    EXPECT_EQ(v.vertex, Monomial(0, 2));
    EXPECT_EQ(d_of(2, 3, cusp), 6);
    EXPECT_TRUE(face_of(2, 3, cusp).is_face);
}

TEST(Newton, ThreeFaceExample) {
    Polynomial f = P("(y^5-x*y^2+x^2*y+x^5)^2+(x-2*y)^5*(x-3*y)^5");
    auto np = newton_boundary(f);
    ASSERT_EQ(np.faces.size(), 3u);
    EXPECT_EQ(std::make_pair(np.faces[0].a, np.faces[0].b), std::make_pair(3, 1));
    EXPECT_EQ(std::make_pair(np.faces[1].a, np.faces[1].b), std::make_pair(1, 1));
    EXPECT_EQ(std::make_pair(np.faces[2].a, np.faces[2].b), std::make_pair(1, 3));
    EXPECT_TRUE(np.faces[0].nondegenerate());
    EXPECT_FALSE(np.faces[1].nondegenerate());
    EXPECT_TRUE(np.faces[2].nondegenerate());
    auto fv = face_of(1, 1, f);
    ASSERT_TRUE(fv.is_face);
    EXPECT_EQ(fv.face.face_function, P("x^2*y^2*(x-y)^2"));
}

TEST(Newton, DegenerateSquare) {
    Polynomial f = P("(x^3+y^2)^2+x^3*y^3");
    auto np = newton_boundary(f);
    ASSERT_EQ(np.faces.size(), 1u);
    EXPECT_FALSE(is_nondegenerate(f, np.faces[0]));
    EXPECT_EQ(np.faces[0].roots[0].nu, 2);
}

TEST(Newton, TangentCone) {
    auto a = multiplicity_tangent_cone(P("x*y+x^3+y^5"));
    EXPECT_EQ(a.m, 2);
    ASSERT_EQ(a.factors.size(), 2u);
    EXPECT_TRUE(a.factors[0].beta.is_zero());  // x
    EXPECT_TRUE(a.factors[1].alpha.is_zero());  // y
    auto b = multiplicity_tangent_cone(P("y^2-x^3"));
    EXPECT_EQ(b.m, 2);
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0].multiplicity, 2);
    EXPECT_TRUE(b.factors[0].alpha.is_zero());
    auto c = multiplicity_tangent_cone(P("x^2*y+y^4+x^5"));
    EXPECT_EQ(c.m, 3);
    ASSERT_EQ(c.factors.size(), 2u);
    EXPECT_EQ(c.factors[0].multiplicity, 2);
    EXPECT_EQ(c.factors[1].multiplicity, 1);
}

TEST(Newton, TangentConeIrrational) {
    auto tc = multiplicity_tangent_cone(P("y^2-2*x^2+x^3"));
    EXPECT_EQ(tc.m, 2);
    EXPECT_EQ(tc.tower.depth(), 1);
    ASSERT_EQ(tc.factors.size(), 2u);
    for (const auto& lf : tc.factors) EXPECT_EQ(lf.alpha * lf.alpha, FieldElement(2).lifted(tc.tower.top()));
    FieldTower shallow(0);
    EXPECT_THROW(multiplicity_tangent_cone(P("y^2-2*x^2+x^3"), shallow), Error);
    EXPECT_EQ(tangent_profile(P("y^2-2*x^2+x^3")), (std::vector<int>{1, 1}));
    EXPECT_EQ(tangent_profile(P("x^2*y+y^4")), (std::vector<int>{2, 1}));
}

TEST(Newton, MuSmall) {
    EXPECT_EQ(newton_number_mu(P("y^2-x^3")), 2);
    EXPECT_EQ(newton_number_mu(P("x^2+y^2")), 1);
    EXPECT_EQ(newton_number_mu(P("x+y^2")), 0);
    EXPECT_THROW(newton_number_mu(P("x*y^2+x^3")), Error);
    EXPECT_THROW(newton_number_mu(P("(x^3+y^2)^2+x^7+y^7")), Error);
}

TEST(Newton, MuBrieskornPham) {
    for (int n = 2; n <= 8; ++n)
        for (int m = 2; m <= 8; ++m) {
            Polynomial f = Polynomial::monomial(1, n, 0) + Polynomial::monomial(1, 0, m);
            // Jacobian ideal is (x^{n-1}, y^{m-1}).
            EXPECT_EQ(newton_number_mu(f), monomial_quotient_dim(n - 1, m - 1)) << n << "," << m;
        }
}

TEST(NewtonProperty, BoundaryIsLowerHull) {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial f = random_poly(rng, 9, 6);
        if (f.is_zero()) continue;
        auto np = newton_boundary(f);
        // Every support point is on or above every face line; weights primitive.
        for (const Face& face : np.faces) {
            EXPECT_EQ(std::gcd(face.a, face.b), 1);
            EXPECT_EQ(face.d, d_of(face.a, face.b, f));
            EXPECT_EQ(face.a * face.end.first + face.b * face.end.second, face.d);
            int total = 0;
            for (const auto& r : face.roots) {
                total += r.nu * r.degree();
                if (r.gamma) EXPECT_FALSE(r.gamma->is_zero());
            }
            EXPECT_EQ(face.width(), face.b * total);
            EXPECT_EQ(face.height(), face.a * total);
        }
        // Consecutive faces share a vertex and slopes are ordered.
        for (std::size_t k = 0; k + 1 < np.faces.size(); ++k) {
            EXPECT_EQ(np.faces[k].end, np.faces[k + 1].start);
            EXPECT_GT(np.faces[k].a * np.faces[k + 1].b, np.faces[k + 1].a * np.faces[k].b);
        }
        // Faces walk from the first vertex to the last.
        if (!np.faces.empty()) {
            EXPECT_EQ(np.faces.front().start, np.vertices.front());
            EXPECT_EQ(np.faces.back().end, np.vertices.back());
        }
        // Brute-force vertex check: no support point lies strictly below a face
        // or strictly left-below the extreme vertices.
        for (const auto& m : np.support) {
            EXPECT_GE(m.first, np.vertices.front().first);
            EXPECT_GE(m.second, np.vertices.back().second);
        }
    }
}

TEST(NewtonProperty, FaceFunctionWeightedHomogeneous) {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial f = random_poly(rng, 8, 7);
        if (f.is_zero()) continue;
        for (const Face& face : newton_boundary(f).faces) {
            // f_P(t^a x, t^b y) = t^d f_P(x, y): every term has weighted degree d.
            for (const auto& [m, c] : face.face_function.terms())
                EXPECT_EQ(face.a * m.first + face.b * m.second, face.d);
            // Rebuild from the root data when every root is rational.
            bool all_linear = true;
            Polynomial prod = Polynomial::monomial(face.c, face.r, face.s);
            for (const auto& root : face.roots) {
                if (!root.gamma) {
                    all_linear = false;
                    break;
                }
                Polynomial lin = Polynomial::monomial(1, 0, face.a) + Polynomial::monomial(*root.gamma, face.b, 0);
                prod *= lin.pow(root.nu);
            }
            if (all_linear) EXPECT_EQ(prod, face.face_function);
        }
    }
}

TEST(NewtonProperty, NondegeneracyScalingInvariant) {
    std::mt19937 rng(9);
    for (int iter = 0; iter < 60; ++iter) {
        Polynomial f = random_poly(rng, 7, 6);
        if (iter % 3 == 0) f = P("(x^3+y^2)^2+x^5*y") + f * Polynomial::monomial(1, 4, 4);
        if (f.is_zero()) continue;
        Polynomial g;
        for (const auto& [m, c] : f.terms())
            g += Polynomial::monomial(c * FieldElement(Rational(2)).pow(m.first) * FieldElement(Rational(-3)).pow(m.second),
                                      m.first, m.second);
        auto a = newton_boundary(f), b = newton_boundary(g);
        ASSERT_EQ(a.faces.size(), b.faces.size());
        for (std::size_t k = 0; k < a.faces.size(); ++k)
            EXPECT_EQ(a.faces[k].nondegenerate(), b.faces[k].nondegenerate());
    }
}
