#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "curvesing/polynomial.hpp"
#include "curvesing/upoly.hpp"

using namespace curvesing;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

UPoly U(std::vector<long> low_to_high) {
    std::vector<Rational> q(low_to_high.begin(), low_to_high.end());
    return UPoly::from_rationals(q);
}

// Leibniz expansion of a small determinant with polynomial entries.
UPoly leibniz_det(const std::vector<std::vector<UPoly>>& M) {
    const std::size_t n = M.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    UPoly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        UPoly term = UPoly::constant(FieldElement(inversions % 2 ? -1 : 1));
        for (std::size_t i = 0; i < n; ++i) term *= M[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Polynomial random_poly(std::mt19937& rng, int maxdeg, int terms) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-3, 3);
    Polynomial f;
    for (int k = 0; k < terms; ++k) f += Polynomial::monomial(FieldElement(c(rng)), e(rng), e(rng));
    return f;
}

}  // namespace

TEST(Parse, Literal) {
    Polynomial f = P("y^2-x^3");
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.coeff(0, 2), FieldElement(1));
    EXPECT_EQ(f.coeff(3, 0), FieldElement(-1));
}

TEST(Parse, ExpansionCancels) {
    Polynomial f = P("(x+y)^2-x^2-2*x*y-y^2");
    EXPECT_TRUE(f.is_zero());
    // Oracle: evaluate (a+b)^2 - a^2 - 2ab - b^2 term by term at sample points.
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            Rational v = Rational((a + b) * (a + b)) - a * a - 2 * a * b - b * b;
            EXPECT_EQ(v, 0);
        }
}

TEST(Parse, RationalLiteral) {
    Polynomial f = P("3/2*x");
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.coeff(1, 0), FieldElement(Rational(3, 2)));
}

TEST(Parse, RoundTripFixpoint) {
    for (const char* s : {"y^2-x^3", "(x^3+y^2)^2+x^3*y^3", "-y^5+2*x*y^3+(2*x^3+1)*y^2+2*x^2*y+x^4",
                          "3/2*x-7/9*y^2+1", "-(x-2*y)^5*(x-3*y)^5", "0"}) {
        Polynomial f = P(s);
        Polynomial g = P(f.to_string());
        EXPECT_EQ(f, g) << s;
        EXPECT_EQ(f.to_string(), g.to_string());
    }
}

TEST(Parse, Errors) {
    auto pos_of = [](const std::string& s) -> long {
        try {
            parse_polynomial(s);
        } catch (const SyntaxError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(pos_of("2x"), 1);
    EXPECT_EQ(pos_of("x^0"), 2);
    EXPECT_EQ(pos_of("(x+y"), 4);
    EXPECT_EQ(pos_of("x+"), 2);
    EXPECT_EQ(pos_of("x^-1"), 2);
    EXPECT_EQ(pos_of("z"), 0);
    EXPECT_EQ(pos_of("1/0"), 2);
    EXPECT_EQ(pos_of(""), 0);
    EXPECT_EQ(pos_of(" x * y "), -1);
}

TEST(Resultant, CuspPair) {
    Polynomial f = P("y^2-x^3"), g = P("y^2+x^3");
    UPoly r = resultant_y(f, g);
    // Oracle: 4x4 Sylvester matrix expanded by permutations.
    UPoly one = U({1}), zero, mx3 = U({0, 0, 0, -1}), px3 = U({0, 0, 0, 1});
    std::vector<std::vector<UPoly>> S = {
        {one, zero, mx3, zero}, {zero, one, zero, mx3}, {one, zero, px3, zero}, {zero, one, zero, px3}};
    EXPECT_EQ(r, leibniz_det(S));
    EXPECT_EQ(r, U({0, 0, 0, 0, 0, 0, 4}));
}

TEST(Resultant, Small) {
    EXPECT_EQ(resultant_y(P("y"), P("y+x")), U({0, 1}));
    EXPECT_TRUE(resultant_y(P("y-x"), P("y-x")).is_zero());
    EXPECT_THROW(resultant_y(Polynomial(), P("y")), Error);
}

TEST(Resultant, MatchesLeibnizOnRandom) {
    std::mt19937 rng(7);
    int checked = 0;
    while (checked < 20) {
        Polynomial f = random_poly(rng, 2, 4), g = random_poly(rng, 2, 4);
        if (f.degree_y() < 1 || g.degree_y() < 1) continue;
        const int n = f.degree_y(), m = g.degree_y();
        auto fc = f.coefficients_in_y(), gc = g.coefficients_in_y();
        std::vector<std::vector<UPoly>> S(static_cast<std::size_t>(n + m), std::vector<UPoly>(static_cast<std::size_t>(n + m)));
        for (int r = 0; r < m; ++r)
            for (int k = 0; k <= n; ++k) S[r][r + k] = fc[n - k];
        for (int r = 0; r < n; ++r)
            for (int k = 0; k <= m; ++k) S[m + r][r + k] = gc[m - k];
        EXPECT_EQ(resultant_y(f, g), leibniz_det(S));
        ++checked;
    }
}

TEST(Resultant, Multiplicative) {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 25) {
        Polynomial f = random_poly(rng, 2, 3), g = random_poly(rng, 2, 3), h = random_poly(rng, 2, 3);
        if (f.degree_y() < 1 || g.degree_y() < 1 || h.degree_y() < 1) continue;
        EXPECT_EQ(resultant_y(f * g, h), resultant_y(f, h) * resultant_y(g, h));
        ++checked;
    }
}

TEST(Squarefree, Examples) {
    auto sq = squarefree_factor(U({1, 0, 2, 0, 1}));
    ASSERT_EQ(sq.size(), 1u);
    EXPECT_EQ(sq[0].first, U({1, 0, 1}));
    EXPECT_EQ(sq[0].second, 2);
    // Oracle: gcd(u, u') is the repeated part.
    UPoly u = U({1, 0, 2, 0, 1});
    EXPECT_EQ(gcd(u, u.derivative()), U({1, 0, 1}));

    auto lin = squarefree_factor(U({0, 1}));
    ASSERT_EQ(lin.size(), 1u);
    EXPECT_EQ(lin[0].first, U({0, 1}));
    EXPECT_EQ(lin[0].second, 1);
}

TEST(Squarefree, DegenerateFacePattern) {
    UPoly u = U({1, 9}) * U({4, 9}).pow(2);
    auto sq = squarefree_factor(u);
    ASSERT_EQ(sq.size(), 2u);
    EXPECT_EQ(sq[0].first, U({1, 9}).monic());
    EXPECT_EQ(sq[0].second, 1);
    EXPECT_EQ(sq[1].first, U({4, 9}).monic());
    EXPECT_EQ(sq[1].second, 2);
}

TEST(Squarefree, Reconstruction) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4), d(1, 3), m(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
        UPoly u = UPoly::constant(FieldElement(5));
        for (int k = 0; k < 3; ++k) {
            std::vector<long> co;
            int deg = d(rng);
            for (int i = 0; i < deg; ++i) co.push_back(c(rng));
            co.push_back(1);
            u *= U(co).pow(m(rng));
        }
        auto sq = squarefree_factor(u);
        UPoly prod = UPoly::constant(u.lc());
        for (std::size_t i = 0; i < sq.size(); ++i) {
            prod *= sq[i].first.pow(sq[i].second);
            EXPECT_GT(sq[i].second, 0);
            EXPECT_EQ(gcd(sq[i].first, sq[i].first.derivative()).degree(), 0);
            for (std::size_t j = i + 1; j < sq.size(); ++j) EXPECT_EQ(gcd(sq[i].first, sq[j].first).degree(), 0);
        }
        EXPECT_EQ(prod, u);
    }
}

TEST(Factor, OverRationals) {
    UPoly a = U({-2, 0, 1}), b = U({1, 1, 0, 1}), c = U({-3, 1});
    auto fs = factor(a * b * b * c, nullptr);
    ASSERT_EQ(fs.size(), 3u);
    EXPECT_EQ(fs[0].first, c);
    EXPECT_EQ(fs[1].first, a);
    EXPECT_EQ(fs[2].first, b);
    EXPECT_EQ(fs[2].second, 2);

    EXPECT_EQ(factor(U({1, 0, 0, 0, 1}), nullptr).size(), 1u);
    auto q = factor(U({-4, 0, 0, 0, 1}), nullptr);
    ASSERT_EQ(q.size(), 2u);
    EXPECT_EQ(q[0].first, U({-2, 0, 1}));
    EXPECT_EQ(q[1].first, U({2, 0, 1}));
}

TEST(Factor, SwinnertonDyerStyle) {
    // Minimal polynomial of sqrt2+sqrt3 is irreducible over Q but splits mod every prime.
    auto fs = factor(U({1, 0, -10, 0, 1}), nullptr);
    ASSERT_EQ(fs.size(), 1u);
    EXPECT_EQ(fs[0].first.degree(), 4);
    UPoly p = U({1, 0, -10, 0, 1}) * U({-5, 0, 0, 1}) * U({1, 1, 1});
    auto gs = factor(p, nullptr);
    UPoly prod = UPoly::constant(FieldElement(1));
    for (auto& [g, m] : gs) prod *= g.pow(m);
    EXPECT_EQ(prod, p);
    EXPECT_EQ(gs.size(), 3u);
}

TEST(Tower, AdjoinSqrt2) {
    FieldTower q(2);
    auto [t, th] = adjoin_root(q, U({-2, 0, 1}));
    EXPECT_EQ(t.depth(), 1);
    EXPECT_EQ(th * th, FieldElement(2));
    EXPECT_EQ((th + FieldElement(1)) * (th - FieldElement(1)), FieldElement(1));
    EXPECT_EQ((th + FieldElement(3)).inverse() * (th + FieldElement(3)), FieldElement(1));
}

TEST(Tower, DepthLimit) {
    FieldTower q(1);
    auto [t, th] = adjoin_root(q, U({-2, 0, 1}));
    try {
        adjoin_root(t, U({1, 0, 1}));
        FAIL() << "expected ExtensionDepthExceeded";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ExtensionDepthExceeded);
    }
}

TEST(Tower, DegreeMultiplies) {
    FieldTower q(2);
    auto [t1, th] = adjoin_root(q, U({-2, 0, 1}));
    UPoly m(std::vector<FieldElement>{-th, FieldElement(0), FieldElement(1)});  // t^2 - theta
    auto [t2, phi] = adjoin_root(t1, m);
    EXPECT_EQ(t2.depth(), 2);
    EXPECT_EQ(t2.dimension(), 4u);
    EXPECT_EQ(phi * phi, th);
    EXPECT_EQ(phi.pow(4), FieldElement(2));
    EXPECT_EQ(phi.norm(), Rational(-2));
}

TEST(Tower, ReducibleTakesFirstFactor) {
    FieldTower q(2);
    auto [t, r] = adjoin_root(q, U({-6, 1, 1}));  // (t+3)(t-2); t-2 sorts first
    EXPECT_EQ(t.depth(), 0);
    EXPECT_EQ(r, FieldElement(2));
    auto [t1, th] = adjoin_root(q, U({-2, 0, 1}));
    auto [t2, s] = adjoin_root(t1, U({-2, 0, 1}));  // splits over Q(sqrt2)
    EXPECT_EQ(t2.depth(), 1);
    EXPECT_EQ(s * s, FieldElement(2));
}

TEST(Tower, FactorOverExtension) {
    FieldTower q(2);
    auto [t, th] = adjoin_root(q, U({-2, 0, 1}));
    auto fs = factor(U({1, 0, -10, 0, 1}), t.top());
    ASSERT_EQ(fs.size(), 2u);
    EXPECT_EQ(fs[0].first.degree(), 2);
    EXPECT_EQ(fs[0].first * fs[1].first, U({1, 0, -10, 0, 1}));
    EXPECT_EQ(factor(U({-3, 0, 1}), t.top()).size(), 1u);
}

TEST(Substitute, CuspChart) {
    auto pb = substitute_monomial(P("y^2-x^3"), Matrix2{{{2, 1}, {3, 2}}});
    EXPECT_EQ(pb.r, 6);
    EXPECT_EQ(pb.s, 3);
    EXPECT_EQ(pb.g, P("y-1"));
}

TEST(Substitute, Identity) {
    // The u-power is pulled out: x = u, so r = d((1,0); x) = 1 and g = 1.
    auto pb = substitute_monomial(P("x"), Matrix2{{{1, 0}, {0, 1}}});
    EXPECT_EQ(pb.r, 1);
    EXPECT_EQ(pb.s, 0);
    EXPECT_EQ(pb.g, P("1"));
    auto pc = substitute_monomial(P("x+y^2"), Matrix2{{{1, 0}, {0, 1}}});
    EXPECT_EQ(pc.r, 0);
    EXPECT_EQ(pc.g, P("x+y^2"));
}

TEST(Substitute, DegenerateQuartic) {
    auto pb = substitute_monomial(P("(x^3+y^2)^2+x^3*y^3"), Matrix2{{{2, 1}, {3, 2}}});
    EXPECT_EQ(pb.r, 12);
    EXPECT_THROW(substitute_monomial(P("x"), Matrix2{{{2, 0}, {0, 1}}}), Error);
}

TEST(Substitute, ExponentLawAndFunctoriality) {
    std::mt19937 rng(5);
    const std::vector<Matrix2> charts = {Matrix2{{{1, 0}, {1, 1}}}, Matrix2{{{2, 1}, {3, 2}}}, Matrix2{{{1, 1}, {2, 3}}},
                                         Matrix2{{{3, 1}, {2, 1}}}, Matrix2{{{1, 0}, {4, 1}}}};
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(rng, 5, 5);
        if (f.is_zero()) continue;
        for (const auto& s : charts) {
            auto pb = substitute_monomial(f, s);
            int mn = 1 << 30;
            for (const auto& [m, c] : f.terms()) mn = std::min(mn, s[0][0] * m.first + s[1][0] * m.second);
            EXPECT_EQ(pb.r, mn);
            for (const auto& t : charts) {
                // (f o s) o t versus f o (s t)
                Matrix2 st{};
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j) st[i][j] = s[i][0] * t[0][j] + s[i][1] * t[1][j];
                auto once = substitute_monomial(f, st);
                auto twice = substitute_monomial(pb.g, t);
                EXPECT_EQ(once.g, twice.g);
                EXPECT_EQ(once.r, twice.r + pb.r * t[0][0] + pb.s * t[1][0]);
                EXPECT_EQ(once.s, twice.s + pb.r * t[0][1] + pb.s * t[1][1]);
            }
        }
    }
}

TEST(Triangular, Examples) {
    Polynomial f = P("y^2-2*x^2*y+x^4+x^5");
    EXPECT_EQ(triangular_change(f, FieldElement(1), 2), P("y^2+x^5"));
    EXPECT_EQ(triangular_change(f, FieldElement(0), 3), f);
    Polynomial g = triangular_change(f, FieldElement(Rational(2, 3)), 3, Axis::v_by_u);
    EXPECT_EQ(triangular_change(g, FieldElement(Rational(-2, 3)), 3, Axis::v_by_u), f);
}

TEST(Reduced, RepeatedFactors) {
    EXPECT_FALSE(has_repeated_factor(P("y^2-x^3")));
    EXPECT_TRUE(has_repeated_factor(P("(y^2-x^3)^2")));
    EXPECT_TRUE(has_repeated_factor(P("x^2*(y+1)")));
    EXPECT_TRUE(has_repeated_factor(P("(y-x)^2*(y+x)")));
    EXPECT_FALSE(has_repeated_factor(P("(x^3+y^2)^2+x^3*y^3")));
}

TEST(BivariateGcd, KnownFactors) {
    Polynomial h = parse_polynomial("y^2-x^3+x*y");
    Polynomial a = parse_polynomial("x+2*y+1"), b = parse_polynomial("y^3-x");
    EXPECT_EQ(gcd(h * a, h * b), h);
    EXPECT_EQ(exact_divide(h * a, h), a);
    EXPECT_THROW(exact_divide(a, b), Error);
    // x-only content is kept
    Polynomial c = parse_polynomial("x^2-3");
    EXPECT_EQ(gcd(c * a, c * b), c);
    EXPECT_EQ(gcd(a, b).total_degree(), 0);
}

TEST(BivariateGcd, RandomProducts) {
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> coef(-4, 4), ex(0, 3);
    auto rnd = [&] {
        Polynomial f;
        for (int k = 0; k < 3; ++k) f += Polynomial::monomial(coef(rng), ex(rng), ex(rng));
        return f;
    };
    for (int it = 0; it < 40; ++it) {
        Polynomial h = rnd(), a = rnd(), b = rnd();
        if (h.is_zero() || a.is_zero() || b.is_zero()) continue;
        Polynomial g = gcd(h * a, h * b);
        // g is a common divisor divisible by h.
        EXPECT_NO_THROW(exact_divide(h * a, g));
        EXPECT_NO_THROW(exact_divide(h * b, g));
        EXPECT_NO_THROW(exact_divide(g, h));
    }
}
