#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "curvesing/errors.hpp"
#include "curvesing/fan.hpp"

using namespace curvesing;

namespace {

Subdivision chain(std::vector<Weight> v) {
    Subdivision s;
    s.vertices = std::move(v);
    s.kinds.assign(s.vertices.size(), VertexKind::Face);
    s.kinds.front() = s.kinds.back() = VertexKind::Boundary;
    return s;
}

// Lattice points on the compact boundary of the hull of non-zero lattice
// points in cone(p, q), strictly between p and q, by gift wrapping.
std::vector<Weight> hull_oracle(const Weight& p, const Weight& q) {
    long D = det(p, q);
    std::vector<Weight> pts;
    int mx = std::max(p.first, q.first), my = std::max(p.second, q.second);
    for (int i = 0; i <= mx; ++i)
        for (int j = 0; j <= my; ++j) {
            Weight v{i, j};
            if (i == 0 && j == 0) continue;
            long s = det(p, v), t = det(v, q);
            if (s >= 0 && t >= 0 && s + t <= D) pts.push_back(v);
        }
    std::vector<Weight> out;
    Weight c = p;
    while (c != q) {
        Weight best{0, 0};
        bool have = false;
        for (const Weight& w : pts) {
            if (w == c || det(c, w) <= 0) continue;
            if (!have) {
                best = w;
                have = true;
                continue;
            }
            Weight bw{best.first - c.first, best.second - c.second};
            Weight ww{w.first - c.first, w.second - c.second};
            long o = det(bw, ww);
            long nb = std::abs(bw.first) + std::abs(bw.second), nw = std::abs(ww.first) + std::abs(ww.second);
            if (o > 0 || (o == 0 && nw < nb)) best = w;
        }
        if (best != q) out.push_back(best);
        c = best;
    }
    return out;
}

}  // namespace

TEST(Fan, DualDiagram) {
    auto s = dual_newton_diagram(parse_polynomial("y^2-x^3"));
    EXPECT_EQ(s.vertices, (std::vector<Weight>{{1, 0}, {2, 3}, {0, 1}}));
    auto t = dual_newton_diagram(parse_polynomial("(y^5-x*y^2+x^2*y+x^5)^2+(x-2*y)^5*(x-3*y)^5"));
    EXPECT_EQ(t.vertices, (std::vector<Weight>{{1, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 1}}));
    auto u = dual_newton_diagram(parse_polynomial("x+y"));
    EXPECT_EQ(u.vertices, (std::vector<Weight>{{1, 0}, {1, 1}, {0, 1}}));
}

TEST(Fan, CanonicalExamples) {
    auto cusp = canonical_subdivision(chain({{1, 0}, {2, 3}, {0, 1}}));
    EXPECT_EQ(cusp.vertices, (std::vector<Weight>{{1, 0}, {1, 1}, {2, 3}, {1, 2}, {0, 1}}));
    EXPECT_EQ(cusp.kinds[1], VertexKind::Inserted);
    EXPECT_EQ(cusp.kinds[2], VertexKind::Face);
    auto smooth = canonical_subdivision(chain({{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(smooth.vertices, (std::vector<Weight>{{1, 0}, {1, 1}, {0, 1}}));
    auto b25 = canonical_subdivision(chain({{1, 0}, {2, 5}, {0, 1}}));
    EXPECT_EQ(b25.vertices, (std::vector<Weight>{{1, 0}, {1, 1}, {1, 2}, {2, 5}, {1, 3}, {0, 1}}));
    auto ex = canonical_subdivision(chain({{1, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 1}}));
    EXPECT_EQ(ex.vertices, (std::vector<Weight>{{1, 0}, {3, 1}, {2, 1}, {1, 1}, {1, 2}, {1, 3}, {0, 1}}));
}

TEST(Fan, Charts) {
    auto cusp = cone_charts(canonical_subdivision(chain({{1, 0}, {2, 3}, {0, 1}})));
    EXPECT_EQ(cusp[2], (Matrix2{{{2, 1}, {3, 2}}}));
    auto id = cone_charts(chain({{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(id[0], (Matrix2{{{1, 1}, {0, 1}}}));
    EXPECT_EQ(id[1], (Matrix2{{{1, 0}, {1, 1}}}));
    auto b25 = cone_charts(canonical_subdivision(chain({{1, 0}, {2, 5}, {0, 1}})));
    EXPECT_EQ(b25[3], (Matrix2{{{2, 1}, {5, 3}}}));
    EXPECT_THROW(cone_charts(chain({{1, 0}, {2, 3}, {0, 1}})), Error);
}

TEST(Fan, SelfIntersections) {
    auto cusp = canonical_subdivision(chain({{1, 0}, {2, 3}, {0, 1}}));
    // (1,1): 3, (2,3): 1, (1,2): 2 -> self-intersections -3, -1, -2
    EXPECT_EQ(self_intersection_numbers(cusp), (std::vector<int>{0, 3, 1, 2, 0}));
}

TEST(FanProperty, RegularMinimalIdempotent) {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dist(1, 13);
    for (int iter = 0; iter < 300; ++iter) {
        int a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        auto s = chain({{1, 0}, {a, b}, {0, 1}});
        auto c = canonical_subdivision(s);
        EXPECT_TRUE(c.regular());
        EXPECT_EQ(canonical_subdivision(c).vertices, c.vertices);
        for (const auto& v : c.vertices) EXPECT_EQ(std::gcd(v.first, v.second), 1);
        // Minimality: dropping any inserted vertex breaks regularity.
        for (std::size_t i = 1; i + 1 < c.vertices.size(); ++i)
            if (c.kinds[i] == VertexKind::Inserted) EXPECT_GT(det(c.vertices[i - 1], c.vertices[i + 1]), 1);
        // Independent lattice-hull oracle.
        EXPECT_EQ(regular_insertions({1, 0}, {a, b}), hull_oracle({1, 0}, {a, b})) << a << "," << b;
        EXPECT_EQ(regular_insertions({a, b}, {0, 1}), hull_oracle({a, b}, {0, 1})) << a << "," << b;
        for (int c2 : self_intersection_numbers(c)) EXPECT_GE(c2, 0);
    }
}

TEST(FanProperty, ArbitraryPairsMatchHull) {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> dist(0, 11);
    int checked = 0;
    while (checked < 200) {
        Weight p{dist(rng), dist(rng)}, q{dist(rng), dist(rng)};
        if (std::gcd(p.first, p.second) != 1 || std::gcd(q.first, q.second) != 1 || det(p, q) <= 0) continue;
        EXPECT_EQ(regular_insertions(p, q), hull_oracle(p, q));
        ++checked;
    }
}
