#include "curvesing/fan.hpp"

#include <numeric>

#include "curvesing/errors.hpp"

namespace curvesing {

long det(const Weight& p, const Weight& q) {
    return static_cast<long>(p.first) * q.second - static_cast<long>(p.second) * q.first;
}

bool Subdivision::regular() const {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (det(vertices[i], vertices[i + 1]) != 1) return false;
    return true;
}

Subdivision dual_newton_diagram(const NewtonPolygon& np) {
    Subdivision s;
    s.vertices.push_back({1, 0});
    s.kinds.push_back(VertexKind::Boundary);
    for (const Face& f : np.faces) {
        s.vertices.push_back({f.a, f.b});
        s.kinds.push_back(VertexKind::Face);
    }
    s.vertices.push_back({0, 1});
    s.kinds.push_back(VertexKind::Boundary);
    return s;
}

Subdivision dual_newton_diagram(const Polynomial& f) { return dual_newton_diagram(newton_boundary(f)); }

std::vector<Weight> regular_insertions(const Weight& p, const Weight& q) {
    long d = det(p, q);
    if (d <= 0) throw Error(ErrorCode::InvalidArgument, "subdivision vectors must be positively oriented");
    std::vector<Weight> out;
    Weight cur = p;
    while (d > 1) {
        // T = (q + c cur) / d with 0 <= c < d; then det(cur, T) = 1.
        long c = 0;
        while ((q.first + c * cur.first) % d != 0 || (q.second + c * cur.second) % d != 0) ++c;
        Weight t{static_cast<int>((q.first + c * cur.first) / d), static_cast<int>((q.second + c * cur.second) / d)};
        out.push_back(t);
        cur = t;
        d = det(cur, q);
    }
    return out;
}

Subdivision canonical_subdivision(const Subdivision& s) {
    Subdivision out;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i > 0)
            for (const Weight& t : regular_insertions(s.vertices[i - 1], s.vertices[i])) {
                out.vertices.push_back(t);
                out.kinds.push_back(VertexKind::Inserted);
            }
        out.vertices.push_back(s.vertices[i]);
        out.kinds.push_back(i < s.kinds.size() ? s.kinds[i] : VertexKind::Inserted);
    }
    return out;
}

std::vector<Matrix2> cone_charts(const Subdivision& s) {
    if (!s.regular()) throw Error(ErrorCode::InvalidArgument, "cone charts need a regular subdivision");
    std::vector<Matrix2> out;
    for (std::size_t i = 0; i + 1 < s.vertices.size(); ++i) {
        const Weight& p = s.vertices[i];
        const Weight& q = s.vertices[i + 1];
        out.push_back(Matrix2{{{p.first, q.first}, {p.second, q.second}}});
    }
    return out;
}

std::vector<int> self_intersection_numbers(const Subdivision& s) {
    std::vector<int> c(s.vertices.size(), 0);
    for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) {
        const Weight& p = s.vertices[i];
        int sx = s.vertices[i - 1].first + s.vertices[i + 1].first;
        int sy = s.vertices[i - 1].second + s.vertices[i + 1].second;
        int k = p.first != 0 ? sx / p.first : sy / p.second;
        if (sx != k * p.first || sy != k * p.second)
            throw Error(ErrorCode::InvalidArgument, "neighbours are not a multiple of the vertex; subdivision not regular");
        c[i] = k;
    }
    return c;
}

}  // namespace curvesing
