// Dual Newton diagrams, canonical regular subdivisions and their cone charts.
#pragma once

#include <utility>
#include <vector>

#include "curvesing/newton.hpp"

namespace curvesing {

// Weight vector P = (a, b).
using Weight = std::pair<int, int>;

enum class VertexKind { Boundary, Face, Inserted };

struct Subdivision {
    std::vector<Weight> vertices;  // E1 = (1,0) first, E2 = (0,1) last, increasing b/a
    std::vector<VertexKind> kinds;

    bool regular() const;
};

long det(const Weight& p, const Weight& q);

Subdivision dual_newton_diagram(const NewtonPolygon& np);
Subdivision dual_newton_diagram(const Polynomial& f);

Subdivision canonical_subdivision(const Subdivision& s);

// Vectors strictly between p and q that make the pair regular (empty if det = 1).
std::vector<Weight> regular_insertions(const Weight& p, const Weight& q);

// Column i is (P_i, P_{i+1}); determinant 1.
std::vector<Matrix2> cone_charts(const Subdivision& s);

// c_i with P_{i-1} + P_{i+1} = c_i P_i for interior vertices; index 0 and last are 0.
std::vector<int> self_intersection_numbers(const Subdivision& s);

}  // namespace curvesing
