// Newton polygons of plane curve germs at the origin.
#pragma once

#include <optional>
#include <vector>

#include "curvesing/polynomial.hpp"

namespace curvesing {

// One irreducible factor of a reduced face polynomial h(t), t = y^a / x^b.
// When the factor is t - t0, gamma = -t0 so the face factor reads y^a + gamma x^b.
struct FaceRoot {
    UPoly factor;
    int nu = 1;
    std::optional<FieldElement> gamma;
    int degree() const { return factor.degree(); }
};

struct Face {
    Monomial start;  // (i1, j1), smaller i
    Monomial end;    // (i2, j2)
    int a = 1, b = 1;  // weight P = (a, b), P.(i, j) = a i + b j
    int d = 0;         // d(P; f)
    int length = 1;    // lattice length
    // h(t) = sum_k c_k t^k over the lattice points (i2 - k b, j2 + k a).
    UPoly reduced;
    std::vector<std::pair<UPoly, int>> squarefree;
    std::vector<FaceRoot> roots;
    int r = 0, s = 0;  // face function = c x^r y^s prod (y^a + gamma x^b)^nu
    FieldElement c;
    Polynomial face_function;

    bool nondegenerate() const;
    int width() const { return end.first - start.first; }
    int height() const { return start.second - end.second; }
};

struct NewtonPolygon {
    std::vector<Monomial> support;
    std::vector<Monomial> vertices;  // increasing i
    std::vector<Face> faces;         // increasing i, so b/a increasing
    bool convenient = false;
    int x_power = 0;  // x^x_power divides f
    int y_power = 0;
};

// Root data is factored over the larger of f.node() and `over`.
NewtonPolygon newton_boundary(const Polynomial& f, const NodePtr& over = nullptr);

int d_of(int a, int b, const Polynomial& f);

struct FaceOrVertex {
    bool is_face = false;
    Face face;
    Monomial vertex{0, 0};
};
FaceOrVertex face_of(int a, int b, const Polynomial& f, const NodePtr& over = nullptr);

bool is_nondegenerate(const Polynomial& f, const Face& face);

// alpha x + beta y
struct LinearForm {
    FieldElement alpha, beta;
    int multiplicity = 1;
};

struct TangentCone {
    int m = 0;
    std::vector<LinearForm> factors;
    FieldTower tower;  // possibly extended to split the cone
};

TangentCone multiplicity_tangent_cone(const Polynomial& f, const FieldTower& tower = FieldTower());

// Multiplicities of the distinct tangent lines, descending. No field extension needed.
std::vector<int> tangent_profile(const Polynomial& f);

// Kouchnirenko: 2V - a - b + 1 for convenient germs non-degenerate on every face.
int newton_number_mu(const Polynomial& f);

}  // namespace curvesing
