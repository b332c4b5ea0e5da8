// Dense univariate polynomials over a FieldTower, with gcd, squarefree
// decomposition and irreducible factorization over Q and over towers.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvesing/field.hpp"

namespace curvesing {

class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<FieldElement> low_to_high);

    static UPoly constant(const FieldElement& c);
    static UPoly monomial(const FieldElement& c, int deg);
    static UPoly variable();  // t
    static UPoly from_rationals(const std::vector<Rational>& low_to_high);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    FieldElement coeff(int i) const;
    const FieldElement& lc() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    // Smallest tower holding all coefficients (null for Q).
    NodePtr node() const;
    bool is_rational() const;

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const FieldElement& s);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
    friend UPoly operator*(UPoly a, const FieldElement& s) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b);
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly derivative() const;
    UPoly monic() const;
    UPoly pow(int e) const;
    FieldElement eval(const FieldElement& t) const;
    // p(t + c)
    UPoly shifted(const FieldElement& c) const;
    // Order of vanishing at t = 0; -1 for the zero polynomial.
    int order_at_zero() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<FieldElement> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// Resultant over the coefficient field.
FieldElement resultant(const UPoly& a, const UPoly& b);

// Yun decomposition: monic, pairwise coprime, squarefree factors with
// strictly positive multiplicities, ordered by multiplicity. The unit is lc(u).
std::vector<std::pair<UPoly, int>> squarefree_factor(const UPoly& u);

// Irreducible factorization into monic factors, ordered by
// (degree, coefficients). Over Q when `node` is null, else over the tower.
std::vector<std::pair<UPoly, int>> factor(const UPoly& u, const NodePtr& node);

// Deterministic factor order: degree, then coefficients low to high.
bool factor_less(const UPoly& a, const UPoly& b);

// Extends the tower by a root of the first irreducible factor of minpoly.
// Returns the same tower when that factor is linear.
std::pair<FieldTower, FieldElement> adjoin_root(const FieldTower& tower, const UPoly& minpoly);

// Exact polynomial interpolation over Q through (x_i, y_i).
UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace curvesing
