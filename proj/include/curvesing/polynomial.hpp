// Sparse bivariate polynomials over a FieldTower, the input grammar, and the
// substitutions used by the toric engine.
#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvesing/field.hpp"
#include "curvesing/upoly.hpp"

namespace curvesing {

// (i, j) is the exponent of x^i y^j (or u^i v^j in chart coordinates).
using Monomial = std::pair<int, int>;

class Polynomial {
public:
    using Map = std::map<Monomial, FieldElement>;

    Polynomial() = default;
    explicit Polynomial(Map terms);

    static Polynomial constant(const FieldElement& c);
    static Polynomial monomial(const FieldElement& c, int i, int j);
    static Polynomial x();
    static Polynomial y();

    const Map& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    FieldElement coeff(int i, int j) const;
    NodePtr node() const;

    int total_degree() const;  // -1 for zero
    int order() const;         // lowest total degree; -1 for zero
    int degree_x() const;
    int degree_y() const;
    int min_x() const;         // largest r with x^r | f
    int min_y() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const FieldElement& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const FieldElement& s) { return a *= s; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(int e) const;
    FieldElement eval(const FieldElement& x, const FieldElement& y) const;
    Polynomial swapped() const;                 // x <-> y
    Polynomial homogeneous_part(int d) const;   // terms with i + j == d
    Polynomial divided_by_monomial(int i, int j) const;  // exact shift, requires divisibility
    Polynomial derivative_x() const;
    Polynomial derivative_y() const;
    Polynomial lifted(const NodePtr& n) const;

    // f = sum_j coeffs[j](x) y^j
    std::vector<UPoly> coefficients_in_y() const;
    static Polynomial from_coefficients_in_y(const std::vector<UPoly>& c);
    UPoly at_y_zero() const;  // f(x, 0)
    UPoly at_x_zero() const;  // f(0, y) as a polynomial in y

    // Exact ASCII form; re-parses to the same polynomial when coefficients are rational.
    std::string to_string() const;

private:
    Map t_;
};

Polynomial parse_polynomial(const std::string& text, const FieldTower& tower = FieldTower());

// Sylvester resultant in y with the f-rows first; a polynomial in x.
UPoly resultant_y(const Polynomial& f, const Polynomial& g);

using Matrix2 = std::array<std::array<int, 2>, 2>;

struct MonomialPullback {
    int r = 0;
    int s = 0;
    Polynomial g;
};

// Pullback under x = u^{s00} v^{s01}, y = u^{s10} v^{s11}, written u^r v^s g.
MonomialPullback substitute_monomial(const Polynomial& f, const Matrix2& sigma);

enum class Axis { y_by_x, v_by_u };

// Replaces the second variable by (itself + c * first^k).
Polynomial triangular_change(const Polynomial& f, const FieldElement& c, int k, Axis axis = Axis::y_by_x);

// Exact quotient f / d; throws InvalidArgument when d does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& d);

// Greatest common divisor, normalized to be monic in y then in x.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

// True when f has a repeated factor.
bool has_repeated_factor(const Polynomial& f);

}  // namespace curvesing

#include <ostream>

namespace curvesing {
inline std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const UPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }
}  // namespace curvesing
