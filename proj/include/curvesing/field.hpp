// Exact coefficient fields: the rationals and bounded towers of simple
// algebraic extensions Q(a1)(a2)...
#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "curvesing/errors.hpp"

namespace curvesing {

using Rational = mpq_class;

// One level of an extension tower. Level k adjoins a root a_k of a monic
// polynomial whose coefficients live in level k-1 (level 0 is Q).
struct TowerNode {
    std::shared_ptr<const TowerNode> parent;
    int level = 1;
    int degree = 1;
    std::size_t dim = 1;  // [K_k : Q]
    // minpoly[i] is the coefficient of t^i, i < degree; the t^degree
    // coefficient is 1. Each entry has parent dimension.
    std::vector<std::vector<Rational>> minpoly;
};

using NodePtr = std::shared_ptr<const TowerNode>;

std::size_t node_dim(const NodePtr& n);
int node_level(const NodePtr& n);
// True when a is an ancestor of (or equal to) b.
bool node_is_prefix(const NodePtr& a, const NodePtr& b);

class FieldElement;

class FieldTower {
public:
    FieldTower() = default;
    explicit FieldTower(int depth_limit);
    FieldTower(NodePtr top, int depth_limit);

    int depth() const { return node_level(top_); }
    int depth_limit() const { return depth_limit_; }
    std::size_t dimension() const { return node_dim(top_); }
    const NodePtr& top() const { return top_; }

    // Minimal polynomial of level k (1-based), low to high, monic.
    std::vector<FieldElement> minimal_polynomial(int level) const;
    // The generator a_k of level k.
    FieldElement generator(int level) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& q) const;

    // Appends a level without any irreducibility checks. Callers go
    // through adjoin_root, which certifies the polynomial first.
    FieldTower extend_unchecked(const std::vector<FieldElement>& monic_low_to_high) const;

    bool operator==(const FieldTower& o) const { return top_ == o.top_; }

private:
    NodePtr top_;
    int depth_limit_ = 2;
};

class FieldElement {
public:
    FieldElement() : c_(1) {}
    FieldElement(const Rational& q) : c_{q} {}  // NOLINT: implicit on purpose
    FieldElement(long v) : c_{Rational(v)} {}    // NOLINT
    FieldElement(int v) : c_{Rational(v)} {}     // NOLINT
    FieldElement(NodePtr node, std::vector<Rational> coords);

    const NodePtr& node() const { return node_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Valid only when is_rational().
    const Rational& rational() const { return c_[0]; }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    FieldElement inverse() const;
    FieldElement pow(long e) const;

    // Re-express inside a larger tower that has this element's tower as prefix.
    FieldElement lifted(const NodePtr& to) const;

    // Norm down to Q: determinant of multiplication-by-this.
    Rational norm() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
    // Deterministic total order on coordinates; not a field order.
    friend int compare(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    NodePtr node_;
    std::vector<Rational> c_;
};

// Smallest tower containing both; throws IncompatibleTowers otherwise.
NodePtr common_node(const NodePtr& a, const NodePtr& b);

std::string rational_to_string(const Rational& q);

}  // namespace curvesing
