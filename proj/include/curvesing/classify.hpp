// Singularity names: B_{n,m} atoms, towers (B_{n,m}^e)^{k1 T1 + ...} and
// compositions T1 o T2 o ..., plus model germs and graph-based equivalence.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "curvesing/resolve.hpp"

namespace curvesing {

struct Atom {
    int n = 1;  // exponent of x (of u inside a superscript)
    int m = 1;  // exponent of y (of w inside a superscript)
};

struct Summand;

struct Tower {
    Atom base;
    int e = 2;
    std::vector<Summand> sup;
};

using TypeItem = std::variant<Atom, Tower>;

// A composition; a single atom is a composition of length one.
struct TypeExpr {
    std::vector<TypeItem> items;

    static TypeExpr atom(int n, int m) { return TypeExpr{{Atom{n, m}}}; }
};

struct Summand {
    int count = 1;
    TypeExpr type;
};

std::string type_to_string(const TypeExpr& t);
// Throws Error(Syntax) with the offending position.
TypeExpr parse_type(const std::string& text);

// Sorted by slope m/n (atoms before towers of the same slope, towers by e),
// equal-slope neighbours merged, superscripts grouped and sorted, the
// orientation with the larger (n - m) sequence chosen at top level, and the
// k1 + 4 >= k2 representative of B_{k2,2} o B_{2,1} o (B_{2,1}^2)^{B_{k1,2}}.
TypeExpr normalize(const TypeExpr& t);

bool operator==(const TypeExpr& a, const TypeExpr& b);  // structural, after normalize

// Type read off the resolution tree. With `admissible` set, the input is first
// moved by y -> y + c x^k (or x -> x + c y^k) while its boundary is a single
// full power of such a factor.
TypeExpr type_from_resolution(const Polynomial& f, const ResolveOptions& opt = {}, bool admissible = true);
TypeExpr type_from_tree(const GermResolution& node);

// Representative germ; resolves back to t or throws ModelConstructionFailed.
Polynomial model_germ(const TypeExpr& t, const ResolveOptions& opt = {});

bool is_equivalent(const TypeExpr& s, const TypeExpr& t, const ResolveOptions& opt = {});
// Minimal graph of f against the minimal graph of model_germ(t).
bool germ_has_type(const Polynomial& f, const TypeExpr& t, const ResolveOptions& opt = {});

}  // namespace curvesing
