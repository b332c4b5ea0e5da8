#include "curvesing/field.hpp"

#include <algorithm>
#include <sstream>

namespace curvesing {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Syntax: return "SyntaxError";
        case ErrorCode::NotRepresentable: return "NotRepresentable";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ExtensionDepthExceeded: return "ExtensionDepthExceeded";
        case ErrorCode::NotAField: return "NotAField";
        case ErrorCode::NonReducedInput: return "NonReducedInput";
        case ErrorCode::CommonComponent: return "CommonComponent";
        case ErrorCode::MaxDepthExceeded: return "MaxDepthExceeded";
        case ErrorCode::NotConvenient: return "NotConvenient";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::ModelConstructionFailed: return "ModelConstructionFailed";
        case ErrorCode::MalformedGraph: return "MalformedGraph";
        case ErrorCode::IncompatibleTowers: return "IncompatibleTowers";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::size_t node_dim(const NodePtr& n) { return n ? n->dim : 1; }
int node_level(const NodePtr& n) { return n ? n->level : 0; }

bool node_is_prefix(const NodePtr& a, const NodePtr& b) {
    if (!a) return true;
    const TowerNode* p = b.get();
    while (p) {
        if (p == a.get()) return true;
        p = p->parent.get();
    }
    return false;
}

NodePtr common_node(const NodePtr& a, const NodePtr& b) {
    if (a == b) return a;
    if (node_is_prefix(a, b)) return b;
    if (node_is_prefix(b, a)) return a;
    throw Error(ErrorCode::IncompatibleTowers, "elements belong to unrelated extension towers");
}

namespace {

using Vec = std::vector<Rational>;

bool vec_zero(const Vec& v) {
    for (const auto& q : v)
        if (sgn(q) != 0) return false;
    return true;
}

Vec mul_flat(const TowerNode* n, const Vec& a, const Vec& b) {
    if (!n) return Vec{a[0] * b[0]};
    const TowerNode* p = n->parent.get();
    const std::size_t D = p ? p->dim : 1;
    const std::size_t d = static_cast<std::size_t>(n->degree);
    std::vector<Vec> A(d), B(d);
    std::vector<bool> az(d), bz(d);
    for (std::size_t i = 0; i < d; ++i) {
        A[i].assign(a.begin() + i * D, a.begin() + (i + 1) * D);
        B[i].assign(b.begin() + i * D, b.begin() + (i + 1) * D);
        az[i] = vec_zero(A[i]);
        bz[i] = vec_zero(B[i]);
    }
    std::vector<Vec> prod(2 * d - 1, Vec(D));
    for (std::size_t i = 0; i < d; ++i) {
        if (az[i]) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (bz[j]) continue;
            Vec t = mul_flat(p, A[i], B[j]);
            for (std::size_t k = 0; k < D; ++k) prod[i + j][k] += t[k];
        }
    }
    for (std::size_t k = 2 * d - 1; k-- > d;) {
        if (vec_zero(prod[k])) continue;
        for (std::size_t j = 0; j < d; ++j) {
            Vec t = mul_flat(p, prod[k], n->minpoly[j]);
            for (std::size_t m = 0; m < D; ++m) prod[k - d + j][m] -= t[m];
        }
    }
    Vec out(n->dim);
    for (std::size_t i = 0; i < d; ++i)
        std::copy(prod[i].begin(), prod[i].end(), out.begin() + i * D);
    return out;
}

// Multiplication matrix of a (column j = a * e_j) over Q.
std::vector<Vec> mult_matrix(const TowerNode* n, const Vec& a) {
    const std::size_t dim = n ? n->dim : 1;
    std::vector<Vec> M(dim, Vec(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        Vec e(dim);
        e[j] = 1;
        Vec col = mul_flat(n, a, e);
        for (std::size_t i = 0; i < dim; ++i) M[i][j] = col[i];
    }
    return M;
}

// Gaussian elimination; returns determinant and, if rhs given, solves M x = rhs.
Rational eliminate(std::vector<Vec> M, Vec* rhs) {
    const std::size_t n = M.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(M[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            if (rhs) std::swap((*rhs)[piv], (*rhs)[c]);
            det = -det;
        }
        det *= M[c][c];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(M[r][c]) == 0) continue;
            Rational f = M[r][c] / M[c][c];
            for (std::size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
            if (rhs) (*rhs)[r] -= f * (*rhs)[c];
        }
    }
    if (rhs)
        for (std::size_t r = 0; r < n; ++r) (*rhs)[r] /= M[r][r];
    return det;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

FieldTower::FieldTower(int depth_limit) : depth_limit_(depth_limit) {
    if (depth_limit < 0) throw Error(ErrorCode::InvalidArgument, "depth limit must be non-negative");
}

FieldTower::FieldTower(NodePtr top, int depth_limit) : top_(std::move(top)), depth_limit_(depth_limit) {}

std::vector<FieldElement> FieldTower::minimal_polynomial(int level) const {
    const TowerNode* n = top_.get();
    while (n && n->level > level) n = n->parent.get();
    if (!n || n->level != level) throw Error(ErrorCode::InvalidArgument, "no such tower level");
    std::vector<FieldElement> out;
    for (const auto& c : n->minpoly) out.emplace_back(n->parent, c);
    out.emplace_back(n->parent, [&] {
        Vec one(node_dim(n->parent));
        one[0] = 1;
        return one;
    }());
    return out;
}

FieldElement FieldTower::generator(int level) const {
    NodePtr n = top_;
    while (n && n->level > level) n = n->parent;
    if (!n || n->level != level) throw Error(ErrorCode::InvalidArgument, "no such tower level");
    Vec c(n->dim);
    c[node_dim(n->parent)] = 1;
    return FieldElement(n, c);
}

FieldElement FieldTower::zero() const { return FieldElement(top_, Vec(dimension())); }

FieldElement FieldTower::one() const { return from_rational(1); }

FieldElement FieldTower::from_rational(const Rational& q) const {
    Vec c(dimension());
    c[0] = q;
    return FieldElement(top_, c);
}

FieldTower FieldTower::extend_unchecked(const std::vector<FieldElement>& monic) const {
    if (monic.size() < 2 || !monic.back().is_one())
        throw Error(ErrorCode::InvalidArgument, "extension polynomial must be monic of degree >= 1");
    auto node = std::make_shared<TowerNode>();
    node->parent = top_;
    node->level = depth() + 1;
    node->degree = static_cast<int>(monic.size()) - 1;
    node->dim = dimension() * static_cast<std::size_t>(node->degree);
    for (std::size_t i = 0; i + 1 < monic.size(); ++i) node->minpoly.push_back(monic[i].lifted(top_).coords());
    return FieldTower(node, depth_limit_);
}

FieldElement::FieldElement(NodePtr node, std::vector<Rational> coords)
    : node_(std::move(node)), c_(std::move(coords)) {
    if (c_.size() != node_dim(node_)) throw Error(ErrorCode::Internal, "coordinate vector has wrong length");
}

bool FieldElement::is_zero() const { return vec_zero(c_); }

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

FieldElement FieldElement::lifted(const NodePtr& to) const {
    if (to == node_) return *this;
    if (!node_is_prefix(node_, to)) throw Error(ErrorCode::IncompatibleTowers, "cannot lift into an unrelated tower");
    Vec c(node_dim(to));
    std::copy(c_.begin(), c_.end(), c.begin());
    return FieldElement(to, std::move(c));
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (node_ == o.node_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    NodePtr n = common_node(node_, o.node_);
    *this = lifted(n);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (node_ == o.node_) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    NodePtr n = common_node(node_, o.node_);
    *this = lifted(n);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    if (!node_ && !o.node_) {
        c_[0] *= o.c_[0];
        return *this;
    }
    // Rational scalars act coordinatewise.
    if (o.is_rational() && node_is_prefix(o.node_, node_)) {
        const Rational s = o.c_[0];
        for (auto& q : c_) q *= s;
        return *this;
    }
    if (is_rational() && node_is_prefix(node_, o.node_)) {
        const Rational s = c_[0];
        *this = o;
        for (auto& q : c_) q *= s;
        return *this;
    }
    NodePtr n = common_node(node_, o.node_);
    Vec a = lifted(n).c_, b = o.lifted(n).c_;
    c_ = mul_flat(n.get(), a, b);
    node_ = n;
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
    if (is_rational()) {
        FieldElement r = *this;
        r.c_[0] = 1 / c_[0];
        return r;
    }
    auto M = mult_matrix(node_.get(), c_);
    Vec rhs(c_.size());
    rhs[0] = 1;
    if (sgn(eliminate(M, &rhs)) == 0)
        throw Error(ErrorCode::NotAField, "zero divisor encountered: extension polynomial is reducible");
    return FieldElement(node_, rhs);
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

FieldElement FieldElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = FieldElement(node_, [&] {
        Vec one(c_.size());
        one[0] = 1;
        return one;
    }());
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Rational FieldElement::norm() const {
    if (!node_) return c_[0];
    return eliminate(mult_matrix(node_.get(), c_), nullptr);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.node_ == b.node_) return a.c_ == b.c_;
    return compare(a, b) == 0;
}

int compare(const FieldElement& a, const FieldElement& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
        Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
        int c = cmp(x, y);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return 0;
}

std::string FieldElement::to_string() const {
    if (is_rational()) return rational_to_string(c_[0]);
    std::vector<const TowerNode*> levels;
    for (const TowerNode* p = node_.get(); p; p = p->parent.get()) levels.push_back(p);
    std::reverse(levels.begin(), levels.end());
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = 0; idx < c_.size(); ++idx) {
        if (sgn(c_[idx]) == 0) continue;
        std::string mono;
        std::size_t rest = idx;
        for (std::size_t k = 0; k < levels.size(); ++k) {
            const std::size_t d = static_cast<std::size_t>(levels[k]->degree);
            const std::size_t e = rest % d;
            rest /= d;
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "a" + std::to_string(k + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        Rational q = c_[idx];
        if (!first) os << (sgn(q) < 0 ? "-" : "+");
        else if (sgn(q) < 0) os << "-";
        Rational aq = abs(q);
        if (mono.empty()) os << rational_to_string(aq);
        else if (aq == 1) os << mono;
        else os << rational_to_string(aq) << "*" << mono;
        first = false;
    }
    return "(" + os.str() + ")";
}

}  // namespace curvesing
