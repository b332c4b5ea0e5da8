#include "curvesing/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace curvesing {

Polynomial::Polynomial(Map terms) : t_(std::move(terms)) {
    for (auto it = t_.begin(); it != t_.end();) {
        if (it->first.first < 0 || it->first.second < 0)
            throw Error(ErrorCode::InvalidArgument, "negative exponent in polynomial");
        if (it->second.is_zero()) it = t_.erase(it);
        else ++it;
    }
}

Polynomial Polynomial::constant(const FieldElement& c) { return monomial(c, 0, 0); }

Polynomial Polynomial::monomial(const FieldElement& c, int i, int j) {
    Map m;
    m.emplace(Monomial{i, j}, c);
    return Polynomial(std::move(m));
}

Polynomial Polynomial::x() { return monomial(FieldElement(1), 1, 0); }
Polynomial Polynomial::y() { return monomial(FieldElement(1), 0, 1); }

FieldElement Polynomial::coeff(int i, int j) const {
    auto it = t_.find({i, j});
    return it == t_.end() ? FieldElement() : it->second;
}

NodePtr Polynomial::node() const {
    NodePtr n;
    for (const auto& [m, c] : t_) n = common_node(n, c.node());
    return n;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first + m.second);
    return d;
}

int Polynomial::order() const {
    if (t_.empty()) return -1;
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : t_) d = std::min(d, m.first + m.second);
    return d;
}

int Polynomial::degree_x() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.first);
    return d;
}

int Polynomial::degree_y() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.second);
    return d;
}

int Polynomial::min_x() const {
    if (t_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : t_) d = std::min(d, m.first);
    return d;
}

int Polynomial::min_y() const {
    if (t_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& [m, c] : t_) d = std::min(d, m.second);
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& [m, c] : r.t_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.t_) {
        auto [it, fresh] = t_.emplace(m, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::Map r;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) {
            Monomial m{ma.first + mb.first, ma.second + mb.second};
            auto [it, fresh] = r.emplace(m, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& s) {
    if (s.is_zero()) {
        t_.clear();
        return *this;
    }
    for (auto& [m, c] : t_) c *= s;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial power");
    Polynomial r = constant(FieldElement(1));
    Polynomial b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

FieldElement Polynomial::eval(const FieldElement& x, const FieldElement& y) const {
    FieldElement acc;
    for (const auto& [m, c] : t_) acc += c * x.pow(m.first) * y.pow(m.second);
    return acc;
}

Polynomial Polynomial::swapped() const {
    Map r;
    for (const auto& [m, c] : t_) r.emplace(Monomial{m.second, m.first}, c);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Map r;
    for (const auto& [m, c] : t_)
        if (m.first + m.second == d) r.emplace(m, c);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::divided_by_monomial(int i, int j) const {
    Map r;
    for (const auto& [m, c] : t_) r.emplace(Monomial{m.first - i, m.second - j}, c);
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative_x() const {
    Map r;
    for (const auto& [m, c] : t_)
        if (m.first > 0) r.emplace(Monomial{m.first - 1, m.second}, c * FieldElement(m.first));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::derivative_y() const {
    Map r;
    for (const auto& [m, c] : t_)
        if (m.second > 0) r.emplace(Monomial{m.first, m.second - 1}, c * FieldElement(m.second));
    return Polynomial(std::move(r));
}

Polynomial Polynomial::lifted(const NodePtr& n) const {
    Map r;
    for (const auto& [m, c] : t_) r.emplace(m, c.lifted(n));
    return Polynomial(std::move(r));
}

std::vector<UPoly> Polynomial::coefficients_in_y() const {
    const int dy = degree_y();
    std::vector<std::vector<FieldElement>> raw(static_cast<std::size_t>(std::max(dy, -1) + 1));
    for (const auto& [m, c] : t_) {
        auto& v = raw[static_cast<std::size_t>(m.second)];
        if (static_cast<int>(v.size()) <= m.first) v.resize(static_cast<std::size_t>(m.first) + 1);
        v[static_cast<std::size_t>(m.first)] = c;
    }
    std::vector<UPoly> out;
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

Polynomial Polynomial::from_coefficients_in_y(const std::vector<UPoly>& c) {
    Map r;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int i = 0; i <= c[j].degree(); ++i) {
            const FieldElement& e = c[j].coeffs()[static_cast<std::size_t>(i)];
            if (!e.is_zero()) r.emplace(Monomial{i, static_cast<int>(j)}, e);
        }
    return Polynomial(std::move(r));
}

UPoly Polynomial::at_y_zero() const {
    std::vector<FieldElement> v;
    for (const auto& [m, c] : t_) {
        if (m.second != 0) continue;
        if (static_cast<int>(v.size()) <= m.first) v.resize(static_cast<std::size_t>(m.first) + 1);
        v[static_cast<std::size_t>(m.first)] = c;
    }
    return UPoly(std::move(v));
}

UPoly Polynomial::at_x_zero() const { return swapped().at_y_zero(); }

std::string Polynomial::to_string() const {
    if (t_.empty()) return "0";
    std::vector<std::pair<Monomial, FieldElement>> terms(t_.begin(), t_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        std::string mono;
        auto add = [&](const char* v, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        add("x", m.first);
        add("y", m.second);
        bool neg = false;
        std::string cs;
        if (c.is_rational()) {
            neg = sgn(c.rational()) < 0;
            cs = rational_to_string(abs(c.rational()));
        } else {
            cs = c.to_string();
        }
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        if (mono.empty()) os << cs;
        else if (cs == "1") os << mono;
        else os << cs << "*" << mono;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(const std::string& s, const FieldTower& t) : s_(s), tower_(t) {}

    Polynomial parse() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty input");
        Polynomial p = expr();
        skip();
        if (pos_ < s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(start, "expected integer");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        Polynomial acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (peek('*')) {
            ++pos_;
            acc *= unary();
        }
        return acc;
    }

    Polynomial unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            const std::size_t at = pos_;
            mpz_class e = integer();
            if (e < 1 || e > 100000) throw SyntaxError(at, "exponent must be a positive integer");
            base = base.pow(static_cast<int>(e.get_si()));
            if (peek('^')) throw SyntaxError(pos_, "chained exponent; use parentheses");
        }
        return base;
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')')) throw SyntaxError(pos_, "expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? Polynomial::x() : Polynomial::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(integer());
            if (peek('/')) {
                ++pos_;
                skip();
                const std::size_t at = pos_;
                mpz_class d = integer();
                if (d == 0) throw SyntaxError(at, "zero denominator");
                q /= Rational(d);
            }
            return Polynomial::constant(tower_.from_rational(q));
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const FieldTower& tower_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldTower& tower) {
    Parser p(text, tower);
    return p.parse();
}

// ---------------------------------------------------------------------------

UPoly resultant_y(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
    const int n = f.degree_y(), m = g.degree_y();
    if (n < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "resultant_y needs positive y-degree in both inputs");
    const auto fc = f.coefficients_in_y();
    const auto gc = g.coefficients_in_y();
    const int N = n + m;
    std::vector<std::vector<UPoly>> M(static_cast<std::size_t>(N), std::vector<UPoly>(static_cast<std::size_t>(N)));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = fc[static_cast<std::size_t>(n - k)];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = gc[static_cast<std::size_t>(m - k)];
    // Fraction-free Bareiss elimination over K[x].
    UPoly prev = UPoly::constant(FieldElement(1));
    bool negate = false;
    for (int k = 0; k < N - 1; ++k) {
        auto K = static_cast<std::size_t>(k);
        if (M[K][K].is_zero()) {
            std::size_t piv = K + 1;
            while (piv < static_cast<std::size_t>(N) && M[piv][K].is_zero()) ++piv;
            if (piv == static_cast<std::size_t>(N)) return UPoly();
            std::swap(M[piv], M[K]);
            negate = !negate;
        }
        for (std::size_t i = K + 1; i < static_cast<std::size_t>(N); ++i) {
            for (std::size_t j = K + 1; j < static_cast<std::size_t>(N); ++j) {
                UPoly num = M[i][j] * M[K][K] - M[i][K] * M[K][j];
                auto [q, r] = divmod(num, prev);
                if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact Bareiss division");
                M[i][j] = std::move(q);
            }
            M[i][K] = UPoly();
        }
        prev = M[K][K];
    }
    UPoly det = M[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    return negate ? -det : det;
}

MonomialPullback substitute_monomial(const Polynomial& f, const Matrix2& s) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pullback of zero polynomial");
    const long det = static_cast<long>(s[0][0]) * s[1][1] - static_cast<long>(s[0][1]) * s[1][0];
    if (det != 1 && det != -1) throw Error(ErrorCode::InvalidArgument, "chart matrix is not unimodular");
    for (const auto& row : s)
        for (int v : row)
            if (v < 0) throw Error(ErrorCode::InvalidArgument, "chart matrix has a negative entry");
    Polynomial::Map m;
    int r = std::numeric_limits<int>::max(), sv = std::numeric_limits<int>::max();
    for (const auto& [e, c] : f.terms()) {
        const int a = s[0][0] * e.first + s[1][0] * e.second;
        const int b = s[0][1] * e.first + s[1][1] * e.second;
        r = std::min(r, a);
        sv = std::min(sv, b);
        m.emplace(Monomial{a, b}, c);
    }
    Polynomial::Map shifted;
    for (auto& [e, c] : m) shifted.emplace(Monomial{e.first - r, e.second - sv}, std::move(c));
    return {r, sv, Polynomial(std::move(shifted))};
}

Polynomial triangular_change(const Polynomial& f, const FieldElement& c, int k, Axis) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "triangular change needs k >= 0");
    if (c.is_zero()) return f;
    const int dy = f.degree_y();
    std::vector<FieldElement> cp(static_cast<std::size_t>(std::max(dy, 0)) + 1);
    cp[0] = FieldElement(1);
    for (std::size_t i = 1; i < cp.size(); ++i) cp[i] = cp[i - 1] * c;
    Polynomial::Map r;
    mpz_class binom;
    for (const auto& [e, a] : f.terms()) {
        const int j = e.second;
        for (int t = 0; t <= j; ++t) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(t));
            FieldElement term = a * cp[static_cast<std::size_t>(j - t)];
            if (binom != 1) term *= FieldElement(Rational(binom));
            Monomial m{e.first + k * (j - t), t};
            auto [it, fresh] = r.emplace(m, term);
            if (!fresh) it->second += term;
        }
    }
    return Polynomial(std::move(r));
}

bool has_repeated_factor(const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial");
    const auto cy = f.coefficients_in_y();
    UPoly content;
    for (const auto& c : cy) content = gcd(content, c);
    if (content.degree() > 0 && gcd(content, content.derivative()).degree() > 0) return true;
    const int n = f.degree_y();
    if (n <= 0) return false;
    const int dx = std::max(f.degree_x(), 1);
    const int bound = (2 * n - 1) * dx + 2 + content.degree();
    int tried = 0;
    for (long k = 0; tried <= bound; ++k) {
        const long x0 = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
        const FieldElement xv{Rational(x0)};
        if (cy[static_cast<std::size_t>(n)].eval(xv).is_zero()) continue;
        if (!content.is_zero() && content.eval(xv).is_zero()) continue;
        std::vector<FieldElement> v;
        for (const auto& c : cy) v.push_back(c.eval(xv));
        UPoly g(std::move(v));
        ++tried;
        if (gcd(g, g.derivative()).degree() == 0) return false;
    }
    return true;
}

namespace {

UPoly content_x(const Polynomial& f) {
    UPoly c;
    for (const auto& u : f.coefficients_in_y()) c = gcd(c, u);
    return c;
}

Polynomial times_upoly(const Polynomial& f, const UPoly& u) { return f * Polynomial::from_coefficients_in_y({u}); }

Polynomial primitive_part(const Polynomial& f) {
    UPoly c = content_x(f);
    std::vector<UPoly> cy = f.coefficients_in_y();
    for (auto& u : cy) u = divmod(u, c).first;
    return Polynomial::from_coefficients_in_y(cy);
}

}  // namespace

Polynomial exact_divide(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
    auto lead = [](const Polynomial& p) {
        auto best = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (std::make_pair(it->first.second, it->first.first) > std::make_pair(best->first.second, best->first.first))
                best = it;
        return *best;
    };
    const auto [dm, dc] = lead(d);
    Polynomial q, r = f;
    while (!r.is_zero()) {
        const auto [rm, rc] = lead(r);
        if (rm.first < dm.first || rm.second < dm.second) throw Error(ErrorCode::InvalidArgument, "division is not exact");
        Polynomial t = Polynomial::monomial(rc / dc, rm.first - dm.first, rm.second - dm.second);
        q += t;
        r -= t * d;
    }
    return q;
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() && g.is_zero()) return Polynomial();
    if (f.is_zero() || g.is_zero()) {
        const Polynomial& h = f.is_zero() ? g : f;
        Polynomial pp = primitive_part(h);
        return times_upoly(pp, content_x(h));
    }
    UPoly c = gcd(content_x(f), content_x(g));
    Polynomial a = primitive_part(f), b = primitive_part(g);
    if (a.degree_y() < b.degree_y()) std::swap(a, b);
    while (!b.is_zero() && b.degree_y() > 0) {
        Polynomial r = a;
        const int db = b.degree_y();
        const UPoly lb = b.coefficients_in_y().back();
        while (!r.is_zero() && r.degree_y() >= db) {
            const UPoly lr = r.coefficients_in_y().back();
            r = times_upoly(r, lb) - times_upoly(b, lr) * Polynomial::monomial(FieldElement(1), 0, r.degree_y() - db);
        }
        a = b;
        b = r.is_zero() ? r : primitive_part(r);
    }
    Polynomial h = b.is_zero() ? a : Polynomial::constant(FieldElement(1));
    // Normalize: primitive with a monic leading coefficient in y.
    h = primitive_part(h);
    FieldElement lc = h.coefficients_in_y().back().lc();
    h *= lc.inverse();
    return times_upoly(h, c);
}

}  // namespace curvesing
