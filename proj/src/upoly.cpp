#include "curvesing/upoly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace curvesing {

UPoly::UPoly(std::vector<FieldElement> c) : c_(std::move(c)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::constant(const FieldElement& c) { return UPoly(std::vector<FieldElement>{c}); }

UPoly UPoly::monomial(const FieldElement& c, int deg) {
    std::vector<FieldElement> v(static_cast<std::size_t>(deg) + 1);
    v.back() = c;
    return UPoly(std::move(v));
}

UPoly UPoly::variable() { return monomial(FieldElement(1), 1); }

UPoly UPoly::from_rationals(const std::vector<Rational>& c) {
    std::vector<FieldElement> v;
    v.reserve(c.size());
    for (const auto& q : c) v.emplace_back(q);
    return UPoly(std::move(v));
}

FieldElement UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FieldElement();
    return c_[static_cast<std::size_t>(i)];
}

const FieldElement& UPoly::lc() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
}

NodePtr UPoly::node() const {
    NodePtr n;
    for (const auto& c : c_) n = common_node(n, c.node());
    return n;
}

bool UPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const FieldElement& c) { return c.is_rational(); });
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UPoly& UPoly::operator*=(const FieldElement& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<FieldElement> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * FieldElement(static_cast<long>(i));
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (c_.empty()) return *this;
    if (c_.back().is_one()) return *this;
    return *this * c_.back().inverse();
}

UPoly UPoly::pow(int e) const {
    UPoly r = constant(FieldElement(1));
    UPoly b = *this;
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

FieldElement UPoly::eval(const FieldElement& t) const {
    FieldElement acc;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UPoly UPoly::shifted(const FieldElement& c) const {
    // Horner in the shifted variable.
    UPoly r;
    const UPoly lin(std::vector<FieldElement>{c, FieldElement(1)});
    for (std::size_t i = c_.size(); i-- > 0;) {
        r *= lin;
        r += constant(c_[i]);
    }
    return r;
}

int UPoly::order_at_zero() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

std::string UPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FieldElement& c = c_[i];
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c.is_rational()) {
            neg = sgn(c.rational()) < 0;
            cs = rational_to_string(abs(c.rational()));
        } else {
            cs = c.to_string();
        }
        if (!first) os << (neg ? "-" : "+");
        else if (neg) os << "-";
        const bool unit = cs == "1";
        if (i == 0) os << cs;
        else {
            if (!unit) os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
    std::vector<FieldElement> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<FieldElement> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const FieldElement inv = b.lc().inverse();
    for (int i = a.degree(); i >= db; --i) {
        const FieldElement& top = r[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        FieldElement f = top * inv;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a0, const UPoly& b0) {
    UPoly a = a0, b = b0;
    while (!b.is_zero()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FieldElement resultant(const UPoly& a0, const UPoly& b0) {
    if (a0.is_zero() || b0.is_zero()) return FieldElement();
    UPoly a = a0, b = b0;
    FieldElement res(1);
    while (true) {
        const int da = a.degree(), db = b.degree();
        if (db == 0) return res * b.lc().pow(da);
        UPoly r = divmod(a, b).second;
        if (r.is_zero()) return FieldElement();
        const int dr = r.degree();
        // res(a,b) = (-1)^{da db} lc(b)^{da-dr} res(b,r)
        FieldElement f = b.lc().pow(da - dr);
        if ((da * db) % 2 == 1) f = -f;
        res *= f;
        a = std::move(b);
        b = std::move(r);
    }
}

std::vector<std::pair<UPoly, int>> squarefree_factor(const UPoly& u) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree factorization of zero");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = u.monic();
    if (f.degree() == 0) return out;
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = divmod(f, a).first;
    UPoly c = divmod(fp, a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

bool factor_less(const UPoly& a, const UPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = 0; i <= a.degree(); ++i) {
        int c = compare(a.coeff(i), b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

UPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    // Newton divided differences.
    const std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
            if (i == j) break;
        }
    UPoly r;
    for (std::size_t k = n; k-- > 0;) {
        r *= UPoly(std::vector<FieldElement>{FieldElement(Rational(-xs[k])), FieldElement(1)});
        r += UPoly::constant(FieldElement(dd[k]));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Factorization over Z via a single large prime (no Hensel lifting needed).

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

struct Fp {
    mpz_class p;

    mpz_class red(const mpz_class& x) const {
        mpz_class r = x % p;
        if (sgn(r) < 0) r += p;
        return r;
    }
    ZPoly reduce(ZPoly a) const {
        for (auto& c : a) c = red(c);
        ztrim(a);
        return a;
    }
    mpz_class inv(const mpz_class& x) const {
        mpz_class r;
        mpz_invert(r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    ZPoly mul(const ZPoly& a, const ZPoly& b) const {
        if (a.empty() || b.empty()) return {};
        ZPoly r(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return reduce(r);
    }
    ZPoly sub(ZPoly a, const ZPoly& b) const {
        if (b.size() > a.size()) a.resize(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        return reduce(a);
    }
    std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
        const int db = zdeg(b);
        if (zdeg(a) < db) return {{}, a};
        ZPoly q(static_cast<std::size_t>(zdeg(a) - db) + 1);
        const mpz_class il = inv(b.back());
        for (int i = zdeg(a); i >= db; --i) {
            mpz_class f = red(a[static_cast<std::size_t>(i)] * il);
            q[static_cast<std::size_t>(i - db)] = f;
            if (sgn(f) == 0) continue;
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(i - db + j)] = red(a[static_cast<std::size_t>(i - db + j)] - f * b[static_cast<std::size_t>(j)]);
        }
        a.resize(static_cast<std::size_t>(db));
        ztrim(a);
        ztrim(q);
        return {q, a};
    }
    ZPoly monic(ZPoly a) const {
        if (a.empty()) return a;
        mpz_class il = inv(a.back());
        for (auto& c : a) c = red(c * il);
        return a;
    }
    ZPoly gcd(ZPoly a, ZPoly b) const {
        while (!b.empty()) {
            ZPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    ZPoly powmod(ZPoly base, mpz_class e, const ZPoly& m) const {
        ZPoly r{1};
        base = divmod(base, m).second;
        while (sgn(e) > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = divmod(mul(r, base), m).second;
            e >>= 1;
            if (sgn(e) > 0) base = divmod(mul(base, base), m).second;
        }
        return r;
    }
    ZPoly derivative(const ZPoly& a) const {
        if (a.size() <= 1) return {};
        ZPoly r(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
        return reduce(r);
    }
};

// Equal-degree splitting of a product of distinct monic irreducibles of degree d.
void edf(const Fp& F, const ZPoly& g, int d, std::mt19937_64& rng, std::vector<ZPoly>& out) {
    if (zdeg(g) == d) {
        out.push_back(g);
        return;
    }
    gmp_randclass gr(gmp_randinit_default);
    gr.seed(static_cast<unsigned long>(rng()));
    mpz_class pd;
    mpz_pow_ui(pd.get_mpz_t(), F.p.get_mpz_t(), static_cast<unsigned long>(d));
    const mpz_class e = (pd - 1) / 2;
    while (true) {
        ZPoly a(static_cast<std::size_t>(zdeg(g)));
        for (auto& c : a) c = gr.get_z_range(F.p);
        ztrim(a);
        if (zdeg(a) < 1) continue;
        ZPoly b = F.powmod(a, e, g);
        b = F.sub(b, ZPoly{1});
        ZPoly h = F.gcd(g, b);
        if (zdeg(h) > 0 && zdeg(h) < zdeg(g)) {
            edf(F, h, d, rng, out);
            edf(F, F.divmod(g, h).first, d, rng, out);
            return;
        }
    }
}

std::vector<ZPoly> factor_mod_p(const Fp& F, ZPoly f) {
    std::vector<ZPoly> out;
    std::mt19937_64 rng(0x5eed);
    f = F.monic(f);
    const ZPoly x{0, 1};
    ZPoly h = x;
    int d = 0;
    while (zdeg(f) >= 2 * (d + 1)) {
        ++d;
        h = F.powmod(h, F.p, f);
        ZPoly g = F.gcd(f, F.sub(h, x));
        if (zdeg(g) > 0) {
            edf(F, g, d, rng, out);
            f = F.divmod(f, g).first;
            h = F.divmod(h, f).second;
        }
    }
    if (zdeg(f) > 0) out.push_back(F.monic(f));
    return out;
}

mpz_class zcontent(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) g = ::gcd(g, c);
    return g;
}

// Exact division over Z; returns false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    if (sgn(a[0]) != 0 && sgn(b[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return false;
    ZPoly r = a;
    const int db = zdeg(b);
    q.assign(static_cast<std::size_t>(zdeg(a) - db) + 1, 0);
    for (int i = zdeg(a); i >= db; --i) {
        mpz_class& top = r[static_cast<std::size_t>(i)];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_class f = top / b.back();
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    for (int i = 0; i < db; ++i)
        if (sgn(r[static_cast<std::size_t>(i)]) != 0) return false;
    return true;
}

// f: primitive, squarefree, positive leading coefficient.
std::vector<ZPoly> factor_squarefree_z(ZPoly f) {
    const int n = zdeg(f);
    if (n <= 1) return {f};
    mpz_class norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    mpz_class nr = sqrt(norm2) + 1;
    mpz_class bound = (mpz_class(1) << static_cast<unsigned>(n)) * nr * abs(f.back());
    Fp F;
    mpz_class cand = 2 * bound + 1;
    while (true) {
        mpz_nextprime(F.p.get_mpz_t(), cand.get_mpz_t());
        cand = F.p;
        if (mpz_divisible_p(f.back().get_mpz_t(), F.p.get_mpz_t())) continue;
        ZPoly fr = F.reduce(f);
        if (zdeg(F.gcd(fr, F.derivative(fr))) == 0) break;
    }
    std::vector<ZPoly> mods = factor_mod_p(F, F.reduce(f));
    std::vector<ZPoly> result;
    const mpz_class half = F.p / 2;
    std::size_t s = 1;
    while (2 * s <= mods.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            ZPoly g{F.red(f.back())};
            for (std::size_t i : idx) g = F.mul(g, mods[i]);
            for (auto& c : g)
                if (c > half) c -= F.p;
            mpz_class ct = zcontent(g);
            for (auto& c : g) c /= ct;
            if (sgn(g.back()) < 0)
                for (auto& c : g) c = -c;
            ZPoly q;
            if (zdivides(f, g, q)) {
                result.push_back(g);
                f = q;
                std::vector<ZPoly> rest;
                for (std::size_t i = 0; i < mods.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(mods[i]);
                mods = std::move(rest);
                found = true;
                break;
            }
            // next combination
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == mods.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zdeg(f) > 0) result.push_back(f);
    return result;
}

// Rational squarefree polynomial -> monic irreducible factors over Q.
std::vector<UPoly> factor_squarefree_q(const UPoly& u) {
    mpz_class den = 1;
    for (const auto& c : u.coeffs()) den = lcm(den, c.rational().get_den());
    ZPoly z;
    for (const auto& c : u.coeffs()) z.push_back(mpz_class(c.rational() * den));
    mpz_class ct = zcontent(z);
    for (auto& c : z) c /= ct;
    if (sgn(z.back()) < 0)
        for (auto& c : z) c = -c;
    std::vector<UPoly> out;
    for (const auto& g : factor_squarefree_z(z)) {
        std::vector<Rational> q(g.begin(), g.end());
        out.push_back(UPoly::from_rationals(q).monic());
    }
    return out;
}

UPoly lift_poly(const UPoly& p, const NodePtr& n) {
    std::vector<FieldElement> c;
    for (const auto& e : p.coeffs()) c.push_back(e.lifted(n));
    return UPoly(std::move(c));
}

// Norm from the tower down to Q, by evaluation and interpolation.
UPoly norm_to_q(const UPoly& h, const NodePtr& n) {
    const std::size_t deg = static_cast<std::size_t>(h.degree()) * node_dim(n);
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= deg; ++k) {
        FieldElement v = h.eval(FieldElement(Rational(static_cast<long>(k)))).lifted(n);
        xs.emplace_back(static_cast<long>(k));
        ys.push_back(v.norm());
    }
    return interpolate(xs, ys);
}

// Irreducible monic factors over the tower of a squarefree monic h.
std::vector<UPoly> factor_squarefree_tower(const UPoly& h, const NodePtr& n) {
    if (h.degree() <= 1) return {h};
    // Primitive-element style shift: c = j * (a_1 + 2 a_2 + ...).
    FieldElement prim;
    {
        FieldTower t(n, 64);
        for (int l = 1; l <= t.depth(); ++l) prim += t.generator(l) * FieldElement(l);
    }
    for (long j = 0; j < 64; ++j) {
        const long jj = (j % 2 == 0) ? j / 2 : -(j + 1) / 2;
        const FieldElement c = prim * FieldElement(jj);
        UPoly H = h.shifted(-c);  // H(t) = h(t - c)
        UPoly N = norm_to_q(H, n);
        if (gcd(N, N.derivative()).degree() != 0) continue;
        std::vector<UPoly> out;
        int total = 0;
        for (const auto& Ni : factor_squarefree_q(N)) {
            UPoly g = gcd(H, lift_poly(Ni, n));
            if (g.degree() <= 0) continue;
            out.push_back(g.shifted(c).monic());
            total += g.degree();
        }
        if (total != h.degree()) throw Error(ErrorCode::Internal, "tower factorization lost degree");
        return out;
    }
    throw Error(ErrorCode::Internal, "no squarefree norm found");
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor(const UPoly& u, const NodePtr& node) {
    if (u.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
    NodePtr n = common_node(node, u.node());
    std::vector<std::pair<UPoly, int>> out;
    for (const auto& [s, mult] : squarefree_factor(u)) {
        std::vector<UPoly> irr = (n == nullptr) ? factor_squarefree_q(s) : factor_squarefree_tower(lift_poly(s, n), n);
        for (auto& g : irr) out.emplace_back(std::move(g), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (factor_less(a.first, b.first)) return true;
        if (factor_less(b.first, a.first)) return false;
        return a.second < b.second;
    });
    return out;
}

std::pair<FieldTower, FieldElement> adjoin_root(const FieldTower& tower, const UPoly& minpoly) {
    if (minpoly.degree() < 1) throw Error(ErrorCode::InvalidArgument, "adjoin_root needs a non-constant polynomial");
    auto fs = factor(minpoly, tower.top());
    const UPoly& first = fs.front().first;
    if (first.degree() == 1) return {tower, -first.coeff(0).lifted(tower.top())};
    if (tower.depth() >= tower.depth_limit())
        throw Error(ErrorCode::ExtensionDepthExceeded,
                    "adjoining a root of " + first.to_string() + " exceeds the tower depth limit " +
                        std::to_string(tower.depth_limit()));
    FieldTower ext = tower.extend_unchecked(first.coeffs());
    return {ext, ext.generator(ext.depth())};
}

}  // namespace curvesing
