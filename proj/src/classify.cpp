#include "curvesing/classify.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

const Atom& base_of(const TypeItem& it) {
    if (const Atom* a = std::get_if<Atom>(&it)) return *a;
    return std::get<Tower>(it).base;
}

// -1, 0, 1 comparing m1/n1 with m2/n2
int slope_cmp(const Atom& p, const Atom& q) {
    long l = static_cast<long>(p.m) * q.n, r = static_cast<long>(q.m) * p.n;
    return l < r ? -1 : (l > r ? 1 : 0);
}

std::string atom_string(const Atom& a) { return "B_{" + std::to_string(a.n) + "," + std::to_string(a.m) + "}"; }

std::string item_string(const TypeItem& it);

std::string sup_string(const std::vector<Summand>& sup) {
    std::string s;
    for (std::size_t k = 0; k < sup.size(); ++k) {
        if (k) s += "+";
        if (sup[k].count > 1) s += std::to_string(sup[k].count);
        std::string body = type_to_string(sup[k].type);
        s += (sup[k].count > 1 && sup[k].type.items.size() > 1) ? "{" + body + "}" : body;
    }
    return s;
}

std::string item_string(const TypeItem& it) {
    if (const Atom* a = std::get_if<Atom>(&it)) return atom_string(*a);
    const Tower& t = std::get<Tower>(it);
    return "(" + atom_string(t.base) + "^" + std::to_string(t.e) + ")^{" + sup_string(t.sup) + "}";
}

// ---------------------------------------------------------------- parser

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    TypeExpr parse_all() {
        TypeExpr t = comp();
        ws();
        if (p_ != s_.size()) fail("unexpected trailing input");
        return t;
    }

private:
    const std::string& s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::Syntax, "type syntax error at position " + std::to_string(p_) + ": " + msg);
    }

    void ws() {
        while (p_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[p_])) || s_[p_] == '$') {
                ++p_;
            } else if (s_[p_] == '\\' && p_ + 1 < s_.size() && (s_[p_ + 1] == ' ' || s_[p_ + 1] == ',' || s_[p_ + 1] == ';')) {
                p_ += 2;
            } else {
                break;
            }
        }
    }

    bool lit(const std::string& t) {
        ws();
        if (s_.compare(p_, t.size(), t) == 0) {
            p_ += t.size();
            return true;
        }
        return false;
    }

    void expect(const std::string& t) {
        if (!lit(t)) fail("expected '" + t + "'");
    }

    bool peek(const std::string& t) {
        ws();
        return s_.compare(p_, t.size(), t) == 0;
    }

    int integer() {
        ws();
        std::size_t q = p_;
        while (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) ++q;
        if (q == p_) fail("expected an integer");
        if (q - p_ > 6) fail("integer too large");
        int v = std::stoi(s_.substr(p_, q - p_));
        p_ = q;
        return v;
    }

    int braced_integer() {
        if (lit("{")) {
            int v = integer();
            expect("}");
            return v;
        }
        return integer();
    }

    bool separator() {
        ws();
        if (lit("\\circ") || lit("\xE2\x88\x98")) return true;
        if (p_ < s_.size() && s_[p_] == 'o') {
            std::size_t q = p_ + 1;
            while (q < s_.size() && std::isspace(static_cast<unsigned char>(s_[q]))) ++q;
            if (q < s_.size() && std::string("BAE({").find(s_[q]) != std::string::npos) {
                p_ = q;
                return true;
            }
        }
        return false;
    }

    TypeExpr comp() {
        TypeExpr t;
        t.items.push_back(item());
        while (separator()) t.items.push_back(item());
        return t;
    }

    Atom atom() {
        ws();
        if (lit("A_")) {
            int n = braced_integer();
            if (n < 1) fail("A_n needs n >= 1");
            return Atom{n + 1, 2};
        }
        if (lit("E_")) {
            if (braced_integer() != 6) fail("only E_6 is supported");
            return Atom{3, 4};
        }
        if (!lit("{B}") && !lit("B")) fail("expected B_{n,m}");
        expect("_");
        expect("{");
        int n = integer();
        expect(",");
        int m = integer();
        expect("}");
        if (n < 1 || m < 1) fail("B_{n,m} needs n, m >= 1");
        return Atom{n, m};
    }

    // ['{'] '(' atom '^' e ')' ['}'] '^' sup
    bool tower(Tower* out) {
        std::size_t save = p_;
        bool brace = lit("{");
        if (!lit("(")) {
            p_ = save;
            return false;
        }
        ws();
        if (!(peek("B") || peek("{B}") || peek("A_") || peek("E_"))) {
            p_ = save;
            return false;
        }
        Atom base = atom();
        if (!lit("^")) {
            p_ = save;
            return false;
        }
        int e = braced_integer();
        expect(")");
        if (brace && !lit("}")) {
            p_ = save;
            return false;
        }
        expect("^");
        if (e < 2) fail("tower exponent must be at least 2");
        out->base = base;
        out->e = e;
        out->sup = superscript();
        return true;
    }

    std::vector<Summand> superscript() {
        if (!lit("{")) return {summand()};
        std::size_t save = p_;
        if (lit("(")) {  // "{(T1+T2)}"
            try {
                std::vector<Summand> s = sum();
                if (lit(")") && lit("}")) return s;
            } catch (const Error&) {
            }
        }
        p_ = save;
        std::vector<Summand> s = sum();
        expect("}");
        return s;
    }

    std::vector<Summand> sum() {
        std::vector<Summand> s{summand()};
        while (lit("+")) s.push_back(summand());
        return s;
    }

    Summand summand() {
        Summand out;
        ws();
        if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) out.count = integer();
        if (out.count < 1) fail("summand count must be positive");
        std::size_t save = p_;
        if (lit("{") && !peek("B}")) {  // "{T1 o T2}" group
            try {
                out.type = comp();
                if (lit("}")) return out;
            } catch (const Error&) {
            }
        }
        p_ = save;
        out.type = comp();
        return out;
    }

    TypeItem item() {
        Tower t;
        if (tower(&t)) return t;
        return atom();
    }
};

// ---------------------------------------------------------- normalization

std::vector<Summand> group_summands(const std::vector<Summand>& in);

TypeExpr sort_merge(const TypeExpr& t) {
    std::vector<TypeItem> items;
    for (const TypeItem& it : t.items) {
        if (const Tower* tw = std::get_if<Tower>(&it)) {
            Tower c = *tw;
            c.sup = group_summands(c.sup);
            items.push_back(c);
        } else {
            items.push_back(it);
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const TypeItem& x, const TypeItem& y) {
        int c = slope_cmp(base_of(x), base_of(y));
        if (c != 0) return c < 0;
        int kx = x.index() == 0 ? 0 : std::get<Tower>(x).e;
        int ky = y.index() == 0 ? 0 : std::get<Tower>(y).e;
        return kx < ky;
    });
    std::vector<TypeItem> out;
    for (TypeItem& it : items) {
        if (!out.empty() && slope_cmp(base_of(out.back()), base_of(it)) == 0 && out.back().index() == it.index()) {
            if (Atom* a = std::get_if<Atom>(&out.back())) {
                const Atom& b = std::get<Atom>(it);
                a->n += b.n;
                a->m += b.m;
                continue;
            }
            Tower& a = std::get<Tower>(out.back());
            const Tower& b = std::get<Tower>(it);
            if (a.e == b.e) {
                a.base.n += b.base.n;
                a.base.m += b.base.m;
                a.sup.insert(a.sup.end(), b.sup.begin(), b.sup.end());
                a.sup = group_summands(a.sup);
                continue;
            }
        }
        out.push_back(std::move(it));
    }
    return TypeExpr{std::move(out)};
}

bool summand_before(const Summand& x, const Summand& y) {
    const auto& a = x.type.items;
    const auto& b = y.type.items;
    if (a.size() == 1 && b.size() == 1 && a[0].index() == 0 && b[0].index() == 0) {
        const Atom& p = std::get<Atom>(a[0]);
        const Atom& q = std::get<Atom>(b[0]);
        if (p.n != q.n) return p.n > q.n;
        if (p.m != q.m) return p.m > q.m;
        return x.count > y.count;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    std::string sx = type_to_string(x.type), sy = type_to_string(y.type);
    if (sx != sy) return sx < sy;
    return x.count > y.count;
}

std::vector<Summand> group_summands(const std::vector<Summand>& in) {
    std::map<std::string, Summand> by;
    for (const Summand& s : in) {
        TypeExpr t = sort_merge(s.type);
        std::string key = type_to_string(t);
        auto it = by.find(key);
        if (it == by.end())
            by.emplace(key, Summand{s.count, t});
        else
            it->second.count += s.count;
    }
    std::vector<Summand> out;
    for (auto& [k, s] : by) out.push_back(s);
    std::sort(out.begin(), out.end(), summand_before);
    return out;
}

// B_{K,2} o B_{2,1} o (B_{2,1}^2)^{B_{k,2}} ~ B_{k+4,2} o B_{2,1} o (B_{2,1}^2)^{B_{K-4,2}}
void apply_symmetry(TypeExpr& t) {
    auto& it = t.items;
    for (std::size_t i = 0; i + 2 < it.size(); ++i) {
        const Atom* first = std::get_if<Atom>(&it[i]);
        const Atom* mid = std::get_if<Atom>(&it[i + 1]);
        Tower* tw = std::get_if<Tower>(&it[i + 2]);
        if (!first || !mid || !tw) continue;
        if (first->m != 2 || mid->n != 2 || mid->m != 1) continue;
        if (tw->base.n != 2 || tw->base.m != 1 || tw->e != 2 || tw->sup.size() != 1 || tw->sup[0].count != 1) continue;
        const auto& child = tw->sup[0].type.items;
        if (child.size() != 1 || child[0].index() != 0) continue;
        Atom c = std::get<Atom>(child[0]);
        if (c.m != 2) continue;
        int K = first->n, k = c.n;
        if (k + 4 >= K) continue;
        it[i] = Atom{k + 4, 2};
        tw->sup[0].type = TypeExpr::atom(K - 4, 2);
    }
}

TypeExpr swapped_orientation(const TypeExpr& t) {
    TypeExpr s;
    for (const TypeItem& it : t.items) {
        if (const Atom* a = std::get_if<Atom>(&it)) {
            s.items.push_back(Atom{a->m, a->n});
        } else {
            Tower tw = std::get<Tower>(it);
            std::swap(tw.base.n, tw.base.m);
            s.items.push_back(tw);
        }
    }
    return s;
}

TypeExpr normalize_inner(const TypeExpr& t) {
    TypeExpr s = t;
    for (TypeItem& it : s.items)
        if (Tower* tw = std::get_if<Tower>(&it))
            for (Summand& sm : tw->sup) sm.type = normalize_inner(sm.type);
    s = sort_merge(s);
    apply_symmetry(s);
    return s;
}

std::vector<int> orientation_key(const TypeExpr& t) {
    std::vector<int> k;
    for (const TypeItem& it : t.items) k.push_back(base_of(it).n - base_of(it).m);
    for (const TypeItem& it : t.items) k.push_back(base_of(it).n);
    return k;
}

// --------------------------------------------------------- type extraction

TypeExpr type_of_node(const GermResolution& node) {
    NewtonPolygon np = node.smooth ? newton_boundary(node.germ) : node.result.polygon;
    std::vector<std::vector<TypeItem>> groups;  // by increasing i
    if (np.x_power > 0) {
        int h = np.faces.empty() ? 1 : np.faces.front().a / np.faces.front().b + 1;
        groups.push_back({Atom{1, h}});
    }
    for (std::size_t fi = 0; fi < np.faces.size(); ++fi) {
        const Face& face = np.faces[fi];
        int simple = 0;
        std::map<int, Tower> towers;
        if (node.smooth) {
            for (const FaceRoot& r : face.roots) simple += r.degree() * r.nu;
        } else {
            const auto& outs = node.result.outcomes;
            for (std::size_t k = 0; k < outs.size(); ++k) {
                const RootOutcome& o = outs[k];
                if (o.face != static_cast<int>(fi)) continue;
                if (o.nu == 1) {
                    simple += o.conjugates;
                    continue;
                }
                Tower& tw = towers.try_emplace(o.nu, Tower{Atom{0, 0}, o.nu, {}}).first->second;
                tw.base.n += face.b * o.conjugates;
                tw.base.m += face.a * o.conjugates;
                tw.sup.push_back(Summand{o.conjugates, type_of_node(*node.children.at(k))});
            }
        }
        std::vector<TypeItem> g;
        if (simple > 0) g.push_back(Atom{face.b * simple, face.a * simple});
        for (auto& [e, tw] : towers) g.push_back(tw);
        groups.push_back(std::move(g));
    }
    if (np.y_power > 0) {
        int w = np.faces.empty() ? 1 : np.faces.back().b / np.faces.back().a + 1;
        groups.push_back({Atom{w, 1}});
    }
    TypeExpr t;
    for (auto it = groups.rbegin(); it != groups.rend(); ++it)
        for (const TypeItem& x : *it) t.items.push_back(x);
    return t;
}

// ------------------------------------------------------------ model germs

struct RootSpec {
    int r = 1;
    int nu = 1;
    const TypeExpr* child = nullptr;
};

struct FaceSpec {
    int a = 1, b = 1;  // face factor y^a + r x^b
    int X = 0, Y = 0;  // lower-right end of the face is (X + b M, Y)
    std::vector<RootSpec> roots;
    bool vertex_only = true;
    int total() const {
        int s = 0;
        for (const RootSpec& r : roots) s += r.nu;
        return s;
    }
};

Polynomial xy(int i, int j, const FieldElement& c = FieldElement(1)) { return Polynomial::monomial(c, i, j); }

Polynomial root_factor(const FaceSpec& f, int r) { return xy(0, f.a) + xy(f.b, 0, FieldElement(r)); }

// Child germ at the point t = -r of the face with weight (a, b).
Polynomial chart_child(const Polynomial& f, const FaceSpec& face, int r) {
    Subdivision sub = canonical_subdivision(dual_newton_diagram(f));
    const auto& sv = sub.vertices;
    Weight P{face.a, face.b};
    auto it = std::find(sv.begin(), sv.end(), P);
    if (it == sv.end() || it + 1 == sv.end())
        throw Error(ErrorCode::ModelConstructionFailed, "face weight missing from the model's fan");
    const Weight& Pn = *(it + 1);
    Matrix2 chart{{{P.first, Pn.first}, {P.second, Pn.second}}};
    MonomialPullback pb = substitute_monomial(f, chart);
    return triangular_change(pb.g, FieldElement(-r), 0, Axis::v_by_u);
}

Polynomial build_model(const TypeExpr& t, int depth, bool extended);

// With `extended`, chart terms at or above the root multiplicity are matched too
// wherever a correction monomial exists; nested superscripts need them.
void correct_children(Polynomial& f, const std::vector<FaceSpec>& faces, int depth, bool extended) {
    struct Target {
        std::size_t face;
        std::size_t root;
        Polynomial h;
        Polynomial goal;  // unit * h, filled lazily
        int kmax;
        int lmax;
    };
    std::vector<Target> targets;
    for (std::size_t fi = 0; fi < faces.size(); ++fi)
        for (std::size_t ri = 0; ri < faces[fi].roots.size(); ++ri) {
            const RootSpec& rs = faces[fi].roots[ri];
            if (!rs.child) continue;
            Polynomial h = build_model(*rs.child, depth + 1, extended);
            NewtonPolygon hp = newton_boundary(h);
            if (hp.vertices.front() != Monomial{0, rs.nu})
                throw Error(ErrorCode::ModelConstructionFailed,
                            "superscript " + type_to_string(*rs.child) + " does not have order " + std::to_string(rs.nu) +
                                " along the new divisor");
            targets.push_back({fi, ri, h, {}, h.degree_x(), extended ? rs.nu + h.degree_x() + 1 : rs.nu});
        }
    if (targets.empty()) return;
    for (Target& tg : targets) {
        const FaceSpec& face = faces[tg.face];
        Polynomial g = chart_child(f, face, face.roots[tg.root].r);
        Polynomial::Map k0;
        for (const auto& [m, c] : g.terms())
            if (m.first == 0) k0.emplace(m, c);
        Polynomial unit = Polynomial(k0).divided_by_monomial(0, face.roots[tg.root].nu);
        tg.goal = unit * tg.h;
    }
    const int cap = 20000;
    for (int iter = 0; iter < cap; ++iter) {
        bool found = false;
        for (const Target& tg : targets) {
            const FaceSpec& face = faces[tg.face];
            const RootSpec& rs = face.roots[tg.root];
            Polynomial g = chart_child(f, face, rs.r);
            Polynomial diff = tg.goal - g;
            Monomial worst{-1, -1};
            for (const auto& [m, c] : diff.terms()) {
                if (m.first < 1 || m.first > tg.kmax || m.second >= tg.lmax) continue;
                if (m.second >= rs.nu) {
                    const int S = m.first + face.a * face.b * (rs.nu - m.second);
                    int i = S / face.a;
                    while (i >= 0 && (S - i * face.a) % face.b != 0) --i;
                    if (S < 0 || i < 0) continue;
                }
                if (worst.first < 0 || m < worst) worst = m;
            }
            if (worst.first < 0) continue;
            found = true;
            const int K = worst.first, l = worst.second;
            const int S = K + face.a * face.b * (rs.nu - l);
            // Smallest x exponent by default; the extended pass keeps corrections
            // low in y so that an enclosing chart can still reach them.
            int i = extended ? S / face.a : 0;
            if (extended)
                while (i >= 0 && (S - i * face.a) % face.b != 0) --i;
            else
                while (i * face.a <= S && (S - i * face.a) % face.b != 0) ++i;
            if (i < 0 || i * face.a > S) throw Error(ErrorCode::ModelConstructionFailed, "correction monomial not representable");
            int j = (S - i * face.a) / face.b;
            Polynomial T = xy(face.X + i, face.Y + j) * root_factor(face, rs.r).pow(l);
            for (std::size_t q = 0; q < face.roots.size(); ++q)
                if (q != tg.root) T *= root_factor(face, face.roots[q].r).pow(face.roots[q].nu);
            Polynomial delta = chart_child(f + T, face, rs.r) - g;
            FieldElement lead = delta.coeff(K, l);
            if (lead.is_zero()) throw Error(ErrorCode::ModelConstructionFailed, "correction term has no effect");
            f += T * (diff.coeff(K, l) / lead);
            break;
        }
        if (!found) return;
    }
    throw Error(ErrorCode::ModelConstructionFailed, "child corrections did not converge");
}

Polynomial build_model(const TypeExpr& t, int depth, bool extended) {
    if (depth > 8) throw Error(ErrorCode::ModelConstructionFailed, "type nested too deeply");
    if (t.items.empty()) throw Error(ErrorCode::ModelConstructionFailed, "empty type");
    TypeExpr s = sort_merge(t);
    // Faces by increasing i: steep items first, i.e. the reverse of the printed order.
    std::vector<FaceSpec> faces;
    for (auto it = s.items.rbegin(); it != s.items.rend(); ++it) {
        const Atom& base = base_of(*it);
        int g = std::gcd(base.n, base.m);
        int b = base.n / g, a = base.m / g;
        if (faces.empty() || faces.back().a != a || faces.back().b != b) {
            FaceSpec fs;
            fs.a = a;
            fs.b = b;
            faces.push_back(fs);
        }
        FaceSpec& fs = faces.back();
        if (std::holds_alternative<Atom>(*it)) {
            for (int k = 0; k < g; ++k) fs.roots.push_back({0, 1, nullptr});
        } else {
            const Tower& tw = std::get<Tower>(*it);
            fs.vertex_only = false;
            std::vector<const TypeExpr*> kids;
            for (const Summand& sm : tw.sup)
                for (int c = 0; c < sm.count; ++c) kids.push_back(&sm.type);
            if (static_cast<int>(kids.size()) != g)
                throw Error(ErrorCode::ModelConstructionFailed, "tower " + item_string(*it) + " has " + std::to_string(kids.size()) +
                                                                    " superscript germs for " + std::to_string(g) + " points");
            for (const TypeExpr* k : kids) fs.roots.push_back({0, tw.e, k});
        }
    }
    int H = 0;
    for (FaceSpec& fs : faces) {
        int r = 0;
        for (RootSpec& rs : fs.roots) rs.r = ++r;
        H += fs.a * fs.total();
    }
    int X = 0, Y = H;
    Polynomial::Map terms;
    FieldElement scale(1);
    for (FaceSpec& fs : faces) {
        int M = fs.total();
        Y -= fs.a * M;
        fs.X = X;
        fs.Y = Y;
        if (fs.vertex_only) {
            terms[{X, Y + fs.a * M}] = scale;
            terms[{X + fs.b * M, Y}] = scale;
        } else {
            Polynomial F = xy(X, Y, scale);
            FieldElement end = scale;
            for (const RootSpec& rs : fs.roots) {
                F *= root_factor(fs, rs.r).pow(rs.nu);
                end *= FieldElement(rs.r).pow(rs.nu);
            }
            for (const auto& [m, c] : F.terms()) terms[m] = c;
            scale = end;
        }
        X += fs.b * M;
    }
    Polynomial f(terms);
    correct_children(f, faces, depth, extended);
    return f;
}

}  // namespace

std::string type_to_string(const TypeExpr& t) {
    std::string s;
    for (std::size_t k = 0; k < t.items.size(); ++k) {
        if (k) s += "o";
        s += item_string(t.items[k]);
    }
    return s;
}

TypeExpr parse_type(const std::string& text) { return Parser(text).parse_all(); }

TypeExpr normalize(const TypeExpr& t) {
    TypeExpr a = normalize_inner(t);
    TypeExpr b = normalize_inner(swapped_orientation(t));
    auto ka = orientation_key(a), kb = orientation_key(b);
    if (ka != kb) return ka > kb ? a : b;
    return type_to_string(a) <= type_to_string(b) ? a : b;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) { return type_to_string(normalize(a)) == type_to_string(normalize(b)); }

TypeExpr type_from_tree(const GermResolution& node) { return type_of_node(node); }

TypeExpr type_from_resolution(const Polynomial& f, const ResolveOptions& opt, bool admissible) {
    Polynomial g = f;
    if (admissible && !f.is_zero() && f.order() >= 1) {
        FieldTower tower(f.node(), opt.tower_depth_limit);
        for (int round = 0; round < opt.normalization_limit; ++round) {
            int a = 0, b = 0;
            g = admissible_normalize(g, tower, opt, &a);
            g = admissible_normalize(g.swapped(), tower, opt, &b).swapped();
            if (a == 0 && b == 0) break;
        }
    }
    Resolution res = resolve_full(g, opt);
    return type_from_tree(*res.tree);
}

Polynomial model_germ(const TypeExpr& t, const ResolveOptions& opt) {
    Polynomial f = build_model(t, 0, false);
    TypeExpr back = type_from_resolution(f, opt, false);
    if (back == t) return f;
    std::string first = type_to_string(normalize(back));
    try {
        Polynomial g = build_model(t, 0, true);
        if (type_from_resolution(g, opt, false) == t) return g;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ModelConstructionFailed) throw;
    }
    throw Error(ErrorCode::ModelConstructionFailed, "model of " + type_to_string(t) + " resolves to " + first);
}

bool is_equivalent(const TypeExpr& s, const TypeExpr& t, const ResolveOptions& opt) {
    if (s == t) return true;
    ResolutionGraph a = minimize(resolve(model_germ(s, opt), opt));
    ResolutionGraph b = minimize(resolve(model_germ(t, opt), opt));
    return graphs_isomorphic(a, b);
}

bool germ_has_type(const Polynomial& f, const TypeExpr& t, const ResolveOptions& opt) {
    return graphs_isomorphic(minimize(resolve(f, opt)), minimize(resolve(model_germ(t, opt), opt)));
}

}  // namespace curvesing
