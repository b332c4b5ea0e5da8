#include "curvesing/newton.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

long cross(const Monomial& o, const Monomial& a, const Monomial& b) {
    return static_cast<long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long>(a.second - o.second) * (b.first - o.first);
}

// Builds the face from its endpoints; root data factored over `over`.
Face make_face(const Polynomial& f, Monomial start, Monomial end, const NodePtr& over) {
    Face face;
    face.start = start;
    face.end = end;
    int w = end.first - start.first;
    int h = start.second - end.second;
    int g = std::gcd(w, h);
    face.length = g;
    face.b = w / g;
    face.a = h / g;
    face.d = face.a * start.first + face.b * start.second;
    face.r = start.first;
    face.s = end.second;

    std::vector<FieldElement> cs;
    Polynomial::Map ff;
    for (int k = 0; k <= g; ++k) {
        Monomial m{end.first - k * face.b, end.second + k * face.a};
        FieldElement c = f.coeff(m.first, m.second);
        cs.push_back(c);
        if (!c.is_zero()) ff.emplace(m, c);
    }
    face.reduced = UPoly(cs);
    face.face_function = Polynomial(ff);
    face.c = face.reduced.lc();
    face.squarefree = squarefree_factor(face.reduced);
    for (auto& [p, nu] : factor(face.reduced, common_node(over, f.node()))) {
        FaceRoot root;
        root.factor = p;
        root.nu = nu;
        if (p.degree() == 1) root.gamma = p.coeff(0);
        face.roots.push_back(std::move(root));
    }
    return face;
}

}  // namespace

bool Face::nondegenerate() const {
    return std::all_of(roots.begin(), roots.end(), [](const FaceRoot& r) { return r.nu == 1; });
}

NewtonPolygon newton_boundary(const Polynomial& f, const NodePtr& over) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Newton polygon of the zero polynomial");
    NewtonPolygon np;
    std::map<int, int> lowest;  // i -> min j
    for (const auto& [m, c] : f.terms()) {
        np.support.push_back(m);
        auto it = lowest.find(m.first);
        if (it == lowest.end() || m.second < it->second) lowest[m.first] = m.second;
    }
    np.x_power = f.min_x();
    np.y_power = f.min_y();

    // Lower hull, walking by increasing i; stop once the slope is no longer negative.
    std::vector<Monomial> hull;
    for (const auto& [i, j] : lowest) {
        Monomial p{i, j};
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    std::size_t last = 0;
    while (last + 1 < hull.size() && hull[last + 1].second < hull[last].second) ++last;
    hull.resize(last + 1);
    np.vertices = hull;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) np.faces.push_back(make_face(f, hull[k], hull[k + 1], over));
    np.convenient = hull.front().first == 0 && hull.back().second == 0;
    return np;
}

int d_of(int a, int b, const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "d(P; 0) is undefined");
    if (a < 0 || b < 0 || std::gcd(a, b) != 1) throw Error(ErrorCode::InvalidArgument, "weight vector must be primitive and non-negative");
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        int v = a * m.first + b * m.second;
        if (first || v < d) d = v;
        first = false;
    }
    return d;
}

FaceOrVertex face_of(int a, int b, const Polynomial& f, const NodePtr& over) {
    int d = d_of(a, b, f);
    std::vector<Monomial> mins;
    for (const auto& [m, c] : f.terms())
        if (a * m.first + b * m.second == d) mins.push_back(m);
    FaceOrVertex out;
    if (mins.size() == 1) {
        out.vertex = mins.front();
        return out;
    }
    out.is_face = true;
    // mins is sorted by i; with a, b > 0 the j order is reversed.
    out.face = make_face(f, mins.front(), mins.back(), over);
    return out;
}

bool is_nondegenerate(const Polynomial& f, const Face& face) {
    (void)f;
    return face.nondegenerate();
}

TangentCone multiplicity_tangent_cone(const Polynomial& f, const FieldTower& tower) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "tangent cone of the zero polynomial");
    TangentCone tc;
    tc.m = f.order();
    if (tc.m == 0) throw Error(ErrorCode::InvalidArgument, "f does not vanish at the origin");
    Polynomial lead = f.homogeneous_part(tc.m);
    std::vector<FieldElement> cs(tc.m + 1);
    for (const auto& [mon, c] : lead.terms()) cs[mon.second] = c;
    UPoly p(cs);  // lead(1, t)
    int x_mult = tc.m - p.degree();
    FieldTower tw = tower;
    if (!node_is_prefix(lead.node(), tw.top())) tw = FieldTower(common_node(lead.node(), tw.top()), tw.depth_limit());

    std::vector<std::pair<UPoly, int>> pending = factor(p, tw.top());
    std::vector<LinearForm> forms;
    while (!pending.empty()) {
        auto [q, nu] = pending.back();
        pending.pop_back();
        if (q.degree() == 1) {
            // t + c0 -> y + c0 x
            forms.push_back({q.coeff(0).lifted(tw.top()), tw.one(), nu});
            continue;
        }
        auto [ext, root] = adjoin_root(tw, q);
        tw = ext;
        for (auto& [r, e] : factor(q, tw.top())) pending.emplace_back(r, nu * e);
    }
    if (x_mult > 0) forms.push_back({tw.one(), tw.zero(), x_mult});
    std::sort(forms.begin(), forms.end(), [](const LinearForm& u, const LinearForm& v) {
        if (u.beta.is_zero() != v.beta.is_zero()) return u.beta.is_zero();
        return compare(u.alpha, v.alpha) < 0;
    });
    for (auto& lf : forms) {
        lf.alpha = lf.alpha.lifted(tw.top());
        lf.beta = lf.beta.lifted(tw.top());
    }
    tc.factors = std::move(forms);
    tc.tower = tw;
    return tc;
}

std::vector<int> tangent_profile(const Polynomial& f) {
    int m = f.order();
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "f does not vanish at the origin");
    Polynomial lead = f.homogeneous_part(m);
    std::vector<FieldElement> cs(m + 1);
    for (const auto& [mon, c] : lead.terms()) cs[mon.second] = c;
    UPoly p(cs);
    std::vector<int> out;
    if (m - p.degree() > 0) out.push_back(m - p.degree());
    for (const auto& [q, nu] : squarefree_factor(p))
        for (int k = 0; k < q.degree(); ++k) out.push_back(nu);
    std::sort(out.rbegin(), out.rend());
    return out;
}

int newton_number_mu(const Polynomial& f) {
    NewtonPolygon np = newton_boundary(f);
    if (!np.convenient) throw Error(ErrorCode::NotConvenient, "Newton number needs a convenient germ");
    if (np.vertices.size() == 1 && np.vertices.front() == Monomial{0, 0})
        throw Error(ErrorCode::InvalidArgument, "f does not vanish at the origin");
    long twice_area = 0;
    for (const Face& face : np.faces) {
        if (!face.nondegenerate()) throw Error(ErrorCode::Degenerate, "Newton number needs non-degenerate faces");
        twice_area += static_cast<long>(face.width()) * (face.start.second + face.end.second);
    }
    long a = np.vertices.back().first;
    long b = np.vertices.front().second;
    return static_cast<int>(twice_area - a - b + 1);
}

}  // namespace curvesing
