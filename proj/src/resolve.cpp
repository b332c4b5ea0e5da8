#include "curvesing/resolve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "curvesing/errors.hpp"

namespace curvesing {

namespace {

std::string root_label(const UPoly& factor, int k) {
    if (factor.degree() == 1) return "v=" + (-factor.coeff(0)).to_string();
    return "v=root(" + factor.to_string("t") + ")#" + std::to_string(k + 1);
}

}  // namespace

Polynomial admissible_normalize(Polynomial g, const FieldTower& tower, const ResolveOptions& opt, int* steps) {
    *steps = 0;
    while (true) {
        NewtonPolygon np = newton_boundary(g, tower.top());
        if (np.faces.empty()) return g;
        const Face& f = np.faces.front();
        if (f.a != 1 || f.start.first != 0 || f.end.second != 0) return g;
        if (f.roots.size() != 1 || f.roots[0].degree() != 1) return g;
        if (*steps >= opt.normalization_limit)
            throw Error(ErrorCode::MaxDepthExceeded, "admissible normalization did not stabilize");
        FieldElement t0 = -f.roots[0].factor.coeff(0);
        g = triangular_change(g, t0, f.b, Axis::v_by_u);
        ++*steps;
    }
}

std::vector<int> ResolutionGraph::degree() const {
    std::vector<int> d(nodes.size(), 0);
    for (const auto& [a, b] : edges) {
        ++d[a];
        ++d[b];
    }
    for (const Arrow& ar : arrows)
        if (ar.node >= 0) ++d[ar.node];
    return d;
}

void ResolutionGraph::validate() const {
    const int n = static_cast<int>(nodes.size());
    for (int k = 0; k < n; ++k)
        if (nodes[k].id != k) throw Error(ErrorCode::MalformedGraph, "node ids must be 0..n-1");
    for (const Arrow& a : arrows)
        if (a.node < -1 || a.node >= n) throw Error(ErrorCode::MalformedGraph, "arrow attached to a missing node");
    if (n == 0) return;
    if (static_cast<int>(edges.size()) != n - 1) throw Error(ErrorCode::MalformedGraph, "graph is not a tree");
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw Error(ErrorCode::MalformedGraph, "bad edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n) throw Error(ErrorCode::MalformedGraph, "graph is not connected");
}

StageResult toric_stage(const Polynomial& germ, long exceptional_exponent, const FieldTower& tower,
                        const ResolveOptions& opt, bool child_stage) {
    StageResult out;
    out.polygon = newton_boundary(germ, tower.top());
    const NewtonPolygon& np = out.polygon;
    if (child_stage && np.x_power > 0)
        throw Error(ErrorCode::Internal, "child germ contains the exceptional divisor");

    Subdivision dual = dual_newton_diagram(np);
    if (np.faces.empty()) {
        // Only x*y*unit reaches here: one blow-up separates the branches.
        if (np.vertices.front() != Monomial{1, 1})
            throw Error(ErrorCode::Internal, "germ without compact faces: " + germ.to_string());
        dual.vertices = {{1, 0}, {1, 1}, {0, 1}};
        dual.kinds = {VertexKind::Boundary, VertexKind::Inserted, VertexKind::Boundary};
    }
    out.subdivision = canonical_subdivision(dual);
    const auto& sv = out.subdivision.vertices;
    std::vector<int> cs = self_intersection_numbers(out.subdivision);
    std::map<Weight, int> index;
    for (std::size_t i = 1; i + 1 < sv.size(); ++i) {
        StageDivisor d;
        d.weight = sv[i];
        d.mult = static_cast<long>(sv[i].first) * exceptional_exponent + d_of(sv[i].first, sv[i].second, germ);
        d.c = cs[i];
        d.kind = out.subdivision.kinds[i];
        index[sv[i]] = static_cast<int>(out.divisors.size());
        out.divisors.push_back(d);
    }
    out.parent_decrement = out.divisors.front().weight.first;
    if (!child_stage && np.x_power > 0) out.first_axis_arrows = 1;
    if (np.y_power > 0) out.last_axis_arrows = 1;

    for (std::size_t fi = 0; fi < np.faces.size(); ++fi) {
        const Face& face = np.faces[fi];
        Weight P{face.a, face.b};
        int di = index.at(P);
        for (const FaceRoot& root : face.roots) {
            RootOutcome o;
            o.face = static_cast<int>(fi);
            o.divisor = di;
            o.factor = root.factor;
            o.nu = root.nu;
            o.conjugates = root.degree();
            o.point = root_label(root.factor, 0);
            if (root.nu == 1) {
                out.outcomes.push_back(std::move(o));
                continue;
            }
            o.smooth = false;
            const Weight& Pn = sv[static_cast<std::size_t>(di) + 2];  // vertex after P
            o.chart = Matrix2{{{P.first, Pn.first}, {P.second, Pn.second}}};
            MonomialPullback pb = substitute_monomial(germ, o.chart);
            auto [tw, t0] = adjoin_root(tower, root.factor);
            Polynomial g = triangular_change(pb.g.lifted(tw.top()), t0, 0, Axis::v_by_u);
            o.child = admissible_normalize(g, tw, opt, &o.normalization_steps);
            o.child_exponent = out.divisors[di].mult;
            o.child_tower = tw;
            out.outcomes.push_back(std::move(o));
        }
    }
    return out;
}

namespace {

struct Builder {
    const ResolveOptions& opt;
    ResolutionGraph g;
    int branch_counter = 0;

    int add_node(int stage, const StageDivisor& d) {
        DivisorNode n;
        n.id = static_cast<int>(g.nodes.size());
        n.stage = stage;
        n.weight = d.weight;
        n.mult = d.mult;
        n.self_int = -d.c;
        n.kind = d.kind;
        g.nodes.push_back(n);
        return n.id;
    }

    void add_arrow(int node, const std::string& point, const std::string& label) {
        Arrow a;
        a.node = node;
        a.point = point;
        a.label = label.empty() ? "b" + std::to_string(++branch_counter) : label;
        g.arrows.push_back(a);
    }

    std::shared_ptr<GermResolution> build(const Polynomial& germ, int stage, const FieldTower& tower, int parent,
                                          long exponent, const std::string& prefix) {
        if (stage > opt.max_depth)
            throw Error(ErrorCode::MaxDepthExceeded, "resolution needs more than " + std::to_string(opt.max_depth) + " stages");
        auto node = std::make_shared<GermResolution>();
        node->stage = stage;
        node->germ = germ;
        if (parent >= 0 && germ.order() == 1 && !germ.coeff(0, 1).is_zero()) {
            node->smooth = true;
            add_arrow(parent, prefix, "");
            return node;
        }
        node->result = toric_stage(germ, exponent, tower, opt, parent >= 0);
        StageResult& r = node->result;
        for (const StageDivisor& d : r.divisors) node->node_ids.push_back(add_node(stage, d));
        for (std::size_t k = 0; k + 1 < node->node_ids.size(); ++k)
            g.edges.emplace_back(node->node_ids[k], node->node_ids[k + 1]);
        if (parent >= 0) {
            g.edges.emplace_back(parent, node->node_ids.front());
            g.nodes[parent].self_int -= r.parent_decrement;
        }
        for (int k = 0; k < r.first_axis_arrows; ++k) add_arrow(node->node_ids.front(), prefix + "u=0", "");
        for (int k = 0; k < r.last_axis_arrows; ++k) add_arrow(node->node_ids.back(), prefix + "v=0", "");
        for (const RootOutcome& o : r.outcomes) {
            int at = node->node_ids[o.divisor];
            std::string base = prefix + "E" + std::to_string(stage) + "(" + std::to_string(r.divisors[o.divisor].weight.first) +
                               "," + std::to_string(r.divisors[o.divisor].weight.second) + "):";
            if (o.smooth) {
                for (int k = 0; k < o.conjugates; ++k) add_arrow(at, base + root_label(o.factor, k), "");
                node->children.push_back(nullptr);
                continue;
            }
            std::shared_ptr<GermResolution> first;
            for (int k = 0; k < o.conjugates; ++k) {
                auto child = build(o.child, stage + 1, o.child_tower, at, o.child_exponent, base + root_label(o.factor, k) + "/");
                if (!first) first = child;
            }
            node->children.push_back(first);
        }
        return node;
    }
};

}  // namespace

Resolution resolve_full(const Polynomial& f, const ResolveOptions& opt) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot resolve the zero polynomial");
    if (!f.coeff(0, 0).is_zero()) throw Error(ErrorCode::InvalidArgument, "the curve does not pass through the origin");
    if (has_repeated_factor(f)) throw Error(ErrorCode::NonReducedInput, "input has a repeated factor");
    Builder b{opt, {}, 0};
    Resolution res;
    if (f.order() == 1) {
        res.tree = std::make_shared<GermResolution>();
        res.tree->germ = f;
        res.tree->smooth = true;
        b.add_arrow(-1, "O", "");
    } else {
        FieldTower tower(f.node(), opt.tower_depth_limit);
        res.tree = b.build(f, 0, tower, -1, 0, "");
    }
    res.graph = std::move(b.g);
    res.graph.validate();
    return res;
}

ResolutionGraph resolve(const Polynomial& f, const ResolveOptions& opt) { return resolve_full(f, opt).graph; }

int acampo_mu(const ResolutionGraph& g) {
    g.validate();
    if (g.nodes.empty()) return g.branch_count() - 1;
    std::vector<int> deg = g.degree();
    long s = 0;
    for (const DivisorNode& n : g.nodes) s += n.mult * (2 - deg[n.id]);
    return static_cast<int>(1 - s);
}

namespace {

int fulton(Polynomial f, Polynomial g) {
    long acc = 0;
    while (true) {
        if (!f.coeff(0, 0).is_zero() || !g.coeff(0, 0).is_zero()) return static_cast<int>(acc);
        UPoly fr = f.at_y_zero(), gr = g.at_y_zero();
        if (fr.is_zero() && gr.is_zero()) throw Error(ErrorCode::CommonComponent, "curves share a component through the origin");
        if (fr.is_zero() || gr.is_zero()) {
            if (fr.is_zero()) {
                std::swap(f, g);
                std::swap(fr, gr);
            }
            // g = y h: I(f, y) + I(f, h)
            acc += fr.order_at_zero();
            g = g.divided_by_monomial(0, 1);
            continue;
        }
        if (fr.degree() > gr.degree()) {
            std::swap(f, g);
            std::swap(fr, gr);
        }
        int shift = gr.degree() - fr.degree();
        g = g * Polynomial::constant(fr.lc()) - f * Polynomial::monomial(gr.lc(), shift, 0);
        if (g.is_zero()) throw Error(ErrorCode::CommonComponent, "curves share a component through the origin");
    }
}

// x -> x + k y
Polynomial shear_x(const Polynomial& f, int k) { return triangular_change(f.swapped(), FieldElement(k), 1, Axis::y_by_x).swapped(); }

}  // namespace

std::optional<int> intersection_multiplicity_resultant(const Polynomial& f0, const Polynomial& g0) {
    if (!f0.coeff(0, 0).is_zero() || !g0.coeff(0, 0).is_zero()) return 0;
    for (int k = 0; k < 8; ++k) {
        Polynomial f = shear_x(f0, k), g = shear_x(g0, k);
        UPoly fy = f.at_x_zero(), gy = g.at_x_zero();
        // Only the origin may be a common point on x = 0, at infinity included.
        if (!fy.is_zero() && !gy.is_zero()) {
            UPoly common = gcd(fy, gy);
            if (common.degree() != common.order_at_zero()) continue;
        } else {
            continue;
        }
        auto fc = f.coefficients_in_y(), gc = g.coefficients_in_y();
        if (fc.back().eval(0).is_zero() && gc.back().eval(0).is_zero()) continue;
        UPoly r = resultant_y(f, g);
        if (r.is_zero()) return std::nullopt;
        return r.order_at_zero();
    }
    return std::nullopt;
}

namespace {

// Removes a common factor that is a unit at the origin; throws when it is not.
std::pair<Polynomial, Polynomial> strip_common(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::CommonComponent, "zero polynomial shares every component");
    Polynomial h = gcd(f, g);
    if (h.total_degree() <= 0) return {f, g};
    if (h.coeff(0, 0).is_zero()) throw Error(ErrorCode::CommonComponent, "curves share a component through the origin");
    return {exact_divide(f, h), exact_divide(g, h)};
}

}  // namespace

int intersection_multiplicity(const Polynomial& f0, const Polynomial& g0) {
    auto [f, g] = strip_common(f0, g0);
    if (auto r = intersection_multiplicity_resultant(f, g)) return *r;
    return fulton(f, g);
}

int intersection_multiplicity_fulton(const Polynomial& f0, const Polynomial& g0) {
    auto [f, g] = strip_common(f0, g0);
    return fulton(f, g);
}

ResolutionGraph minimize(const ResolutionGraph& g0) {
    g0.validate();
    struct N {
        DivisorNode d;
        std::set<int> nbr;
        std::vector<Arrow> arrows;
        bool alive = true;
    };
    std::vector<N> ns;
    for (const DivisorNode& d : g0.nodes) ns.push_back({d, {}, {}, true});
    for (const auto& [a, b] : g0.edges) {
        ns[a].nbr.insert(b);
        ns[b].nbr.insert(a);
    }
    std::vector<Arrow> free_arrows;
    for (const Arrow& a : g0.arrows) {
        if (a.node < 0)
            free_arrows.push_back(a);
        else
            ns[a.node].arrows.push_back(a);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < ns.size(); ++k) {
            N& n = ns[k];
            if (!n.alive || n.d.self_int != -1) continue;
            if (n.nbr.size() + n.arrows.size() > 2) continue;
            std::vector<int> nb(n.nbr.begin(), n.nbr.end());
            for (int m : nb) {
                ns[m].nbr.erase(static_cast<int>(k));
                ns[m].d.self_int += 1;
            }
            if (nb.size() == 2) {
                ns[nb[0]].nbr.insert(nb[1]);
                ns[nb[1]].nbr.insert(nb[0]);
            } else if (nb.size() == 1) {
                for (Arrow& a : n.arrows) ns[nb[0]].arrows.push_back(a);
            } else {
                for (Arrow& a : n.arrows) free_arrows.push_back(a);
            }
            n.alive = false;
            changed = true;
        }
    }
    ResolutionGraph out;
    std::map<int, int> remap;
    for (std::size_t k = 0; k < ns.size(); ++k)
        if (ns[k].alive) {
            int id = static_cast<int>(out.nodes.size());
            remap[static_cast<int>(k)] = id;
            DivisorNode d = ns[k].d;
            d.id = id;
            out.nodes.push_back(d);
        }
    for (std::size_t k = 0; k < ns.size(); ++k) {
        if (!ns[k].alive) continue;
        int a = remap[static_cast<int>(k)];
        for (int m : ns[k].nbr)
            if (static_cast<int>(k) < m) out.edges.emplace_back(a, remap[m]);
        for (Arrow ar : ns[k].arrows) {
            ar.node = a;
            out.arrows.push_back(ar);
        }
    }
    for (Arrow ar : free_arrows) {
        ar.node = -1;
        out.arrows.push_back(ar);
    }
    out.validate();
    return out;
}

std::string canonical_encoding(const ResolutionGraph& g) {
    g.validate();
    const int n = static_cast<int>(g.nodes.size());
    int free_arrows = 0;
    std::vector<int> arrows(n, 0);
    for (const Arrow& a : g.arrows) {
        if (a.node < 0)
            ++free_arrows;
        else
            ++arrows[a.node];
    }
    std::string head = "free" + std::to_string(free_arrows);
    if (n == 0) return head;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    // Tree centres by leaf stripping.
    std::vector<int> deg(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = next;
    }
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back(enc(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(" + std::to_string(g.nodes[v].mult) + "," + std::to_string(g.nodes[v].self_int) + "," +
                        std::to_string(arrows[v]);
        for (const auto& k : kids) s += k;
        return s + ")";
    };
    std::string best;
    for (int c : layer) {
        std::string s = enc(c, -1);
        if (best.empty() || s < best) best = s;
    }
    return head + best;
}

bool graphs_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b) {
    return canonical_encoding(a) == canonical_encoding(b);
}

nlohmann::json graph_to_json(const ResolutionGraph& g) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const DivisorNode& n : g.nodes)
        j["nodes"].push_back({{"id", n.id},
                              {"stage", n.stage},
                              {"weight", {n.weight.first, n.weight.second}},
                              {"mult", n.mult},
                              {"self_int", n.self_int}});
    j["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges) j["edges"].push_back({std::min(a, b), std::max(a, b)});
    j["arrows"] = nlohmann::json::array();
    for (const Arrow& a : g.arrows) j["arrows"].push_back({{"node", a.node}, {"point", a.point}, {"label", a.label}});
    return j;
}

std::string graph_to_dot(const ResolutionGraph& g) {
    std::vector<int> order(g.nodes.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& x = g.nodes[a];
        const auto& y = g.nodes[b];
        return std::tie(x.stage, x.weight) < std::tie(y.stage, y.weight);
    });
    std::ostringstream os;
    os << "graph resolution {\n";
    for (int k : order) {
        const auto& n = g.nodes[k];
        os << "  n" << n.id << " [label=\"m=" << n.mult << "\\n" << n.self_int << "\\nP=(" << n.weight.first << ","
           << n.weight.second << ")\"];\n";
    }
    auto edges = g.edges;
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    for (std::size_t k = 0; k < g.arrows.size(); ++k) {
        const Arrow& a = g.arrows[k];
        os << "  a" << k << " [shape=point];\n";
        if (a.node >= 0) os << "  n" << a.node << " -- a" << k << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace curvesing
