// curvesing command-line front end.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "curvesing/errors.hpp"
#include "curvesing/newton.hpp"
#include "curvesing/torus.hpp"
#include "json.hpp"

using namespace curvesing;
using nlohmann::json;

namespace {

enum class Format { text, json, dot };

struct Config {
    int tower_depth_limit = 2;
    int max_resolution_depth = 16;
    Format output_format = Format::text;
    std::uint64_t seed = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "dot") return Format::dot;
    throw UsageError("output_format must be text, json or dot, got '" + s + "'");
}

int positive(const std::string& key, const std::string& v) {
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
        throw UsageError(key + " must be an integer, got '" + v + "'");
    }
    if (n <= 0) throw UsageError(key + " must be positive");
    return n;
}

// Flat key=value file named by CURVESING_CONFIG; '#' starts a comment.
Config load_config() {
    Config c;
    const char* path = std::getenv("CURVESING_CONFIG");
    if (!path || !*path) return c;
    std::ifstream in(path);
    if (!in) throw UsageError(std::string("cannot read config file ") + path);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto eq = line.find('=');
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key == "tower_depth_limit")
            c.tower_depth_limit = positive(key, val);
        else if (key == "max_resolution_depth")
            c.max_resolution_depth = positive(key, val);
        else if (key == "output_format")
            c.output_format = parse_format(val);
        else if (key == "seed")
            c.seed = std::stoull(val);
        else
            throw UsageError("unknown config key " + key);
    }
    return c;
}

ResolveOptions options(const Config& c) {
    ResolveOptions o;
    o.tower_depth_limit = c.tower_depth_limit;
    o.max_depth = c.max_resolution_depth;
    return o;
}

Polynomial poly(const std::string& text, const Config& c) { return parse_polynomial(text, FieldTower(c.tower_depth_limit)); }

std::string weight_string(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

int cmd_newton(const std::string& text, const Config& c) {
    NewtonPolygon np = newton_boundary(poly(text, c));
    if (c.output_format == Format::json) {
        json j;
        j["convenient"] = np.convenient;
        j["x_power"] = np.x_power;
        j["y_power"] = np.y_power;
        j["faces"] = json::array();
        for (const Face& f : np.faces) {
            json roots = json::array();
            for (const FaceRoot& r : f.roots) roots.push_back({{"factor", r.factor.to_string()}, {"nu", r.nu}});
            j["faces"].push_back({{"start", {f.start.first, f.start.second}},
                                  {"end", {f.end.first, f.end.second}},
                                  {"weight", {f.a, f.b}},
                                  {"d", f.d},
                                  {"nondegenerate", f.nondegenerate()},
                                  {"face_function", f.face_function.to_string()},
                                  {"roots", roots}});
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const Face& f : np.faces) {
        std::cout << "face (" << f.start.first << "," << f.start.second << ")-(" << f.end.first << "," << f.end.second
                  << ") P=" << weight_string(f.a, f.b) << " d=" << f.d << (f.nondegenerate() ? "" : " degenerate")
                  << "  " << f.face_function.to_string() << "\n";
    }
    if (np.faces.empty()) std::cout << "no compact face\n";
    std::cout << "convenient: " << (np.convenient ? "yes" : "no") << "\n";
    return 0;
}

int cmd_resolve(const std::string& text, bool dot, bool as_json, const Config& c) {
    ResolutionGraph g = resolve(poly(text, c), options(c));
    if (dot || (!as_json && c.output_format == Format::dot)) {
        std::cout << graph_to_dot(g);
        return 0;
    }
    if (as_json || c.output_format == Format::json) {
        std::cout << graph_to_json(g).dump(2) << "\n";
        return 0;
    }
    for (const DivisorNode& n : g.nodes)
        std::cout << "E" << n.id << " stage=" << n.stage << " P=" << weight_string(n.weight.first, n.weight.second)
                  << " m=" << n.mult << " E.E=" << n.self_int << "\n";
    for (const auto& [a, b] : g.edges) std::cout << "E" << a << " -- E" << b << "\n";
    std::cout << "branches: " << g.branch_count() << "\nmu: " << acampo_mu(g) << "\n";
    return 0;
}

int cmd_classify(const std::string& text, const Config& c) {
    TypeExpr t = type_from_resolution(poly(text, c), options(c));
    std::string s = type_to_string(normalize(t));
    if (c.output_format == Format::json)
        std::cout << json{{"type", s}, {"raw", type_to_string(t)}}.dump(2) << "\n";
    else
        std::cout << s << "\n";
    return 0;
}

int cmd_milnor(const std::string& text, const Config& c) {
    Polynomial f = poly(text, c);
    ResolutionGraph g = resolve(f, options(c));
    int mu = acampo_mu(g);
    std::optional<int> newton;
    try {
        if (newton_boundary(f).convenient) newton = newton_number_mu(f);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotConvenient && e.code() != ErrorCode::Degenerate) throw;
    }
    if (c.output_format == Format::json) {
        json j{{"mu", mu}, {"branches", g.branch_count()}};
        j["newton_number"] = newton ? json(*newton) : json();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "mu: " << mu << "\n";
        if (newton) std::cout << "newton number: " << *newton << "\n";
    }
    return 0;
}

int cmd_intersect(const std::string& a, const std::string& b, const Config& c) {
    int i = intersection_multiplicity(poly(a, c), poly(b, c));
    if (c.output_format == Format::json)
        std::cout << json{{"intersection_multiplicity", i}}.dump(2) << "\n";
    else
        std::cout << i << "\n";
    return 0;
}

void print_report_text(const Report& r) {
    std::cout << "f = " << r.curve.f.to_string() << "\n"
              << "case: " << r.label.to_string() << "\n"
              << "iota: " << r.curve.iota << "  m2: " << r.curve.m2 << "  m5: " << r.curve.m5 << "\n"
              << "type: " << r.normalized << "\n"
              << "mu: " << r.mu << "  branches: " << r.branches << "\n";
    if (!r.prediction.types.empty()) {
        std::cout << "predicted (" << r.prediction.rule << (r.prediction.generic_only ? ", generic only" : "") << "):";
        for (const TypeExpr& t : r.prediction.types) std::cout << " " << type_to_string(t);
        if (r.prediction_holds) std::cout << (*r.prediction_holds ? "  holds" : "  FAILS");
        std::cout << "\n";
    }
    std::cout << "table " << r.table_key << " iota=" << r.curve.iota << ": ";
    if (!r.table_row_found)
        std::cout << "no row";
    else if (r.table_hit)
        std::cout << "hit " << r.table_match;
    else
        std::cout << "miss";
    std::cout << "\n";
    if (r.mu_oracle) std::cout << "evidence: Milnor algebra mu " << *r.mu_oracle << "\n";
    std::cout << "status: " << (r.consistent() ? "ok" : r.evidenced_miss() ? "TABLE_DISCREPANCY" : "UNEXPLAINED") << "\n";
}

int cmd_torus_verify(const std::string& f2, const std::string& f5, const Config& c) {
    Report r = verify(build_torus(poly(f2, c), poly(f5, c)), options(c));
    if (c.output_format == Format::json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        print_report_text(r);
    return r.consistent() || r.evidenced_miss() ? 0 : 1;
}

int cmd_torus_census(int count, std::uint64_t seed, const Config& c) {
    auto corpus = census_corpus(count, seed);
    json rows = json::array();
    std::map<std::string, std::array<int, 4>> tally;  // curves, hits, predictions, predictions held
    int bad = 0;
    for (const CensusCurve& cc : corpus) {
        Report r = verify(build_torus(cc.f2, cc.f5), options(c));
        auto& t = tally[cc.stratum];
        ++t[0];
        t[1] += r.table_hit;
        if (r.prediction_holds) {
            ++t[2];
            t[3] += *r.prediction_holds;
        }
        bool ok = r.consistent() || (r.evidenced_miss() && r.prediction_holds.value_or(true));
        if (!ok) ++bad;
        if (c.output_format == Format::json) {
            json j = r.to_json();
            j.erase("graph");
            j["stratum"] = cc.stratum;
            rows.push_back(j);
        } else if (!r.consistent()) {
            std::cout << (ok ? "TABLE_DISCREPANCY " : "UNEXPLAINED ") << cc.f2.to_string() << " | " << cc.f5.to_string()
                      << "  " << r.label.key() << " iota=" << r.curve.iota << " type " << r.normalized << " mu " << r.mu
                      << "\n";
        }
    }
    if (c.output_format == Format::json) {
        std::cout << json{{"seed", seed}, {"count", corpus.size()}, {"unexplained", bad}, {"curves", rows}}.dump(2) << "\n";
    } else {
        std::cout << "stratum                 curves  table  predictions\n";
        for (const auto& [k, t] : tally) {
            std::ostringstream os;
            os << k;
            std::string name = os.str();
            name.resize(24, ' ');
            std::cout << name << t[0] << "\t" << t[1] << "/" << t[0] << "\t" << t[3] << "/" << t[2] << "\n";
        }
        std::cout << "curves: " << corpus.size() << "  unexplained: " << bad << "\n";
    }
    return bad == 0 && static_cast<int>(corpus.size()) == count ? 0 : 1;
}

int cmd_goldens(const std::string& path, const Config& c) {
    auto records = load_goldens(path);
    int failed = 0;
    json rows = json::array();
    for (const GoldenRecord& rec : records) {
        GoldenResult g = check_golden(rec, options(c));
        failed += !g.passed();
        std::string status = !g.passed() ? "FAIL" : g.type_ok ? "pass" : "TABLE_DISCREPANCY";
        if (c.output_format == Format::json) {
            rows.push_back({{"name", rec.name},
                            {"status", status},
                            {"iota", g.iota},
                            {"mu", g.mu},
                            {"type", g.engine_type},
                            {"expected", rec.expected},
                            {"detail", g.detail}});
        } else {
            std::string name = rec.name;
            name.resize(10, ' ');
            std::cout << name << " " << status << "  iota " << g.iota << (g.iota_ok ? "" : "!") << "  mu " << g.mu
                      << (g.mu_ok ? "" : "!") << "  " << g.engine_type << "\n";
            if (!g.detail.empty()) std::cout << "           " << g.detail << "\n";
        }
    }
    if (c.output_format == Format::json)
        std::cout << json{{"records", rows}, {"failed", failed}}.dump(2) << "\n";
    else
        std::cout << records.size() - failed << "/" << records.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane curve singularities: Newton polygons, toric resolution, torus curves of type (2,5)"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    bool error_json = false;
    std::string format;
    app.add_flag("--error-json", error_json, "Report analysis errors as JSON on stdout");
    app.add_option("--format", format, "Output format: text, json or dot (overrides the config file)");

    std::string p1, p2;
    auto* newton = app.add_subcommand("newton", "Newton boundary and face data");
    newton->add_option("poly", p1)->required();
    auto* res = app.add_subcommand("resolve", "Resolution graph");
    res->add_option("poly", p1)->required();
    bool dot = false, as_json = false;
    res->add_flag("--dot", dot, "Graphviz output");
    res->add_flag("--json", as_json, "JSON output");
    auto* cls = app.add_subcommand("classify", "Topological type name");
    cls->add_option("poly", p1)->required();
    auto* mil = app.add_subcommand("milnor", "Milnor number");
    mil->add_option("poly", p1)->required();
    auto* inter = app.add_subcommand("intersect", "Local intersection multiplicity at the origin");
    inter->add_option("f", p1)->required();
    inter->add_option("g", p2)->required();

    auto* torus = app.add_subcommand("torus", "Torus curves f5^2 + f2^5");
    torus->require_subcommand(1);
    auto* tv = torus->add_subcommand("verify", "Classify one torus curve against the tables");
    tv->add_option("--f2", p1)->required();
    tv->add_option("--f5", p2)->required();
    auto* tc = torus->add_subcommand("census", "Stratified random corpus");
    int count = 200;
    std::optional<std::uint64_t> seed;
    tc->add_option("--count", count)->check(CLI::PositiveNumber);
    tc->add_option("--seed", seed);

    auto* gold = app.add_subcommand("goldens", "Run the golden record suite");
    std::string gpath = default_goldens_path();
    gold->add_option("--file", gpath, "Golden record file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Config c = load_config();
        if (!format.empty()) c.output_format = parse_format(format);
        if (dot && as_json) throw UsageError("--dot and --json are exclusive");
        if (*newton) return cmd_newton(p1, c);
        if (*res) return cmd_resolve(p1, dot, as_json, c);
        if (*cls) return cmd_classify(p1, c);
        if (*mil) return cmd_milnor(p1, c);
        if (*inter) return cmd_intersect(p1, p2, c);
        if (*tv) return cmd_torus_verify(p1, p2, c);
        if (*tc) return cmd_torus_census(count, seed.value_or(c.seed), c);
        if (*gold) return cmd_goldens(gpath, c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        if (error_json)
            std::cout << json{{"error", e.code_name()}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << e.code_name() << ": " << e.what() << "\n";
        return 1;
    }
    return 2;
}
