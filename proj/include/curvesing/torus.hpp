// Curves f = f5^2 + f2^5: construction, case dispatch, lemma-based predictions,
// the encoded classification tables and the verification report.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/classify.hpp"
#include "json.hpp"

namespace curvesing {

struct TorusCurve {
    Polynomial f2;
    Polynomial f5;
    Polynomial f;
    int iota = 0;
    int m2 = 0;
    int m5 = 0;
    bool linear = false;  // f2 = c * l^2 for a line l through O
};

// Throws InvalidArgument (degrees, O not on both curves), CommonComponent,
// NonReducedInput. Asserts 1 <= iota <= 10 and m2 * m5 <= iota.
TorusCurve build_torus(const Polynomial& f2, const Polynomial& f5);

enum class Major { I, II, III, IV, V };
enum class ConicProfile { smooth, two_lines, double_line };

const char* major_name(Major m);
const char* conic_name(ConicProfile c);

struct CaseLabel {
    Major major = Major::I;
    char sub = 0;                       // 'a'.. for m5 = 2, 3, 4; 0 otherwise
    std::vector<int> tangent_profile;   // multiplicities of the tangent lines of C5
    ConicProfile conic = ConicProfile::smooth;
    int iota = 0;
    int iota1 = 0, iota2 = 0;           // per line of C2 when it is a line pair (iota1 >= iota2)
    int conic_tangent_order = 0;        // multiplicity of the tangent of a smooth C2 in the cone of C5

    // Table key, e.g. "I", "III-b-1", "IV-a-2", "L-II-b", "V-2".
    std::string key() const;
    std::string to_string() const;
};

CaseLabel dispatch_case(const TorusCurve& tc);

struct Prediction {
    std::vector<TypeExpr> types;
    bool generic_only = false;  // the lemma needs generic coefficients
    std::string rule;           // empty when no lemma applies

    bool unconditional_singleton() const { return types.size() == 1 && !generic_only; }
};

Prediction predict(const TorusCurve& tc);
Prediction predict(const TorusCurve& tc, const CaseLabel& label);

struct TableEntry {
    std::string text;
    TypeExpr type;
    std::string origin;  // "row" or the head of the degeneration list it came from
};

struct TableRow {
    std::string key;
    int iota = 0;
    std::vector<TableEntry> entries;
};

// Parsed once; a malformed template or type aborts with Error(Syntax).
const std::vector<TableRow>& theorem_tables();
const TableRow* find_row(const std::string& key, int iota);

// Printed names that disagree with the curves they were printed for.
struct Discrepancy {
    std::string where;      // golden record name or table location
    std::string printed;
    std::string corrected;
    int printed_mu = -1;    // mu of the printed name's model, -1 if not computed
    int expected_mu = -1;   // mu printed alongside it
    std::string note;
};

const std::vector<Discrepancy>& table_discrepancies();
const Discrepancy* find_discrepancy(const std::string& where);

// Canonical encoding of the minimal graph of model_germ(t); cached by string.
// Throws ModelConstructionFailed for names without a model.
std::string type_encoding(const TypeExpr& t, const ResolveOptions& opt = {});

struct Report {
    TorusCurve curve;
    CaseLabel label;
    TypeExpr engine_type;
    std::string normalized;
    Prediction prediction;
    std::optional<bool> prediction_holds;  // set for unconditional singletons
    std::string table_key;
    bool table_row_found = false;
    bool table_hit = false;
    std::string table_match;               // matching entry text
    std::vector<std::string> unencodable;  // row entries without a model germ
    int mu = 0;
    int branches = 0;
    ResolutionGraph graph;
    // Filled on a table miss: mu from the Milnor algebra, I(f_x, f_y), and
    // whether model_germ(engine_type) resolves to the same minimal graph
    // (unset when no model germ could be built for the name).
    std::optional<int> mu_oracle;
    std::optional<bool> model_roundtrip;

    bool consistent() const { return table_hit && prediction_holds.value_or(true); }
    // A miss whose graph mu agrees with the Milnor algebra.
    bool evidenced_miss() const { return !table_hit && mu_oracle == mu && model_roundtrip.value_or(true); }
    nlohmann::json to_json() const;
};

Report verify(const TorusCurve& tc, const ResolveOptions& opt = {});

// Stratified sample over the cases I-V and the three conic profiles.
struct CensusCurve {
    Polynomial f2;
    Polynomial f5;
    std::string stratum;
};
std::vector<CensusCurve> census_corpus(int count, std::uint64_t seed);

struct GoldenRecord {
    std::string name;
    std::string f2, f5;
    std::string expected;
    int iota = 0;
    int mu = 0;
};

std::vector<GoldenRecord> load_goldens(const std::string& path);
std::string default_goldens_path();

struct GoldenResult {
    GoldenRecord record;
    int iota = 0;
    int mu = 0;
    std::string engine_type;
    bool iota_ok = false, mu_ok = false, type_ok = false;
    // Type mismatch explained by a recorded discrepancy whose evidence re-checks.
    bool documented_discrepancy = false;
    std::string detail;

    bool passed() const { return iota_ok && mu_ok && (type_ok || documented_discrepancy); }
};

GoldenResult check_golden(const GoldenRecord& rec, const ResolveOptions& opt = {});

}  // namespace curvesing
