// Iterated toric modifications: the Newton algorithm for plane curve germs,
// the weighted dual graph it produces, and invariants read off that graph.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/fan.hpp"
#include "json.hpp"

namespace curvesing {

struct ResolveOptions {
    int max_depth = 16;
    int tower_depth_limit = 2;
    int normalization_limit = 64;  // admissible v -> v + c u^k steps per child germ
};

struct DivisorNode {
    int id = 0;
    int stage = 0;
    Weight weight{1, 1};
    long mult = 0;
    int self_int = -1;
    VertexKind kind = VertexKind::Face;
};

struct Arrow {
    int node = -1;  // -1: free branch (no divisor was needed)
    std::string point;
    std::string label;
    int multiplicity = 1;
};

struct ResolutionGraph {
    std::vector<DivisorNode> nodes;  // nodes[k].id == k
    std::vector<std::pair<int, int>> edges;
    std::vector<Arrow> arrows;

    int branch_count() const { return static_cast<int>(arrows.size()); }
    std::vector<int> degree() const;  // adjacent nodes plus arrows, per node
    void validate() const;            // tree, indices in range; throws MalformedGraph
};

// One stage at a germ u^M g(u, v) (M = 0 at stage 0, where (u, v) = (x, y)).
struct StageDivisor {
    Weight weight;
    long mult = 0;
    int c = 1;  // self-intersection -c inside the stage chain
    VertexKind kind = VertexKind::Face;
};

struct RootOutcome {
    int face = 0;       // index into polygon.faces
    int divisor = 0;    // index into StageResult::divisors
    UPoly factor;       // irreducible factor of the face polynomial
    int nu = 1;
    int conjugates = 1;  // degree of the factor
    std::string point;
    bool smooth = true;
    // Degenerate points only.
    Polynomial child;
    long child_exponent = 0;
    Matrix2 chart{};
    FieldTower child_tower;
    int normalization_steps = 0;
};

struct StageResult {
    NewtonPolygon polygon;
    Subdivision subdivision;
    std::vector<StageDivisor> divisors;  // interior subdivision vertices, E1 side first
    std::vector<RootOutcome> outcomes;
    int first_axis_arrows = 0;  // branch u = 0 (stage 0 only), attached to divisors.front()
    int last_axis_arrows = 0;   // branch v = 0, attached to divisors.back()
    int parent_decrement = 0;   // first coordinate of the divisor next to E1
};

StageResult toric_stage(const Polynomial& germ, long exceptional_exponent, const FieldTower& tower,
                        const ResolveOptions& opt = {}, bool child_stage = false);

// v -> v + c u^b while the boundary is one face (w + c u^b)^nu; counts steps.
Polynomial admissible_normalize(Polynomial g, const FieldTower& tower, const ResolveOptions& opt, int* steps);

// Resolution tree: the stage results with their child germs.
struct GermResolution {
    int stage = 0;
    Polynomial germ;
    bool smooth = false;  // stage 0 only: f itself is smooth
    StageResult result;
    std::vector<int> node_ids;  // graph ids of result.divisors
    // Parallel to result.outcomes; null for smooth outcomes.
    std::vector<std::shared_ptr<GermResolution>> children;
};

struct Resolution {
    ResolutionGraph graph;
    std::shared_ptr<GermResolution> tree;
};

Resolution resolve_full(const Polynomial& f, const ResolveOptions& opt = {});
ResolutionGraph resolve(const Polynomial& f, const ResolveOptions& opt = {});

// mu = 1 - sum m_i (2 - deg_i)
int acampo_mu(const ResolutionGraph& g);

// Local intersection number at the origin: resultant order after a shear when
// that count is provably local, else Fulton's algorithm.
int intersection_multiplicity(const Polynomial& f, const Polynomial& g);
// Resultant route alone; nullopt when another common point on x = 0 (or at
// infinity over it) would pollute the count for every shear tried.
std::optional<int> intersection_multiplicity_resultant(const Polynomial& f, const Polynomial& g);
int intersection_multiplicity_fulton(const Polynomial& f, const Polynomial& g);

// Contracts (-1)-nodes with at most two neighbours (arrows included).
ResolutionGraph minimize(const ResolutionGraph& g);
// Canonical string of the labelled tree (mult, self_int, arrows) plus free arrows.
std::string canonical_encoding(const ResolutionGraph& g);
bool graphs_isomorphic(const ResolutionGraph& a, const ResolutionGraph& b);

nlohmann::json graph_to_json(const ResolutionGraph& g);
std::string graph_to_dot(const ResolutionGraph& g);

}  // namespace curvesing
