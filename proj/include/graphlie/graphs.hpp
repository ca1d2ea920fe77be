#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphlie/errors.hpp"

namespace graphlie::graphs {

using VertexMask = uint32_t;

/// Simple graph with a distinguished set of directed edges. Vertices are
/// identified by strings and stored in lexicographic order; all edge data is
/// kept as index pairs into that order. Immutable after construction.
class MixedGraph {
public:
    MixedGraph() = default;
    /// Vertex names must be unique; edges reference names. A pair may appear
    /// as plain or directed, never both; loops are rejected.
    MixedGraph(std::vector<std::string> vertices,
               std::vector<std::pair<std::string, std::string>> plain_edges,
               std::vector<std::pair<std::string, std::string>> directed_edges);

    int n() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_[size_t(v)]; }
    int index_of(const std::string& name) const;  // ParseError when missing

    const std::vector<std::pair<int, int>>& plain_edges() const { return plain_; }
    const std::vector<std::pair<int, int>>& directed_edges() const { return directed_; }

    bool has_edge(int a, int b) const { return (adj_[size_t(a)] >> b) & 1u; }
    bool has_plain_edge(int a, int b) const;
    bool has_directed_edge(int o, int t) const;
    VertexMask adjacency(int v) const { return adj_[size_t(v)]; }
    VertexMask full_mask() const { return n() == 32 ? ~VertexMask(0) : ((VertexMask(1) << n()) - 1); }

    /// Vertices that are the terminus of some directed edge.
    VertexMask termini_mask() const;
    /// Vertices that are the origin of some directed edge.
    VertexMask origins_mask() const;
    VertexMask isolated_mask() const;

    /// Underlying simple graph (plain edges only; directed edges dropped).
    MixedGraph simple_part() const;
    /// Underlying simple graph with every edge made plain.
    MixedGraph underlying() const;

    bool is_simple() const { return directed_.empty(); }

private:
    std::vector<std::string> names_;
    std::vector<VertexMask> adj_;
    std::vector<std::pair<int, int>> plain_;     // a < b
    std::vector<std::pair<int, int>> directed_;  // (origin, terminus)
};

/// theta(v) = 1 marks negative vertices (termini of directed edges).
struct Signature {
    std::vector<uint8_t> theta;
    bool operator==(const Signature& o) const { return theta == o.theta; }
};

/// Simple graph with a 2-labelling of the vertices.
class LabelledGraph {
public:
    LabelledGraph() = default;
    LabelledGraph(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> edges,
                  std::vector<std::pair<std::string, int>> labels);
    LabelledGraph(MixedGraph simple, std::vector<uint8_t> theta);

    const MixedGraph& graph() const { return g_; }
    int n() const { return g_.n(); }
    uint8_t theta(int v) const { return theta_[size_t(v)]; }
    const std::vector<uint8_t>& labels() const { return theta_; }

private:
    MixedGraph g_;  // simple
    std::vector<uint8_t> theta_;
};

/// coefficients[i] = number of i-cliques; coefficients[0] = 1.
struct CliquePolynomial {
    std::vector<long long> coefficients;
    int degree() const { return int(coefficients.size()) - 1; }
    bool operator==(const CliquePolynomial& o) const { return coefficients == o.coefficients; }
    std::string to_string() const;
};

// ---- predicates ------------------------------------------------------------

/// Every edge touching a terminus of a directed edge is itself directed into
/// that terminus.
bool is_special(const MixedGraph& g);

/// theta = 1 exactly on termini; isolated vertices default to positive unless
/// listed in negative_isolated. Errors with NotSpecial.
Signature signature_of(const MixedGraph& g, const std::vector<std::string>& negative_isolated = {});

/// Adds tip with a plain edge to every positive vertex and a directed edge
/// into every negative one. Errors with DuplicateVertex.
MixedGraph cone(const MixedGraph& g, const Signature& sig, const std::string& tip);

/// Forbidden-subgraph characterization: special, no induced Lambda_s, and the
/// underlying graph has no induced C4 or P4.
bool is_mixed_droms(const MixedGraph& g);
/// Same class via the closure characterization (cones + disjoint unions).
bool is_mixed_droms_decomposition(const MixedGraph& g);

/// Droms underlying graph and no induced labelled path x-y-z with
/// theta(y) = 0 and theta(x) + theta(z) >= 1.
bool is_labelled_droms(const LabelledGraph& g);

/// Every connected induced subgraph is either all-0 or has a central vertex
/// labelled 1. Errors with NotDroms when the underlying graph is not Droms.
bool central_condition(const LabelledGraph& g);

/// Within each connected component all directed edges share one origin.
bool common_origin_per_component(const MixedGraph& g);

bool is_simple_droms(const MixedGraph& g);

// ---- witnesses for reports -------------------------------------------------

std::optional<std::vector<int>> find_induced_lambda_s(const MixedGraph& g);
std::optional<std::vector<int>> find_induced_c4(const MixedGraph& g);
std::optional<std::vector<int>> find_induced_p4(const MixedGraph& g);
std::optional<std::vector<int>> find_forbidden_labelled_path(const LabelledGraph& g);

// ---- clique combinatorics ----------------------------------------------------

/// Counts cliques of the underlying simple graph.
CliquePolynomial clique_polynomial(const MixedGraph& g);
int clique_number(const MixedGraph& g);

/// n_i = number of i-cliques of the underlying graph meeting the negative
/// vertices (i >= 2; indices 0 and 1 are zero). Checks that every such clique
/// has exactly one negative vertex. Errors with NotSpecial.
std::vector<long long> negative_clique_counts(const MixedGraph& g);

// ---- constructions and helpers ----------------------------------------------

MixedGraph induced_subgraph(const MixedGraph& g, VertexMask mask);
LabelledGraph induced_subgraph(const LabelledGraph& g, VertexMask mask);
MixedGraph disjoint_union(const MixedGraph& a, const MixedGraph& b);
std::vector<VertexMask> connected_components(const MixedGraph& g, VertexMask within);
std::vector<int> central_vertices(const MixedGraph& g, VertexMask within);
/// Induced-subgraph pattern test by brute force over vertex subsets.
bool contains_induced(const MixedGraph& g, const MixedGraph& pattern);

// ---- JSON ingestion ----------------------------------------------------------

struct ParsedGraph {
    std::optional<MixedGraph> mixed;
    std::optional<LabelledGraph> labelled;
    bool is_labelled() const { return labelled.has_value(); }
};

/// Accepts {"vertices":[...], "plain_edges":[[a,b],...],
/// "directed_edges":[[o,t],...], "labels":{v:0|1,...}}; the labels key makes
/// it a labelled graph (directed edges are then rejected).
ParsedGraph parse_graph_json(const std::string& text);
std::string graph_to_json(const MixedGraph& g);
std::string graph_to_json(const LabelledGraph& g);

// ---- exhaustive families (test and verification drivers) ---------------------

/// All special mixed graphs on exactly n labelled vertices v0..v{n-1}:
/// every simple graph paired with every independent set of non-isolated
/// vertices as the negative part.
std::vector<MixedGraph> all_special_mixed_graphs(int n);
/// All 2-labelled graphs on exactly n labelled vertices.
std::vector<LabelledGraph> all_labelled_graphs(int n);

}  // namespace graphlie::graphs
