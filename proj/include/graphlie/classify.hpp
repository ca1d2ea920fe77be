#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphlie/graphs.hpp"
#include "graphlie/lie.hpp"

namespace graphlie::classify {

using gf2k::Field;
using gf2k::Mat;

enum class FieldKind { f2, contains_f4 };
enum class AlgebraKind { traag, era };

const Field& field_for(FieldKind k);

/// Graph-theoretic Bloch-Kato criterion.
///  TRAAG over F2: mixed Droms.
///  TRAAG over a field containing F4: mixed Droms with a common origin of all
///  directed edges per connected component.
///  ERA (any field): Droms 2-labelled graph.
bool bk_predicate(const graphs::MixedGraph& g, FieldKind kind);
bool bk_predicate(const graphs::LabelledGraph& g);
/// Dispatch on a parsed graph; errors with KindMismatch when the graph kind
/// does not fit the requested algebra kind.
bool bk_predicate(const graphs::ParsedGraph& g, FieldKind field_kind, AlgebraKind kind);

/// Every subspace of F^n exactly once, as reduced echelon matrices, ordered
/// by dimension, then pivot columns, then entry values. Count guards:
/// n <= 5 over F2 and n <= 4 over F4 (BudgetExceeded).
std::vector<Mat> enumerate_subspaces(const Field& F, int n, int dim_lo, int dim_hi);
std::vector<Mat> enumerate_subspaces(const Field& F, int n);

/// Number of k-dimensional subspaces of F_q^n (independent count used to
/// cross-check the enumerator).
long long gaussian_binomial(int n, int k, int q);

struct OracleResult {
    std::optional<lie::DefectWitness> witness;  // lexicographically first
    long long subspaces_checked = 0;
};

/// Runs the quadraticity check over every standard subspace of degree-1
/// generators; deterministic regardless of the worker count.
OracleResult brute_force_bk(const lie::LieAlgebraHandle& h, int depth, int jobs = 1);

struct GraphRecord {
    std::string graph_json;
    bool predicate = false;
    std::optional<lie::DefectWitness> witness;
    long long subspaces_checked = 0;
    int depth = 0;
    double elapsed_ms = 0;
    std::string error;        // set when a budget guard fired
    bool unresolved = false;  // predicate false, but no witness at this depth
    bool agree = false;
};

struct TheoremReport {
    std::vector<GraphRecord> records;
    bool all_agree = true;
    bool any_violation = false;  // predicate true yet a witness exists
};

/// Compares the predicate against the oracle on a family of graphs. Budget
/// errors are recorded per graph without aborting the family.
TheoremReport verify_theorem(const std::vector<graphs::MixedGraph>& family, FieldKind field_kind, int depth,
                             size_t budget = tensor::kDefaultBudget, int jobs = 1);
TheoremReport verify_theorem(const std::vector<graphs::LabelledGraph>& family, FieldKind field_kind, int depth,
                             size_t budget = tensor::kDefaultBudget, int jobs = 1);

}  // namespace graphlie::classify
