#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphlie/graphs.hpp"
#include "graphlie/series.hpp"
#include "graphlie/tensor.hpp"

namespace graphlie::lie {

using gf2k::Field;
using gf2k::Mat;
using tensor::QuadraticAlgebra;
using tensor::QuadraticPresentation;
using tensor::SliceTower;

/// A presented restricted Lie algebra realized inside its envelope: the
/// slice tower of u(g) plus, per degree, the component g_d as a subspace of
/// A_d (the image of the free restricted Lie span under the projection).
/// Immutable after construction; safe to share between workers.
class LieAlgebraHandle {
public:
    LieAlgebraHandle(QuadraticPresentation pres, int depth, size_t budget = tensor::kDefaultBudget);

    const QuadraticPresentation& presentation() const { return pres_; }
    const SliceTower& tower() const { return tower_; }
    const Field& field() const { return *pres_.field; }
    int n() const { return pres_.n; }
    int depth() const { return tower_.depth(); }

    /// RREF basis of g_d inside A_d (1 <= d <= depth).
    const Mat& component(int d) const;
    long long component_dim(int d) const { return long(component(d).rows()); }

private:
    QuadraticPresentation pres_;
    SliceTower tower_;
    std::vector<Mat> lie_;  // lie_[d], d >= 1
};

using HandlePtr = std::shared_ptr<const LieAlgebraHandle>;

/// Shared cache: handles are immutable and repeatedly requested for the same
/// presentations (induced subgraphs, covers) during family sweeps.
HandlePtr make_handle(const QuadraticPresentation& pres, int depth, size_t budget = tensor::kDefaultBudget);

// ---- graph -> presentation constructors -------------------------------------

/// Relations [v,w] per plain edge, [v,w] + v^[2] per directed edge v->w.
/// Non-special graphs are allowed.
QuadraticPresentation traag_presentation(const graphs::MixedGraph& g, const Field& F);
/// Signature form, special graphs only: [v,w] + theta(v) w^[2] + theta(w) v^[2].
QuadraticPresentation traag_presentation_signature_form(const graphs::MixedGraph& g, const Field& F);
/// Bracket-free form: (v+w)^[2] + v^[2] + w^[2] per plain edge,
/// (v+w)^[2] + w^[2] per directed edge.
QuadraticPresentation traag_presentation_bracket_free(const graphs::MixedGraph& g, const Field& F);

/// Relations v^[2] when theta(v) = 1 plus [v,w] per edge. theta == 1 is the
/// RACG presentation, theta == 0 the RAAG one.
QuadraticPresentation era_presentation(const graphs::LabelledGraph& g, const Field& F);
QuadraticPresentation racg_presentation(const graphs::MixedGraph& simple, const Field& F);

// ---- graded data ------------------------------------------------------------

/// dim g_d for d = 1..depth. Errors with BudgetExceeded when the word space
/// is out of budget.
series::DimensionVector graded_dims(const LieAlgebraHandle& h, int depth);

/// Per-degree bases of the smallest restricted subalgebra containing U:
/// h_1 = U, h_d = sum_{i+j=d} [h_i, h_j] + squares of h_{d/2}.
struct SubalgebraData {
    Mat generators;           // RREF basis of U inside g_1
    std::vector<Mat> comps;   // comps[d], d >= 1 (comps[0] empty)
    int depth = 0;

    long long dim(int d) const { return long(comps[size_t(d)].rows()); }
    series::DimensionVector dims() const;
};

SubalgebraData subalgebra_closure(const LieAlgebraHandle& h, const Mat& U, int depth);

/// Generators = basis of h_1; relations = kernel of the map sending the
/// degree-2 free component on those generators to h_2.
QuadraticPresentation quadratic_cover_presentation(const LieAlgebraHandle& h, const SubalgebraData& s);

/// A generating subspace whose subalgebra falls below its quadratic cover.
struct DefectWitness {
    Mat generators;  // echelon basis over the field
    int defect_degree = 0;
    long long cover_dim = 0;
    long long subalgebra_dim = 0;
};

/// First degree <= depth where the quadratic cover of <U> outgrows <U>;
/// nullopt when there is none up to this depth (a semi-decision).
std::optional<DefectWitness> quadraticity_defect(const LieAlgebraHandle& h, const Mat& U, int depth);

// ---- homomorphisms -----------------------------------------------------------

enum class HomCheck { neither, valid, graded_iso };

/// images: one degree-1 element of the target per source generator. `valid`
/// means every source relation maps to zero; `graded_iso` additionally means
/// the induced map is bijective in every degree <= depth.
HomCheck check_homomorphism(const QuadraticPresentation& src, const LieAlgebraHandle& tgt, const Mat& images,
                            int depth);

// ---- HNN extensions ----------------------------------------------------------

/// A degree-n derivation of the subalgebra generated by `domain` (rows in
/// g_1), given on generators by `values` (rows over the degree-2 free Lie
/// basis of the ambient presentation when degree == 1).
struct DerivationData {
    HandlePtr base;
    Mat domain;
    Mat values;
    int degree = 1;
};

struct GeneralPresentationRecord {
    int generators = 0;
    int stable_letter = 0;       // index of t
    int derivation_degree = 1;
    QuadraticPresentation base;  // relations R of the base algebra
    Mat domain;
    Mat values;
};

struct HnnPresentation {
    std::optional<QuadraticPresentation> quadratic;  // degree-1 derivations only
    GeneralPresentationRecord record;
};

/// Presentation <V, t | R, [t,x] + phi(x)>. Checks the derivation law on the
/// domain's degree-2 relations (errors with DerivationLawViolated), and that
/// the base embeds (graded dimensions agree) up to `depth`.
HnnPresentation hnn_presentation(const DerivationData& d, int depth, size_t budget = tensor::kDefaultBudget);

// ---- torsion and quotients ---------------------------------------------------

/// Smallest s <= maxpow with x^{[2]^s} = 0, or nullopt. Needs slices to
/// degree 2^maxpow (BudgetExceeded otherwise).
std::optional<int> torsion_witness(const LieAlgebraHandle& h, const std::vector<uint8_t>& x, int maxpow);

struct RetractComparison {
    series::DimensionVector quotient_dims;
    series::DimensionVector induced_dims;
    bool equal = false;
};

/// Compares the quotient of a(g) by the ideal generated by the vertex set X
/// against the T-RAAG of the induced graph on the remaining vertices.
/// X must avoid all termini (errors with TerminusInX).
RetractComparison retract_quotient(const graphs::MixedGraph& g, const std::vector<std::string>& X,
                                   const Field& F, int depth, size_t budget = tensor::kDefaultBudget);

}  // namespace graphlie::lie
