#pragma once

#include <string>
#include <vector>

#include "graphlie/graphs.hpp"
#include "graphlie/lie.hpp"
#include "graphlie/series.hpp"
#include "graphlie/tensor.hpp"

namespace graphlie::coho {

using gf2k::Field;
using gf2k::Mat;
using tensor::QuadraticAlgebra;

/// Cohomology ring of a graph algebra, represented through the quadratic
/// dual of its presentation. `display` lists the defining relations in the
/// usual commutative notation (commutators are kept implicit); the relation
/// subspace itself is always the dual annihilator, and construction checks
/// that the displayed relations together with the commutators span exactly
/// that subspace.
struct CohomologyPresentation {
    int n = 0;
    const Field* field = &Field::f2();
    QuadraticAlgebra dual;                      // relation subspace Q-perp
    std::vector<std::string> generator_names;   // dual basis, e.g. "u*"
    std::vector<std::string> display;           // relations, paper notation
};

/// Quadratic dual of the T-RAAG presentation. Errors with NotSpecial.
CohomologyPresentation traag_cohomology(const graphs::MixedGraph& g, const Field& F);

/// Quadratic dual of the ERA presentation; theta == 1 gives the
/// Stanley-Reisner ring of the graph.
CohomologyPresentation era_cohomology(const graphs::LabelledGraph& g, const Field& F);

struct PoincareSeries {
    series::PowerSeries series;  // dim H^i as coefficients
};

/// Degreewise dimensions of the dual algebra via the slice engine.
PoincareSeries poincare_series(const CohomologyPresentation& p, int depth,
                               size_t budget = tensor::kDefaultBudget);

/// dim(ker pi*)_i for the surjection onto the cohomology of the plain-edge
/// subgraph: equals the negative clique counts, and is re-verified against
/// the difference of the two Poincare series. Errors with NotSpecial.
std::vector<long long> ker_pi_star_dims(const graphs::MixedGraph& g, const Field& F,
                                        size_t budget = tensor::kDefaultBudget);

struct RingProduct {
    int degree = 0;
    std::vector<uint8_t> coords;  // normal form in the dual slice basis
    bool is_zero = false;
};

/// Product of degree-1 classes (one coefficient row per factor) in the dual
/// slices; zero detection is exact. Errors with DegreeOutOfRange when the
/// degree exceeds `depth`.
RingProduct ring_product(const CohomologyPresentation& p, const Mat& factors, int depth,
                         size_t budget = tensor::kDefaultBudget);

/// Independent count of the ERA cohomology dimensions: monomials supported
/// on cliques, exponent exactly 1 on theta=0 vertices and >= 1 on theta=1
/// vertices.
std::vector<long long> era_monomial_count(const graphs::LabelledGraph& g, int depth);

}  // namespace graphlie::coho
