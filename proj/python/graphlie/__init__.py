"""Graph-defined restricted Lie algebras over characteristic-2 fields.

Graphs are passed as JSON strings: {"vertices": [...], "plain_edges":
[[a, b], ...], "directed_edges": [[origin, terminus], ...]} for mixed graphs,
with a "labels" mapping instead of directed edges for 2-labelled graphs.
"""

from graphlie._core import (
    GraphlieError,
    bk_predicate,
    brute_force_bk,
    clique_polynomial,
    cohomology_relations,
    envelope_dims,
    froberg_reciprocal,
    graded_dims,
    is_labelled_droms,
    is_mixed_droms,
    is_special,
    ker_pi_star_dims,
    mobius2,
    necklace2,
    pbw_product,
    petrogradsky_dims,
    poincare_dims,
    run_examples,
    signature,
    subalgebra_defect,
    __version__,
)

__all__ = [
    "GraphlieError",
    "bk_predicate",
    "brute_force_bk",
    "clique_polynomial",
    "cohomology_relations",
    "envelope_dims",
    "froberg_reciprocal",
    "graded_dims",
    "is_labelled_droms",
    "is_mixed_droms",
    "is_special",
    "ker_pi_star_dims",
    "mobius2",
    "necklace2",
    "pbw_product",
    "petrogradsky_dims",
    "poincare_dims",
    "run_examples",
    "signature",
    "subalgebra_defect",
    "__version__",
]
