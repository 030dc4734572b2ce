"""Equivariant cohomology structure constants of projective space.

The coefficients C_{i,j}^k of sigma_i * sigma_j are computed by a
bipartite-matching rule (beta-positive and symmetric in i, j), by the
classical explicit product formula, by the Pieri recurrence, and through the
puzzle and edge-labeled tableau encodings. Newton-polytope and support
scaling checks live in :mod:`projschub.newton`.
"""

from projschub.formulas import (
    INFINITY,
    ExpansionResult,
    coefficient_via_explicit,
    coefficient_via_recurrence,
    expand_product,
    grouped_factor,
    in_window,
    multiply_expansions,
    pieri_expand,
)
from projschub.matchings import (
    Edge,
    Matching,
    SubsetP,
    coefficient_via_matchings,
    crossing_value,
    edge_weight_index,
    enumerate_matchings,
    group_by_subset,
    iter_matchings,
    matching_weight,
)
from projschub.polyring import Family, FamilyMismatchError, Polynomial, beta_to_t, poly_arith, support_of

__all__ = [
    "INFINITY",
    "Edge",
    "ExpansionResult",
    "Family",
    "FamilyMismatchError",
    "Matching",
    "Polynomial",
    "SubsetP",
    "beta_to_t",
    "coefficient_via_explicit",
    "coefficient_via_matchings",
    "coefficient_via_recurrence",
    "crossing_value",
    "edge_weight_index",
    "enumerate_matchings",
    "expand_product",
    "group_by_subset",
    "grouped_factor",
    "in_window",
    "iter_matchings",
    "matching_weight",
    "multiply_expansions",
    "pieri_expand",
    "poly_arith",
    "support_of",
]
