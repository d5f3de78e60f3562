"""Exact combinatorics of germ expansions for general linear groups over division algebras."""

from .partitions import (
    Composition,
    Partition,
    composition_from_subset,
    d_of,
    dominance_compare,
    dominance_leq,
    dual,
    enumerate_partitions,
    induce_partition,
    minimal_elements,
    scale_partition,
    sort_to_partition,
)
from .qpoly import QPoly, q_factorial, q_int, q_multinomial
from .cosets import Family, SubgroupSpec, base_count, count_at_depth, gl2_chain_index, parabolic_index
from .germ import (
    CoefficientMap,
    DimensionPolynomial,
    PositivityError,
    check_minimal_positivity,
    dim_fixed,
    dimension_polynomial,
    forward_multiplicities,
    gk_dimension,
    induce_maps,
    jl_transfer,
    lj_transfer,
    solve_from_multiplicities,
    square_integrable_top_coeff,
    whittaker_dims,
)
from .oracle import (
    FqMatrix,
    OracleBoundError,
    ParabolicShape,
    build_A_lambda,
    count_parabolic_cosets,
    multiplicity_matrix,
    nilpotent_partition,
    xi_multiplicity,
)

__version__ = "0.1.0"
