"""Exact Drazin inverses and walk structure of oriented Dutch windmill digraphs."""

from .drazin import (
    DrazinEquations,
    DrazinResult,
    drazin_general,
    drazin_index,
    drazin_windmill_closed,
    verify_drazin,
    verify_power_identities,
    windmill_support_pattern,
)
from .graphs import (
    Digraph,
    WindmillParams,
    adjacency_matrix,
    build_windmill,
    cycle_vertex_set,
    cycle_vertices,
    export_dot,
    windmill_json,
)
from .matrices import (
    Polynomial,
    RationalMatrix,
    char_polynomial,
    minimal_polynomial,
    poly_gcd,
    poly_lcm,
)
from .verify import check_drazin_candidate, verify_cell, verify_grid
from .walks import (
    Walk,
    WalkEnumeration,
    count_walks,
    count_walks_matrix,
    enumerate_walks,
    is_valid_walk,
    shortest_walk_length,
    windmill_length_n_minus_1_support,
)

__all__ = [
    "Digraph",
    "DrazinEquations",
    "DrazinResult",
    "Polynomial",
    "RationalMatrix",
    "Walk",
    "WalkEnumeration",
    "WindmillParams",
    "adjacency_matrix",
    "build_windmill",
    "char_polynomial",
    "check_drazin_candidate",
    "count_walks",
    "count_walks_matrix",
    "cycle_vertex_set",
    "cycle_vertices",
    "drazin_general",
    "drazin_index",
    "drazin_windmill_closed",
    "enumerate_walks",
    "export_dot",
    "is_valid_walk",
    "minimal_polynomial",
    "poly_gcd",
    "poly_lcm",
    "shortest_walk_length",
    "verify_cell",
    "verify_drazin",
    "verify_grid",
    "verify_power_identities",
    "windmill_json",
    "windmill_length_n_minus_1_support",
    "windmill_support_pattern",
]
