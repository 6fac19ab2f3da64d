"""Exact tools for the lattice polytopes Gamma(Q_G1, Q_G2) and Omega(Q_G1, Q_G2)
built from stable set polytopes of graphs."""

from .constructions import (
    GraphPolytopePair,
    bipyramid,
    gamma,
    gamma_of_graphs,
    hansen,
    omega,
    omega_of_graphs,
    stable_set_polytope,
)
from .decomposition import IdpReport, has_idp, odd_antihole_witness, odd_hole_witness, verify_witness
from .ehrhart import DeltaPolynomial, delta_polynomial, normalized_volume, verify_delta_theorem
from .errors import (
    CapacityError,
    DimensionError,
    HypothesisError,
    InconsistencyError,
    InputError,
    RefpolyError,
    UnboundedError,
)
from .geometry import (
    HRep,
    VRep,
    convex_hull,
    count_lattice_points,
    dual_polytope,
    facet_count,
    hrep,
    is_reflexive,
    lattice_points,
)
from .graphs import Graph, is_perfect_definition, is_perfect_spgt
from .toric import MonomialOrder, PointConfiguration, toric_groebner, verify_squarefree_theorem

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "DeltaPolynomial", "DimensionError", "Graph", "GraphPolytopePair",
    "HRep", "HypothesisError", "IdpReport", "InconsistencyError", "InputError",
    "MonomialOrder", "PointConfiguration", "RefpolyError", "UnboundedError", "VRep",
    "bipyramid", "convex_hull", "count_lattice_points", "delta_polynomial", "dual_polytope",
    "facet_count", "gamma", "gamma_of_graphs", "hansen", "has_idp", "hrep",
    "is_perfect_definition", "is_perfect_spgt", "is_reflexive", "lattice_points",
    "normalized_volume", "odd_antihole_witness", "odd_hole_witness", "omega",
    "omega_of_graphs", "stable_set_polytope", "toric_groebner", "verify_delta_theorem",
    "verify_squarefree_theorem", "verify_witness",
]
