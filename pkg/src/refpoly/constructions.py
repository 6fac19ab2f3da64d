"""The lattice polytopes built from graphs: stable set polytopes, Gamma, Omega,
Hansen polytopes and bipyramids.

Generator lists keep a fixed order (stable sets canonical, P-block before
Q-block) so that point indices line up with toric variable indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, InputError
from .geometry import VRep
from .graphs import Graph, stable_sets


@dataclass(frozen=True)
class GraphPolytopePair:
    g1: Graph
    g2: Graph

    def __post_init__(self):
        if self.g1.d != self.g2.d:
            raise InputError(
                f"graphs must share the vertex set: d = {self.g1.d} vs {self.g2.d}"
            )

    @property
    def d(self) -> int:
        return self.g1.d

    def gamma(self) -> VRep:
        return gamma(stable_set_polytope(self.g1), stable_set_polytope(self.g2))

    def omega(self) -> VRep:
        return omega(stable_set_polytope(self.g1), stable_set_polytope(self.g2))


def indicator(w, d: int) -> tuple:
    return tuple(1 if i + 1 in w else 0 for i in range(d))


def stable_set_polytope(g: Graph) -> VRep:
    """rho(W) for every stable set W, in canonical order (origin last)."""
    return VRep(g.d, tuple(indicator(w, g.d) for w in stable_sets(g)))


def _negate(p) -> tuple:
    return tuple(-x for x in p)


def gamma(p: VRep, q: VRep) -> VRep:
    """Generators of conv(P u -Q); repeats (e.g. the origin) keep the P copy."""
    if p.ambient_dim != q.ambient_dim:
        raise DimensionError(f"dimension mismatch: {p.ambient_dim} vs {q.ambient_dim}")
    return VRep.from_points(list(p.points) + [_negate(y) for y in q.points], p.ambient_dim)


def omega(p: VRep, q: VRep) -> VRep:
    """Generators of conv(P x {1} u -Q x {-1})."""
    if p.ambient_dim != q.ambient_dim:
        raise DimensionError(f"dimension mismatch: {p.ambient_dim} vs {q.ambient_dim}")
    pts = [tuple(x) + (1,) for x in p.points]
    pts += [_negate(y) + (-1,) for y in q.points]
    return VRep(p.ambient_dim + 1, tuple(pts))


def hansen(g: Graph) -> VRep:
    q = stable_set_polytope(g)
    return omega(q, q)


def bipyramid(p: VRep) -> VRep:
    """conv(P x {0}, e_{d+1}, -e_{d+1})."""
    d = p.ambient_dim
    pts = [tuple(x) + (0,) for x in p.points]
    pts += [(0,) * d + (1,), (0,) * d + (-1,)]
    return VRep.from_points(pts, d + 1)


def gamma_of_graphs(g1: Graph, g2: Graph) -> VRep:
    return GraphPolytopePair(g1, g2).gamma()


def omega_of_graphs(g1: Graph, g2: Graph) -> VRep:
    return GraphPolytopePair(g1, g2).omega()


def same_point_set(p: VRep, q: VRep) -> bool:
    return p.ambient_dim == q.ambient_dim and set(p.points) == set(q.points)
