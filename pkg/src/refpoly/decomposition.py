"""Integer decomposition property checks and explicit non-decomposable points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .geometry import VRep, contains, count_lattice_points, hrep, iter_lattice_points, lattice_points
from .graphs import Graph, complement, is_induced_cycle


@dataclass(frozen=True)
class IdpReport:
    holds: bool
    checked_bound: int
    witness: tuple | None = None  # (n, point)

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("witness must be present exactly when IDP fails")

    def to_dict(self) -> dict:
        out = {"holds": self.holds, "checked_bound": self.checked_bound}
        if self.witness is not None:
            n, pt = self.witness
            out["witness"] = {"n": n, "point": list(pt)}
        return out


def default_idp_bound(d: int) -> int:
    return max(2, d - 1)


def has_idp(p: VRep, bound: int | None = None) -> IdpReport:
    """Check that every lattice point of nP is a sum of n lattice points of P
    for n = 2..bound (default max(2, d - 1), which suffices in dimension d).

    Sums S_n = S_{n-1} + S_1 are built on packed integer codes: each point
    is shifted by a per-coordinate offset and read as digits in base
    ``radix``, so vector addition becomes integer addition without carries.
    """
    d = p.ambient_dim
    if bound is None:
        bound = default_idp_bound(d)
    base = lattice_points(p, 1)
    extent = max(abs(x) for pt in base for x in pt)
    radix = 2 * extent * max(bound, 1) + 1

    def pack(pt, n):
        code = 0
        for x in reversed(pt):
            code = code * radix + (x + n * extent)
        return code

    base_codes = [pack(pt, 1) for pt in base]
    level = set(base_codes)
    for n in range(2, bound + 1):
        level = {s + t for s in level for t in base_codes}
        expected = count_lattice_points(p, n)
        if len(level) != expected:
            for pt in iter_lattice_points(p, n):
                if pack(pt, n) not in level:
                    return IdpReport(False, bound, (n, pt))
            raise AssertionError("count mismatch without a missing point")
    return IdpReport(True, bound)


def _check_hole(g: Graph, cycle_vs: Sequence[int], what: str):
    k = len(cycle_vs)
    if k < 5 or k % 2 == 0:
        raise InputError(f"{what} must have odd length >= 5, got {k}")
    if not is_induced_cycle(g, cycle_vs):
        raise InputError(f"{cycle_vs} is not an induced cycle")


def odd_hole_witness(g1: Graph, hole: Sequence[int], d: int | None = None) -> tuple:
    """(3, e_hole + 2 e_{d+1}) built from the maximal stable sets of the hole.

    With the hole listed as c_1..c_{2l+1}, the rotations
    S_i = {c_i, c_{i+2}, ..., c_{i+2l-2}} each cover every vertex l times in
    total, so (sum of (rho(S_i) + e_{d+1}) - e_{d+1}) / l is integral.
    """
    d = g1.d if d is None else d
    _check_hole(g1, hole, "hole")
    k = len(hole)
    ell = (k - 1) // 2
    acc = [Fraction(0)] * (d + 1)
    for i in range(k):
        members = [hole[(i + 2 * t) % k] for t in range(ell)]
        for v in members:
            acc[v - 1] += 1
        acc[d] += 1
    acc[d] -= 1
    point = [x / ell for x in acc]
    if any(x.denominator != 1 for x in point):
        raise AssertionError("odd hole witness is not integral")
    return 3, tuple(int(x) for x in point)


def odd_antihole_witness(g1: Graph, antihole: Sequence[int], d: int | None = None) -> tuple:
    """(l + 1, e_antihole + l e_{d+1}) built from consecutive pairs of the
    complementary cycle c_1..c_{2l+1}."""
    d = g1.d if d is None else d
    _check_hole(complement(g1), antihole, "antihole")
    k = len(antihole)
    ell = (k - 1) // 2
    acc = [Fraction(0)] * (d + 1)
    for i in range(k):
        acc[antihole[i] - 1] += 1
        acc[antihole[(i + 1) % k] - 1] += 1
        acc[d] += 1
    acc[d] -= 1
    point = [x / 2 for x in acc]
    if any(x.denominator != 1 for x in point):
        raise AssertionError("odd antihole witness is not integral")
    return ell + 1, tuple(int(x) for x in point)


def verify_witness(p: VRep, n: int, point: Sequence[int]) -> bool:
    """True iff ``point`` (which must lie in nP) is not a sum of n lattice
    points of P."""
    point = tuple(point)
    if not contains(hrep(p), [Fraction(x, n) for x in point]):
        raise InputError(f"{point} does not lie in {n}P")
    pts = sorted(lattice_points(p, 1), key=lambda x: (-x[-1], x))
    dim = len(point)
    lo = [min(x[k] for x in pts) for k in range(dim)]
    hi = [max(x[k] for x in pts) for k in range(dim)]

    def search(start: int, remaining: int, target: tuple) -> bool:
        if remaining == 0:
            return all(t == 0 for t in target)
        for k in range(dim):
            if not remaining * lo[k] <= target[k] <= remaining * hi[k]:
                return False
        for idx in range(start, len(pts)):
            x = pts[idx]
            if search(idx, remaining - 1, tuple(t - y for t, y in zip(target, x))):
                return True
        return False

    return not search(0, n, point)
