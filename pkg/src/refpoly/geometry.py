"""Exact convex geometry over the integers.

Convex hulls use the double description method: facets of ``conv(V)`` are the
extreme rays of the cone ``{y : <y, (v, 1)> >= 0 for v in V}``, built by
inserting one homogenized point at a time.  Everything is Python ``int`` or
``fractions.Fraction``; there is no floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, InputError, UnboundedError


@dataclass(frozen=True)
class VRep:
    """A finite list of points (generators, not necessarily vertices)."""

    ambient_dim: int
    points: tuple

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise InputError("VRep point list contains duplicates")
        for p in self.points:
            if len(p) != self.ambient_dim:
                raise DimensionError(
                    f"point {p} does not have length {self.ambient_dim}"
                )

    @classmethod
    def from_points(cls, points: Iterable[Sequence], ambient_dim: int | None = None) -> "VRep":
        """Build from any iterable of coordinate sequences, dropping repeats."""
        seen = {}
        for p in points:
            t = tuple(p)
            if t not in seen:
                seen[t] = None
        pts = tuple(seen)
        if ambient_dim is None:
            if not pts:
                raise InputError("cannot infer dimension of an empty point list")
            ambient_dim = len(pts[0])
        return cls(ambient_dim, pts)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class HRep:
    """Facets ``(a, b)`` meaning ``<a, x> <= b``; normals are primitive."""

    ambient_dim: int
    facets: tuple

    def normals(self) -> list:
        return [a for a, _ in self.facets]

    def offsets(self) -> list:
        return [b for _, b in self.facets]


# ---------------------------------------------------------------------------
# small exact linear algebra


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _primitive(v: Sequence[int]) -> tuple:
    g = reduce(math.gcd, v, 0)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def rank(rows: Sequence[Sequence]) -> int:
    """Exact rank of a rational matrix (fraction-free Gaussian elimination)."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    # clear denominators row by row so everything is integral
    for i, r in enumerate(m):
        den = 1
        for x in r:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
        m[i] = [int(x * den) for x in r]
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c]
            if f:
                m[i] = [p * x - f * y for x, y in zip(m[i], m[r])]
                g = reduce(math.gcd, m[i], 0)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        r += 1
        if r == len(m):
            break
    return r


def _solve_inverse_columns(rows: Sequence[Sequence[int]]) -> list:
    """Columns of the inverse of a nonsingular integer matrix, as primitive
    integer vectors positively scaled (so ``rows[j] . col_j > 0``)."""
    n = len(rows)
    aug = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    cols = []
    for j in range(n):
        col = [aug[i][n + j] for i in range(n)]
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in col), 1)
        cols.append(_primitive([int(x * den) for x in col]))
    return cols


def affine_dimension(points: Sequence[Sequence] | VRep) -> int:
    """Dimension of the affine hull of a nonempty point list."""
    pts = points.points if isinstance(points, VRep) else list(points)
    if not pts:
        raise InputError("affine dimension of an empty point set is undefined")
    base = pts[0]
    return rank([[x - y for x, y in zip(p, base)] for p in pts[1:]])


# ---------------------------------------------------------------------------
# double description


def extreme_rays(constraints: Sequence[Sequence[int]]) -> tuple:
    """Extreme rays of the pointed cone ``{y : <c, y> >= 0 for c in constraints}``.

    Returns ``(rays, incidences)`` where ``incidences[k]`` is a bitmask over
    constraint indices tight on ``rays[k]``.  Raises :class:`DimensionError`
    if the constraints do not span the whole space (cone not pointed).
    """
    if not constraints:
        raise DimensionError("no constraints")
    dim = len(constraints[0])
    cons = [tuple(int(x) for x in c) for c in constraints]

    # greedy choice of `dim` linearly independent constraints
    basis: list = []
    for i, c in enumerate(cons):
        if rank([cons[j] for j in basis] + [c]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    if len(basis) < dim:
        raise DimensionError(
            f"constraints span a space of dimension {len(basis)} < {dim}"
        )

    rays = _solve_inverse_columns([cons[i] for i in basis])
    inc = []
    for j in range(dim):
        mask = 0
        for k, i in enumerate(basis):
            if k != j:
                mask |= 1 << i
        inc.append(mask)

    processed = 0
    for i in basis:
        processed |= 1 << i
    order = [i for i in range(len(cons)) if not (processed >> i) & 1]

    need = dim - 2
    for i in order:
        c = cons[i]
        vals = [_dot(c, r) for r in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        bit = 1 << i
        if not neg:
            for k, s in enumerate(vals):
                if s == 0:
                    inc[k] |= bit
            processed |= bit
            continue

        new_rays = []
        new_inc = []
        if pos:
            # ray membership bitmask per constraint, for the adjacency test
            cons_rays: dict = {}
            for k, m in enumerate(inc):
                mm = m
                while mm:
                    low = mm & -mm
                    j = low.bit_length() - 1
                    cons_rays[j] = cons_rays.get(j, 0) | (1 << k)
                    mm ^= low
            all_rays = (1 << len(rays)) - 1
            for p in pos:
                zp = inc[p]
                for n in neg:
                    common = zp & inc[n]
                    if common.bit_count() < need:
                        continue
                    acc = all_rays
                    target = (1 << p) | (1 << n)
                    mm = common
                    while mm and acc != target:
                        low = mm & -mm
                        acc &= cons_rays[low.bit_length() - 1]
                        mm ^= low
                    if acc != target:
                        continue
                    sp, sn = vals[p], vals[n]
                    rp, rn = rays[p], rays[n]
                    new = _primitive([sp * y - sn * x for x, y in zip(rp, rn)])
                    new_rays.append(new)
                    new_inc.append(common | bit)

        kept_rays = []
        kept_inc = []
        for k, s in enumerate(vals):
            if s > 0:
                kept_rays.append(rays[k])
                kept_inc.append(inc[k])
            elif s == 0:
                kept_rays.append(rays[k])
                kept_inc.append(inc[k] | bit)
        rays = kept_rays + new_rays
        inc = kept_inc + new_inc
        processed |= bit
    return rays, inc


def _hull_from_points(points: Sequence[tuple], dim: int):
    """Facets (a, b) of conv(points) plus the vertex index list."""
    if not points:
        raise InputError("convex hull of an empty point set")
    homog = [tuple(p) + (1,) for p in points]
    try:
        rays, inc = extreme_rays(homog)
    except DimensionError:
        raise DimensionError(
            f"point set is not full-dimensional in R^{dim} "
            f"(affine dimension {affine_dimension(points)})"
        ) from None
    facets = []
    for y in rays:
        c = y[:dim]
        c0 = y[dim]
        g = reduce(math.gcd, c, 0)
        if g == 0:
            raise DimensionError("degenerate facet (zero normal)")
        a = tuple(-x // g for x in c)
        if c0 % g:
            # only possible for non-integral generators
            raise InputError("generators are not integral; use rational_hull")
        facets.append((a, c0 // g))
    facets.sort()
    # vertex test: p is a vertex iff no other point lies on all its facets
    tight = []
    for p in points:
        m = 0
        for k, (a, b) in enumerate(facets):
            if _dot(a, p) == b:
                m |= 1 << k
        tight.append(m)
    vertices = []
    for i, mi in enumerate(tight):
        if not any(j != i and (mi & tight[j]) == mi for j in range(len(points))):
            vertices.append(i)
    return facets, vertices


@lru_cache(maxsize=512)
def convex_hull(v: VRep) -> tuple:
    """Vertices and irredundant facet description of ``conv(v.points)``.

    Input must be integral and full-dimensional.  Facets are sorted by
    ``(normal, offset)``; vertices keep the input order.
    """
    for p in v.points:
        if any(not isinstance(x, int) for x in p):
            raise InputError("convex_hull expects integer points")
    facets, vidx = _hull_from_points(v.points, v.ambient_dim)
    verts = VRep(v.ambient_dim, tuple(v.points[i] for i in vidx))
    return verts, HRep(v.ambient_dim, tuple(facets))


def hrep(v: VRep) -> HRep:
    return convex_hull(v)[1]


def vertices(v: VRep) -> VRep:
    return convex_hull(v)[0]


def contains(h: HRep, p: Sequence) -> bool:
    return all(_dot(a, p) <= b for a, b in h.facets)


def strictly_contains(h: HRep, p: Sequence) -> bool:
    return all(_dot(a, p) < b for a, b in h.facets)


def origin_interior(v: VRep) -> bool:
    return strictly_contains(hrep(v), (0,) * v.ambient_dim)


def is_reflexive(v: VRep) -> bool:
    """Origin interior and every primitive facet inequality has offset 1."""
    h = hrep(v)
    return all(b == 1 for _, b in h.facets)


def dual_polytope(v: VRep) -> tuple:
    """Vertices ``a / b`` of the polar dual, as tuples of Fractions."""
    h = hrep(v)
    if not all(b > 0 for _, b in h.facets):
        raise DimensionError("dual polytope requires the origin in the interior")
    return tuple(tuple(Fraction(x, b) for x in a) for a, b in h.facets)


def facet_count(v: VRep) -> int:
    return len(hrep(v).facets)


def is_centrally_symmetric(v: VRep) -> bool:
    vs = set(vertices(v).points)
    return all(tuple(-x for x in p) in vs for p in vs)


def is_two_level(v: VRep) -> bool:
    """Every facet normal takes exactly two values on the vertex set."""
    verts, h = convex_hull(v)
    return all(
        len({_dot(a, p) for p in verts.points}) == 2 for a, _ in h.facets
    )


# ---------------------------------------------------------------------------
# vertex enumeration for an H-description


def hrep_vertices(h: HRep) -> list:
    """Vertices of a bounded H-polytope, as tuples of Fractions."""
    dim = h.ambient_dim
    # cone {(x, t) : b t - a.x >= 0, t >= 0}
    cons = [tuple(-x for x in a) + (b,) for a, b in h.facets]
    cons.append((0,) * dim + (1,))
    try:
        rays, _ = extreme_rays(cons)
    except DimensionError:
        raise UnboundedError("inequality system is unbounded or has a lineality space") from None
    out = []
    for r in rays:
        t = r[dim]
        if t == 0:
            raise UnboundedError("inequality system is unbounded")
        out.append(tuple(Fraction(x, t) for x in r[:dim]))
    return out


def rational_hull(points: Sequence[Sequence[Fraction]], dim: int) -> list:
    """Facets of the hull of rational points as integer triples ``(a, b, s)``
    meaning ``<a, x> <= b / s`` with ``s > 0``.  Lattice input gives ``s == 1``.
    """
    den = 1
    for p in points:
        for x in p:
            if isinstance(x, Fraction):
                den = den * x.denominator // math.gcd(den, x.denominator)
    scaled = sorted({tuple(int(x * den) for x in p) for p in points})
    homog = [p + (1,) for p in scaled]
    rays, _ = extreme_rays(homog)
    out = []
    for y in rays:
        c = y[:dim]
        a = _primitive(tuple(-x for x in c))
        g = reduce(math.gcd, c, 0)
        # <a, den*x> <= c0/g  ->  <a, x> <= (c0/g) / den
        b = Fraction(y[dim], g) / den
        out.append((a, b.numerator, b.denominator))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# lattice point enumeration


@dataclass(frozen=True)
class EnumerationPlan:
    """Per-coordinate bound data for scanning dilates of a polytope.

    ``levels[k]`` lists the facets of the projection onto the first ``k + 1``
    coordinates whose coefficient on coordinate ``k`` is nonzero, each stored
    as ``(prefix_coeffs, coeff_k, b, s)`` for ``prefix.x + coeff_k * x_k <= n b / s``.
    """

    dim: int
    levels: tuple
    extent: int = 0  # max |coordinate| over the vertices, rounded up


def _plan_from_vertices(verts: Sequence[Sequence], dim: int) -> EnumerationPlan:
    levels = []
    for k in range(1, dim + 1):
        proj = {tuple(p[:k]) for p in verts}
        facets = rational_hull(sorted(proj), k)
        rows = tuple(
            (a[: k - 1], a[k - 1], b, s) for a, b, s in facets if a[k - 1] != 0
        )
        levels.append(rows)
    extent = max(math.ceil(abs(Fraction(x))) for p in verts for x in p)
    return EnumerationPlan(dim, tuple(levels), extent)


@lru_cache(maxsize=256)
def enumeration_plan(h: HRep) -> EnumerationPlan:
    verts = hrep_vertices(h)
    return _plan_from_vertices(verts, h.ambient_dim)


@lru_cache(maxsize=256)
def _vrep_plan(v: VRep) -> EnumerationPlan:
    return _plan_from_vertices(vertices(v).points, v.ambient_dim)


def _plan_for(p) -> EnumerationPlan:
    if isinstance(p, VRep):
        return _vrep_plan(p)
    if isinstance(p, HRep):
        return enumeration_plan(p)
    raise TypeError(f"expected VRep or HRep, got {type(p).__name__}")


def _floor_div(num: int, den: int) -> int:
    return num // den


def _ceil_div(num: int, den: int) -> int:
    return -((-num) // den)


def _interval(rows, prefix, n):
    lo = None
    hi = None
    for pre, c, b, s in rows:
        # c * x <= n b / s - pre.prefix   ->  s c x <= n b - s pre.prefix
        rhs = n * b - s * _dot(pre, prefix)
        sc = s * c
        if sc > 0:
            v = _floor_div(rhs, sc)
            if hi is None or v < hi:
                hi = v
        else:
            v = _ceil_div(rhs, sc)
            if lo is None or v > lo:
                lo = v
    if lo is None or hi is None:
        raise UnboundedError("projection is unbounded along a coordinate")
    return lo, hi


def iter_lattice_points(p, n: int = 1, compiled: bool = True) -> Iterator[tuple]:
    """Stream the integer points of ``n * P`` in lexicographic order.

    ``p`` may be a :class:`VRep` or an :class:`HRep`.  The compiled kernel
    is used when its int64 arithmetic is provably safe; ``compiled=False``
    forces the pure-Python scan.
    """
    if n < 0:
        raise InputError("dilation factor must be nonnegative")
    plan = _plan_for(p)
    if compiled and n > 0:
        from . import _kernels

        packed = _kernels.pack_plan(plan, n)
        if packed is not None:
            for row in _kernels.enumerate_points(packed, n).tolist():
                yield tuple(row)
            return
    yield from _iter_python(plan, n)


def _iter_python(plan: EnumerationPlan, n: int) -> Iterator[tuple]:
    levels = plan.levels
    dim = plan.dim
    prefix: list = []

    def rec(k):
        lo, hi = _interval(levels[k], prefix, n)
        if k == dim - 1:
            for x in range(lo, hi + 1):
                yield tuple(prefix) + (x,)
            return
        for x in range(lo, hi + 1):
            prefix.append(x)
            yield from rec(k + 1)
            prefix.pop()

    yield from rec(0)


def lattice_points(p, n: int = 1) -> list:
    """All integer points of ``n * P`` in lexicographic order."""
    return list(iter_lattice_points(p, n))


def count_lattice_points(p, n: int = 1, compiled: bool = True) -> int:
    """Number of integer points of ``n * P``, without materializing them."""
    plan = _plan_for(p)
    if n == 0:
        return 1
    if compiled:
        from . import _kernels

        packed = _kernels.pack_plan(plan, n)
        if packed is not None:
            return _kernels.count(packed, n)
    return _count_python(plan, n)


def _count_python(plan: EnumerationPlan, n: int) -> int:
    levels = plan.levels
    dim = plan.dim
    prefix: list = []

    def rec(k):
        lo, hi = _interval(levels[k], prefix, n)
        if hi < lo:
            return 0
        if k == dim - 1:
            return hi - lo + 1
        total = 0
        for x in range(lo, hi + 1):
            prefix.append(x)
            total += rec(k + 1)
            prefix.pop()
        return total

    return rec(0)
