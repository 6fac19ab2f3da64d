"""Toric ideals, binomial Groebner bases, and the squarefree-initial-ideal
construction for pairs of stable-set configurations.

Polynomials never carry coefficients: every element of a toric ideal we touch
is a pure difference ``x^u - x^v``, stored as the pair ``(lead, trail)`` of
exponent tuples with ``lead > trail`` in the active monomial order.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import HypothesisError, InputError


# ---------------------------------------------------------------------------
# configurations


@dataclass(frozen=True)
class PointConfiguration:
    """Integer matrix given by its columns; column j is variable j.

    Duplicate columns are rejected: the variable-order condition used for
    stable-set matrices has no tie rule for them.
    """

    d: int
    columns: tuple

    def __post_init__(self):
        if not self.columns:
            raise InputError("configuration has no columns")
        for c in self.columns:
            if len(c) != self.d:
                raise InputError(f"column {c} does not have {self.d} rows")
        if len(set(self.columns)) != len(self.columns):
            raise InputError("configuration has duplicate columns")

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]]) -> "PointConfiguration":
        cols = tuple(tuple(int(x) for x in c) for c in columns)
        return cls(len(cols[0]) if cols else 0, cols)

    @property
    def n(self) -> int:
        return len(self.columns)

    @property
    def nonnegative(self) -> bool:
        return all(x >= 0 for c in self.columns for x in c)

    def has_zero_column(self) -> bool:
        return (0,) * self.d in self.columns

    def image(self, exponents: Sequence[int]) -> tuple:
        """Image of the monomial x^exponents under x_j -> t^{a_j} s."""
        out = [0] * (self.d + 1)
        for e, col in zip(exponents, self.columns):
            if e:
                for r, x in enumerate(col):
                    out[r] += e * x
                out[self.d] += e
        return tuple(out)


def stable_set_configuration(g) -> PointConfiguration:
    """Columns rho(W) for W in S(g), canonical order (zero column last)."""
    from .graphs import stable_sets

    return PointConfiguration.from_columns(
        [tuple(1 if i + 1 in w else 0 for i in range(g.d)) for w in stable_sets(g)]
    )


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """Graded reverse lexicographic order.

    ``ranking`` lists variable indices from largest to smallest.  Among
    monomials of equal degree, the one with the smaller exponent on the
    smallest variable (then the next smallest, ...) is larger.
    """

    ranking: tuple
    _rev: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise InputError(f"ranking {self.ranking} is not a permutation")
        object.__setattr__(self, "_rev", tuple(reversed(self.ranking)))

    @classmethod
    def identity(cls, n: int) -> "MonomialOrder":
        """x_0 > x_1 > ... > x_{n-1}."""
        return cls(tuple(range(n)))

    def with_smallest(self, var: int) -> "MonomialOrder":
        return MonomialOrder(tuple(v for v in self.ranking if v != var) + (var,))

    @property
    def nvars(self) -> int:
        return len(self.ranking)

    def key(self, m: Sequence[int]) -> tuple:
        return (sum(m),) + tuple(-m[v] for v in self._rev)

    def less(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.key(u) < self.key(v)


class Binomial(NamedTuple):
    lead: tuple
    trail: tuple


def _make_binomial(u: tuple, v: tuple, order: MonomialOrder):
    if u == v:
        return None
    return Binomial(u, v) if order.key(u) > order.key(v) else Binomial(v, u)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _support(m: tuple) -> int:
    mask = 0
    for i, e in enumerate(m):
        if e:
            mask |= 1 << i
    return mask


# ---------------------------------------------------------------------------
# Buchberger for pure difference binomials


class _Basis:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self.leads: list = []
        self.trails: list = []
        self.masks: list = []
        self.alive: list = []

    def reduce_monomial(self, m: tuple) -> tuple:
        leads, trails, masks, alive = self.leads, self.trails, self.masks, self.alive
        while True:
            ms = _support(m)
            for k in range(len(leads)):
                if alive[k] and (masks[k] & ms) == masks[k] and _divides(leads[k], m):
                    m = tuple(x - a + b for x, a, b in zip(m, leads[k], trails[k]))
                    break
            else:
                return m

    def normal_form(self, u: tuple, v: tuple):
        return _make_binomial(self.reduce_monomial(u), self.reduce_monomial(v), self.order)

    def add(self, b: Binomial) -> int:
        self.leads.append(b.lead)
        self.trails.append(b.trail)
        self.masks.append(_support(b.lead))
        self.alive.append(True)
        return len(self.leads) - 1


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def buchberger(generators: Iterable[Binomial | tuple], order: MonomialOrder) -> list:
    """Reduced Groebner basis of the ideal generated by ``x^u - x^v`` pairs.

    Pairs are processed by the normal strategy (smallest lcm first), with
    the coprime-leads and chain criteria.  The result is sorted by the order.
    """
    basis = _Basis(order)
    pending: list = []
    pending_set: set = set()

    def insert(b: Binomial):
        new = basis.add(b)
        for k in range(new):
            if not basis.alive[k]:
                continue
            lcm = _lcm(basis.leads[k], b.lead)
            heapq.heappush(pending, (order.key(lcm), k, new, lcm))
            pending_set.add((k, new))

    for g in generators:
        u, v = g
        nf = basis.normal_form(tuple(u), tuple(v))
        if nf is not None:
            insert(nf)

    while pending:
        _, i, j, lcm = heapq.heappop(pending)
        pending_set.discard((i, j))
        li, lj = basis.leads[i], basis.leads[j]
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue
        # chain criterion: some k with lead_k | lcm whose pairs with i and j
        # have both been handled already
        skip = False
        for k in range(len(basis.leads)):
            if k == i or k == j:
                continue
            if not _divides(basis.leads[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pending_set and b not in pending_set:
                skip = True
                break
        if skip:
            continue
        su = tuple(m - a + t for m, a, t in zip(lcm, li, basis.trails[i]))
        sv = tuple(m - a + t for m, a, t in zip(lcm, lj, basis.trails[j]))
        nf = basis.normal_form(su, sv)
        if nf is not None:
            insert(nf)

    return _interreduce(list(zip(basis.leads, basis.trails)), order)


def _interreduce(elements: list, order: MonomialOrder) -> list:
    # keep elements whose lead is not divisible by another lead
    elements = sorted(set(elements), key=lambda e: order.key(e[0]))
    minimal = []
    for lead, trail in elements:
        if any(_divides(m[0], lead) for m in minimal):
            continue
        minimal.append((lead, trail))
    reducer = _Basis(order)
    for lead, trail in minimal:
        reducer.add(Binomial(lead, trail))
    out = []
    for k, (lead, trail) in enumerate(minimal):
        reducer.alive[k] = False
        nt = reducer.reduce_monomial(trail)
        reducer.alive[k] = True
        out.append(Binomial(lead, nt))
    out.sort(key=lambda b: order.key(b.lead))
    return out


def is_groebner_basis(basis: Sequence[Binomial], order: MonomialOrder) -> bool:
    """Buchberger criterion: every S-binomial reduces to zero."""
    red = _Basis(order)
    for b in basis:
        red.add(b)
    for i, j in itertools.combinations(range(len(basis)), 2):
        li, lj = basis[i].lead, basis[j].lead
        lcm = _lcm(li, lj)
        su = tuple(m - a + t for m, a, t in zip(lcm, li, basis[i].trail))
        sv = tuple(m - a + t for m, a, t in zip(lcm, lj, basis[j].trail))
        if red.normal_form(su, sv) is not None:
            return False
    return True


def is_reduced(basis: Sequence[Binomial]) -> bool:
    """No lead divides any monomial of another basis element."""
    for i, b in enumerate(basis):
        for j, c in enumerate(basis):
            if i == j:
                continue
            if _divides(b.lead, c.lead) or _divides(b.lead, c.trail):
                return False
    return True


def reduces_to_zero(basis: Sequence[Binomial], order: MonomialOrder, u, v) -> bool:
    red = _Basis(order)
    for b in basis:
        red.add(b)
    return red.reduce_monomial(tuple(u)) == red.reduce_monomial(tuple(v))


# ---------------------------------------------------------------------------
# toric ideals


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list:
    """Basis of the integer lattice ``{u in Z^ncols : M u = 0}``.

    Unimodular column operations bring M to lower-echelon form; the trailing
    columns of the accumulated transform span the kernel.  The basis is then
    LLL-reduced, which keeps the lattice generators (and hence the
    Groebner computations that start from them) small.
    """
    cols = [[r[j] for r in rows] for j in range(ncols)]
    trans = [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    piv = 0
    for r in range(len(rows)):
        while True:
            active = [j for j in range(piv, ncols) if cols[j][r] != 0]
            if not active:
                break
            j0 = min(active, key=lambda j: abs(cols[j][r]))
            done = True
            for j in active:
                if j == j0:
                    continue
                q = cols[j][r] // cols[j0][r]
                cols[j] = [x - q * y for x, y in zip(cols[j], cols[j0])]
                trans[j] = [x - q * y for x, y in zip(trans[j], trans[j0])]
                if cols[j][r] != 0:
                    done = False
            if done:
                cols[piv], cols[j0] = cols[j0], cols[piv]
                trans[piv], trans[j0] = trans[j0], trans[piv]
                piv += 1
                break
    kernel = trans[piv:]
    if len(kernel) > 1:
        kernel = _lll(kernel)
    return [tuple(v) for v in kernel]


def _lll(basis: list) -> list:
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    m = DomainMatrix([[ZZ(x) for x in row] for row in basis], (len(basis), len(basis[0])), ZZ)
    return [[int(x) for x in row] for row in m.lll().to_list()]


def _homogenized_rows(config: PointConfiguration) -> list:
    rows = [[c[r] for c in config.columns] for r in range(config.d)]
    rows.append([1] * config.n)
    return rows


def _from_vector(u: Sequence[int], order: MonomialOrder):
    pos = tuple(max(0, x) for x in u)
    neg = tuple(max(0, -x) for x in u)
    return _make_binomial(pos, neg, order)


def toric_groebner(config: PointConfiguration, order: MonomialOrder | None = None) -> list:
    """Reduced Groebner basis of the toric ideal of ``config``.

    Variable j maps to ``t^{a_j} s``, so the ideal is homogeneous.  The ideal
    is obtained from a kernel lattice basis by saturating with respect to
    each variable in turn (Groebner basis with that variable smallest in
    grevlex, then dividing it out), and the final basis is computed in
    ``order`` (default: x_0 > ... > x_{n-1}).
    """
    n = config.n
    if order is None:
        order = MonomialOrder.identity(n)
    if order.nvars != n:
        raise InputError(f"order has {order.nvars} variables, configuration has {n}")
    kernel = integer_kernel(_homogenized_rows(config), n)
    if not kernel:
        return []
    gens = [b for b in (_from_vector(u, order) for u in kernel) if b is not None]
    for var in range(n):
        sat_order = order.with_smallest(var)
        gb = buchberger(gens, sat_order)
        gens = []
        for lead, trail in gb:
            k = min(lead[var], trail[var])
            if k:
                lead = lead[:var] + (lead[var] - k,) + lead[var + 1:]
                trail = trail[:var] + (trail[var] - k,) + trail[var + 1:]
            gens.append((lead, trail))
    return buchberger(gens, order)


def initial_ideal_min_gens(gb: Sequence[Binomial], order: MonomialOrder | None = None) -> list:
    """Minimal generators of the initial ideal: the leads of a reduced basis."""
    leads = [b.lead for b in gb]
    if order is not None:
        leads.sort(key=order.key)
    else:
        leads.sort()
    return leads


def is_squarefree(monomials: Iterable[Sequence[int]]) -> bool:
    return all(e <= 1 for m in monomials for e in m)


def is_compressed_bruteforce(config: PointConfiguration, max_columns: int = 6) -> bool:
    """Squarefree initial ideal under every reverse-lex variable ranking."""
    if config.n > max_columns:
        raise InputError(f"brute-force compressedness is limited to {max_columns} columns")
    for ranking in itertools.permutations(range(config.n)):
        gb = toric_groebner(config, MonomialOrder(ranking))
        if not is_squarefree(initial_ideal_min_gens(gb)):
            return False
    return True


# ---------------------------------------------------------------------------
# harmony and the combined configuration


def _require_harmony_inputs(a: PointConfiguration, b: PointConfiguration):
    if a.d != b.d:
        raise InputError(f"row dimensions differ: {a.d} vs {b.d}")
    if not (a.nonnegative and b.nonnegative):
        raise InputError("harmony is defined for nonnegative configurations")
    if not (a.has_zero_column() and b.has_zero_column()):
        raise HypothesisError("both configurations must contain the zero column")


def harmony(a: PointConfiguration, b: PointConfiguration) -> bool:
    """For all columns a_i, b_j: (a_i - b_j)^+ is a column of a and
    (a_i - b_j)^- is a column of b."""
    _require_harmony_inputs(a, b)
    acols = set(a.columns)
    bcols = set(b.columns)
    for x in a.columns:
        for y in b.columns:
            plus = tuple(max(0, p - q) for p, q in zip(x, y))
            minus = tuple(max(0, q - p) for p, q in zip(x, y))
            if plus not in acols or minus not in bcols:
                return False
    return True


def omega_matrix(a: PointConfiguration, b: PointConfiguration) -> PointConfiguration:
    """Columns (-b_j, -1) for all j, then (a_i, 1) for all i, then zero.

    Variable layout of the combined ring: y_1..y_m, x_1..x_n, z.
    """
    if a.d != b.d:
        raise InputError(f"row dimensions differ: {a.d} vs {b.d}")
    cols = [tuple(-x for x in c) + (-1,) for c in b.columns]
    cols += [tuple(c) + (1,) for c in a.columns]
    cols.append((0,) * (a.d + 1))
    return PointConfiguration(a.d + 1, tuple(cols))


def check_canonical_order(config: PointConfiguration) -> None:
    """Raise unless no later column dominates an earlier one componentwise.

    With variables ranked by column position (later = smaller), this is the
    condition "x_i < x_j whenever a_i <= a_j componentwise".
    """
    cols = config.columns
    if cols[-1] != (0,) * config.d:
        raise InputError("the zero column must be last")
    for i, j in itertools.combinations(range(len(cols)), 2):
        if cols[i] != cols[j] and all(x <= y for x, y in zip(cols[i], cols[j])):
            raise InputError(
                f"column {j} dominates earlier column {i}; order condition fails"
            )


def canonical_orders(a: PointConfiguration, b: PointConfiguration) -> tuple:
    """(order_A, order_B, order_rev) as used by the squarefree construction.

    order_A ranks x_1 > ... > x_n, order_B ranks y_1 > ... > y_m, and the
    combined order ranks y_1 > ... > y_m > x_1 > ... > x_n > z, which is
    column order in :func:`omega_matrix`.
    """
    check_canonical_order(a)
    check_canonical_order(b)
    return (
        MonomialOrder.identity(a.n),
        MonomialOrder.identity(b.n),
        MonomialOrder.identity(a.n + b.n + 1),
    )


def _support_set(col: Sequence[int]) -> set:
    return {k for k, x in enumerate(col) if x}


def overlap_pairs(a: PointConfiguration, b: PointConfiguration) -> list:
    """Pairs (i, j), 0-based, whose columns have intersecting supports."""
    return [
        (i, j)
        for i, x in enumerate(a.columns)
        for j, y in enumerate(b.columns)
        if _support_set(x) & _support_set(y)
    ]


def predicted_initial_gens(
    a: PointConfiguration,
    b: PointConfiguration,
    gb_a: Sequence[Binomial] | None = None,
    gb_b: Sequence[Binomial] | None = None,
) -> list:
    """Predicted minimal generators of the combined initial ideal.

    ``{x_n y_m} + {x_i y_j : supports of a_i, b_j meet} + M_A + M_B`` with
    M_A, M_B the minimal generators of in(I_A), in(I_B) embedded into the
    combined ring (layout y, x, z).
    """
    order_a, order_b, order_rev = canonical_orders(a, b)
    if gb_a is None:
        gb_a = toric_groebner(a, order_a)
    if gb_b is None:
        gb_b = toric_groebner(b, order_b)
    m_a = initial_ideal_min_gens(gb_a)
    m_b = initial_ideal_min_gens(gb_b)
    if not is_squarefree(m_a) or not is_squarefree(m_b):
        raise HypothesisError("in(I_A) or in(I_B) is not squarefree")
    n, m = a.n, b.n
    total = n + m + 1

    def mono(y_exp=(), x_exp=()):
        e = [0] * total
        for j, v in enumerate(y_exp):
            e[j] = v
        for i, v in enumerate(x_exp):
            e[m + i] = v
        return tuple(e)

    out = set()
    corner = [0] * total
    corner[m - 1] = 1
    corner[m + n - 1] = 1
    out.add(tuple(corner))
    for i, j in overlap_pairs(a, b):
        e = [0] * total
        e[m + i] = 1
        e[j] = 1
        out.add(tuple(e))
    for mon in m_a:
        out.add(mono(x_exp=mon))
    for mon in m_b:
        out.add(mono(y_exp=mon))
    return sorted(out, key=order_rev.key)


# ---------------------------------------------------------------------------
# end-to-end check


@dataclass
class SquarefreeReport:
    harmony: bool
    squarefree_a: bool
    squarefree_b: bool
    combined_squarefree: bool | None = None
    matches_prediction: bool | None = None
    combined_basis_size: int | None = None
    combined_initial: list = field(default_factory=list)
    predicted_initial: list = field(default_factory=list)
    omega_reflexive: bool | None = None
    omega_idp: bool | None = None
    notes: list = field(default_factory=list)

    @property
    def hypotheses_hold(self) -> bool:
        return self.harmony and self.squarefree_a and self.squarefree_b

    @property
    def consistent(self) -> bool:
        """Algebraic prediction agrees with the geometric verdicts."""
        if not self.hypotheses_hold:
            # no algebraic claim; an IDP failure is what the odd-hole
            # argument predicts when a graph is imperfect
            return True
        ok = bool(self.combined_squarefree) and bool(self.matches_prediction)
        if self.omega_reflexive is not None:
            ok = ok and self.omega_reflexive
        if self.omega_idp is not None:
            ok = ok and self.omega_idp
        return ok

    def to_dict(self) -> dict:
        return {
            "harmony": self.harmony,
            "squarefree_a": self.squarefree_a,
            "squarefree_b": self.squarefree_b,
            "combined_squarefree": self.combined_squarefree,
            "matches_prediction": self.matches_prediction,
            "combined_basis_size": self.combined_basis_size,
            "combined_initial": [list(m) for m in self.combined_initial],
            "predicted_initial": [list(m) for m in self.predicted_initial],
            "omega_reflexive": self.omega_reflexive,
            "omega_idp": self.omega_idp,
            "hypotheses_hold": self.hypotheses_hold,
            "consistent": self.consistent,
            "notes": list(self.notes),
        }


def verify_squarefree_theorem(g1, g2, geometric: bool = True, idp_bound: int | None = None) -> SquarefreeReport:
    """Run the harmony / squarefree-initial-ideal pipeline for a graph pair.

    With ``geometric=True`` the reflexivity and IDP of Omega(Q_g1, Q_g2) are
    computed independently and recorded alongside the algebraic verdicts.
    """
    a = stable_set_configuration(g1)
    b = stable_set_configuration(g2)
    order_a, order_b, order_rev = canonical_orders(a, b)
    gb_a = toric_groebner(a, order_a)
    gb_b = gb_a if (b == a and order_b == order_a) else toric_groebner(b, order_b)
    report = SquarefreeReport(
        harmony=harmony(a, b),
        squarefree_a=is_squarefree(initial_ideal_min_gens(gb_a)),
        squarefree_b=is_squarefree(initial_ideal_min_gens(gb_b)),
    )
    if report.hypotheses_hold:
        combined = toric_groebner(omega_matrix(a, b), order_rev)
        init = initial_ideal_min_gens(combined, order_rev)
        predicted = predicted_initial_gens(a, b, gb_a, gb_b)
        report.combined_basis_size = len(combined)
        report.combined_initial = init
        report.predicted_initial = predicted
        report.combined_squarefree = is_squarefree(init)
        report.matches_prediction = sorted(init) == sorted(predicted)
    else:
        report.notes.append("hypothesis fails: an initial ideal of I_A or I_B is not squarefree")
    if geometric:
        from .constructions import omega, stable_set_polytope
        from .decomposition import has_idp
        from .geometry import is_reflexive

        om = omega(stable_set_polytope(g1), stable_set_polytope(g2))
        report.omega_reflexive = is_reflexive(om)
        report.omega_idp = has_idp(om, idp_bound).holds
    return report


def is_compressed_geometric(p) -> bool:
    """Facet-width-one test: every primitive facet inequality ``<a, x> <= b``
    takes only the values b and b - 1 on the configuration's points.

    This decides compressedness when the points are all the lattice points
    of their convex hull and the hull is full-dimensional.
    """
    from .geometry import VRep, hrep

    if isinstance(p, PointConfiguration):
        p = VRep.from_points(p.columns)
    h = hrep(p)
    return all(
        all(b - 1 <= sum(x * y for x, y in zip(a, pt)) for pt in p.points)
        for a, b in h.facets
    )


def serialize_basis(gb: Sequence[Binomial]) -> list:
    """Each binomial as ``[lead, trail]`` exponent lists."""
    return [[list(b.lead), list(b.trail)] for b in gb]
