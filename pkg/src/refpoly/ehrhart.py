"""Ehrhart delta-polynomials from exact lattice-point counts."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import InconsistencyError
from .geometry import VRep, affine_dimension, count_lattice_points, vertices


@dataclass(frozen=True)
class DeltaPolynomial:
    """Coefficients (delta_0, ..., delta_dim), lowest degree first."""

    coeffs: tuple
    dim: int

    def __post_init__(self):
        if len(self.coeffs) != self.dim + 1:
            raise ValueError(f"expected {self.dim + 1} coefficients, got {len(self.coeffs)}")

    @property
    def degree(self) -> int:
        deg = 0
        for i, c in enumerate(self.coeffs):
            if c:
                deg = i
        return deg

    @property
    def volume(self) -> int:
        return sum(self.coeffs)

    def times_one_plus_lambda(self) -> "DeltaPolynomial":
        """(1 + lambda) * delta, viewed in dimension dim + 1."""
        c = list(self.coeffs) + [0]
        out = [c[0]] + [c[i] + c[i - 1] for i in range(1, len(c))]
        return DeltaPolynomial(tuple(out), self.dim + 1)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "λ" if i == 1 else f"λ^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"


def is_palindromic(delta) -> bool:
    coeffs = delta.coeffs if isinstance(delta, DeltaPolynomial) else tuple(delta)
    deg = 0
    for i, c in enumerate(coeffs):
        if c:
            deg = i
    return all(coeffs[i] == coeffs[deg - i] for i in range(deg + 1))


def count_dilate(p: VRep, n: int) -> int:
    """|nP ∩ Z^d|."""
    if n == 0:
        return 1
    return count_lattice_points(p, n)


def ehrhart_counts(p: VRep, upto: int) -> list:
    """[L(0), L(1), ..., L(upto)] with L(0) = 1."""
    return [1] + [count_dilate(p, n) for n in range(1, upto + 1)]


def delta_from_counts(counts, d: int) -> list:
    """Transform L(0..k) into delta_0..delta_k via the (1 - λ)^{d+1} factor."""
    return [
        sum((-1) ** (i - j) * comb(d + 1, i - j) * counts[j] for j in range(i + 1))
        for i in range(len(counts))
    ]


def delta_polynomial(p: VRep, check: bool = True) -> DeltaPolynomial:
    """Ehrhart delta-polynomial of a full-dimensional lattice polytope.

    The coefficients come from L(1..d).  With ``check`` one more dilate is
    counted and the transform at index d+1 must vanish; any nonzero value or
    negative coefficient raises :class:`InconsistencyError`.
    """
    d = p.ambient_dim
    if affine_dimension(vertices(p)) != d:
        from .errors import DimensionError

        raise DimensionError("delta-polynomial needs a full-dimensional polytope")
    counts = ehrhart_counts(p, d + 1 if check else d)
    raw = delta_from_counts(counts, d)
    coeffs = raw[: d + 1]
    if check and raw[d + 1] != 0:
        raise InconsistencyError(
            f"delta transform at index {d + 1} is {raw[d + 1]}, expected 0"
        )
    if any(c < 0 for c in coeffs):
        raise InconsistencyError(f"negative delta coefficient in {coeffs}")
    return DeltaPolynomial(tuple(coeffs), d)


def normalized_volume(p: VRep) -> int:
    return delta_polynomial(p).volume


@dataclass
class DeltaTheoremReport:
    perfect_g1: bool
    perfect_g2: bool
    delta_omega: DeltaPolynomial
    delta_gamma_suspension: DeltaPolynomial
    delta_gamma: DeltaPolynomial
    notes: list = field(default_factory=list)

    @property
    def hypothesis(self) -> bool:
        return self.perfect_g1 and self.perfect_g2

    @property
    def predicted(self) -> DeltaPolynomial:
        return self.delta_gamma.times_one_plus_lambda()

    @property
    def omega_equals_suspension(self) -> bool:
        return self.delta_omega.coeffs == self.delta_gamma_suspension.coeffs

    @property
    def omega_equals_product(self) -> bool:
        return self.delta_omega.coeffs == self.predicted.coeffs

    @property
    def identity_holds(self) -> bool:
        return self.omega_equals_suspension and self.omega_equals_product

    @property
    def volumes(self) -> tuple:
        return (
            self.delta_omega.volume,
            self.delta_gamma_suspension.volume,
            self.delta_gamma.volume,
        )

    @property
    def volume_identity_holds(self) -> bool:
        vo, vs, vg = self.volumes
        return vo == vs == 2 * vg

    def to_dict(self) -> dict:
        return {
            "hypothesis_perfect": self.hypothesis,
            "delta_omega": [str(c) for c in self.delta_omega.coeffs],
            "delta_gamma_suspension": [str(c) for c in self.delta_gamma_suspension.coeffs],
            "one_plus_lambda_delta_gamma": [str(c) for c in self.predicted.coeffs],
            "omega_equals_suspension": self.omega_equals_suspension,
            "omega_equals_product": self.omega_equals_product,
            "identity_holds": self.identity_holds,
            "volumes": [str(v) for v in self.volumes],
            "volume_identity_holds": self.volume_identity_holds,
            "notes": list(self.notes),
        }


def verify_delta_theorem(g1, g2) -> DeltaTheoremReport:
    """Compare delta(Omega), delta(Gamma of the suspensions) and (1+λ) delta(Gamma)."""
    from .constructions import gamma, omega, stable_set_polytope
    from .graphs import is_perfect_spgt, suspension

    q1, q2 = stable_set_polytope(g1), stable_set_polytope(g2)
    s1, s2 = stable_set_polytope(suspension(g1)), stable_set_polytope(suspension(g2))
    report = DeltaTheoremReport(
        perfect_g1=is_perfect_spgt(g1),
        perfect_g2=is_perfect_spgt(g2),
        delta_omega=delta_polynomial(omega(q1, q2)),
        delta_gamma_suspension=delta_polynomial(gamma(s1, s2)),
        delta_gamma=delta_polynomial(gamma(q1, q2)),
    )
    if not report.hypothesis:
        report.notes.append("hypothesis fails: an input graph is not perfect")
    return report
