import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from refpoly import constructions as C
from refpoly import ehrhart as E
from refpoly import geometry as geo
from refpoly import graphs as G
from refpoly.errors import DimensionError, InconsistencyError, InputError
from refpoly.geometry import VRep

from _oracles import brute_lattice_points, naive_delta, qhull_facets_and_volume


def test_stable_set_polytope_order():
    q = C.stable_set_polytope(G.path(3))
    assert q.points == ((1, 0, 1), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 0, 0))


def test_gamma_keeps_one_origin():
    q = C.stable_set_polytope(G.path(2))
    g = C.gamma(q, q)
    assert g.points == ((1, 0), (0, 1), (0, 0), (-1, 0), (0, -1))


def test_omega_lifts():
    q = C.stable_set_polytope(G.path(2))
    o = C.omega(q, q)
    assert o.ambient_dim == 3
    assert o.points[:3] == ((1, 0, 1), (0, 1, 1), (0, 0, 1))
    assert o.points[3:] == ((-1, 0, -1), (0, -1, -1), (0, 0, -1))
    assert C.hansen(G.path(2)) == o


def test_pair_requires_same_vertex_set():
    with pytest.raises(InputError):
        C.GraphPolytopePair(G.path(2), G.path(3))
    with pytest.raises(DimensionError):
        C.gamma(C.stable_set_polytope(G.path(2)), C.stable_set_polytope(G.path(3)))


def test_bipyramid():
    b = C.bipyramid(VRep(1, ((1,), (-1,))))
    assert set(b.points) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


@pytest.mark.parametrize("d", [2, 3, 4])
def test_hansen_polytopes_are_centrally_symmetric(d):
    for g in G.nonisomorphic_graphs(d):
        assert geo.is_centrally_symmetric(C.hansen(g))
        q = C.stable_set_polytope(g)
        assert geo.is_centrally_symmetric(C.gamma(q, q))


def test_gamma_of_complete_graph_is_cross_polytope():
    g = C.gamma_of_graphs(G.complete(3), G.complete(3))
    assert geo.facet_count(g) == 8 and geo.is_reflexive(g)


# --------------------------------------------------------------- ehrhart


def unit_cube(d):
    return VRep(d, tuple(itertools.product((0, 1), repeat=d)))


@pytest.mark.parametrize(
    "poly,expected",
    [
        (unit_cube(2), [1, 1, 0]),
        (unit_cube(3), [1, 4, 1, 0]),
        (unit_cube(4), [1, 11, 11, 1, 0]),  # Eulerian numbers
        (VRep(3, ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))), [1, 3, 3, 1]),
        (VRep(2, ((0, 0), (2, 0), (0, 2))), [1, 3, 0]),
    ],
)
def test_known_delta_polynomials(poly, expected):
    assert list(E.delta_polynomial(poly).coeffs) == expected


def test_delta_polynomial_formatting_and_product():
    p = E.DeltaPolynomial((1, 2, 1), 2)
    assert str(p) == "1 + 2λ + λ^2"
    assert p.times_one_plus_lambda().coeffs == (1, 3, 3, 1)
    assert p.volume == 4 and p.degree == 2
    assert E.is_palindromic(p) and not E.is_palindromic((1, 4, 1, 0, 2))
    with pytest.raises(ValueError):
        E.DeltaPolynomial((1, 2), 2)


def test_delta_rejects_lower_dimensional_input():
    with pytest.raises(DimensionError):
        E.delta_polynomial(VRep(2, ((0, 0), (1, 1))))


def test_inconsistent_counts_are_detected(monkeypatch):
    real = E.count_lattice_points

    def skewed(p, n):
        return real(p, n) + (1 if n == p.ambient_dim + 1 else 0)

    monkeypatch.setattr(E, "count_lattice_points", skewed)
    with pytest.raises(InconsistencyError):
        E.delta_polynomial(unit_cube(2))


@st.composite
def lattice_polytopes(draw):
    d = draw(st.integers(2, 3))
    k = draw(st.integers(d + 1, d + 4))
    pts = draw(st.lists(st.tuples(*[st.integers(-2, 2)] * d), min_size=k, max_size=k, unique=True))
    assume(geo.affine_dimension(pts) == d)
    return VRep(d, tuple(pts))


@settings(max_examples=30, deadline=None)
@given(lattice_polytopes())
def test_delta_properties(p):
    d = p.ambient_dim
    delta = E.delta_polynomial(p)
    counts = [1] + [len(brute_lattice_points(p.points, n)) for n in range(1, d + 1)]
    assert list(delta.coeffs) == naive_delta(counts, d)
    assert delta.coeffs[0] == 1
    assert all(c >= 0 for c in delta.coeffs)
    assert delta.coeffs[1] == counts[1] - d - 1
    h = geo.hrep(p)
    interior = sum(1 for x in brute_lattice_points(p.points, 1) if geo.strictly_contains(h, x))
    assert delta.coeffs[d] == interior
    _, vol = qhull_facets_and_volume(p.points)
    assert delta.volume == vol


@pytest.mark.parametrize("d", [2, 3, 4])
def test_reflexive_iff_palindromic_on_graph_polytopes(d):
    for g in G.nonisomorphic_graphs(d):
        for p in (C.gamma_of_graphs(g, g), C.omega_of_graphs(g, g)):
            assert geo.is_reflexive(p) == E.is_palindromic(E.delta_polynomial(p))


def test_delta_identity_for_small_perfect_pair():
    rep = E.verify_delta_theorem(G.path(3), G.complete(3))
    assert rep.hypothesis and rep.identity_holds and rep.volume_identity_holds
    d = rep.to_dict()
    assert d["delta_omega"] == d["one_plus_lambda_delta_gamma"]
    assert all(isinstance(x, str) for x in d["volumes"])


def test_delta_identity_report_flags_imperfect_input():
    rep = E.verify_delta_theorem(G.cycle(5), G.cycle(5))
    assert not rep.hypothesis and rep.notes
