import itertools

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from refpoly import decomposition as D
from refpoly import geometry as geo
from refpoly import graphs as G
from refpoly.constructions import gamma, omega, stable_set_polytope
from refpoly.errors import InputError
from refpoly.geometry import VRep

from _oracles import brute_lattice_points


def brute_idp(points, bound):
    """First (n, point) of nP not a sum of n lattice points, by direct
    enumeration of all multisets."""
    base = brute_lattice_points(points, 1)
    for n in range(2, bound + 1):
        sums = set()
        for combo in itertools.combinations_with_replacement(base, n):
            sums.add(tuple(map(sum, zip(*combo))))
        for x in sorted(brute_lattice_points(points, n)):
            if x not in sums:
                return n, x
    return None


REEVE = VRep(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)))


def test_reeve_tetrahedron_fails():
    rep = D.has_idp(REEVE)
    assert not rep.holds
    n, x = rep.witness
    assert (n, x) == brute_idp(REEVE.points, 2)
    assert D.verify_witness(REEVE, n, x)


def test_cube_has_idp():
    cube = VRep(3, tuple(itertools.product((0, 1), repeat=3)))
    rep = D.has_idp(cube)
    assert rep.holds and rep.witness is None and rep.checked_bound == 2


def test_report_invariant_and_dict():
    with pytest.raises(ValueError):
        D.IdpReport(True, 3, (2, (0,)))
    assert D.IdpReport(False, 3, (2, (1, 2))).to_dict() == {
        "holds": False, "checked_bound": 3, "witness": {"n": 2, "point": [1, 2]}
    }


def test_default_bound():
    assert D.default_idp_bound(3) == 2
    assert D.default_idp_bound(6) == 5


@st.composite
def small_polytopes(draw):
    d = draw(st.integers(2, 3))
    k = draw(st.integers(d + 1, d + 3))
    pts = draw(st.lists(st.tuples(*[st.integers(-1, 2)] * d), min_size=k, max_size=k, unique=True))
    assume(geo.affine_dimension(pts) == d)
    return VRep(d, tuple(pts))


@settings(max_examples=30, deadline=None)
@given(small_polytopes())
def test_idp_matches_multiset_enumeration(p):
    bound = 3
    rep = D.has_idp(p, bound)
    expected = brute_idp(p.points, bound)
    if expected is None:
        assert rep.holds
    else:
        assert rep.witness == expected


@settings(max_examples=30, deadline=None)
@given(small_polytopes())
def test_lattice_polygons_are_idp(p):
    assume(p.ambient_dim == 2)
    assert D.has_idp(p, 3).holds


def test_cycle5_verdicts():
    q = stable_set_polytope(G.cycle(5))
    assert D.has_idp(gamma(q, q)).holds
    rep = D.has_idp(omega(q, q))
    assert not rep.holds and rep.witness[0] == 3
    assert D.verify_witness(omega(q, q), *rep.witness)


@pytest.mark.parametrize("k", [5, 7])
def test_odd_hole_witness(k):
    g = G.cycle(k)
    n, x = D.odd_hole_witness(g, G.find_odd_hole(g))
    assert n == 3 and x == (1,) * k + (2,)
    p = omega(stable_set_polytope(g), stable_set_polytope(g))
    assert D.verify_witness(p, n, x)


def test_odd_antihole_witness():
    g = G.complement(G.cycle(7))
    anti = G.find_odd_antihole(g)
    n, x = D.odd_antihole_witness(g, anti)
    assert n == 4 and x == (1,) * 7 + (3,)
    q = stable_set_polytope(g)
    assert D.verify_witness(omega(q, q), n, x)


def test_hole_in_a_larger_graph():
    # C5 plus a pendant vertex: the hole coordinates are 1, others 0
    g = G.Graph.from_edges(6, list(G.cycle(5).edges) + [(5, 6)])
    n, x = D.odd_hole_witness(g, (1, 2, 3, 4, 5))
    assert (n, x) == (3, (1, 1, 1, 1, 1, 0, 2))
    q = stable_set_polytope(g)
    assert D.verify_witness(omega(q, q), n, x)


def test_witness_input_errors():
    with pytest.raises(InputError):
        D.odd_hole_witness(G.cycle(6), (1, 2, 3, 4, 5, 6))
    with pytest.raises(InputError):
        D.odd_hole_witness(G.complete(5), (1, 2, 3, 4, 5))
    q = stable_set_polytope(G.cycle(5))
    with pytest.raises(InputError):
        D.verify_witness(omega(q, q), 2, (5, 5, 5, 5, 5, 5))


def test_decomposable_point_is_not_a_witness():
    q = stable_set_polytope(G.cycle(5))
    assert not D.verify_witness(omega(q, q), 2, (0, 0, 0, 0, 0, 0))
