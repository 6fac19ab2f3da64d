import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from refpoly import graphs as G
from refpoly.errors import CapacityError, InputError

from _oracles import brute_chromatic, brute_clique, brute_perfect, brute_stable_sets


@st.composite
def graphs(draw, min_d=1, max_d=7):
    d = draw(st.integers(min_d, max_d))
    pairs = list(itertools.combinations(range(1, d + 1), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return G.Graph.from_edges(d, [p for p, keep in zip(pairs, mask) if keep])


def test_builders():
    assert G.cycle(5).num_edges == 5
    assert G.path(4).sorted_edges() == [(1, 2), (2, 3), (3, 4)]
    assert G.complete(4).num_edges == 6
    assert G.empty(3).num_edges == 0
    k = G.complete_multipartite((2, 2, 2))
    assert k.d == 6 and k.num_edges == 12
    assert not k.has_edge(1, 2) and not k.has_edge(5, 6) and k.has_edge(2, 3)


def test_cycle_too_short():
    with pytest.raises(InputError):
        G.cycle(2)


def test_edges_are_normalized_and_validated():
    g = G.Graph.from_edges(3, [(2, 1), (3, 2)])
    assert g.sorted_edges() == [(1, 2), (2, 3)]
    with pytest.raises((InputError, ValueError)):
        G.Graph.from_edges(3, [(1, 1)])
    with pytest.raises((InputError, ValueError)):
        G.Graph.from_edges(3, [(1, 4)])


def test_suspension_and_complement():
    g = G.path(3)
    s = G.suspension(g)
    assert s.d == 4
    assert all(s.has_edge(i, 4) for i in range(1, 4))
    assert G.complement(G.complement(g)) == g
    assert G.complement(G.complete(4)) == G.empty(4)


def test_induced_subgraph_relabels_in_order():
    g = G.cycle(5)
    h = G.induced_subgraph(g, [1, 2, 3])
    assert h == G.path(3)
    with pytest.raises(InputError):
        G.induced_subgraph(g, [])


def test_stable_sets_canonical_order():
    sets = G.stable_sets(G.path(3))
    assert sets[-1] == ()
    sizes = [len(s) for s in sets[:-1]]
    assert sizes == sorted(sizes, reverse=True)
    assert sets[0] == (1, 3)
    assert len(G.stable_sets(G.cycle(5))) == 11


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_stable_sets_match_brute_force(g):
    mine = {frozenset(s) for s in G.stable_sets(g)}
    assert mine == set(brute_stable_sets(g.d, g.edges))
    assert len(mine) == len(G.stable_sets(g))


@settings(max_examples=40, deadline=None)
@given(graphs(max_d=6))
def test_clique_and_chromatic_numbers(g):
    assert G.clique_number(g) == brute_clique(g.d, g.edges)
    assert G.chromatic_number(g) == brute_chromatic(g.d, g.edges)


def test_odd_hole_detection():
    assert G.find_odd_hole(G.cycle(5)) == (1, 2, 3, 4, 5)
    assert G.find_odd_hole(G.cycle(6)) is None
    assert G.find_odd_hole(G.cycle(4)) is None
    hole = G.find_odd_hole(G.cycle(7))
    assert len(hole) == 7 and G.is_induced_cycle(G.cycle(7), hole)
    anti = G.find_odd_antihole(G.complement(G.cycle(7)))
    assert anti is not None and len(anti) == 7


def test_triangle_is_not_a_hole():
    assert G.find_odd_hole(G.complete(3)) is None
    assert G.is_perfect_spgt(G.complete(3))


def test_perfectness_small_families():
    assert not G.is_perfect_spgt(G.cycle(5))
    assert not G.is_perfect_spgt(G.cycle(7))
    assert G.is_perfect_spgt(G.complete_multipartite((2, 2, 2)))
    assert not G.is_perfect_spgt(G.complement(G.cycle(7)))
    assert G.is_perfect_spgt(G.cycle(6))


@settings(max_examples=30, deadline=None)
@given(graphs(max_d=6))
def test_perfectness_routes_agree(g):
    spgt = G.is_perfect_spgt(g)
    assert spgt == G.is_perfect_definition(g)
    assert spgt == brute_perfect(g.d, g.edges)


def test_definition_capacity():
    with pytest.raises(CapacityError):
        G.is_perfect_definition(G.empty(11))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_nonisomorphic_counts(n, expected):
    assert sum(1 for _ in G.nonisomorphic_graphs(n)) == expected


def test_nonisomorphic_matches_networkx_atlas():
    atlas = {}
    for h in nx.graph_atlas_g()[1:]:
        n = h.number_of_nodes()
        if n > 6:
            continue
        mapping = {v: i + 1 for i, v in enumerate(h.nodes())}
        g = G.Graph.from_edges(n, [(mapping[a], mapping[b]) for a, b in h.edges()])
        atlas.setdefault(n, set()).add(G.canonical_form(g))
    for n in range(1, 7):
        mine = {G.canonical_form(g) for g in G.nonisomorphic_graphs(n)}
        assert mine == atlas[n]


@settings(max_examples=40, deadline=None)
@given(graphs(max_d=7), st.randoms(use_true_random=False))
def test_canonical_form_is_labelling_invariant(g, rnd):
    perm = list(range(1, g.d + 1))
    rnd.shuffle(perm)
    h = G.relabel(g, perm)
    assert G.canonical_form(g) == G.canonical_form(h)


@settings(max_examples=40, deadline=None)
@given(graphs(max_d=7), graphs(max_d=7))
def test_canonical_form_separates_classes(g, h):
    if g.d != h.d:
        return
    a = nx.Graph(list(g.edges)); a.add_nodes_from(range(1, g.d + 1))
    b = nx.Graph(list(h.edges)); b.add_nodes_from(range(1, h.d + 1))
    assert (G.canonical_form(g) == G.canonical_form(h)) == nx.is_isomorphic(a, b)


def test_edge_list_round_trip():
    g = G.cycle(5)
    text = G.format_edge_list(g)
    assert G.parse_edge_list(text) == g
    assert G.parse_edge_list("# comment\n3\n1 2  # edge\n\n2 3\n") == G.path(3)


@pytest.mark.parametrize("text", ["", "x\n", "3\n1\n", "3\n1 5\n", "3\n1 1\n"])
def test_edge_list_errors(text):
    with pytest.raises(InputError):
        G.parse_edge_list(text)


def test_graph6_known_strings():
    # strings produced by networkx / nauty conventions
    assert G.parse_graph6("Dhc") == G.cycle(5)
    assert G.to_graph6(G.cycle(5)) == "Dhc"
    assert G.parse_graph6(">>graph6<<A_") == G.complete(2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_d=7))
def test_graph6_round_trip_and_networkx(g):
    s = G.to_graph6(g)
    assert G.parse_graph6(s) == g
    h = nx.Graph(); h.add_nodes_from(range(g.d)); h.add_edges_from((i - 1, j - 1) for i, j in g.edges)
    assert nx.to_graph6_bytes(h, header=False).decode().strip() == s


@pytest.mark.parametrize("bad", ["", "~", "D", "D!!", "Dhc!"])
def test_graph6_errors(bad):
    with pytest.raises(InputError):
        G.parse_graph6(bad)
