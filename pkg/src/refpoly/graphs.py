"""Finite simple graphs on [d], stable sets, and perfect-graph tests.

Vertices are the integers 1..d.  Internally vertex ``i`` is bit ``i - 1`` of
a Python int, so a vertex subset is just a bitmask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, InputError

#: Largest vertex count accepted by :func:`is_perfect_definition`.
PERFECT_DEFINITION_MAX_D = 10


@dataclass(frozen=True)
class Graph:
    """Simple graph on the vertex set ``{1, ..., d}``.

    ``edges`` holds pairs ``(i, j)`` with ``i < j``.  Use :meth:`from_edges`
    to build one from an arbitrary iterable of unordered pairs.
    """

    d: int
    edges: frozenset

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 1:
            raise InputError(f"vertex count must be a positive integer, got {self.d!r}")
        for e in self.edges:
            if len(e) != 2:
                raise InputError(f"edge {e!r} is not a pair")
            i, j = e
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if not i < j:
                raise InputError(f"edge {e!r} must be stored as (i, j) with i < j")
            if i < 1 or j > self.d:
                raise InputError(f"edge {e!r} has an endpoint outside [1, {self.d}]")

    @classmethod
    def from_edges(cls, d: int, edges: Iterable[Sequence[int]]) -> "Graph":
        normalized = set()
        for e in edges:
            i, j = (int(v) for v in e)
            if i == j:
                raise InputError(f"loop at vertex {i}")
            normalized.add((min(i, j), max(i, j)))
        return cls(d, frozenset(normalized))

    @cached_property
    def adjacency(self) -> tuple:
        """Neighbourhood bitmask of each vertex, indexed 0..d-1."""
        adj = [0] * self.d
        for i, j in self.edges:
            adj[i - 1] |= 1 << (j - 1)
            adj[j - 1] |= 1 << (i - 1)
        return tuple(adj)

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edges or (j, i) in self.edges

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __repr__(self) -> str:
        return f"Graph(d={self.d}, edges={self.sorted_edges()})"


def mask_to_set(mask: int) -> tuple:
    """Bitmask to the sorted tuple of 1-based vertices it contains."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def set_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


# ---------------------------------------------------------------------------
# builders


def empty(n: int) -> Graph:
    if n < 1:
        raise InputError("empty graph needs n >= 1")
    return Graph(n, frozenset())


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def path(n: int) -> Graph:
    """Path 1 - 2 - ... - n."""
    if n < 1:
        raise InputError("path needs n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle(n: int) -> Graph:
    """Cycle with edges {i, i+1} and {1, n}."""
    if n < 3:
        raise InputError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with parts as consecutive blocks.

    ``complete_multipartite((2, 2, 2))`` has parts {1,2}, {3,4}, {5,6}.
    """
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise InputError(f"part sizes must be positive, got {sizes}")
    part_of = []
    for k, s in enumerate(sizes):
        part_of.extend([k] * s)
    n = len(part_of)
    edges = [
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(n), 2)
        if part_of[i] != part_of[j]
    ]
    return Graph(n, frozenset(edges))


# ---------------------------------------------------------------------------
# basic operations


def complement(g: Graph) -> Graph:
    all_pairs = itertools.combinations(range(1, g.d + 1), 2)
    return Graph(g.d, frozenset(e for e in all_pairs if e not in g.edges))


def induced_subgraph(g: Graph, w: Iterable[int]) -> Graph:
    """Subgraph induced on ``w``, relabelled 1..|w| in increasing order."""
    members = sorted(set(w))
    if not members:
        raise InputError("induced subgraph needs a nonempty vertex set")
    if members[0] < 1 or members[-1] > g.d:
        raise InputError(f"vertex set {members} is not contained in [1, {g.d}]")
    relabel = {v: k + 1 for k, v in enumerate(members)}
    edges = [
        (relabel[i], relabel[j])
        for i, j in g.edges
        if i in relabel and j in relabel
    ]
    return Graph(len(members), frozenset(edges))


def suspension(g: Graph) -> Graph:
    """Add vertex d+1 adjacent to every vertex of g."""
    extra = {(i, g.d + 1) for i in range(1, g.d + 1)}
    return Graph(g.d + 1, frozenset(g.edges | extra))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the vertex map ``v -> perm[v - 1]``."""
    return Graph.from_edges(g.d, [(perm[i - 1], perm[j - 1]) for i, j in g.edges])


# ---------------------------------------------------------------------------
# stable sets


def _stable_masks(adj: Sequence[int]) -> list:
    """Every stable subset of the vertex set, as bitmasks."""
    d = len(adj)
    out = [0]
    for v in range(d):
        bit = 1 << v
        out += [m | bit for m in out if not (adj[v] & m)]
    return out


def _canonical_key(mask: int):
    members = mask_to_set(mask)
    return (-len(members), members)


def stable_set_masks(g: Graph) -> list:
    """Stable sets of g as bitmasks in the canonical variable order.

    Order: decreasing cardinality, ties broken lexicographically on the sorted
    member tuples; the empty set therefore comes last.
    """
    return sorted(_stable_masks(g.adjacency), key=_canonical_key)


def stable_sets(g: Graph) -> list:
    """Stable sets of g as sorted vertex tuples, in canonical order."""
    return [mask_to_set(m) for m in stable_set_masks(g)]


def is_stable(g: Graph, w: Iterable[int]) -> bool:
    mask = set_to_mask(w)
    return all(not (g.adjacency[v - 1] & mask) for v in mask_to_set(mask))


# ---------------------------------------------------------------------------
# clique and chromatic numbers


def _clique_table(adj: Sequence[int]) -> list:
    """omega(G[S]) for every subset S, by the recursion on the lowest vertex."""
    n = len(adj)
    table = [0] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        table[s] = max(table[rest], 1 + table[rest & adj[v]])
    return table


def _chromatic_table(adj: Sequence[int]) -> list:
    """chi(G[S]) for every subset S.

    chi(S) = 1 + min chi(S \\ T) over stable T containing the lowest vertex
    of S.  Exhaustive, O(3^n).
    """
    n = len(adj)
    full = 1 << n
    stable = bytearray(full)
    stable[0] = 1
    for s in range(1, full):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        stable[s] = stable[rest] and not (adj[v] & rest)
    chi = [0] * full
    for s in range(1, full):
        low = s & -s
        rest = s ^ low
        best = n + 1
        sub = rest
        while True:
            t = sub | low
            if stable[t]:
                c = chi[s ^ t]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        chi[s] = best + 1
    return chi


def clique_number(g: Graph) -> int:
    """Largest clique size, computed as the largest stable set of the complement."""
    cadj = complement(g).adjacency
    return max(bin(m).count("1") for m in _stable_masks(cadj))


def chromatic_number(g: Graph) -> int:
    return _chromatic_table(g.adjacency)[(1 << g.d) - 1]


def is_perfect_definition(g: Graph, max_d: int = PERFECT_DEFINITION_MAX_D) -> bool:
    """chi(H) == omega(H) for every induced subgraph H (including g)."""
    if g.d > max_d:
        raise CapacityError(
            f"perfectness by definition is capped at d <= {max_d}; got d = {g.d}"
        )
    chi = _chromatic_table(g.adjacency)
    omega = _clique_table(g.adjacency)
    return all(chi[s] == omega[s] for s in range(1, 1 << g.d))


# ---------------------------------------------------------------------------
# odd holes and antiholes


def find_odd_hole(g: Graph):
    """First induced odd cycle of length >= 5, or None.

    DFS over chordless paths starting at their smallest vertex, extending
    through neighbours in increasing order.  The result lists the cycle's
    vertices in traversal order, starting from the smallest.
    """
    adj = g.adjacency
    d = g.d

    def extend(path_vs: list, interior_mask: int):
        start = path_vs[0]
        last = path_vs[-1]
        nbrs = adj[last - 1]
        for v in range(start + 1, d + 1):
            bit = 1 << (v - 1)
            if not (nbrs & bit) or v in path_vs:
                continue
            if adj[v - 1] & interior_mask:
                continue
            if adj[v - 1] & (1 << (start - 1)):
                # v closes a chordless cycle through start; extending further
                # would leave the chord {start, v}.
                length = len(path_vs) + 1
                if length >= 5 and length % 2 == 1:
                    return path_vs + [v]
                continue
            found = extend(path_vs + [v], interior_mask | (1 << (last - 1)))
            if found:
                return found
        return None

    for s in range(1, d + 1):
        for u in range(s + 1, d + 1):
            if not g.has_edge(s, u):
                continue
            found = extend([s, u], 0)
            if found:
                return tuple(found)
    return None


def find_odd_antihole(g: Graph):
    """Vertices of an odd hole of the complement, or None."""
    return find_odd_hole(complement(g))


def is_perfect_spgt(g: Graph) -> bool:
    """Perfectness via the strong perfect graph theorem."""
    return find_odd_hole(g) is None and find_odd_antihole(g) is None


def is_induced_cycle(g: Graph, vertices: Sequence[int]) -> bool:
    """True if ``vertices`` (in order) is a chordless cycle of g."""
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        return False
    if any(v < 1 or v > g.d for v in vertices):
        return False
    for a in range(k):
        for b in range(a + 1, k):
            consecutive = b == a + 1 or (a == 0 and b == k - 1)
            if g.has_edge(vertices[a], vertices[b]) != consecutive:
                return False
    return True


# ---------------------------------------------------------------------------
# isomorphism classes (small graphs only)


def _edge_mask(d: int, edges: Iterable) -> int:
    index = {}
    k = 0
    for i in range(1, d + 1):
        for j in range(i + 1, d + 1):
            index[(i, j)] = k
            k += 1
    mask = 0
    for e in edges:
        mask |= 1 << index[e]
    return mask


def canonical_form(g: Graph) -> tuple:
    """Labelling-invariant key: the largest edge bitmask over relabellings.

    Only relabellings that sort vertices by (degree, sorted neighbour degrees)
    are tried, so the search stays small for the graph sizes used here.
    """
    d = g.d
    deg = [bin(a).count("1") for a in g.adjacency]
    sig = [
        (deg[v], tuple(sorted(deg[u] for u in range(d) if g.adjacency[v] >> u & 1)))
        for v in range(d)
    ]
    classes = {}
    for v in range(d):
        classes.setdefault(sig[v], []).append(v)
    ordered = sorted(classes)
    best = -1
    for combo in itertools.product(*(itertools.permutations(classes[k]) for k in ordered)):
        order = [v for block in combo for v in block]
        perm = [0] * d
        for new, old in enumerate(order):
            perm[old] = new + 1
        edges = {
            (min(perm[i - 1], perm[j - 1]), max(perm[i - 1], perm[j - 1]))
            for i, j in g.edges
        }
        m = _edge_mask(d, edges)
        if m > best:
            best = m
    return (d, tuple(sorted(ordered)), best)


def nonisomorphic_graphs(n: int) -> Iterator[Graph]:
    """All graphs on exactly n vertices up to isomorphism.

    Built by attaching vertex n to every neighbour subset of each class
    representative on n - 1 vertices, deduplicated by :func:`canonical_form`.
    """
    if n < 1:
        return
    if n == 1:
        yield empty(1)
        return
    seen = set()
    for base in nonisomorphic_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            new_edges = set(base.edges)
            new_edges.update((i, n) for i in mask_to_set(nbrs))
            g = Graph(n, frozenset(new_edges))
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                yield g


# ---------------------------------------------------------------------------
# text formats


def parse_edge_list(text: str) -> Graph:
    """Parse ``d`` on the first line, then one ``i j`` pair per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InputError("edge list is empty")
    try:
        d = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise InputError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        raise InputError(f"cannot parse edge list: {exc}") from exc
    g = Graph.from_edges(d, edges)
    if len(g.edges) != len(edges):
        raise InputError("edge list contains a repeated edge")
    return g


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.d)] + [f"{i} {j}" for i, j in g.sorted_edges()]) + "\n"


def _graph6_size(data: bytes):
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise InputError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, data[8:]
    if len(data) < 4:
        raise InputError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, data[4:]


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header allowed)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise InputError("empty graph6 string")
    data = s.encode("ascii")
    if any(b < 63 or b > 126 for b in data):
        raise InputError(f"invalid graph6 character in {s!r}")
    n, body = _graph6_size(data)
    if n < 1:
        raise InputError("graph6 graph has no vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise InputError(f"graph6 body has {len(body)} bytes, expected {need}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph(n, frozenset(edges))


def to_graph6(g: Graph) -> str:
    n = g.d
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [
        1 if (i + 1, j + 1) in g.edges else 0
        for j in range(1, n)
        for i in range(j)
    ]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(bits[k + t] << (5 - t) for t in range(6))
        for k in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")
