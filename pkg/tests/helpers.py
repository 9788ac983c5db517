"""Shared strategies and brute-force oracles for the test suite."""

from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import strategies as st

from bct.graph import Graph, build_graph


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 6) -> Graph:
    n = draw(st.integers(min_n, max_n))
    labels = [f"v{i}" for i in range(1, n + 1)]
    pairs = list(combinations(labels, 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(labels, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw, max_side: int = 4) -> Graph:
    a = draw(st.integers(1, max_side))
    b = draw(st.integers(1, max_side))
    left = [f"l{i}" for i in range(1, a + 1)]
    right = [f"r{j}" for j in range(1, b + 1)]
    pairs = [(u, v) for u in left for v in right]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(left + right, [e for e, keep in zip(pairs, mask) if keep])


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if len(g) != len(h) or g.num_edges != h.num_edges:
        return False
    eg = {frozenset((g.index(u), g.index(v))) for u, v in g.edges()}
    eh = {frozenset((h.index(u), h.index(v))) for u, v in h.edges()}
    for perm in permutations(range(len(g))):
        if {frozenset(perm[i] for i in e) for e in eg} == eh:
            return True
    return False


def has_induced_cycle(g: Graph, min_length: int) -> bool:
    """Scan every vertex subset for a connected 2-regular induced subgraph."""
    n = len(g)
    for k in range(min_length, n + 1):
        for sub in combinations(range(n), k):
            mask = sum(1 << i for i in sub)
            h = g.sub(mask)
            if all(r.bit_count() == 2 for r in h.rows) and h.is_connected():
                return True
    return False


def brute_induced_matching(g: Graph) -> int:
    edges = g.edge_indices()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for sub in combinations(edges, k):
            verts = [v for e in sub for v in e]
            if len(set(verts)) != 2 * k:
                continue
            mask = sum(1 << v for v in verts)
            if sum((g.rows[v] & mask).bit_count() for v in verts) == 2 * k:
                found = True
                break
        if not found:
            break
        best = k
    return best
