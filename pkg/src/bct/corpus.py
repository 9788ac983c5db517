"""Exhaustive and seeded random graph corpora."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

from .graph import Graph, build_graph, check_capacity, is_bipartite, iter_bits
from .structure import find_long_claw, is_chordal_bipartite

ENUMERATION_MAX_VERTICES = 8
HEREDITARY_MAX_VERTICES = 10
RANDOM_MAX_VERTICES = 24

ANY, CHORDAL_BIPARTITE, LONG_CLAW_FREE = "any", "chordal_bipartite", "long_claw_free"


# -- canonical forms ------------------------------------------------------------


def _refine(rows: list[int]) -> list[int]:
    """Stable colour refinement seeded by degree; colours are invariant ranks."""
    n = len(rows)
    colour = [r.bit_count() for r in rows]
    while True:
        sig = [(colour[i], tuple(sorted(colour[j] for j in iter_bits(rows[i])))) for i in range(n)]
        ranks = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _distinct_orders(items: list[int], cls: list[int]) -> Iterator[list[int]]:
    """Orderings of ``items`` up to swapping members of the same twin class."""
    groups: dict[int, list[int]] = {}
    for v in items:
        groups.setdefault(cls[v], []).append(v)
    counts = {k: len(vs) for k, vs in groups.items()}
    keys = sorted(groups)

    def rec(prefix: list[int]) -> Iterator[list[int]]:
        if len(prefix) == len(items):
            taken = {k: 0 for k in keys}
            out = []
            for k in prefix:
                out.append(groups[k][taken[k]])
                taken[k] += 1
            yield out
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])


def canonical_code(g: Graph) -> tuple[int, int]:
    """(order, minimum adjacency encoding) over colour-respecting relabellings.

    Refinement colours are isomorphism invariant, so minimising over every
    order that lists the colour classes in rank order is a canonical form.
    Twins (equal open or closed neighbourhoods) are interchangeable and only
    one arrangement of them is tried.
    """
    rows = list(g.rows)
    n = len(rows)
    colour = _refine(rows)
    twin: list[int] = []
    seen: dict[tuple[int, int, int], int] = {}
    for i in range(n):
        key_open = (colour[i], rows[i], 0)
        key_closed = (colour[i], rows[i] | (1 << i), 1)
        for key in (key_open, key_closed):
            if key in seen:
                twin.append(seen[key])
                break
        else:
            seen[key_open] = seen[key_closed] = i
            twin.append(i)
    cells = [[v for v in range(n) if colour[v] == c] for c in sorted(set(colour))]
    best = None
    for parts in product(*(list(_distinct_orders(c, twin)) for c in cells)):
        order = [v for p in parts for v in p]
        pos = [0] * n
        for k, v in enumerate(order):
            pos[v] = k
        code = 0
        for a in range(n):
            r = rows[order[a]]
            for b in range(a + 1, n):
                code = (code << 1) | (r >> order[b] & 1)
        if best is None or code < best:
            best = code
    return n, best or 0


def graph_from_code(n: int, code: int) -> Graph:
    labels = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    bit = n * (n - 1) // 2 - 1
    for a in range(n):
        for b in range(a + 1, n):
            if code >> bit & 1:
                edges.append((labels[a], labels[b]))
            bit -= 1
    return build_graph(labels, edges)


# -- exhaustive enumeration ---------------------------------------------------------


def _extend(g: Graph) -> Iterator[Graph]:
    n = len(g)
    for nb in range(1 << n):
        rows = list(g.rows) + [nb]
        for j in iter_bits(nb):
            rows[j] |= 1 << n
        yield Graph(tuple(g.vertices) + (f"v{n + 1}",), rows)


def graphs_by_order(max_vertices: int, hereditary: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """All graphs with at most ``max_vertices`` vertices up to isomorphism.

    Level k is grown from level k-1 by one vertex with every neighbourhood.
    With ``hereditary`` only graphs satisfying it are kept; this is complete
    whenever the property is closed under vertex deletion.
    """
    limit = HEREDITARY_MAX_VERTICES if hereditary else ENUMERATION_MAX_VERTICES
    check_capacity(max_vertices, limit, "small-graph enumeration")
    level = [Graph((), ())]
    yield level[0]
    for _ in range(max_vertices):
        codes: set[tuple[int, int]] = set()
        nxt = []
        for g in level:
            for h in _extend(g):
                if hereditary is not None and not hereditary(h):
                    continue
                c = canonical_code(h)
                if c not in codes:
                    codes.add(c)
                    nxt.append(graph_from_code(*c))
        nxt.sort(key=lambda h: canonical_code(h)[1])
        yield from nxt
        level = nxt


def enumerate_small_graphs(max_vertices: int, filter: Callable[[Graph], bool] | None = None,
                           hereditary: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Graphs on at most ``max_vertices`` vertices (empty graph included) passing ``filter``."""
    for g in graphs_by_order(max_vertices, hereditary):
        if filter is None or filter(g):
            yield g


def chordal_bipartite_corpus(max_vertices: int = 9) -> list[Graph]:
    return list(enumerate_small_graphs(max_vertices, hereditary=is_chordal_bipartite))


def is_connected_nonempty(g: Graph) -> bool:
    return len(g) > 0 and g.is_connected()


def isolate_free(g: Graph) -> bool:
    return len(g) > 0 and not g.isolated_mask()


# -- seeded random corpora ------------------------------------------------------------


@dataclass(frozen=True)
class RandomCorpusSpec:
    n_left: int
    n_right: int
    edge_budget: int
    count: int
    seed: int
    class_filter: str = CHORDAL_BIPARTITE


def _accept(g: Graph, class_filter: str) -> bool:
    if class_filter == ANY:
        return True
    if not is_chordal_bipartite(g):
        return False
    return class_filter != LONG_CLAW_FREE or find_long_claw(g) is None


def random_bipartite(spec: RandomCorpusSpec) -> list[Graph]:
    """Seeded incremental edge insertion between sides ``l*`` and ``r*``.

    Each instance draws an edge target in [1, edge_budget] and walks a shuffled
    list of cross pairs, keeping an edge only if the class filter still holds.
    """
    check_capacity(spec.n_left + spec.n_right, RANDOM_MAX_VERTICES, "random corpus")
    if spec.class_filter not in (ANY, CHORDAL_BIPARTITE, LONG_CLAW_FREE):
        raise ValueError(f"unknown class filter {spec.class_filter!r}")
    rng = random.Random(spec.seed)
    left = [f"l{i}" for i in range(1, spec.n_left + 1)]
    right = [f"r{j}" for j in range(1, spec.n_right + 1)]
    pairs = [(u, v) for u in left for v in right]
    out = []
    for _ in range(spec.count):
        target = rng.randint(1, max(1, min(spec.edge_budget, len(pairs))))
        order = pairs[:]
        rng.shuffle(order)
        edges: list[tuple[str, str]] = []
        for e in order:
            if len(edges) >= target:
                break
            candidate = build_graph(left + right, edges + [e])
            if _accept(candidate, spec.class_filter):
                edges.append(e)
        out.append(build_graph(left + right, edges))
    return out


def random_chordal_bipartite(spec: RandomCorpusSpec) -> list[Graph]:
    if spec.class_filter == ANY:
        spec = RandomCorpusSpec(spec.n_left, spec.n_right, spec.edge_budget, spec.count,
                                spec.seed, CHORDAL_BIPARTITE)
    return random_bipartite(spec)


__all__ = [
    "ANY", "CHORDAL_BIPARTITE", "LONG_CLAW_FREE", "RandomCorpusSpec", "canonical_code",
    "chordal_bipartite_corpus", "enumerate_small_graphs", "graph_from_code", "graphs_by_order",
    "is_bipartite", "is_connected_nonempty", "isolate_free", "random_bipartite",
    "random_chordal_bipartite",
]
