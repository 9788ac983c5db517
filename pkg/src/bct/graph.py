"""Immutable simple graphs over string labels, backed by bitmask adjacency rows.

Every iteration order (vertices, neighbours, edges) follows :func:`vertex_key`,
so all downstream searches are deterministic.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

MAX_VERTICES = 64

_DIGITS = re.compile(r"(\d+)")


class CapacityError(ValueError):
    """Input exceeds the desk-scale bound of an exact routine."""


class GraphError(ValueError):
    """Malformed graph construction request."""


class NotBipartiteError(ValueError):
    def __init__(self, cycle: list[str]):
        super().__init__(f"graph is not bipartite; odd cycle {cycle}")
        self.cycle = cycle


def vertex_key(label: str):
    """Natural-order key: digit runs compare numerically (v2 < v10).

    The raw label is appended so that distinct labels never tie.
    """
    parts = tuple(int(p) if p.isdigit() else p for p in _DIGITS.split(label))
    return tuple((0, p) if isinstance(p, int) else (1, p) for p in parts), label


def edge_key(edge):
    u, v = edge
    return vertex_key(u), vertex_key(v)


def check_capacity(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise CapacityError(f"{what}: {n} exceeds the supported bound {limit}")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Finite simple graph; immutable after construction.

    Vertices are indexed ``0..n-1`` in label order and ``rows[i]`` is the
    adjacency bitmask of vertex ``i``.
    """

    __slots__ = ("vertices", "rows", "_index", "_hash")

    def __init__(self, vertices: Iterable[str], rows: Iterable[int]):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.rows: tuple[int, ...] = tuple(rows)
        check_capacity(len(self.vertices), MAX_VERTICES, "graph order")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._hash = None

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vertices, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"

    @property
    def full_mask(self) -> int:
        return (1 << len(self.vertices)) - 1

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def mask(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in iter_bits(mask))

    def edges(self) -> list[tuple[str, str]]:
        """All edges as label pairs ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for i, row in enumerate(self.rows):
            for j in iter_bits(row >> (i + 1)):
                out.append((self.vertices[i], self.vertices[i + 1 + j]))
        return out

    def edge_indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.rows) for j in iter_bits(row) if j > i]

    def has_edge(self, u: str, v: str) -> bool:
        return bool(self.rows[self.index(u)] >> self.index(v) & 1)

    def neighbors(self, v: str) -> tuple[str, ...]:
        return self.labels(self.rows[self.index(v)])

    def degree(self, v: str) -> int:
        return self.rows[self.index(v)].bit_count()

    def closed_mask(self, v: str) -> int:
        i = self.index(v)
        return self.rows[i] | (1 << i)

    def edge_closed_mask(self, u: str, v: str) -> int:
        if not self.has_edge(u, v):
            raise GraphError(f"unknown edge {u}-{v}")
        return self.closed_mask(u) | self.closed_mask(v)

    def isolated_mask(self, within: int | None = None) -> int:
        """Vertices of ``within`` (default: all) with no neighbour inside ``within``."""
        if within is None:
            within = self.full_mask
        out = 0
        for i in iter_bits(within):
            if not self.rows[i] & within:
                out |= 1 << i
        return out

    def max_degree(self) -> int:
        return max((r.bit_count() for r in self.rows), default=0)

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def component_masks(self, within: int | None = None) -> list[int]:
        if within is None:
            within = self.full_mask
        comps = []
        rest = within
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                for i in iter_bits(frontier):
                    nxt |= self.rows[i]
                nxt &= rest & ~comp
                comp |= nxt
                frontier = nxt
            comps.append(comp)
            rest &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.component_masks()) <= 1

    def sub(self, mask: int) -> Graph:
        """Induced subgraph on a vertex bitmask."""
        idx = list(iter_bits(mask))
        remap = {old: new for new, old in enumerate(idx)}
        rows = []
        for old in idx:
            r = 0
            for j in iter_bits(self.rows[old] & mask):
                r |= 1 << remap[j]
            rows.append(r)
        return Graph((self.vertices[i] for i in idx), rows)


def build_graph(vertex_labels: Iterable[str], edges: Iterable[Iterable[str]]) -> Graph:
    labels = list(vertex_labels)
    seen = set()
    for v in labels:
        if not isinstance(v, str) or not v or any(c.isspace() for c in v):
            raise GraphError(f"invalid vertex label {v!r}")
        if v in seen:
            raise GraphError(f"duplicate vertex label {v!r}")
        seen.add(v)
    order = sorted(labels, key=vertex_key)
    check_capacity(len(order), MAX_VERTICES, "graph order")
    index = {v: i for i, v in enumerate(order)}
    rows = [0] * len(order)
    for e in edges:
        pair = tuple(e)
        if len(pair) == 1 or (len(pair) == 2 and pair[0] == pair[1]):
            raise GraphError(f"loop edge at {pair[0]!r}")
        if len(pair) != 2:
            raise GraphError(f"edge must have two endpoints: {pair!r}")
        u, v = pair
        for x in (u, v):
            if x not in index:
                raise GraphError(f"edge {u}-{v} has unknown endpoint {x!r}")
        i, j = index[u], index[v]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(order, rows)


def empty_graph() -> Graph:
    return Graph((), ())


# -- bipartite structure ----------------------------------------------------

LEFT, RIGHT = "L", "R"


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    side: dict[str, str]

    def part(self, which: str) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if self.side[v] == which)

    @property
    def left(self) -> tuple[str, ...]:
        return self.part(LEFT)

    @property
    def right(self) -> tuple[str, ...]:
        return self.part(RIGHT)


def two_coloring(g: Graph, within: int | None = None) -> dict[int, int] | list[int]:
    """Colour classes 0/1 by BFS, seeding each component at its least vertex.

    Returns the colouring as ``{index: colour}``; on failure returns an odd
    cycle as a list of vertex indices.
    """
    if within is None:
        within = g.full_mask
    color: dict[int, int] = {}
    parent: dict[int, int] = {}
    for s in iter_bits(within):
        if s in color:
            continue
        color[s] = 0
        parent[s] = -1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.rows[u] & within):
                if w not in color:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    return _odd_cycle(parent, u, w)
    return color


def _odd_cycle(parent: dict[int, int], u: int, w: int) -> list[int]:
    def path(x):
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = path(u), path(w)
    common = set(pu) & set(pw)
    a = [x for x in pu if x not in common]
    b = [x for x in pw if x not in common]
    lca = next(x for x in pu if x in common)
    return a + [lca] + b[::-1]


def is_bipartite(g: Graph) -> bool:
    return isinstance(two_coloring(g), dict)


def bipartition(g: Graph) -> BipartiteGraph:
    """2-colour ``g``; the least-labelled vertex of every component goes Left."""
    color = two_coloring(g)
    if isinstance(color, list):
        raise NotBipartiteError([g.vertices[i] for i in color])
    side = {g.vertices[i]: (LEFT if c == 0 else RIGHT) for i, c in color.items()}
    return BipartiteGraph(g, side)


# -- derived graphs -------------------------------------------------------------


def induced_subgraph(g: Graph, vertices: Iterable[str]) -> Graph:
    return g.sub(g.mask(vertices))


def delete_vertices(g: Graph, vertices: Iterable[str]) -> Graph:
    return g.sub(g.full_mask & ~g.mask(vertices))


def delete_closed_neighborhood(g: Graph, target) -> Graph:
    """``g - N[target]`` where ``target`` is a vertex label or an edge pair."""
    if isinstance(target, str):
        closed = g.closed_mask(target)
    else:
        u, v = target
        closed = g.edge_closed_mask(u, v)
    return g.sub(g.full_mask & ~closed)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.vertices, (full & ~r & ~(1 << i) for i, r in enumerate(g.rows)))


def relabel(g: Graph, mapping: dict[str, str]) -> Graph:
    return build_graph((mapping.get(v, v) for v in g.vertices),
                       ((mapping.get(u, u), mapping.get(v, v)) for u, v in g.edges()))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Side-by-side union; labels get ``a:``/``b:`` prefixes only when they clash."""
    if set(g1.vertices) & set(g2.vertices):
        g1 = relabel(g1, {v: f"a:{v}" for v in g1.vertices})
        g2 = relabel(g2, {v: f"b:{v}" for v in g2.vertices})
    return build_graph(g1.vertices + g2.vertices, g1.edges() + g2.edges())


def whisker(g: Graph, attach: Iterable[str]) -> Graph:
    """Attach a pendant vertex ``a'`` to every ``a`` in ``attach``."""
    attach = sorted(set(attach), key=vertex_key)
    for a in attach:
        g.index(a)
    new = {a: a + "'" for a in attach}
    clash = set(new.values()) & set(g.vertices)
    if clash:
        raise GraphError(f"whisker labels already in use: {sorted(clash)}")
    return build_graph(g.vertices + tuple(new.values()),
                       g.edges() + [(a, new[a]) for a in attach])


class OriginalVertex(NamedTuple):
    vertex: str


class EdgeVertex(NamedTuple):
    u: str
    v: str


def edge_vertex_label(u: str, v: str) -> str:
    u, v = sorted((u, v), key=vertex_key)
    return f"{u}*{v}"


@dataclass(frozen=True)
class SubdivisionGraph:
    graph: Graph
    origin: dict[str, OriginalVertex | EdgeVertex]

    def original_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if isinstance(self.origin[v], OriginalVertex))

    def edge_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.graph.vertices if isinstance(self.origin[v], EdgeVertex))


def subdivide(g: Graph) -> SubdivisionGraph:
    """1-subdivision: each edge ``uv`` becomes the path ``u - u*v - v``."""
    origin: dict[str, OriginalVertex | EdgeVertex] = {v: OriginalVertex(v) for v in g.vertices}
    edges = []
    for u, v in g.edges():
        mid = edge_vertex_label(u, v)
        if mid in origin:
            raise GraphError(f"subdivision label {mid!r} collides with an existing vertex")
        origin[mid] = EdgeVertex(u, v)
        edges += [(u, mid), (mid, v)]
    return SubdivisionGraph(build_graph(list(origin), edges), origin)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test; fine for desk-scale graphs."""
    n = len(g1)
    if n != len(g2) or g1.num_edges != g2.num_edges:
        return False
    d1 = [r.bit_count() for r in g1.rows]
    d2 = [r.bit_count() for r in g2.rows]
    if sorted(d1) != sorted(d2):
        return False
    order = sorted(range(n), key=lambda i: -d1[i])
    image = [-1] * n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        u = order[k]
        for w in range(n):
            if used >> w & 1 or d2[w] != d1[u]:
                continue
            ok = True
            for prev in order[:k]:
                if (g1.rows[u] >> prev & 1) != (g2.rows[w] >> image[prev] & 1):
                    ok = False
                    break
            if ok:
                image[u] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
                image[u] = -1
        return False

    return extend(0)
