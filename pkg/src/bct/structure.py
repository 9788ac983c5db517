"""Local structural predicates: simple vertices, bisimplicial edges,
chordality, long claws and induced matchings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, check_capacity, edge_key, iter_bits, two_coloring, vertex_key


@dataclass(frozen=True)
class SimpleVertexWitness:
    vertex: str
    neighbor_chain: tuple[str, ...]


@dataclass(frozen=True)
class InducedMatching:
    edges: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(v for e in self.edges for v in e)


def _norm_edge(g: Graph, e) -> tuple[str, str]:
    u, v = e
    if not g.has_edge(u, v):
        raise GraphError(f"unknown edge {u}-{v}")
    return tuple(sorted((u, v), key=vertex_key))


# -- simple vertices and bisimplicial edges -----------------------------------


def simple_chain(g: Graph, i: int, within: int | None = None) -> list[int] | None:
    """Neighbours of vertex index ``i`` ordered by neighbourhood inclusion, or None.

    Works inside the induced subgraph on ``within``.
    """
    if within is None:
        within = g.full_mask
    rows = g.rows
    nbrs = sorted(iter_bits(rows[i] & within),
                  key=lambda u: ((rows[u] & within).bit_count(), u))
    for a, b in zip(nbrs, nbrs[1:]):
        na, nb = rows[a] & within, rows[b] & within
        if na & ~nb:
            return None
    return nbrs


def is_simple_vertex(b: Graph, v: str) -> SimpleVertexWitness | None:
    chain = simple_chain(b, b.index(v))
    if chain is None:
        return None
    return SimpleVertexWitness(v, tuple(b.vertices[u] for u in chain))


def bisimplicial_mask(g: Graph, i: int, j: int, within: int | None = None) -> bool:
    """Whether ``N[ij]`` induces a complete bipartite graph (inside ``within``)."""
    if within is None:
        within = g.full_mask
    rows = g.rows
    closed = ((rows[i] | rows[j]) & within) | (1 << i) | (1 << j)
    color = two_coloring(g, closed)
    if isinstance(color, list):
        return False
    p = sum(1 for c in color.values() if c == 0)
    q = len(color) - p
    edges = sum((rows[u] & closed).bit_count() for u in iter_bits(closed)) // 2
    return edges == p * q


def is_bisimplicial_edge(b: Graph, e) -> bool:
    u, v = _norm_edge(b, e)
    return bisimplicial_mask(b, b.index(u), b.index(v))


# -- chordality -----------------------------------------------------------------


def is_chordal(g: Graph) -> bool:
    """Perfect elimination search: strip simplicial vertices until none remain."""
    rest = g.full_mask
    rows = g.rows
    while rest:
        for i in iter_bits(rest):
            nb = rows[i] & rest
            if all((rows[u] | (1 << u)) & nb == nb for u in iter_bits(nb)):
                rest &= ~(1 << i)
                break
        else:
            return False
    return True


def find_induced_cycle(g: Graph, min_length: int) -> list[str] | None:
    """Some induced cycle of length >= ``min_length``, by induced-path DFS.

    Each cycle is searched from its least vertex ``s``; paths only use
    vertices above ``s`` and must stay chordless.
    """
    rows = g.rows
    n = len(g)
    for s in range(n):
        above = g.full_mask & ~((1 << (s + 1)) - 1)
        path = [s]

        # blocked: path vertices plus neighbours of interior path vertices
        def dfs(blocked: int) -> list[int] | None:
            last = path[-1]
            step = blocked | (1 << last) | (rows[last] if last != s else 0)
            for v in iter_bits(rows[last] & above & ~blocked):
                if len(path) >= 2 and rows[v] >> s & 1:
                    if len(path) + 1 >= min_length:
                        return path + [v]
                    continue
                path.append(v)
                found = dfs(step)
                path.pop()
                if found:
                    return found
            return None

        found = dfs(1 << s)
        if found:
            return [g.vertices[i] for i in found]
    return None


def is_chordal_bipartite(b: Graph) -> bool:
    check_capacity(len(b), 24, "chordal bipartite recognition")
    if isinstance(two_coloring(b), list):
        return False
    return find_induced_cycle(b, 6) is None


# -- long claw --------------------------------------------------------------------


def find_long_claw(b: Graph) -> tuple[str, ...] | None:
    """Vertex set of an induced S_{2,2,2}, least by center then branches."""
    rows = b.rows
    for c in range(len(b)):
        nbrs = list(iter_bits(rows[c]))
        for trio in combinations(nbrs, 3):
            if any(rows[x] >> y & 1 for x, y in combinations(trio, 2)):
                continue
            core = (1 << c) | sum(1 << x for x in trio)
            # outer vertex for each branch: adjacent to its own arm only
            options = []
            for x in trio:
                opts = [y for y in iter_bits(rows[x] & ~core)
                        if (rows[y] & core) == (1 << x)]
                options.append(opts)
            found = _pick_outer(rows, options, [])
            if found:
                return tuple(b.vertices[i] for i in sorted((c, *trio, *found)))
    return None


def _pick_outer(rows, options, chosen):
    if len(chosen) == len(options):
        return chosen
    for y in options[len(chosen)]:
        if y in chosen or any(rows[y] >> z & 1 for z in chosen):
            continue
        got = _pick_outer(rows, options, chosen + [y])
        if got:
            return got
    return None


# -- induced matchings --------------------------------------------------------------


def is_induced_matching(g: Graph, edges) -> bool:
    norm = [_norm_edge(g, e) for e in edges]
    seen = 0
    masks = []
    for u, v in norm:
        m = g.mask((u, v))
        if seen & m:
            return False
        seen |= m
        masks.append(m)
    rows = g.rows
    for a, ma in enumerate(masks):
        reach = 0
        for i in iter_bits(ma):
            reach |= rows[i]
        for b, mb in enumerate(masks):
            if a != b and reach & mb:
                return False
    return True


def _max_induced_matching(g: Graph, avail: int, allowed: list[int], best_known: int = -1) -> int:
    """Size of a maximum induced matching using endpoints from ``avail``.

    ``allowed[i]`` masks the partners ``j`` such that edge ``ij`` may be used.
    Branches on the least usable vertex: unmatched, or matched to each partner.
    """
    rows = g.rows
    best = best_known

    def usable(av: int) -> int:
        out = 0
        for i in iter_bits(av):
            if allowed[i] & av:
                out |= 1 << i
        return out

    def rec(av: int, size: int) -> None:
        nonlocal best
        av = usable(av)
        if size + av.bit_count() // 2 <= best:
            return
        if not av:
            best = max(best, size)
            return
        low = av & -av
        u = low.bit_length() - 1
        for w in iter_bits(allowed[u] & av):
            rec(av & ~(rows[u] | rows[w] | (1 << u) | (1 << w)), size + 1)
        rec(av & ~low, size)

    rec(avail, 0)
    return max(best, 0)


def induced_matching_number(g: Graph) -> tuple[int, InducedMatching]:
    """Maximum induced matching; the witness is the lexicographically least maximum."""
    check_capacity(len(g), 30, "induced matching number")
    rows = g.rows
    size = _max_induced_matching(g, g.full_mask, list(rows))
    edges = sorted(g.edge_indices(), key=lambda e: edge_key((g.vertices[e[0]], g.vertices[e[1]])))
    rank = {e: k for k, e in enumerate(edges)}
    chosen: list[tuple[int, int]] = []
    avail = g.full_mask
    last = -1
    for _ in range(size):
        for k in range(last + 1, len(edges)):
            i, j = edges[k]
            if not (avail >> i & 1 and avail >> j & 1):
                continue
            nav = avail & ~(rows[i] | rows[j] | (1 << i) | (1 << j))
            allowed = [0] * len(g)
            for (a, b), r in rank.items():
                if r > k:
                    allowed[a] |= 1 << b
                    allowed[b] |= 1 << a
            need = size - len(chosen) - 1
            if need == 0 or _max_induced_matching(g, nav, allowed, need - 1) >= need:
                chosen.append((i, j))
                avail = nav
                last = k
                break
    witness = tuple((g.vertices[i], g.vertices[j]) for i, j in chosen)
    return size, InducedMatching(witness)
