"""Exact desk-scale solvers for domination, independence domination and the
biclique vertex partition number, plus certificate checkers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import (
    Graph,
    GraphError,
    check_capacity,
    edge_vertex_label,
    iter_bits,
    subdivide,
    vertex_key,
)
from .structure import is_chordal

DOMINATION_MAX_VERTICES = 30
INDEPENDENCE_DOMINATION_MAX_VERTICES = 24
BP_MAX_VERTICES = 16


def _sorted_labels(vs: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(vs, key=vertex_key))


# -- domination -------------------------------------------------------------------


def _coverable(targets: int, closed: list[int], allowed: int, budget: int) -> bool:
    """Can ``budget`` vertices from ``allowed`` dominate ``targets``?"""
    if not targets:
        return True
    if budget == 0:
        return False
    low = targets & -targets
    t = low.bit_length() - 1
    # candidates: allowed vertices whose closed neighbourhood holds t
    cands = [a for a in iter_bits(allowed) if closed[a] & low]
    if not cands:
        return False
    max_gain = max((closed[a] & targets).bit_count() for a in iter_bits(allowed))
    if max_gain * budget < targets.bit_count():
        return False
    cands.sort(key=lambda a: -(closed[a] & targets).bit_count())
    return any(_coverable(targets & ~closed[a], closed, allowed, budget - 1) for a in cands)


def _min_dominating(targets: int, closed: list[int], allowed: int) -> tuple[int, list[int]]:
    """Minimum size and lexicographically least index set dominating ``targets``."""
    k = 0
    while not _coverable(targets, closed, allowed, k):
        k += 1
    chosen: list[int] = []
    rest = targets
    floor = 0
    for step in range(k):
        need = k - step - 1
        for a in iter_bits(allowed & ~((1 << floor) - 1)):
            later = allowed & ~((1 << (a + 1)) - 1)
            if _coverable(rest & ~closed[a], closed, later, need):
                chosen.append(a)
                rest &= ~closed[a]
                floor = a + 1
                break
    return k, chosen


def _closed_rows(g: Graph) -> list[int]:
    return [r | (1 << i) for i, r in enumerate(g.rows)]


def domination_number(g: Graph, targets: Iterable[str] | None = None) -> tuple[int, tuple[str, ...]]:
    """gamma(B, G): fewest closed neighbourhoods covering ``targets`` (default V)."""
    check_capacity(len(g), DOMINATION_MAX_VERTICES, "domination number")
    tmask = g.full_mask if targets is None else g.mask(targets)
    k, chosen = _min_dominating(tmask, _closed_rows(g), g.full_mask)
    return k, tuple(g.vertices[i] for i in chosen)


def maximal_independent_sets(g: Graph) -> list[int]:
    """Bron-Kerbosch with pivoting on the complement, as index bitmasks."""
    rows = g.rows
    full = g.full_mask
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (p & ~(rows[u] | (1 << u))).bit_count())
        # non-neighbours in the complement sense = neighbours in g plus itself
        for v in iter_bits(p & (rows[pivot] | (1 << pivot))):
            nonadj = full & ~rows[v] & ~(1 << v)
            expand(r | (1 << v), p & nonadj, x & nonadj)
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full, 0)
    return out


def independence_domination_number(g: Graph) -> tuple[int, tuple[str, ...]]:
    """gamma^i(G): max over independent I of gamma(I, G).

    gamma(I, G) only grows with I, so maximal independent sets suffice.  The
    witness is the lexicographically least maximising maximal independent set.
    """
    check_capacity(len(g), INDEPENDENCE_DOMINATION_MAX_VERTICES, "independence domination")
    if len(g) == 0:
        return 0, ()
    closed = _closed_rows(g)
    best, witness = -1, None
    candidates = sorted(maximal_independent_sets(g),
                        key=lambda m: [vertex_key(v) for v in g.labels(m)])
    for m in candidates:
        if best >= 0 and _coverable(m, closed, g.full_mask, best):
            continue
        k, _ = _min_dominating(m, closed, g.full_mask)
        if k > best:
            best, witness = k, m
    return best, g.labels(witness)


# -- bicliques ------------------------------------------------------------------


@dataclass(frozen=True)
class BicliqueBlock:
    left_part: tuple[str, ...]
    right_part: tuple[str, ...]

    @property
    def vertices(self) -> frozenset[str]:
        return frozenset(self.left_part) | frozenset(self.right_part)

    def to_json(self) -> dict:
        return {"left": list(self.left_part), "right": list(self.right_part)}


@dataclass(frozen=True)
class BicliquePartition:
    blocks: tuple[BicliqueBlock, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def to_json(self) -> list[dict]:
        return [b.to_json() for b in self.blocks]


def _split_mask(g: Graph, w: int) -> tuple[int, int] | None:
    """A (P, Q) split of ``w`` with every P-Q pair adjacent, or None.

    Such splits are unions of components of the complement of g[w]; P is
    the component holding the least vertex.
    """
    if w.bit_count() == 1:
        return w, 0
    rows = g.rows
    low = w & -w
    comp = low
    frontier = low
    while frontier:
        nxt = 0
        for i in iter_bits(frontier):
            nxt |= w & ~rows[i] & ~(1 << i)
        nxt &= ~comp
        comp |= nxt
        frontier = nxt
    if comp == w:
        return None
    return comp, w & ~comp


def is_biclique_set(g: Graph, vertices: Iterable[str]) -> BicliqueBlock | None:
    w = g.mask(vertices)
    if not w:
        raise GraphError("a biclique block needs at least one vertex")
    split = _split_mask(g, w)
    if split is None:
        return None
    return BicliqueBlock(g.labels(split[0]), g.labels(split[1]))


def biclique_masks(g: Graph, singletons: bool = True) -> list[int]:
    """Every vertex set carrying a biclique block (singletons optional)."""
    n = len(g)
    rows = g.rows
    if n <= BP_MAX_VERTICES:
        out = [w for w in range(1, 1 << n)
               if (w.bit_count() > 1 or singletons) and _split_mask(g, w) is not None]
        return out
    # sparse route for larger graphs: enumerate Q inside N(v), then P inside CN(Q)
    found: set[int] = {1 << i for i in range(n)} if singletons else set()
    for v in range(n):
        nbrs = list(iter_bits(rows[v]))
        for r in range(1, len(nbrs) + 1):
            for qs in combinations(nbrs, r):
                q = sum(1 << x for x in qs)
                common = g.full_mask
                for x in qs:
                    common &= rows[x]
                rest = common & ~(1 << v)
                sub = rest
                while True:
                    found.add(q | sub | (1 << v))
                    if not sub:
                        break
                    sub = (sub - 1) & rest
    return sorted(found)


def biclique_partition_number(g: Graph, singletons: bool = True,
                              max_vertices: int = BP_MAX_VERTICES) -> tuple[int, BicliquePartition]:
    """Minimum biclique vertex partition, by memoised search over uncovered sets.

    Each step covers the least uncovered vertex with a block, trying larger
    blocks first.  Singleton blocks are legal unless ``singletons=False``;
    an independent pair or larger is never a block.
    """
    check_capacity(len(g), max_vertices, "biclique partition number")
    if len(g) == 0:
        return 0, BicliquePartition(())
    by_low: dict[int, list[int]] = {}
    for w in biclique_masks(g, singletons):
        by_low.setdefault((w & -w).bit_length() - 1, []).append(w)
    for v, ws in by_low.items():
        ws.sort(key=lambda w: (-w.bit_count(), [vertex_key(x) for x in g.labels(w)]))
    memo: dict[int, tuple[float, int]] = {0: (0, 0)}
    inf = float("inf")

    def solve(rest: int) -> float:
        got = memo.get(rest)
        if got is not None:
            return got[0]
        v = (rest & -rest).bit_length() - 1
        best, pick = inf, 0
        for w in by_low.get(v, ()):
            if w & ~rest:
                continue
            if best <= 1:
                break
            sub = solve(rest & ~w) + 1
            if sub < best:
                best, pick = sub, w
        memo[rest] = (best, pick)
        return best

    size = solve(g.full_mask)
    if size == inf:
        raise ValueError("graph has no biclique partition without singleton blocks")
    blocks = []
    rest = g.full_mask
    while rest:
        w = memo[rest][1]
        p, q = _split_mask(g, w)
        blocks.append(BicliqueBlock(g.labels(p), g.labels(q)))
        rest &= ~w
    return int(size), BicliquePartition(tuple(blocks))


def check_biclique_partition(g: Graph, p: BicliquePartition, singletons: bool = True) -> tuple[bool, str]:
    seen: set[str] = set()
    for k, block in enumerate(p.blocks):
        left, right = set(block.left_part), set(block.right_part)
        if left & right:
            return False, f"block {k} has overlapping parts"
        for v in left | right:
            if v not in g:
                return False, f"block {k} uses unknown vertex {v!r}"
        if not left and not right:
            return False, f"block {k} is empty"
        if not left or not right:
            if len(left | right) != 1:
                return False, f"block {k} has an empty part but more than one vertex"
            if not singletons:
                return False, f"block {k} is a singleton"
        for a in left:
            for b in right:
                if not g.has_edge(a, b):
                    return False, f"block {k} misses edge {a}-{b}"
        if seen & (left | right):
            return False, f"block {k} overlaps an earlier block"
        seen |= left | right
    missing = set(g.vertices) - seen
    if missing:
        return False, f"uncovered vertices {sorted(missing, key=vertex_key)}"
    return True, "ok"


def verify_biclique_partition(g: Graph, p: BicliquePartition, singletons: bool = True) -> bool:
    return check_biclique_partition(g, p, singletons)[0]


def partition_from_dominating_set(g: Graph, dominators: Iterable[str]) -> BicliquePartition:
    """Refine the closed-neighbourhood stars of a dominating set into a partition.

    Each vertex joins the first dominator (label order) whose closed
    neighbourhood holds it; a dominator always joins its own star.
    """
    doms = _sorted_labels(dominators)
    owner: dict[str, str] = {d: d for d in doms}
    for v in g.vertices:
        if v in owner:
            continue
        for d in doms:
            if g.has_edge(d, v):
                owner[v] = d
                break
        else:
            raise GraphError(f"{v!r} is not dominated")
    blocks = []
    for d in doms:
        leaves = tuple(v for v in g.vertices if owner[v] == d and v != d)
        blocks.append(BicliqueBlock((d,), leaves))
    return BicliquePartition(tuple(blocks))


def min_biclique_cover(g: Graph) -> int:
    """Fewest biclique vertex sets covering V when blocks may overlap."""
    check_capacity(len(g), 12, "biclique cover")
    masks = biclique_masks(g)
    maximal = [w for w in masks if not any(w != o and w & o == w for o in masks)]
    k = 0
    while True:
        if _cover_within(g.full_mask, maximal, k):
            return k
        k += 1


def _cover_within(rest: int, sets: list[int], budget: int) -> bool:
    if not rest:
        return True
    if budget == 0:
        return False
    low = rest & -rest
    return any(_cover_within(rest & ~w, sets, budget - 1) for w in sets if w & low)


# -- co-chordal covers ------------------------------------------------------------


@dataclass(frozen=True)
class CochordalCover:
    subgraphs: tuple[tuple[tuple[str, str], ...], ...]

    def __len__(self) -> int:
        return len(self.subgraphs)


def cochordal_cover_for_subdivided_biclique(n: int, m: int) -> CochordalCover:
    """Cover of S(K_{n,m}) by n+m-1 co-chordal pieces.

    For each j: the star at y_j plus the edge from x_1*y_j to x_1.
    For each i >= 2: the star at x_i.  Labels follow ``families.complete_bipartite``
    and ``subdivide``.
    """
    if n < 1 or m < 1:
        raise GraphError("n and m must be positive")
    subs = []
    for j in range(1, m + 1):
        y = f"y{j}"
        piece = [(edge_vertex_label(f"x{i}", y), y) for i in range(1, n + 1)]
        piece.append(("x1", edge_vertex_label("x1", y)))
        subs.append(tuple(piece))
    for i in range(2, n + 1):
        x = f"x{i}"
        subs.append(tuple((x, edge_vertex_label(x, f"y{j}")) for j in range(1, m + 1)))
    return CochordalCover(tuple(subs))


def _piece_complement_chordal(g: Graph, piece) -> bool:
    touched = {v for e in piece for v in e}
    host = g.sub(g.mask(touched))
    full = host.full_mask
    comp = Graph(host.vertices, (full & ~r & ~(1 << i) for i, r in enumerate(host.rows)))
    return is_chordal(comp)


def check_cochordal_cover(g: Graph, c: CochordalCover) -> tuple[bool, str]:
    covered = set()
    for piece in c.subgraphs:
        for u, v in piece:
            if not g.has_edge(u, v):
                raise GraphError(f"unknown edge {u}-{v}")
            covered.add(frozenset((u, v)))
    missing = [e for e in g.edges() if frozenset(e) not in covered]
    if missing:
        return False, f"uncovered edges {missing}"
    for k, piece in enumerate(c.subgraphs):
        if not _piece_complement_chordal(g, piece):
            return False, f"piece {k} is not co-chordal"
    return True, "ok"


def verify_cochordal_cover(g: Graph, c: CochordalCover) -> bool:
    return check_cochordal_cover(g, c)[0]


def subdivided_biclique(n: int, m: int) -> Graph:
    from .families import complete_bipartite

    return subdivide(complete_bipartite(n, m)).graph
