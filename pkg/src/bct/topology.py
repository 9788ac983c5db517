"""Simplicial complexes, reduced GF(2) homology and the regularity /
projective-dimension oracles built on induced subcomplexes."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .graph import CapacityError, Graph, check_capacity, iter_bits, subdivide, vertex_key

REGULARITY_MAX_VERTICES = 20
PD_MAX_VERTICES = 16
DUAL_MAX_VERTICES = 20
MAX_FACES = 1 << 20


@dataclass(frozen=True)
class SimplicialComplex:
    """Downward-closed family of vertex sets.

    ``faces`` holds bitmasks over ``universe`` (label order).  No faces at all
    is the void complex; ``{0}`` (just the empty face) is the complex ``{∅}``.
    The universe may contain vertices that are not faces; this happens for
    Alexander duals and keeps the dual an involution.
    """

    universe: tuple[str, ...]
    faces: frozenset[int]

    @classmethod
    def from_facets(cls, universe: Iterable[str], facets: Iterable[Iterable[str]]) -> SimplicialComplex:
        universe = tuple(sorted(set(universe), key=vertex_key))
        index = {v: i for i, v in enumerate(universe)}
        faces: set[int] = set()
        for facet in facets:
            top = 0
            for v in facet:
                top |= 1 << index[v]
            if top in faces:
                continue
            sub = top
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & top
        return cls(universe, frozenset(faces))

    @classmethod
    def void(cls, universe: Iterable[str] = ()) -> SimplicialComplex:
        return cls(tuple(sorted(set(universe), key=vertex_key)), frozenset())

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def dimension(self) -> int | None:
        if not self.faces:
            return None
        return max(f.bit_count() for f in self.faces) - 1

    def label_faces(self) -> set[frozenset[str]]:
        return {frozenset(self.universe[i] for i in iter_bits(f)) for f in self.faces}

    def facets(self) -> list[tuple[str, ...]]:
        """Maximal faces as sorted label tuples, ordered by size then labels."""
        faces = self.faces
        out = []
        for f in faces:
            free = ((1 << len(self.universe)) - 1) & ~f
            if not any((f | (1 << i)) in faces for i in iter_bits(free)):
                out.append(tuple(self.universe[i] for i in iter_bits(f)))
        return sorted(out, key=lambda t: (len(t), [vertex_key(v) for v in t]))

    def __contains__(self, face) -> bool:
        index = {v: i for i, v in enumerate(self.universe)}
        m = 0
        for v in face:
            if v not in index:
                return False
            m |= 1 << index[v]
        return m in self.faces


@dataclass(frozen=True)
class BettiTable:
    """Reduced GF(2) Betti numbers; dimensions run from -1 to dim(X)."""

    betti: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, d: int) -> int:
        return self.betti.get(d, 0)

    def nonzero(self) -> dict[int, int]:
        return {d: b for d, b in sorted(self.betti.items()) if b}

    def is_zero(self) -> bool:
        return not self.nonzero()

    def is_sphere(self, d: int) -> bool:
        return self.nonzero() == {d: 1}

    def shifted_poly(self) -> dict[int, int]:
        """Coefficients of sum b_d t^(d+1); multiplicative under joins."""
        return {d + 1: b for d, b in self.nonzero().items()}

    def to_json(self) -> dict[str, int]:
        return {str(d): b for d, b in sorted(self.betti.items())}


def write_facets(x: SimplicialComplex) -> str:
    """One ``f <label> ...`` line per facet; ``{∅}`` is a bare ``f``, void is empty."""
    lines = [f"# universe {' '.join(x.universe)}"]
    lines += [" ".join(("f",) + facet) for facet in x.facets()]
    return "\n".join(lines) + "\n"


def parse_facets(text: str) -> SimplicialComplex:
    universe: list[str] = []
    facets: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("# universe"):
            universe = line.split()[2:]
        elif line.startswith("f"):
            parts = line.split()
            if parts[0] != "f":
                raise ValueError(f"bad facet line {raw!r}")
            facets.append(parts[1:])
    return SimplicialComplex.from_facets(universe + [v for f in facets for v in f], facets)


# -- construction -------------------------------------------------------------


def independent_set_masks(rows: tuple[int, ...] | list[int], within: int) -> list[int]:
    out = [0]

    def rec(cand: int, cur: int) -> None:
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            new = cur | low
            out.append(new)
            rec(cand & ~rows[i], new)

    rec(within, 0)
    return out


def independence_complex(g: Graph) -> SimplicialComplex:
    check_capacity(len(g), 24, "independence complex")
    return SimplicialComplex(g.vertices, frozenset(independent_set_masks(g.rows, g.full_mask)))


def _index_of(x: SimplicialComplex, labels: Iterable[str]) -> int:
    index = {v: i for i, v in enumerate(x.universe)}
    m = 0
    for v in labels:
        if v not in index:
            raise ValueError(f"unknown vertex {v!r}")
        m |= 1 << index[v]
    return m


def _restrict(faces: Iterable[int], mask: int) -> list[int]:
    return [f for f in faces if not f & ~mask]


def _compress(universe: tuple[str, ...], faces: Iterable[int], mask: int) -> SimplicialComplex:
    keep = list(iter_bits(mask))
    remap = {old: new for new, old in enumerate(keep)}
    out = set()
    for f in faces:
        m = 0
        for i in iter_bits(f):
            m |= 1 << remap[i]
        out.add(m)
    return SimplicialComplex(tuple(universe[i] for i in keep), frozenset(out))


def induced_subcomplex(x: SimplicialComplex, vertices: Iterable[str]) -> SimplicialComplex:
    mask = _index_of(x, vertices)
    return _compress(x.universe, _restrict(x.faces, mask), mask)


def _label_faces(x: SimplicialComplex) -> list[frozenset[str]]:
    return [frozenset(x.universe[i] for i in iter_bits(f)) for f in x.faces]


def join(x1: SimplicialComplex, x2: SimplicialComplex) -> SimplicialComplex:
    overlap = set(x1.universe) & set(x2.universe)
    if overlap:
        raise ValueError(f"join needs disjoint universes; shared {sorted(overlap)}")
    universe = tuple(sorted(x1.universe + x2.universe, key=vertex_key))
    index = {v: i for i, v in enumerate(universe)}

    def lift(x):
        return [sum(1 << index[x.universe[i]] for i in iter_bits(f)) for f in x.faces]

    f1, f2 = lift(x1), lift(x2)
    return SimplicialComplex(universe, frozenset(a | b for a in f1 for b in f2))


def _fresh(universe: tuple[str, ...], stem: str) -> str:
    k = 0
    while f"{stem}{k}" in universe:
        k += 1
    return f"{stem}{k}"


def suspension(x: SimplicialComplex) -> SimplicialComplex:
    a = _fresh(x.universe, "apex+")
    b = _fresh(x.universe + (a,), "apex-")
    sphere0 = SimplicialComplex.from_facets((a, b), [(a,), (b,)])
    return join(sphere0, x)


def alexander_dual(x: SimplicialComplex) -> SimplicialComplex:
    """Sets whose complement in the universe is not a face."""
    n = len(x.universe)
    check_capacity(n, DUAL_MAX_VERTICES, "Alexander dual")
    full = (1 << n) - 1
    faces = x.faces
    return SimplicialComplex(x.universe, frozenset(a for a in range(full + 1) if (full ^ a) not in faces))


# -- homology -------------------------------------------------------------------


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank over GF(2) of a matrix given as row bitmasks."""
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            top = row.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = row
                break
            row ^= p
    return len(pivots)


def betti_of_faces(faces: Iterable[int]) -> dict[int, int]:
    """Reduced Betti numbers of a face family (bitmasks, downward closed)."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    if not by_size:
        return {}
    top = max(by_size)
    index = {k: {f: i for i, f in enumerate(sorted(v))} for k, v in by_size.items()}
    ranks = {}
    for k in range(1, top + 1):
        lower = index.get(k - 1, {})
        rows = []
        for f in by_size.get(k, ()):
            row = 0
            for i in iter_bits(f):
                row |= 1 << lower[f ^ (1 << i)]
            rows.append(row)
        ranks[k] = gf2_rank(rows)
    out = {}
    for k in range(0, top + 1):
        # size k faces live in dimension k - 1
        out[k - 1] = len(by_size.get(k, ())) - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def reduced_betti_numbers(x: SimplicialComplex) -> BettiTable:
    if len(x.faces) > MAX_FACES:
        raise CapacityError(f"{len(x.faces)} faces exceeds {MAX_FACES}")
    return BettiTable(betti_of_faces(x.faces))


# -- regularity and projective dimension ----------------------------------------


def _no_isolated_masks(g: Graph) -> np.ndarray:
    """All vertex subsets S such that G[S] has no isolated vertex."""
    n = len(g)
    subsets = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for v, row in enumerate(g.rows):
        has_v = ((subsets >> v) & 1).astype(bool)
        ok &= ~has_v | ((subsets & row) != 0)
    return np.nonzero(ok)[0]


class _ComponentHomology:
    """Betti tables of Ind(G[C]) for connected vertex sets C, memoised by exact set."""

    def __init__(self, g: Graph):
        self.g = g
        self.memo: dict[int, dict[int, int]] = {}

    def poly(self, comp: int) -> dict[int, int]:
        got = self.memo.get(comp)
        if got is None:
            betti = betti_of_faces(independent_set_masks(self.g.rows, comp))
            got = {d + 1: b for d, b in betti.items() if b}
            self.memo[comp] = got
        return got

    def subset_poly(self, mask: int) -> dict[int, int]:
        """Shifted Betti polynomial of Ind(G[mask]) as the product over components."""
        acc = {0: 1}
        for comp in self.g.component_masks(mask):
            p = self.poly(comp)
            if not p:
                return {}
            nxt: dict[int, int] = {}
            for a, x in acc.items():
                for b, y in p.items():
                    nxt[a + b] = nxt.get(a + b, 0) + x * y
            acc = nxt
        return acc


def regularity(g: Graph, method: str = "components") -> int:
    """max j such that some induced subcomplex of Ind(g) has nonzero H~_{j-1}.

    ``method="direct"`` computes the homology of every Ind(g[S]) from its
    boundary matrices.  The default factors Ind(g[S]) over the connected
    components of g[S] (a join, so shifted Betti polynomials multiply) and
    skips S inducing an isolated vertex (a cone).  Both scan every S.
    """
    n = len(g)
    check_capacity(n, REGULARITY_MAX_VERTICES, "regularity")
    if method == "direct":
        best = 0
        faces = independent_set_masks(g.rows, g.full_mask)
        for s in range(1 << n):
            for d, b in betti_of_faces(_restrict(faces, s)).items():
                if b:
                    best = max(best, d + 1)
        return best
    if method != "components":
        raise ValueError(f"unknown method {method!r}")
    homology = _ComponentHomology(g)
    best = 0
    tops: dict[int, int | None] = {}
    for s in _no_isolated_masks(g).tolist():
        if not s:
            continue
        total = 0
        for comp in g.component_masks(s):
            top = tops.get(comp, -1)
            if top == -1:
                p = homology.poly(comp)
                top = max(p) if p else None
                tops[comp] = top
            if top is None:
                total = None
                break
            total += top
        if total is not None and total > best:
            best = total
    return best


def complex_regularity(x: SimplicialComplex) -> int:
    """Regularity of an arbitrary complex by the definitional subset scan."""
    n = len(x.universe)
    check_capacity(n, PD_MAX_VERTICES, "complex regularity")
    best = None
    for s in range(1 << n):
        for d, b in betti_of_faces(_restrict(x.faces, s)).items():
            if b and (best is None or d + 1 > best):
                best = d + 1
    return 0 if best is None else best


def projective_dimension(x: SimplicialComplex) -> int:
    """max over S and d with H~_d(X[S]) != 0 of |S| - d - 1 (0 if nothing is nonzero)."""
    n = len(x.universe)
    check_capacity(n, PD_MAX_VERTICES, "projective dimension")
    best = 0
    faces = list(x.faces)
    for s in range(1 << n):
        size = s.bit_count()
        for d, b in betti_of_faces(_restrict(faces, s)).items():
            if b:
                best = max(best, size - d - 1)
    return best


def csorba_check(g: Graph) -> bool:
    """Homology shadow of Ind(S(G)) ~ suspension of the Alexander dual of Ind(G)."""
    if len(g) == 0:
        raise ValueError("the suspension-of-dual comparison needs at least one vertex")
    check_capacity(len(g) + g.num_edges, 20, "suspension-of-dual check")
    lhs = reduced_betti_numbers(independence_complex(subdivide(g).graph)).nonzero()
    dual = reduced_betti_numbers(alexander_dual(independence_complex(g))).nonzero()
    return lhs == {d + 1: b for d, b in dual.items()}
