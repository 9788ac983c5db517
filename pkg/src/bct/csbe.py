"""Biclique elimination sequences on bipartite graphs, the polynomial CSBE
search, homotopy certificates for Ind(S(B)) and the Gamma obstruction family."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import Graph, NotBipartiteError, check_capacity, iter_bits, two_coloring
from .structure import InducedMatching, bisimplicial_mask, find_long_claw, is_chordal_bipartite, is_induced_matching, simple_chain

SPHERE, CONTRACTIBLE, UNKNOWN = "sphere", "contractible", "unknown"


@dataclass(frozen=True)
class EliminationStep:
    edge: tuple[str, str]
    simple_endpoint: str | None
    closed_neighborhood: tuple[str, ...]
    isolated_created: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "edge": list(self.edge),
            "simple_endpoint": self.simple_endpoint,
            "closed_neighborhood": list(self.closed_neighborhood),
            "isolated_created": list(self.isolated_created),
        }


@dataclass(frozen=True)
class EliminationSequence:
    steps: tuple[EliminationStep, ...]
    residual_vertices: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return [s.edge for s in self.steps]

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps],
                "residual_vertices": list(self.residual_vertices)}


@dataclass(frozen=True)
class SequenceReport:
    is_biclique_elim: bool
    is_simple: bool
    is_complete: bool
    steps: EliminationSequence
    problems: tuple[str, ...] = ()
    edges_induced_matching: bool = True

    def to_json(self) -> dict:
        return {"is_biclique_elim": self.is_biclique_elim, "is_simple": self.is_simple,
                "is_complete": self.is_complete, "sequence": self.steps.to_json(),
                "edges_induced_matching": self.edges_induced_matching,
                "problems": list(self.problems)}


@dataclass(frozen=True)
class Refusal:
    """Graph state at which no admissible edge was left."""

    prefix: EliminationSequence
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def to_json(self) -> dict:
        return {"prefix": self.prefix.to_json(), "vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class CsbeOutcome:
    sequence: EliminationSequence | None
    refusal: Refusal | None


@dataclass(frozen=True)
class HomotopyReport:
    kind: str
    dimension: int | None = None
    evidence: dict = field(default_factory=dict)

    def __str__(self) -> str:
        if self.kind == SPHERE:
            return f"Sphere({self.dimension})"
        return self.kind.capitalize()

    def to_json(self) -> dict:
        return {"kind": self.kind, "dimension": self.dimension, "evidence": self.evidence}


def _require_bipartite(b: Graph) -> None:
    color = two_coloring(b)
    if isinstance(color, list):
        raise NotBipartiteError([b.vertices[i] for i in color])


def _edge_labels(b: Graph, i: int, j: int) -> tuple[str, str]:
    return b.vertices[i], b.vertices[j]


def _simple_endpoint(b: Graph, i: int, j: int, within: int) -> int | None:
    for x in (i, j):
        if simple_chain(b, x, within) is not None:
            return x
    return None


def _step(b: Graph, i: int, j: int, within: int, simple: int | None) -> tuple[EliminationStep, int]:
    closed = ((b.rows[i] | b.rows[j]) & within) | (1 << i) | (1 << j)
    rest = within & ~closed
    iso = b.isolated_mask(rest)
    step = EliminationStep(
        edge=_edge_labels(b, i, j),
        simple_endpoint=None if simple is None else b.vertices[simple],
        closed_neighborhood=b.labels(closed),
        isolated_created=b.labels(iso),
    )
    return step, rest


def isolated_after(b: Graph, e) -> tuple[str, ...]:
    """Iso_B(e): isolated vertices of B - N[e]."""
    u, v = e
    closed = b.edge_closed_mask(u, v)
    return b.labels(b.isolated_mask(b.full_mask & ~closed))


def _edges_within(b: Graph, within: int) -> list[tuple[int, int]]:
    return [(i, j) for i in iter_bits(within) for j in iter_bits(b.rows[i] & within) if j > i]


def validate_elimination_sequence(b: Graph, seq) -> SequenceReport:
    """Replay ``seq`` (edge pairs or an EliminationSequence) on ``b``; every failure becomes a report field."""
    if isinstance(seq, EliminationSequence):
        seq = seq.edges
    within = b.full_mask
    steps = []
    problems = []
    bisimplicial_ok = simple_ok = True
    for k, (u, v) in enumerate(seq):
        if u not in b or v not in b or not within >> b.index(u) & 1 or not within >> b.index(v) & 1 \
                or not b.has_edge(u, v):
            problems.append(f"step {k}: edge {u}-{v} not present at replay time")
            bisimplicial_ok = simple_ok = False
            break
        i, j = sorted((b.index(u), b.index(v)))
        if not bisimplicial_mask(b, i, j, within):
            problems.append(f"step {k}: edge {u}-{v} is not bisimplicial")
            bisimplicial_ok = False
        simple = _simple_endpoint(b, i, j, within)
        if simple is None:
            problems.append(f"step {k}: no simple endpoint on {u}-{v}")
            simple_ok = False
        step, within = _step(b, i, j, within, simple)
        steps.append(step)
    residual_edges = bool(_edges_within(b, within))
    if residual_edges:
        problems.append("residual graph still has edges")
    is_elim = bisimplicial_ok and not residual_edges and bool(steps)
    is_simple = is_elim and simple_ok
    no_iso = all(not s.isolated_created for s in steps)
    is_complete = is_elim and no_iso and within == 0
    matching = is_induced_matching(b, [s.edge for s in steps]) if steps else True
    if is_elim and not matching:
        problems.append("sequence edges do not form an induced matching")
    return SequenceReport(is_elim, is_simple, is_complete,
                          EliminationSequence(tuple(steps), b.labels(within)), tuple(problems), matching)


def _eliminate(b: Graph, forbid_isolated: bool) -> CsbeOutcome:
    within = b.full_mask
    steps: list[EliminationStep] = []
    while True:
        if forbid_isolated and not within:
            return CsbeOutcome(EliminationSequence(tuple(steps), ()), None)
        edges = _edges_within(b, within)
        if not forbid_isolated and not edges:
            return CsbeOutcome(EliminationSequence(tuple(steps), b.labels(within)), None)
        chosen = None
        for i, j in edges:
            if not bisimplicial_mask(b, i, j, within):
                continue
            simple = _simple_endpoint(b, i, j, within)
            if simple is None:
                continue
            step, rest = _step(b, i, j, within, simple)
            if forbid_isolated and step.isolated_created:
                continue
            chosen = (step, rest)
            break
        if chosen is None:
            prefix = EliminationSequence(tuple(steps), b.labels(within))
            state = Refusal(prefix, b.labels(within), tuple(_edge_labels(b, i, j) for i, j in edges))
            return CsbeOutcome(None, state)
        steps.append(chosen[0])
        within = chosen[1]


def run_csbe(b: Graph) -> CsbeOutcome:
    """Greedy CSBE search: repeatedly take the first admissible edge in label order.

    Admissible means bisimplicial, with a simple endpoint, and leaving no
    isolated vertex behind.  Succeeds exactly when the graph is empty at the end.
    """
    _require_bipartite(b)
    return _eliminate(b, forbid_isolated=True)


def find_csbe_sequence(b: Graph) -> EliminationSequence | None:
    return run_csbe(b).sequence


def find_simple_elimination(b: Graph) -> EliminationSequence | None:
    """Greedy simple biclique elimination without the isolated-vertex restriction."""
    _require_bipartite(b)
    return _eliminate(b, forbid_isolated=False).sequence


def homotopy_type_of_subdivision(b: Graph, oracle: bool = False) -> HomotopyReport:
    """Certified homotopy type of Ind(S(b)) for bipartite ``b``.

    Sphere(|B| - k - 1) from a complete sequence of length k; Contractible from
    an isolated vertex or an incomplete simple elimination; Unknown otherwise.
    With ``oracle=True`` an Unknown verdict carries the GF(2) Betti table.
    """
    _require_bipartite(b)
    if len(b) == 0:
        return HomotopyReport(SPHERE, -1, {"reason": "empty graph"})
    iso = b.isolated_mask()
    if iso:
        return HomotopyReport(CONTRACTIBLE, None, {"isolated_vertex": b.labels(iso)[0]})
    outcome = run_csbe(b)
    if outcome.sequence is not None:
        k = len(outcome.sequence)
        return HomotopyReport(SPHERE, len(b) - k - 1, {"csbe_sequence": outcome.sequence.to_json()})
    evidence = {"refusal": outcome.refusal.to_json()}
    partial = find_simple_elimination(b)
    if partial is not None:
        evidence["incomplete_simple_sequence"] = partial.to_json()
        return HomotopyReport(CONTRACTIBLE, None, evidence)
    if len(b) <= 24 and is_chordal_bipartite(b):
        evidence["chordal_bipartite"] = True
        return HomotopyReport(CONTRACTIBLE, None, evidence)
    if oracle:
        from .graph import CapacityError, subdivide
        from .topology import independence_complex, reduced_betti_numbers

        try:
            betti = reduced_betti_numbers(independence_complex(subdivide(b).graph))
            evidence["oracle_betti"] = {str(k): v for k, v in betti.nonzero().items()}
        except CapacityError as exc:
            evidence["oracle_skipped"] = str(exc)
    return HomotopyReport(UNKNOWN, None, evidence)


def simple_elimination_outcomes(b: Graph) -> set[tuple[int, bool]]:
    """(length, complete) for every simple biclique elimination sequence of ``b``.

    Exhaustive over all admissible choices, memoised on the remaining vertex set.
    """
    _require_bipartite(b)
    check_capacity(len(b), 16, "sequence enumeration")

    @lru_cache(maxsize=None)
    def outcomes(within: int) -> frozenset[tuple[int, bool]]:
        edges = _edges_within(b, within)
        if not edges:
            return frozenset({(0, within == 0)})
        found: set[tuple[int, bool]] = set()
        for i, j in edges:
            if not bisimplicial_mask(b, i, j, within) or _simple_endpoint(b, i, j, within) is None:
                continue
            closed = ((b.rows[i] | b.rows[j]) & within) | (1 << i) | (1 << j)
            rest = within & ~closed
            clean = not b.isolated_mask(rest)
            for length, complete in outcomes(rest):
                found.add((length + 1, complete and clean))
        return frozenset(found)

    return set(outcomes(b.full_mask))


# -- the Gamma family ------------------------------------------------------------


def _gamma_condition_iii(b: Graph, matching: list[tuple[int, int]]) -> bool:
    covered = 0
    for i, j in matching:
        covered |= (1 << i) | (1 << j)
    for v in iter_bits(b.full_mask & ~covered):
        hits = sum(1 for i, j in matching if b.rows[v] & ((1 << i) | (1 << j)))
        if hits < 2:
            return False
    return True


def gamma_membership(b: Graph) -> InducedMatching | None:
    """An induced matching M with (B, M) in Gamma, or None."""
    check_capacity(len(b), 20, "Gamma membership")
    n = len(b)
    if n == 0 or isinstance(two_coloring(b), list):
        return None
    if not b.is_connected() or b.min_degree() < 2:
        return None
    need = n // 3 + 1
    rows = b.rows
    edges = _edges_within(b, b.full_mask)

    def dfs(start: int, avail: int, chosen: list[tuple[int, int]]) -> list | None:
        if len(chosen) >= need and _gamma_condition_iii(b, chosen):
            return list(chosen)
        if len(chosen) + avail.bit_count() // 2 < need:
            return None
        for k in range(start, len(edges)):
            i, j = edges[k]
            if avail >> i & 1 and avail >> j & 1:
                chosen.append((i, j))
                got = dfs(k + 1, avail & ~(rows[i] | rows[j] | (1 << i) | (1 << j)), chosen)
                chosen.pop()
                if got:
                    return got
        return None

    found = dfs(0, b.full_mask, [])
    if found is None:
        return None
    return InducedMatching(tuple(_edge_labels(b, i, j) for i, j in found))


def find_gamma_subgraph(b: Graph, max_vertices: int = 14) -> tuple[str, ...] | None:
    """Vertex set of some induced subgraph of ``b`` lying in Gamma."""
    check_capacity(len(b), max_vertices, "Gamma subgraph search")
    for s in sorted(range(1, 1 << len(b)), key=lambda m: (m.bit_count(), m)):
        if s.bit_count() < 6:
            continue
        if gamma_membership(b.sub(s)) is not None:
            return b.labels(s)
    return None


def bp_via_csbe(b: Graph) -> int | None:
    """|E| for a CSBE-graph without an induced long claw (where it equals bp)."""
    _require_bipartite(b)
    seq = find_csbe_sequence(b)
    if seq is None or find_long_claw(b) is not None:
        return None
    return len(seq)


def sequence_partition(seq: EliminationSequence) -> list[tuple[str, ...]]:
    """The closed neighbourhoods removed by a sequence, in order."""
    return [s.closed_neighborhood for s in seq.steps]

