"""Relation-checking campaigns over exhaustive and seeded corpora.

Every campaign pairs a corpus with a pure per-graph check.  A check returns
None when the relation holds, or a dict of computed values otherwise; the
runner turns those into replayable violation records.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import families
from .corpus import (RandomCorpusSpec, chordal_bipartite_corpus, enumerate_small_graphs,
                     is_connected_nonempty, isolate_free, random_chordal_bipartite)
from .csbe import (bp_via_csbe, find_csbe_sequence, find_gamma_subgraph, gamma_membership,
                   homotopy_type_of_subdivision, simple_elimination_outcomes,
                   validate_elimination_sequence)
from .fileformat import parse_graph_file, write_graph_file
from .graph import CapacityError, Graph, check_capacity, is_bipartite, subdivide
from .invariants import (biclique_partition_number, cochordal_cover_for_subdivided_biclique,
                         domination_number, independence_domination_number,
                         subdivided_biclique, verify_cochordal_cover)
from .structure import find_long_claw, induced_matching_number
from .topology import csorba_check, independence_complex, reduced_betti_numbers, regularity

SCHEMA_VERSION = 1


@dataclass
class CampaignReport:
    campaign_id: str
    corpus_description: str
    instances_checked: int
    violations: list[dict]
    runtime: float
    capacity: str
    params: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "campaign_id": self.campaign_id,
            "corpus_description": self.corpus_description,
            "capacity": self.capacity,
            "params": self.params,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "passed": self.passed,
            "runtime": round(self.runtime, 3),
            "notes": self.notes,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.campaign_id} {status}: {self.instances_checked} instances, "
                f"{len(self.violations)} violations, {self.runtime:.2f}s "
                f"[{self.corpus_description}; capacity: {self.capacity}]")


@dataclass(frozen=True)
class Campaign:
    campaign_id: str
    relation: str
    capacity: str
    defaults: dict
    corpus: Callable[[dict], tuple[str, list[Graph]]]
    check: Callable[[Graph], dict | None]
    notes: tuple[str, ...] = ()
    max_n_limit: int | None = None


def _bp(g: Graph) -> int:
    return biclique_partition_number(g, max_vertices=max(16, len(g)))[0]


def _reg_sub(g: Graph) -> int:
    return regularity(subdivide(g).graph)


# -- per-graph checks (module level so worker processes can pickle them) ------------


def check_t1(g: Graph) -> dict | None:
    r, b = _reg_sub(g), _bp(g)
    return None if r >= len(g) - b else {"reg_S": r, "bp": b, "order": len(g)}


def check_t2(g: Graph) -> dict | None:
    gi = independence_domination_number(g)[0]
    b = _bp(g)
    gm = domination_number(g)[0]
    return None if gi <= b <= gm else {"gamma_i": gi, "bp": b, "gamma": gm}


def check_t3(g: Graph) -> dict | None:
    r, b = _reg_sub(g), _bp(g)
    return None if r == len(g) - b else {"reg_S": r, "bp": b, "order": len(g)}


def check_t4(g: Graph) -> dict | None:
    r = _reg_sub(g)
    gi = independence_domination_number(g)[0]
    return None if r <= len(g) - gi else {"reg_S": r, "gamma_i": gi, "order": len(g)}


def check_t5(g: Graph) -> dict | None:
    im = induced_matching_number(subdivide(g).graph)[0]
    gm = domination_number(g)[0]
    return None if im == len(g) - gm else {"im_S": im, "gamma": gm, "order": len(g)}


def _homology_agrees(g: Graph) -> dict | None:
    report = homotopy_type_of_subdivision(g)
    if report.kind == "unknown":
        return None
    betti = reduced_betti_numbers(independence_complex(subdivide(g).graph)).nonzero()
    expected = {report.dimension: 1} if report.kind == "sphere" else {}
    if betti != expected:
        return {"verdict": str(report), "betti": {str(k): v for k, v in betti.items()}}
    return None


def check_t6(g: Graph) -> dict | None:
    seq = find_csbe_sequence(g)
    outcomes = simple_elimination_outcomes(g)
    problems: dict = {}
    if seq is not None:
        if outcomes != {(len(seq), True)}:
            problems["outcomes"] = sorted(outcomes)
        rep = validate_elimination_sequence(g, seq.edges)
        if not (rep.is_complete and rep.is_simple and rep.edges_induced_matching):
            problems["replay"] = list(rep.problems)
        blocks = [set(s.closed_neighborhood) for s in seq.steps]
        if sum(len(b) for b in blocks) != len(g) or set().union(*blocks) != set(g.vertices):
            problems["partition"] = "closed neighbourhoods do not partition V"
    elif any(complete for _, complete in outcomes):
        problems["outcomes"] = sorted(outcomes)
    if len(g) + g.num_edges <= 18:
        bad = _homology_agrees(g)
        if bad:
            problems["homology"] = bad
        if seq is None and len(g):
            betti = reduced_betti_numbers(independence_complex(subdivide(g).graph))
            if len(betti.nonzero()) == 1 and sum(betti.nonzero().values()) == 1:
                problems["sphere_without_csbe"] = {str(k): v for k, v in betti.nonzero().items()}
    return problems or None


def check_t7(g: Graph) -> dict | None:
    problems: dict = {}
    witness = gamma_membership(g) if len(g) <= 20 else None
    seq = find_csbe_sequence(g)
    if witness is not None:
        if find_long_claw(g) is None:
            problems["long_claw"] = "Gamma member without an induced long claw"
        outside = len(g) - 2 * len(witness)
        if not (len(witness) > outside >= 2):
            problems["sizes"] = {"M": len(witness), "U": outside}
        if seq is not None:
            b = _bp(g)
            if not len(seq) > b:
                problems["csbe_vs_bp"] = {"csbe": len(seq), "bp": b}
    elif seq is not None and len(g) <= 14 and find_gamma_subgraph(g) is None:
        b = _bp(g)
        if len(seq) != b:
            problems["gamma_free"] = {"csbe": len(seq), "bp": b}
    claw_free = bp_via_csbe(g)
    if claw_free is not None and claw_free != _bp(g):
        problems["claw_free"] = {"csbe": claw_free, "bp": _bp(g)}
    return problems or None


def check_t8(g: Graph) -> dict | None:
    return None if csorba_check(g) else {"csorba": False}


def check_t9(g: Graph) -> dict | None:
    n = sum(1 for v in g.vertices if v.startswith("x"))
    m = len(g) - n
    s = subdivided_biclique(n, m)
    cover = cochordal_cover_for_subdivided_biclique(n, m)
    problems: dict = {}
    if len(cover) != n + m - 1 or not verify_cochordal_cover(s, cover):
        problems["cover"] = {"pieces": len(cover)}
    r = regularity(s)
    if r != n + m - 1:
        problems["reg_S"] = r
    betti = reduced_betti_numbers(independence_complex(s)).nonzero()
    if betti != {n + m - 2: 1}:
        problems["betti"] = {str(k): v for k, v in betti.items()}
    return problems or None


def check_t10(g: Graph) -> dict | None:
    n = sum(1 for v in g.vertices if v.startswith("x"))
    p = (len(g) - 1 - n) // n
    problems: dict = {}
    order = len(g)
    if order != (p + 1) * n + 1:
        problems["order"] = order
    b = _bp(g)
    gi = independence_domination_number(g)[0]
    gm = domination_number(g)[0]
    if not gi <= b <= gm:
        problems["sandwich"] = {"gamma_i": gi, "bp": b, "gamma": gm}
    if p == 10:
        if b != 4 * n:
            problems["bp"] = b
        # disjoint-union lower bound: n copies of S(C_10) plus S(K_{1,n})
        ring = regularity(subdivide(families.cycle(10)).graph)
        star = regularity(subdivide(families.star(n)).graph)
        if ring != 7 or star != n:
            problems["components"] = {"reg_S_C10": ring, "reg_S_star": star}
        if not order - b < n * ring + star:
            problems["gap"] = {"order_minus_bp": order - b, "union_reg": n * ring + star}
        im = induced_matching_number(subdivide(families.cycle(10)).graph)[0]
        if im != 10 - domination_number(families.cycle(10))[0]:
            problems["im_S_C10"] = im
    elif p == 4:
        if gm != 2 * n or b != n + 1:
            problems["R4"] = {"gamma": gm, "bp": b}
    return problems or None


# -- corpora ----------------------------------------------------------------------------


def _all_graphs(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    return f"all graphs on <= {n} vertices up to isomorphism", list(enumerate_small_graphs(n))


def _t1_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    small = list(enumerate_small_graphs(min(n, 4)))
    desc = f"all graphs on <= {min(n, 4)} vertices"
    if n >= 5:
        extra = [g for g in enumerate_small_graphs(5, is_connected_nonempty)
                 if len(g) == 5 and g.num_edges <= 6]
        small += extra
        desc += " plus connected 5-vertex graphs with <= 6 edges"
    return desc, small


def _t3_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    left, right = (n + 1) // 2, n // 2
    spec = RandomCorpusSpec(left, right, params["max_edges"], params["count"], params["seed"])
    return (f"{spec.count} seeded random chordal bipartite graphs, sides {left}+{right}, "
            f"<= {spec.edge_budget} edges, seed {spec.seed}"), random_chordal_bipartite(spec)


def _t5_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    return (f"isolate-free graphs on <= {n} vertices",
            list(enumerate_small_graphs(n, isolate_free)))


def _t6_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    graphs = [g for g in chordal_bipartite_corpus(n) if len(g)]
    return f"chordal bipartite graphs on <= {n} vertices up to isomorphism", graphs


def _t7_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    graphs = [g for g in enumerate_small_graphs(n, hereditary=is_bipartite) if len(g)]
    named = [families.gamma_example(i) for i in (1, 2, 3)]
    named += [families.b_p(p) for p in (3, 4, 5)] + [families.h_k(3)]
    return f"bipartite graphs on <= {n} vertices plus the named Gamma examples", graphs + named


def _t8_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    return (f"graphs on 1..{n} vertices",
            [g for g in enumerate_small_graphs(n) if len(g)])


def _t9_corpus(params: dict) -> tuple[str, list[Graph]]:
    n = params["max_n"]
    graphs = [families.complete_bipartite(a, b)
              for a in range(1, n) for b in range(1, n) if a + b <= n]
    return f"K_(n,m) with n + m <= {n}", graphs


def _t10_corpus(params: dict) -> tuple[str, list[Graph]]:
    graphs = [families.r_graph(10, 2)] + [families.r_graph(4, k) for k in (2, 3)]
    return "R^10_2 and R^4_n for n = 2, 3", graphs


CAMPAIGNS: dict[str, Campaign] = {c.campaign_id: c for c in [
    Campaign("T1", "reg(S(G)) >= |G| - bp(G)", "max_n <= 5 (|V|+|E| of S(G) <= 20)",
             {"max_n": 5}, _t1_corpus, check_t1, max_n_limit=5),
    Campaign("T2", "gamma_i(G) <= bp(G) <= gamma(G)", "max_n <= 8", {"max_n": 6},
             _all_graphs, check_t2, max_n_limit=8),
    Campaign("T3", "reg(S(B)) = |B| - bp(B) for chordal bipartite B",
             "|B| + |E| <= 14 (regularity scans 2^(|B|+|E|) subsets)",
             {"max_n": 6, "max_edges": 8, "count": 200, "seed": 1}, _t3_corpus, check_t3, max_n_limit=8),
    Campaign("T4", "reg(S(G)) <= |G| - gamma_i(G)", "max_n <= 5", {"max_n": 5},
             _all_graphs, check_t4, max_n_limit=5),
    Campaign("T5", "im(S(G)) = |G| - gamma(G) for isolate-free G", "max_n <= 7",
             {"max_n": 6}, _t5_corpus, check_t5, max_n_limit=7),
    Campaign("T6", "all simple biclique elimination sequences of a CSBE-graph are complete "
             "and equally long; Sphere iff CSBE", "max_n <= 10; homology when |B|+|E| <= 18",
             {"max_n": 9}, _t6_corpus, check_t6, max_n_limit=10),
    Campaign("T7", "Gamma members: long claw, |M| > |U| >= 2, CSBE length > bp; "
             "Gamma-free or claw-free CSBE length = bp", "max_n <= 9; Gamma-free test <= 14 vertices",
             {"max_n": 8}, _t7_corpus, check_t7, max_n_limit=9),
    Campaign("T8", "H~_i(Ind(S(G))) = H~_(i-1)(Ind(G) dual)", "|V| + |E| <= 20",
             {"max_n": 5}, _t8_corpus, check_t8, max_n_limit=6),
    Campaign("T9", "S(K_n,m): n+m-1 co-chordal pieces, reg = n+m-1, sphere of dim n+m-2",
             "n + m <= 6", {"max_n": 6}, _t9_corpus, check_t9, max_n_limit=6),
    Campaign("T10", "R^p_n sub-facts: bp(R^10_n) = 4n, |R|-bp = 7n+1 < 8n, "
             "gamma(R^4_n) = 2n, bp(R^4_n) = n+1", "n = 2 for p = 10",
             {}, _t10_corpus, check_t10,
             ("reg(S(R^10_n)) itself is not computed (111+ vertices); "
              "only the disjoint-union lower bound is checked",)),
]}

_CHECKS = {cid: c.check for cid, c in CAMPAIGNS.items()}


def _run_one(item: tuple[str, str]) -> tuple[str, dict | None]:
    cid, text = item
    g = parse_graph_file(text)
    try:
        return text, _CHECKS[cid](g)
    except CapacityError as exc:
        return text, {"capacity_error": str(exc)}


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("BCT_THREADS", "1")))
    except ValueError:
        return 1


def run_campaign(campaign_id: str, params: dict | None = None) -> CampaignReport:
    """Run one campaign; unknown ids raise KeyError."""
    try:
        campaign = CAMPAIGNS[campaign_id]
    except KeyError:
        raise KeyError(f"unknown campaign {campaign_id!r}; known: {sorted(CAMPAIGNS)}") from None
    merged = dict(campaign.defaults)
    merged.update({k: v for k, v in (params or {}).items() if v is not None and k in merged})
    if campaign.max_n_limit is not None:
        check_capacity(merged["max_n"], campaign.max_n_limit, f"campaign {campaign_id} max_n")
    start = time.perf_counter()
    desc, graphs = campaign.corpus(merged)
    items = [(campaign_id, write_graph_file(g)) for g in graphs]
    workers = worker_count()
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, items, chunksize=max(1, len(items) // (4 * workers))))
    else:
        results = [_run_one(it) for it in items]
    violations = [{"graph": text, "computed": bad, "expected": campaign.relation}
                  for text, bad in results if bad is not None]
    violations.sort(key=lambda v: v["graph"])
    return CampaignReport(campaign_id, desc, len(items), violations,
                          time.perf_counter() - start, campaign.capacity, merged,
                          list(campaign.notes))


def replay_violation(campaign_id: str, graph_text: str) -> dict | None:
    """Re-run a campaign's check on one graph given in the text format."""
    return _run_one((campaign_id, graph_text))[1]
