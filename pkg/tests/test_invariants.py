from __future__ import annotations

import pytest
from hypothesis import given, settings

from bct.corpus import enumerate_small_graphs
from bct.families import b_p, complete_bipartite, cycle, double_star, fig2, path, r_graph
from bct.graph import GraphError, build_graph, delete_vertices, disjoint_union, subdivide, CapacityError
from bct.invariants import (BicliqueBlock, BicliquePartition, CochordalCover,
                            biclique_partition_number, check_biclique_partition,
                            check_cochordal_cover, cochordal_cover_for_subdivided_biclique,
                            domination_number, independence_domination_number, is_biclique_set,
                            min_biclique_cover, partition_from_dominating_set,
                            subdivided_biclique, verify_biclique_partition, verify_cochordal_cover)
from helpers import graphs


def _dominates(g, chosen, targets=None):
    covered = set()
    for a in chosen:
        covered |= {a, *g.neighbors(a)}
    return set(targets if targets is not None else g.vertices) <= covered


@pytest.mark.parametrize("g,expected", [
    (cycle(4), 2), (fig2(), 3), (r_graph(4, 2), 4), (r_graph(4, 3), 6),
])
def test_domination_examples(g, expected):
    k, witness = domination_number(g)
    assert k == expected and len(witness) == k and _dominates(g, witness)


def test_domination_of_target_set():
    g = path(5)
    k, w = domination_number(g, ["p1", "p5"])
    assert k == 2 and _dominates(g, w, ["p1", "p5"])
    assert domination_number(g, [])[0] == 0


def test_domination_witness_is_lexicographically_least():
    k, w = domination_number(cycle(6))
    assert (k, w) == (2, ("c1", "c4"))


@pytest.mark.parametrize("g,expected", [
    (complete_bipartite(2, 3), 1), (complete_bipartite(3, 3), 1), (fig2(), 2),
    (disjoint_union(fig2(), cycle(4, prefix="q")), 3),
])
def test_independence_domination_examples(g, expected):
    k, ind = independence_domination_number(g)
    assert k == expected
    assert not any(g.has_edge(u, v) for u in ind for v in ind)
    assert domination_number(g, ind)[0] == k


def test_is_biclique_set_examples():
    g = b_p(4)
    assert is_biclique_set(g, ["a"]) == BicliqueBlock(("a",), ())
    assert is_biclique_set(g, ["c1", "c2"]) is None
    block = is_biclique_set(g, ["a", "b", "d1", "d2", "d3", "d4"])
    assert block == BicliqueBlock(("a",), ("b", "d1", "d2", "d3", "d4"))
    with pytest.raises(GraphError):
        is_biclique_set(g, [])


@pytest.mark.parametrize("g,expected", [
    (complete_bipartite(2, 3), 1), (fig2(), 3), (cycle(10), 4), (double_star(), 2),
    (b_p(3), 2), (b_p(4), 2), (disjoint_union(fig2(), cycle(4, prefix="q")), 4),
    (r_graph(4, 2), 3), (path(4), 2), (build_graph(["a", "b"], []), 2),
])
def test_bp_examples(g, expected):
    k, part = biclique_partition_number(g)
    assert k == expected and len(part) == k
    assert check_biclique_partition(g, part) == (True, "ok")


def test_bp_capacity():
    with pytest.raises(CapacityError):
        biclique_partition_number(cycle(18))


def test_bp_above_default_capacity_with_override():
    g = r_graph(10, 2)
    k, part = biclique_partition_number(g, max_vertices=24)
    assert k == 8 and verify_biclique_partition(g, part)


def test_bp_without_singletons():
    g = path(3)
    assert biclique_partition_number(g, singletons=False)[0] == 1
    with pytest.raises(ValueError):
        biclique_partition_number(build_graph(["a"], []), singletons=False)
    k, part = biclique_partition_number(path(5), singletons=False)
    assert k == 2 and verify_biclique_partition(path(5), part, singletons=False)


def test_verify_biclique_partition_examples():
    k22 = complete_bipartite(2, 2)
    assert verify_biclique_partition(k22, BicliquePartition((BicliqueBlock(("x1", "x2"), ("y1", "y2")),)))
    two_k2 = build_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    ok, reason = check_biclique_partition(two_k2, BicliquePartition((BicliqueBlock(("a", "c"), ("b", "d")),)))
    assert not ok and "misses edge" in reason
    g = b_p(3)
    part = BicliquePartition((BicliqueBlock(("a",), ("b", "d1", "d2", "d3")),
                              BicliqueBlock(("c1",), ())))
    ok, reason = check_biclique_partition(g, part)
    assert not ok and "uncovered" in reason
    # the size-2 partition of B_p: star at a over b and the d_i, plus the c_i with... an own star
    k, witness = biclique_partition_number(g)
    assert k == 2 and verify_biclique_partition(g, witness)


def test_partition_rejects_independent_pair_block():
    g = path(3)
    bad = BicliquePartition((BicliqueBlock(("p1", "p3"), ()), BicliqueBlock(("p2",), ())))
    ok, reason = check_biclique_partition(g, bad)
    assert not ok and "empty part" in reason


def test_bp_sandwich_exhaustive():
    # gamma_i <= bp <= gamma on every graph up to 8 vertices, with checked witnesses
    for g in enumerate_small_graphs(8):
        gi = independence_domination_number(g)[0]
        k, part = biclique_partition_number(g)
        gm, dom = domination_number(g)
        assert gi <= k <= gm, g.edges()
        assert verify_biclique_partition(g, part)
        if len(g):
            assert verify_biclique_partition(g, partition_from_dominating_set(g, dom))


def test_bp_monotone_under_dominated_deletion():
    # bp(G) <= bp(G - v) whenever N(u) - {v} is inside N(v) for some u != v.
    # An isolated u is excluded: {u, v} would be an independent pair, not a block.
    for g in enumerate_small_graphs(8):
        bp_g = biclique_partition_number(g)[0]
        cache = {}
        for u in g.vertices:
            if g.degree(u) == 0:
                continue
            nu = set(g.neighbors(u))
            for v in g.vertices:
                if u == v or not (nu - {v}) <= set(g.neighbors(v)):
                    continue
                if v not in cache:
                    cache[v] = biclique_partition_number(delete_vertices(g, [v]))[0]
                assert bp_g <= cache[v], (g.edges(), u, v)


def test_dominated_deletion_fails_for_isolated_vertex():
    g = build_graph(["a", "b"], [])
    assert biclique_partition_number(g)[0] == 2
    assert biclique_partition_number(delete_vertices(g, ["b"]))[0] == 1


def test_cover_equals_partition():
    for g in enumerate_small_graphs(7):
        if len(g):
            assert min_biclique_cover(g) == biclique_partition_number(g)[0], g.edges()


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=60)
def test_partition_from_dominating_set_is_valid(g):
    _, dom = domination_number(g)
    part = partition_from_dominating_set(g, dom)
    assert len(part) == len(dom) and verify_biclique_partition(g, part)


def test_partition_from_non_dominating_set():
    with pytest.raises(GraphError):
        partition_from_dominating_set(path(4), ["p1"])


@pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (1, 4), (3, 3), (2, 4), (1, 5)])
def test_cochordal_cover(n, m):
    cover = cochordal_cover_for_subdivided_biclique(n, m)
    assert len(cover) == n + m - 1
    assert verify_cochordal_cover(subdivided_biclique(n, m), cover)


def test_cochordal_cover_examples():
    p3 = subdivide(complete_bipartite(1, 1)).graph
    cover = cochordal_cover_for_subdivided_biclique(1, 1)
    assert len(cover) == 1 and len(cover.subgraphs[0]) == 2
    assert verify_cochordal_cover(p3, cover)
    c4 = cycle(4)
    ok, reason = check_cochordal_cover(c4, CochordalCover(((("c1", "c2"),), (("c3", "c4"),))))
    assert not ok and "uncovered" in reason
    # C_4 as one piece: its complement is 2K_2, chordal, so this one is fine
    assert verify_cochordal_cover(c4, CochordalCover((tuple(c4.edges()),)))
    # C_5 as one piece is not co-chordal
    assert not verify_cochordal_cover(cycle(5), CochordalCover((tuple(cycle(5).edges()),)))
    with pytest.raises(GraphError):
        check_cochordal_cover(c4, CochordalCover(((("c1", "c3"),),)))
    with pytest.raises(GraphError):
        cochordal_cover_for_subdivided_biclique(0, 2)
