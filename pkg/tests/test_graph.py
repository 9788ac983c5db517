from __future__ import annotations

import pytest
from hypothesis import given, settings

from bct.corpus import enumerate_small_graphs
from bct.families import complete_bipartite, cycle, fig2, path
from bct.graph import (EdgeVertex, LEFT, OriginalVertex, CapacityError, GraphError,
                       NotBipartiteError, bipartition, build_graph, complement,
                       delete_closed_neighborhood, delete_vertices, disjoint_union, edge_vertex_label,
                       empty_graph, induced_subgraph, is_isomorphic, subdivide, whisker)
from helpers import brute_isomorphic, graphs


def test_build_graph_examples():
    k2 = build_graph(["a", "b"], [("a", "b")])
    assert len(k2) == 2 and k2.num_edges == 1
    one = build_graph(["a"], [])
    assert len(one) == 1 and one.num_edges == 0
    with pytest.raises(GraphError, match="loop"):
        build_graph(["a", "b", "c"], [("a", "b"), ("a", "a")])


@pytest.mark.parametrize("labels,edges,msg", [
    (["a", "a"], [], "duplicate"),
    (["a", "b"], [("a", "z")], "unknown endpoint"),
    (["a b"], [], "invalid vertex label"),
])
def test_build_graph_errors(labels, edges, msg):
    with pytest.raises(GraphError, match=msg):
        build_graph(labels, edges)


def test_vertex_order_is_natural():
    g = build_graph(["v10", "v2", "v1"], [])
    assert g.vertices == ("v1", "v2", "v10")


def test_capacity_limit():
    with pytest.raises(CapacityError):
        build_graph([f"v{i}" for i in range(65)], [])


def test_bipartition_examples():
    sides = bipartition(cycle(4))
    assert len(sides.left) == 2 and len(sides.right) == 2
    b = bipartition(fig2())
    assert set(b.left) == {"v1", "v3", "v5", "v7"}
    assert set(b.right) == {"v2", "v4", "v6", "v8"}
    assert b.side["v1"] == LEFT


def test_bipartition_odd_cycle_witness():
    g = cycle(5)
    with pytest.raises(NotBipartiteError) as info:
        bipartition(g)
    cyc = info.value.cycle
    assert len(cyc) == 5 and len(set(cyc)) == 5
    assert all(g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))


def test_induced_subgraph_examples():
    c6 = cycle(6)
    p = induced_subgraph(c6, ["c1", "c2", "c3", "c4"])
    assert is_isomorphic(p, path(4))
    assert len(induced_subgraph(c6, [])) == 0
    side = induced_subgraph(complete_bipartite(2, 3), ["y1", "y2", "y3"])
    assert len(side) == 3 and side.num_edges == 0
    with pytest.raises(GraphError):
        induced_subgraph(c6, ["nope"])


def test_delete_closed_neighborhood_examples():
    p4 = path(4)
    assert len(delete_closed_neighborhood(p4, ("p2", "p3"))) == 0
    assert delete_closed_neighborhood(p4, ("p1", "p2")).vertices == ("p4",)
    assert len(delete_closed_neighborhood(complete_bipartite(2, 3), ("x1", "y2"))) == 0
    with pytest.raises(GraphError):
        delete_closed_neighborhood(p4, ("p1", "p3"))
    with pytest.raises(GraphError):
        delete_closed_neighborhood(p4, "q")


def test_subdivide_examples():
    assert is_isomorphic(subdivide(path(2)).graph, path(3))
    assert is_isomorphic(subdivide(cycle(5)).graph, cycle(10))
    s = subdivide(complete_bipartite(2, 3))
    assert len(s.graph) == 11 and s.graph.num_edges == 12
    assert s.origin["x1*y2"] == EdgeVertex("x1", "y2")
    assert s.origin["x1"] == OriginalVertex("x1")
    assert edge_vertex_label("y2", "x1") == "x1*y2"


@given(graphs(max_n=7))
def test_subdivision_invariants(g):
    s = subdivide(g)
    h = s.graph
    assert len(h) == len(g) + g.num_edges
    assert h.num_edges == 2 * g.num_edges
    for v in s.edge_vertices():
        ev = s.origin[v]
        assert set(h.neighbors(v)) == {ev.u, ev.v}
    originals = set(s.original_vertices())
    for v in originals:
        assert not set(h.neighbors(v)) & originals


@pytest.mark.parametrize("k", range(3, 9))
def test_subdivided_cycle_is_double_cycle(k):
    assert is_isomorphic(subdivide(cycle(k)).graph, cycle(2 * k))


def test_whisker_examples():
    k2 = path(2)
    assert is_isomorphic(whisker(k2, ["p1", "p2"]), path(4))
    assert whisker(k2, []) == k2
    s = subdivide(complete_bipartite(1, 2)).graph
    w = whisker(s, ["y1", "y2"])
    assert len(w) == 7 and w.degree("y1'") == 1
    with pytest.raises(GraphError):
        whisker(k2, ["zz"])


@given(graphs(max_n=6))
def test_whisker_counts(g):
    attach = list(g.vertices[::2])
    w = whisker(g, attach)
    assert len(w) == len(g) + len(attach)
    assert w.num_edges == g.num_edges + len(attach)
    assert all(w.degree(a + "'") == 1 for a in attach)


def test_complement_examples():
    assert is_isomorphic(complement(path(4)), path(4))
    assert complement(build_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])).num_edges == 0


@given(graphs(max_n=7))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_disjoint_union_examples():
    u = disjoint_union(path(2), path(2))
    assert len(u) == 4 and u.num_edges == 2
    assert disjoint_union(cycle(4), empty_graph()) == cycle(4)
    bc4 = disjoint_union(fig2(), cycle(4))
    assert len(bc4) == 12 and bc4.num_edges == 14


@given(graphs(max_n=6), graphs(max_n=6))
@settings(max_examples=40)
def test_isomorphism_matches_brute_force(g, h):
    assert is_isomorphic(g, h) == brute_isomorphic(g, h)


def test_subdivision_minus_closed_neighbourhood():
    # S(G) - N[x] is S(G - x) for an original vertex x
    for g in enumerate_small_graphs(5):
        s = subdivide(g).graph
        for x in g.vertices:
            lhs = delete_closed_neighborhood(s, x)
            rhs = subdivide(delete_vertices(g, [x])).graph
            assert is_isomorphic(lhs, rhs), (g.edges(), x)
