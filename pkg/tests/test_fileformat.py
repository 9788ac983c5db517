from __future__ import annotations

import pytest
from hypothesis import given

from bct.families import complete_bipartite, fig2, path
from bct.fileformat import GraphFormatError, parse_graph_file, parse_graph_sides, write_graph_file
from bct.graph import subdivide
from helpers import graphs


def test_parse_k2():
    g = parse_graph_file("v a\nv b\ne a b")
    assert g.vertices == ("a", "b") and g.edges() == [("a", "b")]


def test_comments_blank_lines_and_sides():
    text = "# header\n\nv x L  # left\nv y R\ne y x\n"
    g, sides = parse_graph_sides(text)
    assert g.has_edge("x", "y") and sides == {"x": "L", "y": "R"}
    assert write_graph_file(g, sides) == "v x L\nv y R\ne x y\n"


def test_canonical_output():
    text = "v b\nv a\nv c\ne c b\ne b a\n"
    assert write_graph_file(parse_graph_file(text)) == "v a\nv b\nv c\ne a b\ne b c\n"


@pytest.mark.parametrize("text,line,msg", [
    ("e a b", 1, "unknown endpoint"),
    ("v a\nv a", 2, "duplicate vertex"),
    ("v a\nv b\ne a b\ne b a", 4, "duplicate edge"),
    ("v a\ne a a", 2, "loop"),
    ("v a\nx a", 2, "unknown record"),
    ("v a Q", 1, "side"),
    ("v a L\nv b L\ne a b", 3, "two L"),
    ("v", 1, "expected"),
])
def test_errors_carry_line_numbers(text, line, msg):
    with pytest.raises(GraphFormatError, match=msg) as info:
        parse_graph_file(text)
    assert info.value.line == line and f"line {line}" in str(info.value)


@given(graphs(max_n=8))
def test_round_trip(g):
    assert parse_graph_file(write_graph_file(g)) == g


def test_round_trip_special_labels():
    for g in [fig2(), subdivide(complete_bipartite(2, 3)).graph, path(12)]:
        assert parse_graph_file(write_graph_file(g)) == g
