"""Line-oriented text format for graphs.

    # comment
    v <label> [L|R]
    e <label> <label>
"""

from __future__ import annotations

from .graph import LEFT, RIGHT, Graph, GraphError, build_graph, edge_key, vertex_key


class GraphFormatError(GraphError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


def parse_graph_sides(text: str) -> tuple[Graph, dict[str, str]]:
    """Parse text into a graph plus the optional side declarations."""
    labels: list[str] = []
    seen: set[str] = set()
    sides: dict[str, str] = {}
    edges: list[tuple[str, str]] = []
    edge_set: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        kind, *args = line.split()
        if kind == "v":
            if len(args) not in (1, 2):
                raise GraphFormatError(lineno, "expected 'v <label> [L|R]'")
            label = args[0]
            if label in seen:
                raise GraphFormatError(lineno, f"duplicate vertex {label!r}")
            if len(args) == 2:
                if args[1] not in (LEFT, RIGHT):
                    raise GraphFormatError(lineno, f"side must be L or R, got {args[1]!r}")
                sides[label] = args[1]
            seen.add(label)
            labels.append(label)
        elif kind == "e":
            if len(args) != 2:
                raise GraphFormatError(lineno, "expected 'e <label> <label>'")
            u, v = args
            for x in (u, v):
                if x not in seen:
                    raise GraphFormatError(lineno, f"unknown endpoint {x!r}")
            if u == v:
                raise GraphFormatError(lineno, f"loop at {u!r}")
            key = frozenset((u, v))
            if key in edge_set:
                raise GraphFormatError(lineno, f"duplicate edge {u}-{v}")
            if u in sides and v in sides and sides[u] == sides[v]:
                raise GraphFormatError(lineno, f"edge {u}-{v} joins two {sides[u]} vertices")
            edge_set.add(key)
            edges.append((u, v))
        else:
            raise GraphFormatError(lineno, f"unknown record type {kind!r}")
    return build_graph(labels, edges), sides


def parse_graph_file(text: str) -> Graph:
    return parse_graph_sides(text)[0]


def write_graph_file(g: Graph, sides: dict[str, str] | None = None) -> str:
    """Canonical text: vertices in label order, then edges in sorted order."""
    out = []
    for v in sorted(g.vertices, key=vertex_key):
        side = (sides or {}).get(v)
        out.append(f"v {v} {side}" if side else f"v {v}")
    for u, v in sorted(g.edges(), key=edge_key):
        out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_file(fh.read())
