"""Generators for the named graph families.

Label conventions (not fixed by the source constructions, chosen here):

* ``K`` (``n``, ``m``): sides ``x1..xn`` and ``y1..ym``.
* ``R`` (``p``, ``n``): star centre ``z``, leaves ``x1..xn``; the i-th copy of
  ``C_p`` is ``c{i}.1..c{i}.p`` and ``x{i}`` is joined to ``c{i}.1``.
* ``B(4)``: every base vertex ``v`` gets a 4-cycle ``v, v.c1, v.c2, v.c3``.
* ``H_n``: centres ``x``, ``y``; leaves ``a1..an``, ``b1..b(n+1)``; rungs ``ai-bi``.
* ``H_k``: the cycle ``w0..w(6k-1)`` with ``w6`` glued onto ``w0``.
"""

from __future__ import annotations

from typing import Callable

from .graph import Graph, GraphError, build_graph, subdivide


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> Graph:
    _check(n >= 1, "K_n needs n >= 1")
    vs = [f"k{i}" for i in range(1, n + 1)]
    return build_graph(vs, [(u, v) for i, u in enumerate(vs) for v in vs[i + 1:]])


def complete_bipartite(n: int, m: int) -> Graph:
    _check(n >= 1 and m >= 1, "K_{n,m} needs n, m >= 1")
    xs = [f"x{i}" for i in range(1, n + 1)]
    ys = [f"y{j}" for j in range(1, m + 1)]
    return build_graph(xs + ys, [(x, y) for x in xs for y in ys])


def star(q: int) -> Graph:
    return complete_bipartite(1, q)


def path(n: int) -> Graph:
    _check(n >= 1, "P_n needs n >= 1")
    vs = [f"p{i}" for i in range(1, n + 1)]
    return build_graph(vs, list(zip(vs, vs[1:])))


def cycle(k: int, prefix: str = "c") -> Graph:
    _check(k >= 3, "C_k needs k >= 3")
    vs = [f"{prefix}{i}" for i in range(1, k + 1)]
    return build_graph(vs, list(zip(vs, vs[1:])) + [(vs[-1], vs[0])])


def edgeless(n: int) -> Graph:
    return build_graph([f"u{i}" for i in range(1, n + 1)], [])


def long_claw() -> Graph:
    """S_{2,2,2}, the 1-subdivision of the claw."""
    return subdivide(star(3)).graph


def r_graph(p: int, n: int) -> Graph:
    """n copies of C_p hung off the leaves of a star K_{1,n}."""
    _check(p >= 3 and n >= 2, "R^p_n needs p >= 3 and n >= 2")
    vs = ["z"]
    es = []
    for i in range(1, n + 1):
        ring = [f"c{i}.{j}" for j in range(1, p + 1)]
        vs += [f"x{i}"] + ring
        es += [("z", f"x{i}"), (f"x{i}", ring[0])]
        es += list(zip(ring, ring[1:])) + [(ring[-1], ring[0])]
    return build_graph(vs, es)


def c4_extension(base: Graph | None) -> Graph:
    """B(4): a private 4-cycle through every vertex of ``base``."""
    _check(base is not None, "B(4) needs a base graph")
    vs = list(base.vertices)
    es = list(base.edges())
    for v in base.vertices:
        c1, c2, c3 = f"{v}.c1", f"{v}.c2", f"{v}.c3"
        vs += [c1, c2, c3]
        es += [(v, c1), (c1, c2), (c2, c3), (c3, v)]
    return build_graph(vs, es)


def h_n(n: int) -> Graph:
    """Stars K_{1,n} (centre x) and K_{1,n+1} (centre y) joined by rungs a_i b_i."""
    _check(n >= 1, "H_n needs n >= 1")
    a = [f"a{i}" for i in range(1, n + 1)]
    b = [f"b{j}" for j in range(1, n + 2)]
    es = [("x", v) for v in a] + [("y", v) for v in b] + list(zip(a, b))
    return build_graph(["x", "y"] + a + b, es)


def b_p(p: int) -> Graph:
    _check(p >= 1, "B_p needs p >= 1")
    c = [f"c{i}" for i in range(1, p + 1)]
    d = [f"d{i}" for i in range(1, p + 1)]
    es = [("a", "b")] + [("b", x) for x in c] + list(zip(c, d)) + [(x, "a") for x in d]
    return build_graph(["a", "b"] + c + d, es)


def double_star() -> Graph:
    """DS_2: two copies of K_{1,2} with their centres joined."""
    return build_graph(["u", "u1", "u2", "v", "v1", "v2"],
                       [("u", "u1"), ("u", "u2"), ("v", "v1"), ("v", "v2"), ("u", "v")])


def h_k(k: int) -> Graph:
    """C_{6k} with two vertices at distance six identified (a C_6 and a C_{6k-6} sharing w0)."""
    _check(k >= 3, "H_k needs k >= 3")
    n = 6 * k
    glue = {6: 0}
    vs = [f"w{i}" for i in range(n) if i not in glue]
    es = []
    for i in range(n):
        j = (i + 1) % n
        es.append((f"w{glue.get(i, i)}", f"w{glue.get(j, j)}"))
    return build_graph(vs, es)


def fig2() -> Graph:
    """The 8-vertex chordal bipartite graph with independence domination 2 < bp 3."""
    es = [("v1", "v2"), ("v2", "v3"), ("v1", "v4"), ("v2", "v5"), ("v4", "v5"),
          ("v3", "v6"), ("v5", "v6"), ("v4", "v7"), ("v5", "v8"), ("v7", "v8")]
    return build_graph([f"v{i}" for i in range(1, 9)], es)


def gamma_example(index: int) -> Graph:
    """The three drawn members of the Gamma family (1 = theta graph on 8 vertices)."""
    _check(index in (1, 2, 3), "gamma example index must be 1, 2 or 3")
    if index in (1, 2):
        vs = ["t", "b", "m1", "m2", "m3", "l1", "l2", "l3"]
        es = [(f"m{i}", f"l{i}") for i in (1, 2, 3)]
        es += [("t", f"m{i}") for i in (1, 2, 3)] + [("b", f"l{i}") for i in (1, 2, 3)]
        if index == 2:
            es.append(("t", "b"))
        return build_graph(vs, es)
    cols = "abcd"
    vs = ["top", "bot1", "bot2"] + [f"{c}{r}" for c in cols for r in (1, 2)]
    es = [(f"{c}1", f"{c}2") for c in cols] + [("top", f"{c}2") for c in cols]
    es += [("bot1", "a1"), ("bot1", "b1"), ("bot2", "c1"), ("bot2", "d1")]
    es += [("bot1", "top"), ("bot2", "top")]
    return build_graph(vs, es)


FAMILIES: dict[str, Callable[..., Graph]] = {
    "K": complete_bipartite,
    "Kn": complete,
    "star": star,
    "P": path,
    "C": cycle,
    "edgeless": edgeless,
    "S222": long_claw,
    "R": r_graph,
    "B(4)": c4_extension,
    "H_n": h_n,
    "B_p": b_p,
    "DS_2": double_star,
    "H_k": h_k,
    "fig2": fig2,
    "gamma": gamma_example,
}


def generate_family(name: str, base: Graph | None = None, **params: int) -> Graph:
    """Build a named family member, e.g. ``generate_family("R", p=4, n=4)``."""
    try:
        make = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    if name == "B(4)":
        return make(base)
    try:
        return make(**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for family {name!r}: {exc}") from None
