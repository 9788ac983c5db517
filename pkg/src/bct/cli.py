"""Command-line entry point ``bct``."""

from __future__ import annotations

import argparse
import json
import sys

from . import families
from .campaigns import CAMPAIGNS, SCHEMA_VERSION, run_campaign
from .csbe import homotopy_type_of_subdivision, run_csbe
from .fileformat import read_graph, write_graph_file
from .graph import CapacityError, Graph, GraphError, NotBipartiteError, subdivide
from .invariants import (biclique_partition_number, domination_number,
                         independence_domination_number)
from .structure import induced_matching_number
from .topology import (alexander_dual, independence_complex, reduced_betti_numbers, regularity,
                       write_facets)

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2
INVARIANTS = ("bp", "gamma", "gammai", "im")


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2, ensure_ascii=False))
    else:
        print(text)


def _parse_params(spec: str | None) -> dict[str, int]:
    out: dict[str, int] = {}
    if not spec:
        return out
    for item in spec.split(","):
        key, sep, value = item.partition("=")
        if not sep:
            raise GraphError(f"bad parameter {item!r}; expected key=value")
        try:
            out[key.strip()] = int(value)
        except ValueError:
            raise GraphError(f"parameter {key!r} must be an integer") from None
    return out


def cmd_gen(args) -> int:
    base = read_graph(args.base) if args.base else None
    g = families.generate_family(args.family, base=base, **_parse_params(args.params))
    text = write_graph_file(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_invariants(args) -> int:
    g = read_graph(args.file)
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    unknown = [w for w in which if w not in INVARIANTS]
    if unknown:
        raise GraphError(f"unknown invariant(s) {unknown}; choose from {', '.join(INVARIANTS)}")
    values: dict = {}
    lines = []
    for w in which:
        if w == "bp":
            k, part = biclique_partition_number(g, singletons=not args.no_singletons)
            values[w] = {"value": k, "witness": part.to_json()}
            blocks = " | ".join(f"{{{','.join(b.left_part)}}}x{{{','.join(b.right_part)}}}"
                                for b in part.blocks)
            lines.append(f"bp = {k}    {blocks}")
        elif w == "gamma":
            k, dom = domination_number(g)
            values[w] = {"value": k, "witness": list(dom)}
            lines.append(f"gamma = {k}    dominating set {{{', '.join(dom)}}}")
        elif w == "gammai":
            k, ind = independence_domination_number(g)
            values[w] = {"value": k, "witness": list(ind)}
            lines.append(f"gamma_i = {k}    independent set {{{', '.join(ind)}}}")
        else:
            k, m = induced_matching_number(g)
            values[w] = {"value": k, "witness": [list(e) for e in m.edges]}
            lines.append(f"im = {k}    " + " ".join(f"{u}-{v}" for u, v in m.edges))
    _emit(args, {"invariants": values}, "\n".join(lines))
    return EXIT_OK


def cmd_csbe(args) -> int:
    g = read_graph(args.file)
    outcome = run_csbe(g)
    if outcome.sequence is not None:
        seq = outcome.sequence
        text = [f"CSBE sequence of length {len(seq)}:"]
        text += [f"  {u}-{v}  removes {{{', '.join(s.closed_neighborhood)}}}"
                 for s in seq.steps for u, v in [s.edge]]
        _emit(args, {"csbe": True, "sequence": seq.to_json()}, "\n".join(text))
    else:
        ref = outcome.refusal
        text = (f"not a CSBE-graph: no admissible edge after {len(ref.prefix)} step(s); "
                f"remaining vertices {{{', '.join(ref.vertices)}}}")
        _emit(args, {"csbe": False, "refusal": ref.to_json()}, text)
    return EXIT_OK


def cmd_homotopy(args) -> int:
    g = read_graph(args.file)
    report = homotopy_type_of_subdivision(g, oracle=args.oracle)
    text = f"Ind(S(G)) ~ {report}"
    if "oracle_betti" in report.evidence:
        text += f"    oracle reduced Betti numbers {report.evidence['oracle_betti']}"
    _emit(args, {"homotopy": report.to_json()}, text)
    return EXIT_OK


def cmd_reg(args) -> int:
    g = read_graph(args.file)
    target: Graph = subdivide(g).graph if args.of == "subdivision" else g
    r = regularity(target)
    name = "reg(S(G))" if args.of == "subdivision" else "reg(G)"
    _emit(args, {"regularity": r, "of": args.of}, f"{name} = {r}")
    return EXIT_OK


def cmd_homology(args) -> int:
    g = read_graph(args.file)
    if args.complex == "ind":
        x = independence_complex(g)
    elif args.complex == "ind-subdivision":
        x = independence_complex(subdivide(g).graph)
    else:
        x = alexander_dual(independence_complex(g))
    betti = reduced_betti_numbers(x)
    nz = betti.nonzero()
    text = "all reduced Betti numbers vanish" if not nz else \
        "\n".join(f"betti_{d} = {b}" for d, b in sorted(nz.items()))
    if args.facets:
        text = write_facets(x) + text
    _emit(args, {"complex": args.complex, "betti": betti.to_json(), "facets": x.facets()}, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    params = {"max_n": args.max_n, "seed": args.seed, "count": args.count}
    report = run_campaign(args.campaign_id, params)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, ensure_ascii=False))
    else:
        print(report.summary())
        for note in report.notes:
            print(f"note: {note}")
        for v in report.violations:
            print(f"violation: {json.dumps(v['computed'])}\n{v['graph']}")
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bct", description="Biclique partitions, CSBE "
                                     "sequences and independence-complex homology of graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named family member in the text format")
    p.add_argument("--family", required=True, choices=sorted(families.FAMILIES))
    p.add_argument("--params", help="comma-separated k=v integers, e.g. p=4,n=2")
    p.add_argument("--base", help="base graph file (for B(4))")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("invariants", help="bp, gamma, gamma_i and im with witnesses")
    p.add_argument("file")
    p.add_argument("--which", default="bp,gamma,gammai,im")
    p.add_argument("--no-singletons", action="store_true", help="forbid one-vertex blocks in bp")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("csbe", help="search for a complete simple biclique elimination sequence")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_csbe)

    p = sub.add_parser("homotopy", help="certified homotopy type of Ind(S(B))")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="attach Betti numbers when undecided")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homotopy)

    p = sub.add_parser("reg", help="regularity of the edge ideal via Ind subcomplexes")
    p.add_argument("file")
    p.add_argument("--of", choices=("graph", "subdivision"), default="graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("homology", help="reduced GF(2) Betti numbers")
    p.add_argument("file")
    p.add_argument("--complex", choices=("ind", "ind-subdivision", "dual"), default="ind")
    p.add_argument("--facets", action="store_true", help="also print the facet list")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign_id", choices=sorted(CAMPAIGNS, key=lambda c: int(c[1:])))
    p.add_argument("--max-n", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, GraphError, NotBipartiteError, OSError, ValueError, KeyError) as exc:
        print(f"bct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
