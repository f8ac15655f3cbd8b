"""Command-line entry point: ``domrec {param,sets,rgraph,construct,verify,analyze}``.

Exit codes: 0 ok, 2 parse error, 3 unknown variant, 4 undefined or infinite
parameter, 5 bad host, 6 closed-form mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .constructions import (construct_connelly, construct_id, construct_locating,
                            construct_upper, multiply)
from .errors import (EmptyHost, GraphError, NoConstructionForVariant, ParameterMismatch,
                     ParameterUndefinedOrInfinite)
from .graph import (Graph, members, named_graph, parse_edge_list, parse_graph6, to_dot,
                    to_graph6)
from .reconfig import (AdjacencyModel, analyze, build_k_dominating_graph, build_variant_graph,
                       frozen_vertices, stuck_vertices)
from .solvers import bb_optimal, format_value
from .variants import DomVariant
from .verify import verify_sweep

EXIT_OK, EXIT_PARSE, EXIT_VARIANT, EXIT_UNDEFINED, EXIT_HOST, EXIT_MISMATCH = 0, 2, 3, 4, 5, 6


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def load_graph(path: str, fmt: str | None = None, labels: str | None = None) -> Graph:
    """Read a graph from a file (or ``-``), falling back to names like ``K4-e``.

    ``labels`` names a JSON sidecar mapping label -> vertex index, as written
    by ``construct --labels``.
    """
    G = _load_unlabelled(path, fmt)
    if labels is None:
        return G
    try:
        mapping = json.loads(Path(labels).read_text())
        names = [None] * G.n
        for name, v in mapping.items():
            names[v] = name
        return Graph(G.n, G.adj, names)
    except (OSError, ValueError, IndexError, TypeError, GraphError) as exc:
        raise CliError(f"cannot read labels from {labels}: {exc}", EXIT_PARSE) from None


def _load_unlabelled(path: str, fmt: str | None) -> Graph:
    try:
        if path != "-" and not Path(path).exists():
            return named_graph(path)
        text = _read_text(path)
        if fmt is None:
            first = text.strip().splitlines()[0] if text.strip() else ""
            fmt = "edges" if first.strip().isdigit() and " " not in first.strip() else "g6"
        if fmt == "g6":
            return parse_graph6(text.strip().splitlines()[0])
        return parse_edge_list(text)
    except (GraphError, IndexError, OSError) as exc:
        raise CliError(f"cannot read graph from {path}: {exc}", EXIT_PARSE) from None


def _variant(name: str) -> DomVariant:
    try:
        return DomVariant.from_name(name)
    except KeyError:
        raise CliError(f"unknown variant {name!r}", EXIT_VARIANT) from None


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return int(os.environ.get("DOMREC_THREADS", "1") or 1)


def _set_text(G: Graph, S: int) -> str:
    return G.format_set(S) if G.n else ""


def cmd_param(args, out) -> int:
    G = load_graph(args.input, args.format, args.labels_in)
    value, _ = bb_optimal(G, _variant(args.variant))
    print(format_value(value), file=out)
    return EXIT_OK


def cmd_sets(args, out) -> int:
    G = load_graph(args.input, args.format, args.labels_in)
    variant = _variant(args.variant)
    value, family = bb_optimal(G, variant)
    if args.json:
        print(json.dumps({
            "variant": variant.cli_name,
            "value": value if isinstance(value, int) else str(value),
            "sets": [{"vertices": members(S), "labels": [G.label(v) for v in members(S)]}
                     for S in family],
        }, indent=2), file=out)
    else:
        for S in family:
            print(_set_text(G, S), file=out)
    return EXIT_OK


def _reconfig(args, G: Graph):
    if args.variant == "k-dom":
        if args.k is None:
            raise CliError("--k is required with --variant k-dom", EXIT_PARSE)
        return build_k_dominating_graph(G, args.k)
    if args.k is not None:
        raise CliError("--k only applies to --variant k-dom", EXIT_PARSE)
    variant = _variant(args.variant)
    try:
        return build_variant_graph(G, variant, AdjacencyModel(args.model))
    except ParameterUndefinedOrInfinite as exc:
        raise CliError(str(exc), EXIT_UNDEFINED) from None


def cmd_rgraph(args, out) -> int:
    G = load_graph(args.input, args.format, args.labels_in)
    R = _reconfig(args, G)
    if args.out == "dot":
        out.write(R.to_dot())
    elif args.out == "g6":
        print(to_graph6(R.as_graph()), file=out)
    else:
        print(R.to_json(), file=out)
    return EXIT_OK


_TARGETS = {
    "connelly": construct_connelly,
    "id": construct_id,
    "locating": construct_locating,
    "upper": construct_upper,
}


def cmd_construct(args, out) -> int:
    H = load_graph(args.h, args.format, args.labels_in)
    try:
        C = _TARGETS[args.target](H)
    except EmptyHost as exc:
        raise CliError(str(exc), EXIT_HOST) from None
    if args.extra:
        C = multiply(C, args.extra)
    if args.out == "dot":
        out.write(to_dot(C.graph))
    else:
        print(to_graph6(C.graph), file=out)
    if args.labels:
        Path(args.labels).write_text(C.label_json() + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    H = load_graph(args.h, args.format, args.labels_in)
    if H.n < 1:
        raise CliError("the host graph needs at least one vertex", EXIT_HOST)
    variants = [_variant(v) for v in args.variant.split(",")]
    try:
        reports = verify_sweep([H], variants, workers=_threads(args))
    except NoConstructionForVariant as exc:
        raise CliError(str(exc), EXIT_VARIANT) from None
    except ParameterMismatch as exc:
        raise CliError(str(exc), EXIT_MISMATCH) from None
    payload = reports[0].as_dict() if len(reports) == 1 else [r.as_dict() for r in reports]
    print(json.dumps(payload, indent=2), file=out)
    return EXIT_OK if all(r.isomorphic for r in reports) else 1


def cmd_analyze(args, out) -> int:
    G = load_graph(args.input, args.format, args.labels_in)
    R = _reconfig(args, G)
    rep = analyze(R)
    payload = {
        "nodes": len(R.nodes),
        "edges": len(R.edges),
        "components": rep.component_count,
        "component_sizes": list(rep.component_sizes),
        "diameters": list(rep.diameters),
    }
    frozen = frozen_vertices(R) if args.frozen else None
    if args.stuck or args.frozen:
        rows = []
        for i, S in enumerate(R.nodes):
            row = {"node": i, "set": members(S)}
            if args.stuck:
                row["stuck"] = members(stuck_vertices(R, i))
            if args.frozen:
                row["frozen"] = members(frozen[i])
            rows.append(row)
        payload["per_node"] = rows
    print(json.dumps(payload, indent=2), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="domrec", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $DOMREC_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p, flag="--input"):
        p.add_argument(flag, required=True, help="graph file, '-' for stdin, or a name like K4-e")
        p.add_argument("--format", choices=["g6", "edges"], default=None)
        p.add_argument("--labels-in", dest="labels_in", metavar="PATH",
                       help="label -> index JSON sidecar for the input graph")

    p = sub.add_parser("param", help="optimal value of a variant")
    graph_input(p)
    p.add_argument("--variant", required=True)
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("sets", help="all optimal sets of a variant")
    graph_input(p)
    p.add_argument("--variant", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_sets)

    for name, func, help_ in (("rgraph", cmd_rgraph, "reconfiguration graph"),
                              ("analyze", cmd_analyze, "connectivity and stuck/frozen report")):
        p = sub.add_parser(name, help=help_)
        graph_input(p)
        p.add_argument("--variant", required=True)
        p.add_argument("--model", choices=["slide", "jump"], default="slide")
        p.add_argument("--k", type=int, default=None)
        if name == "rgraph":
            p.add_argument("--out", choices=["dot", "g6", "json"], default="json")
        else:
            p.add_argument("--stuck", action="store_true")
            p.add_argument("--frozen", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("construct", help="build a realizability construction")
    graph_input(p, "--h")
    p.add_argument("--target", required=True, choices=sorted(_TARGETS))
    p.add_argument("--extra", type=int, default=0)
    p.add_argument("--out", choices=["g6", "dot"], default="g6")
    p.add_argument("--labels", metavar="PATH", help="write a label -> index JSON sidecar")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check that the construction realises H")
    graph_input(p, "--h")
    p.add_argument("--variant", required=True, help="variant name, or a comma-separated list")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"domrec: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
