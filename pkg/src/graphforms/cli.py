"""Command-line front end.

Commands::

    graphforms dims GRAPH [--max-degree N]
    graphforms connection GRAPH [--gamma G] [--show D|T|nabla|delta]
    graphforms curvature GRAPH [--which 1|2] [--gamma G] [--bilinear true|false]
    graphforms metric-check GRAPH [--gamma G] [--mu p/q]
    graphforms verify [--examples all|1..6|props]

GRAPH is either ``complete:N`` or the path of a JSON file
``{"vertices": N, "edges": [[i, j], ...]}``.  ``--output`` selects text or
JSON on stdout; diagnostics go to stderr.  Exit codes: 0 success,
1 verification failure, 2 input error, 3 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .calculus import CalculusTower, Digraph
from .connection import (
    CompleteConnection,
    ConnectionParams,
    InducedConnection,
    Metric,
)
from .elements import Element
from .serialize import (
    GraphSpecError,
    element_to_json,
    load_graph,
    parse_gamma,
    render_element,
)
from .universal import UniversalAlgebra
from .verify import SELECTIONS, run_checks

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_CROSS_CHECK = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphforms",
        description="Exact differential calculus, connections and curvature "
        "on finite directed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True):
        if graph:
            p.add_argument(
                "graph",
                help="graph spec: 'complete:N' or a JSON file "
                '{"vertices": N, "edges": [[i, j], ...]}',
            )
        p.add_argument(
            "--output",
            choices=("text", "json"),
            default="text",
            help="output format (default: text)",
        )

    p = sub.add_parser("dims", help="per-degree dimension table of the calculus")
    common(p)
    p.add_argument("--max-degree", type=int, default=3)

    p = sub.add_parser("connection", help="per-arrow connection data")
    common(p)
    p.add_argument("--gamma", default="symbolic")
    p.add_argument(
        "--show",
        choices=("D", "T", "nabla", "delta"),
        default="nabla",
        help="which operator to list per arrow (default: nabla)",
    )

    p = sub.add_parser("curvature", help="per-arrow curvature listing")
    common(p)
    p.add_argument("--which", type=int, choices=(1, 2), default=1)
    p.add_argument("--gamma", default="symbolic")
    p.add_argument("--bilinear", choices=("true", "false"), default="true")

    p = sub.add_parser("metric-check", help="metric compatibility verdict")
    common(p)
    p.add_argument("--gamma", default="symbolic")
    p.add_argument("--mu", default="1", help="nonzero rational metric scale")

    p = sub.add_parser("verify", help="run the built-in verification suite")
    common(p, graph=False)
    p.add_argument("--examples", choices=SELECTIONS, default="all")
    return parser


def _fail_input(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT_ERROR


def _emit(args, text_lines, json_payload) -> None:
    if args.output == "json":
        print(json.dumps(json_payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def _edge_label(edge: tuple[int, int]) -> str:
    return f"e_{edge[0]}{edge[1]}" if max(edge) <= 9 else f"e_{edge[0]}.{edge[1]}"


def _cmd_dims(args) -> int:
    try:
        graph = load_graph(args.graph)
        if args.max_degree < 1:
            raise GraphSpecError("--max-degree", "must be >= 1")
        tower = CalculusTower(graph, args.max_degree)
    except (GraphSpecError, ValueError) as exc:
        return _fail_input(str(exc))
    rows = tower.dims()
    header = f"{'degree':>6}  {'dim_omega':>9}  {'dim_kernel':>10}  {'dim_k':>6}"
    lines = [header]
    for row in rows:
        lines.append(
            f"{row['degree']:>6}  {row['dim_omega']:>9}  "
            f"{row['dim_kernel']:>10}  {row['dim_quotient']:>6}"
        )
    payload = [
        {
            "degree": row["degree"],
            "dim_omega": row["dim_omega"],
            "dim_kernel": row["dim_kernel"],
            "dim_k": row["dim_quotient"],
        }
        for row in rows
    ]
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_connection(args) -> int:
    try:
        graph = load_graph(args.graph)
        gamma = parse_gamma(args.gamma)
        params = ConnectionParams.symmetric(gamma)
        if args.show in ("nabla", "delta"):
            tower = CalculusTower(graph, 2)
            induced = InducedConnection(tower, params)
        ambient = CompleteConnection(UniversalAlgebra(graph.n_points, 2), params)
    except (GraphSpecError, ValueError) as exc:
        return _fail_input(str(exc))
    lines = []
    payload = []
    for edge in graph.sorted_edges():
        if args.show == "D":
            value = ambient.on_edge(*edge)
        elif args.show == "T":
            value = ambient.torsion_edge(*edge)
        elif args.show == "nabla":
            value = induced.on_edge(*edge)
        else:
            value = tower.delta(Element.monomial(edge))
        lines.append(f"{args.show}({_edge_label(edge)}) = {render_element(value)}")
        payload.append({"edge": list(edge), "element": element_to_json(value)})
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_curvature(args) -> int:
    try:
        graph = load_graph(args.graph)
        gamma = parse_gamma(args.gamma)
        params = ConnectionParams.symmetric(gamma)
    except (GraphSpecError, ValueError) as exc:
        return _fail_input(str(exc))
    bilinear = args.bilinear == "true"
    lines = []
    payload = []
    if graph.is_complete:
        conn = CompleteConnection(UniversalAlgebra(graph.n_points), params)
        reporter = conn.curvature_report
    else:
        tower = CalculusTower(graph, 2)
        induced = InducedConnection(tower, params)
        reporter = induced.curvature_report
    label = f"Curv{args.which}" if bilinear else f"raw{args.which}"
    for edge in graph.sorted_edges():
        try:
            report = reporter(args.which, *edge)
        except ArithmeticError as exc:
            print(f"internal error: {exc}", file=sys.stderr)
            return EXIT_CROSS_CHECK
        value = report.bilinear if bilinear else report.raw
        lines.append(f"{label}({_edge_label(edge)}) = {render_element(value)}")
        payload.append({"edge": list(edge), "element": element_to_json(value)})
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_metric_check(args) -> int:
    try:
        graph = load_graph(args.graph)
        if not graph.is_complete:
            raise GraphSpecError(
                "graph",
                "metric compatibility is defined on complete graphs; "
                "pass complete:N",
            )
        gamma = parse_gamma(args.gamma)
        params = ConnectionParams.symmetric(gamma)
        metric = Metric(Fraction(args.mu))
    except (GraphSpecError, ValueError, ZeroDivisionError) as exc:
        return _fail_input(str(exc))
    conn = CompleteConnection(UniversalAlgebra(graph.n_points), params)
    report = conn.metric_report(metric)
    compatible = all(v.is_zero() for v in report.values())
    verdict = "COMPATIBLE" if compatible else "INCOMPATIBLE"
    lines = [f"verdict: {verdict}"]
    payload = {"verdict": verdict, "discrepancies": []}
    for (i, j), value in sorted(report.items()):
        lines.append(f"discrepancy({i},{j}) = {render_element(value)}")
        payload["discrepancies"].append(
            {"pair": [i, j], "element": element_to_json(value)}
        )
    _emit(args, lines, payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_checks(args.examples)
    passed = sum(1 for r in results if r.passed)
    lines = []
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        suffix = f": {r.detail}" if (r.detail and not r.passed) else ""
        lines.append(f"{mark} {r.name}{suffix}")
    lines.append(f"{passed}/{len(results)} checks passed")
    payload = {
        "selection": args.examples,
        "passed": passed == len(results),
        "checks": [
            {
                "name": r.name,
                "group": r.group,
                "status": "pass" if r.passed else "fail",
                **({"detail": r.detail} if r.detail else {}),
            }
            for r in results
        ],
    }
    _emit(args, lines, payload)
    if passed != len(results):
        for r in results:
            if not r.passed:
                print(f"failed: {r.name}: {r.detail}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "dims": _cmd_dims,
        "connection": _cmd_connection,
        "curvature": _cmd_curvature,
        "metric-check": _cmd_metric_check,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
