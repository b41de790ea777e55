"""Command-line front end.

Exit codes: 0 computation finished (refuting a claim counts), 2 usage
error, 3 range or capacity error, 4 a requested invariant ran out of budget
without an exact answer.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import claims, formats
from . import invariants as inv
from .core import SimpleGraph, build_topo_graph, check_n, corona, join, set_label, to_simple
from .errors import CapacityError, DisconnectedGraphError, RangeError

log = logging.getLogger("topograph")

EXIT_OK, EXIT_USAGE, EXIT_RANGE, EXIT_TIMEOUT = 0, 2, 3, 4

INVARIANTS = ("domination", "independence", "clique", "order", "size",
              "radius", "diameter", "connectivity", "min-degree", "max-degree")


class _UsageError(Exception):
    pass


def _positive(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def _operand(text: str) -> int:
    kind, _, arg = text.partition(":")
    if kind != "topo" or not arg.isdigit():
        raise argparse.ArgumentTypeError(f"operand must look like topo:<n>, got {text!r}")
    return int(arg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topograph",
                                description="Disjointness graph of nonempty proper subsets.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmts, default):
        sp.add_argument("--format", choices=fmts, default=default)
        sp.add_argument("--output", "-o", help="write here instead of stdout")

    b = sub.add_parser("build", help="emit the graph for n")
    b.add_argument("--n", type=int, required=True)
    common(b, ("edges", "dot", "json", "text"), "edges")

    i = sub.add_parser("invariants", help="full invariant report for n")
    i.add_argument("--n", type=int, required=True)
    i.add_argument("--budget-seconds", type=_positive, default=inv.DEFAULT_BUDGET)
    common(i, ("json", "text"), "text")

    v = sub.add_parser("verify", help="check every registered claim over a range of n")
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--budget-seconds", type=_positive, default=inv.DEFAULT_BUDGET)
    common(v, ("csv", "json", "text"), "csv")

    c = sub.add_parser("compose", help="corona or join of two topological graphs")
    c.add_argument("--op", choices=("corona", "join"), required=True)
    c.add_argument("--left", type=_operand, required=True, metavar="topo:N")
    c.add_argument("--right", type=_operand, required=True, metavar="topo:M")
    c.add_argument("--invariant", choices=INVARIANTS)
    c.add_argument("--budget-seconds", type=_positive, default=inv.DEFAULT_BUDGET)
    common(c, ("edges", "dot", "json", "text"), "text")
    return p


def _topo_label(v: int) -> str:
    return set_label(v + 1)


def cmd_build(args) -> tuple[str, int]:
    T = build_topo_graph(args.n)
    if args.format == "edges":
        return formats.topo_edge_list(T), EXIT_OK
    if args.format == "dot":
        return formats.topo_dot(T), EXIT_OK
    G = to_simple(T)
    if args.format == "json":
        return formats.graph_json(G, ids=lambda v: v + 1, n=T.n), EXIT_OK
    lines = [f"n={T.n} order={G.order} size={G.size}"]
    lines += [f"{G.label(v)}: {' '.join(G.label(u) for u in G.neighbors(v))}" for v in range(G.order)]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_invariants(args) -> tuple[str, int]:
    T = build_topo_graph(args.n)
    report = inv.compute_report(to_simple(T), args.budget_seconds)
    if args.format == "json":
        return formats.report_json(report, T.n, ids=lambda v: v + 1), EXIT_OK
    return formats.report_text(report, T.n, label=_topo_label), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.n_min > args.n_max:
        raise _UsageError("--n-min must not exceed --n-max")
    verdicts = claims.verify_all(args.n_min, args.n_max, args.budget_seconds)
    render = {"csv": formats.verdicts_csv, "json": formats.verdicts_json,
              "text": formats.verdicts_text}[args.format]
    return render(verdicts), EXIT_OK


def _single_invariant(G: SimpleGraph, name: str, budget: float) -> inv.SolverResult:
    if name == "domination":
        return inv.domination_number(G, budget)
    if name == "independence":
        return inv.independence_number(G, budget)
    if name == "clique":
        return inv.clique_number(G, budget)
    if name == "order":
        return inv.SolverResult(G.order, ())
    if name == "size":
        return inv.SolverResult(G.size, ())
    if name in ("radius", "diameter"):
        ecc = inv.eccentricities(G)
        return inv.SolverResult(ecc.radius if name == "radius" else ecc.diameter, ())
    if name == "connectivity":
        return inv.SolverResult(inv.connectivity(G)[1], ())
    lo, hi = inv.degree_extremes(G)
    return inv.SolverResult(lo if name == "min-degree" else hi, ())


def cmd_compose(args) -> tuple[str, int]:
    left, right = check_n(args.left), check_n(args.right)
    fn = corona if args.op == "corona" else join
    G = fn(to_simple(build_topo_graph(left)), to_simple(build_topo_graph(right)))
    meta = {"op": args.op, "left": f"topo:{left}", "right": f"topo:{right}"}
    if args.invariant is None:
        if args.format == "edges":
            return formats.graph_edge_list(G, **meta), EXIT_OK
        if args.format == "dot":
            return formats.dot(G, f"{args.op}_{left}_{right}"), EXIT_OK
        if args.format == "json":
            return formats.graph_json(G, **meta), EXIT_OK
        return f"{args.op} topo:{left} topo:{right} order={G.order} size={G.size}\n", EXIT_OK

    if args.format in ("edges", "dot"):
        raise _UsageError(f"--invariant cannot be written as {args.format}")
    res = _single_invariant(G, args.invariant, args.budget_seconds)
    code = EXIT_OK if res.exact else EXIT_TIMEOUT
    if args.format == "json":
        doc = dict(meta, order=G.order, size=G.size, invariant=args.invariant, value=res.value,
                   exact=res.exact, witness=[G.label(v) for v in res.witness])
        return json.dumps(doc, indent=2) + "\n", code
    text = str(res.value) if res.exact else f"{res.value} (inexact: budget exhausted)"
    return text + "\n", code


COMMANDS = {"build": cmd_build, "invariants": cmd_invariants,
            "verify": cmd_verify, "compose": cmd_compose}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        text, code = COMMANDS[args.command](args)
    except _UsageError as exc:
        parser.error(str(exc))
    except (RangeError, CapacityError, DisconnectedGraphError) as exc:
        print(f"topograph: error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        log.info("wrote %s", args.output)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
