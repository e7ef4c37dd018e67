"""Command-line interface: kernelize, solve, oracle, verify, gen, bench.

Machine-readable output (JSON reports, generated graphs, CSV sweeps) goes to
stdout or --output; diagnostics go to stderr. Exit codes: 0 yes, 1 no,
2 undecided (budget, oracle refusal, or a reduced-but-unsolved instance),
64 usage error, 65 parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .formats import (
    GraphParseError,
    LoadedGraph,
    parse_graph,
    parse_witness,
    serialize_graph,
    witness_to_jsonable,
)
from .generate import FAMILIES, GenerationError, generate
from .graphs import Graph
from .kernel import (
    Decided,
    ProblemInstance,
    Reduced,
    Variant,
    kernelize,
    size_bound,
)
from .solve import (
    BudgetExceeded,
    Decision,
    SolverBudget,
    solve_dual_fpt_with_kernel,
    solve_exact_oracle,
)
from .trees import (
    ORACLE_LIMIT_DEFAULT,
    InvalidTreeError,
    OracleLimitError,
    dfs_tree_violation,
    is_dfs_tree,
)

EX_YES = 0
EX_NO = 1
EX_UNDECIDED = 2
EX_USAGE = 64
EX_PARSE = 65

ORACLE_LIMIT_ENV = "LINEAL_ORACLE_LIMIT"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lineal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_args(p, need_variant=True):
        p.add_argument("graph", help="graph file (edge list or DIMACS), or '-' for stdin")
        if need_variant:
            p.add_argument(
                "--variant",
                required=True,
                choices=[v.value for v in Variant],
                help="which leaf-count decision problem to address",
            )
            p.add_argument("-k", type=int, required=True, help="the parameter k (>= 0)")

    def add_budget_args(p):
        p.add_argument("--budget-tuples", type=int, default=None, help="max tuple-prefix expansions")
        p.add_argument("--time-limit", type=float, default=None, help="search time limit in seconds")
        p.add_argument("--oracle-limit", type=int, default=None,
                       help=f"max vertices for exhaustive enumeration (env {ORACLE_LIMIT_ENV})")

    p = sub.add_parser("kernelize", help="reduce an instance, emit kernel graph and report")
    add_instance_args(p)
    p.add_argument("--root", type=int, default=0, help="DFS root for the dual-min kernel")
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("--output", help="write the kernel graph here")

    p = sub.add_parser("solve", help="decide an instance (FPT for dual variants, oracle otherwise)")
    add_instance_args(p)
    add_budget_args(p)
    p.add_argument("--root", type=int, default=0, help="DFS root for the dual-min kernel")

    p = sub.add_parser("oracle", help="decide by exhaustive DFS-tree enumeration")
    add_instance_args(p)
    add_budget_args(p)

    p = sub.add_parser("verify", help="check a witness tree against a graph and threshold")
    p.add_argument("graph")
    p.add_argument("--witness", required=True, help="JSON witness file (root + parent map)")
    p.add_argument("--variant", choices=[v.value for v in Variant], default=None)
    p.add_argument("-k", type=int, default=None)

    p = sub.add_parser("gen", help="generate a graph from a seeded family")
    p.add_argument("--family", required=True, choices=list(FAMILIES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=None, help="planted cover size (bounded_cover)")
    p.add_argument("--p", type=float, default=None, help="edge probability (gnp, bounded_cover)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["edgelist", "dimacs"], default="edgelist")
    p.add_argument("--output", help="write the graph here instead of stdout")

    p = sub.add_parser("bench", help="sweep an (n, k) grid, emit CSV")
    p.add_argument("--variant", required=True, choices=[v.value for v in Variant])
    p.add_argument("--family", default="bounded_cover", choices=list(FAMILIES))
    p.add_argument("--n-grid", required=True, help="comma-separated vertex counts")
    p.add_argument("--k-grid", required=True, help="comma-separated parameter values")
    p.add_argument("--s", type=int, default=4)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    add_budget_args(p)
    p.add_argument("--output", help="write the CSV here instead of stdout")

    return parser


def _budget(args) -> SolverBudget:
    limit = getattr(args, "oracle_limit", None)
    if limit is None:
        env = os.environ.get(ORACLE_LIMIT_ENV)
        limit = int(env) if env else ORACLE_LIMIT_DEFAULT
    return SolverBudget(
        max_tuple_count=getattr(args, "budget_tuples", None) or 100_000_000,
        time_limit=getattr(args, "time_limit", None) or 300.0,
        oracle_vertex_limit=limit,
    )


def _read_graph(path: str) -> LoadedGraph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_graph(fh.read())
    except OSError as exc:
        raise GraphParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(doc: dict, out=None) -> None:
    text = json.dumps(doc, indent=2)
    print(text, file=out or sys.stdout)


def _kernel_stats(g_before: Graph, outcome) -> dict:
    if isinstance(outcome, Reduced):
        trace = outcome.trace
        s = len(trace.cover)
        return {
            "ran": True,
            "n_before": g_before.vertex_count,
            "n_after": outcome.instance.graph.vertex_count,
            "cover_size": s,
            "bound": size_bound(s),
            "rule1_deleted": trace.pendant_deletions,
            "rule2_deleted": trace.unlabeled_deletions,
        }
    return {"ran": False}


def _outcome_exit(outcome: str) -> int:
    return {"yes": EX_YES, "no": EX_NO}.get(outcome, EX_UNDECIDED)


def cmd_kernelize(args) -> int:
    t0 = time.perf_counter()
    loaded = _read_graph(args.graph)
    t1 = time.perf_counter()
    inst = ProblemInstance(loaded.graph, args.k, Variant(args.variant))
    outcome = kernelize(inst, root=args.root)
    t2 = time.perf_counter()
    report = {
        "instance": _instance_desc(args.graph, loaded, args),
        "outcome": None,
        "reason": None,
        "kernel": _kernel_stats(loaded.graph, outcome),
        "timings_ms": {"parse": _ms(t0, t1), "kernelize": _ms(t1, t2), "total": _ms(t0, t2)},
    }
    if isinstance(outcome, Decided):
        report["outcome"] = "yes" if outcome.answer else "no"
        report["reason"] = outcome.reason
    else:
        report["outcome"] = "reduced"
        report["reason"] = f"reduced instance with k'={outcome.instance.k}"
        report["kernel"]["k_after"] = outcome.instance.k
        kernel_text = serialize_graph(outcome.instance.graph, fmt=args.format)
        report["kernel"]["graph"] = kernel_text
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(kernel_text)
    _emit(report)
    return _outcome_exit(report["outcome"])


def cmd_solve(args, force_oracle: bool = False) -> int:
    t0 = time.perf_counter()
    loaded = _read_graph(args.graph)
    t1 = time.perf_counter()
    variant = Variant(args.variant)
    inst = ProblemInstance(loaded.graph, args.k, variant)
    budget = _budget(args)
    report = {
        "instance": _instance_desc(args.graph, loaded, args),
        "outcome": None,
        "reason": None,
        "witness": None,
        "kernel": {"ran": False},
        "timings_ms": {},
    }
    decision: Decision | None = None
    dual = variant in (Variant.DUAL_MIN_LLT, Variant.DUAL_MAX_LLT)
    try:
        if force_oracle or not dual:
            decision = solve_exact_oracle(inst, budget)
            reason = "exhaustive enumeration"
        else:
            decision, outcome = solve_dual_fpt_with_kernel(
                inst, budget, root=getattr(args, "root", 0)
            )
            report["kernel"] = _kernel_stats(loaded.graph, outcome)
            reason = (
                outcome.reason if isinstance(outcome, Decided) else "tuple search on the kernel"
            )
    except OracleLimitError as exc:
        report["outcome"] = "undecided"
        report["reason"] = str(exc)
    except BudgetExceeded as exc:
        report["outcome"] = "undecided"
        report["reason"] = str(exc)
    t2 = time.perf_counter()
    if decision is not None:
        report["outcome"] = "yes" if decision.answer else "no"
        report["reason"] = reason
        if decision.witness is not None:
            report["witness"] = witness_to_jsonable(decision.witness, loaded.labels)
    report["timings_ms"] = {"parse": _ms(t0, t1), "solve": _ms(t1, t2), "total": _ms(t0, t2)}
    _emit(report)
    return _outcome_exit(report["outcome"])


def cmd_oracle(args) -> int:
    return cmd_solve(args, force_oracle=True)


def cmd_verify(args) -> int:
    loaded = _read_graph(args.graph)
    try:
        if args.witness == "-":
            text = sys.stdin.read()
        else:
            with open(args.witness, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise GraphParseError(f"cannot read {args.witness}: {exc.strerror}") from None
    tree = parse_witness(text, loaded)
    g = loaded.graph
    report = {"outcome": "no", "reason": None, "internal": None, "leaves": None}
    try:
        if len(tree.parent) != g.vertex_count:
            raise InvalidTreeError("tree does not span the graph")
        violation = dfs_tree_violation(g, tree)
    except InvalidTreeError as exc:
        report["reason"] = f"not a spanning tree: {exc}"
        _emit(report)
        print(report["reason"], file=sys.stderr)
        return EX_NO
    if violation is not None:
        u, v = violation
        report["reason"] = (
            f"not a DFS tree: edge {loaded.labels[u]}-{loaded.labels[v]} joins incomparable vertices"
        )
        _emit(report)
        print(report["reason"], file=sys.stderr)
        return EX_NO
    internal = tree.internal_count()
    leaves = g.vertex_count - internal
    report["internal"] = internal
    report["leaves"] = leaves
    if args.variant is None:
        report["outcome"] = "yes"
        report["reason"] = "valid DFS tree"
    else:
        if args.k is None:
            raise _UsageError("verify with --variant also needs -k")
        variant = Variant(args.variant)
        ok = {
            Variant.MIN_LLT: leaves <= args.k,
            Variant.MAX_LLT: leaves >= args.k,
            Variant.DUAL_MIN_LLT: internal >= args.k,
            Variant.DUAL_MAX_LLT: internal <= args.k,
        }[variant]
        report["outcome"] = "yes" if ok else "no"
        report["reason"] = (
            f"valid DFS tree with {internal} internal vertices and {leaves} leaves"
        )
    _emit(report)
    return _outcome_exit(report["outcome"])


def cmd_gen(args) -> int:
    params = {"n": args.n}
    if args.family in ("gnp", "bounded_cover"):
        if args.p is None:
            raise _UsageError(f"family {args.family} needs --p")
        params["p"] = args.p
    if args.family == "bounded_cover":
        if args.s is None:
            raise _UsageError("family bounded_cover needs --s")
        params["s"] = args.s
    g = generate(args.family, seed=args.seed, **params)
    text = serialize_graph(g, fmt=args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_YES


def cmd_bench(args) -> int:
    variant = Variant(args.variant)
    budget = _budget(args)
    ns = [int(x) for x in args.n_grid.split(",") if x]
    ks = [int(x) for x in args.k_grid.split(",") if x]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["n", "m", "variant", "k", "s", "kernel_n", "bound", "answer", "t_kernelize_ms", "t_solve_ms"]
    )
    index = 0
    for n in ns:
        for k in ks:
            params = {"n": n}
            if args.family in ("gnp", "bounded_cover"):
                params["p"] = args.p
            if args.family == "bounded_cover":
                params["s"] = min(args.s, n)
            g = generate(args.family, seed=args.seed + index, **params)
            index += 1
            inst = ProblemInstance(g, k, variant)
            t0 = time.perf_counter()
            outcome = kernelize(inst)
            t1 = time.perf_counter()
            if isinstance(outcome, Decided):
                s = kernel_n = bound = ""
                answer = "yes" if outcome.answer else "no"
                t2 = t1
            else:
                s = len(outcome.trace.cover)
                kernel_n = outcome.instance.graph.vertex_count
                bound = size_bound(s)
                answer = "undecided"
                try:
                    if variant in (Variant.DUAL_MIN_LLT, Variant.DUAL_MAX_LLT):
                        decision, _ = solve_dual_fpt_with_kernel(inst, budget)
                        answer = "yes" if decision.answer else "no"
                    elif outcome.instance.graph.vertex_count <= budget.oracle_vertex_limit:
                        decision = solve_exact_oracle(outcome.instance, budget)
                        answer = "yes" if decision.answer else "no"
                except (BudgetExceeded, OracleLimitError):
                    answer = "undecided"
                t2 = time.perf_counter()
            writer.writerow(
                [n, g.edge_count, variant.value, k, s, kernel_n, bound, answer,
                 _ms(t0, t1), _ms(t1, t2)]
            )
    text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EX_YES


def _instance_desc(source: str, loaded: LoadedGraph, args) -> dict:
    return {
        "source": source,
        "n": loaded.graph.vertex_count,
        "m": loaded.graph.edge_count,
        "variant": getattr(args, "variant", None),
        "k": getattr(args, "k", None),
    }


def _ms(t0: float, t1: float) -> float:
    return round((t1 - t0) * 1000.0, 3)


_HANDLERS = {
    "kernelize": cmd_kernelize,
    "solve": cmd_solve,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "gen": cmd_gen,
    "bench": cmd_bench,
}


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except SystemExit as exc:  # argparse --help
        return 0 if exc.code in (0, None) else EX_USAGE
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    except GenerationError as exc:
        print(f"generation error: {exc}", file=sys.stderr)
        return EX_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_USAGE


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
