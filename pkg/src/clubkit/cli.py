"""Command-line front end.

Subcommands: reduce, solve-clique, solve-2club, verify, sweep, distance,
oracle-check.  Exit status is 0 on success, 1 when a verification check
fails (a disagreeing sweep row, a failing certificate, an oracle
mismatch), and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .cluster import _min_deletion_search
from .errors import ClubkitError
from .harness import (
    ENGINE_BRANCHING,
    ENGINE_BRUTE,
    build_report,
    oracle_check,
    report_json,
    sweep_with_stats,
    verify_instance,
)
from .io import DIMACS, EDGELIST, emit_graph, parse_graph, sniff_format
from .reduction import format_roles, reduce
from .solvers import max_clique, max_s_club


def _load_graph(path: str):
    data = Path(path).read_bytes()
    return parse_graph(data, sniff_format(data))


def _write_report(args, report: dict) -> None:
    if args.json:
        Path(args.json).write_text(report_json(report), encoding="utf-8")


def _cmd_reduce(args) -> int:
    h = _load_graph(args.input_path)
    inst = reduce(h)
    out_path = Path(args.out)
    out_path.write_bytes(emit_graph(inst.graph, args.format))
    roles_path = Path(args.roles) if args.roles else out_path.with_suffix(out_path.suffix + ".roles")
    roles_path.write_text(format_roles(inst.layout), encoding="utf-8")
    print(
        f"gadget: {inst.graph.n_vertices} vertices, {inst.graph.n_edges} edges "
        f"(source n={inst.n}) -> {out_path}, roles -> {roles_path}"
    )
    _write_report(args, build_report("reduce"))
    return 0


def _cmd_solve_clique(args) -> int:
    g = _load_graph(args.input_path)
    result = max_clique(g)
    print(f"maximum clique: size {result.best_size}, set {sorted(result.best_set)}")
    _write_report(
        args,
        build_report(
            "solve-clique",
            certificates=[result.best_set],
            nodes_explored=result.nodes_explored,
            elapsed_ms=result.elapsed * 1000.0,
        ),
    )
    return 0


def _cmd_solve_club(args) -> int:
    g = _load_graph(args.input_path)
    result = max_s_club(g, args.s)
    print(
        f"maximum {args.s}-club: size {result.best_size}, set {sorted(result.best_set)}"
    )
    _write_report(
        args,
        build_report(
            "solve-2club",
            certificates=[result.best_set],
            nodes_explored=result.nodes_explored,
            elapsed_ms=result.elapsed * 1000.0,
        ),
    )
    return 0


def _cmd_verify(args) -> int:
    started = time.perf_counter()
    h = _load_graph(args.input_path)
    report = verify_instance(h, args.k, guard_override=args.guard_override)
    print(f"n={report.n} k={report.k} omega={report.omega} target={report.target}")
    print(f"clique side: {'yes' if report.clique_yes else 'no'}")
    print(f"2-club side: {'yes' if report.club_yes else 'no'}")
    if report.forward_checked:
        print(f"forward witness: {'ok' if report.forward_ok else 'FAILED'}")
    print(
        f"deletion certificate {sorted(report.certificate)}: "
        f"{'ok' if report.certificate_ok else 'FAILED'}"
    )
    print(f"agreement: {'ok' if report.agree else 'FAILED'}")
    _write_report(
        args,
        build_report(
            "verify",
            certificates=[report.certificate],
            nodes_explored=report.nodes_explored,
            elapsed_ms=(time.perf_counter() - started) * 1000.0,
        ),
    )
    return 0 if report.ok else 1


def _cmd_sweep(args) -> int:
    k_range = None
    if args.k_min is not None or args.k_max is not None:
        lo = args.k_min if args.k_min is not None else 1
        hi = args.k_max if args.k_max is not None else args.n
        k_range = range(lo, hi + 1)
    rows, nodes, elapsed_ms = sweep_with_stats(
        args.n, k_range=k_range, engine=args.engine, guard_override=args.guard_override
    )
    for row in rows:
        print(
            f"h={row.h_id:>4} k={row.k} omega={row.omega} target={row.target} "
            f"max2club={row.max_2club} clique={'y' if row.clique_yes else 'n'} "
            f"club={'y' if row.club_yes else 'n'} "
            f"{'agree' if row.agree else 'DISAGREE'}"
        )
    failures = sum(1 for row in rows if not row.agree)
    print(f"{len(rows)} rows, {failures} disagreements")
    _write_report(
        args,
        build_report("sweep", rows=rows, nodes_explored=nodes, elapsed_ms=elapsed_ms),
    )
    return 1 if failures else 0


def _cmd_distance(args) -> int:
    started = time.perf_counter()
    g = _load_graph(args.input_path)
    certificate, checked = _min_deletion_search(g, args.s, args.dmax)
    if certificate is None:
        print(f"no deletion set of size <= {args.dmax} reaches a {args.s}-club cluster graph")
        certificates = []
    else:
        print(
            f"distance {len(certificate.deleted)} to {args.s}-club cluster: "
            f"delete {sorted(certificate.deleted)}"
        )
        certificates = [certificate.deleted]
    _write_report(
        args,
        build_report(
            "distance",
            certificates=certificates,
            nodes_explored=checked,
            elapsed_ms=(time.perf_counter() - started) * 1000.0,
        ),
    )
    return 0


def _cmd_oracle_check(args) -> int:
    started = time.perf_counter()
    report = oracle_check(seed=args.seed, count=args.count)
    for miss in report.mismatches:
        label = "clique" if miss.s == 0 else f"{miss.s}-club"
        print(
            f"MISMATCH on graph {miss.seed_index} (n={miss.n}, {label}): "
            f"branching={miss.branching} brute={miss.brute}"
        )
    print(
        f"checked {report.graphs_checked} random graphs "
        f"({report.solves} solves), {len(report.mismatches)} mismatches"
    )
    _write_report(
        args,
        build_report(
            "oracle-check",
            nodes_explored=report.solves,
            elapsed_ms=(time.perf_counter() - started) * 1000.0,
        ),
    )
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clubkit",
        description="Exact clique and 2-club solving over a clique-to-2-club "
        "instance transformation, with machine-checked verification.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON report here")
    common.add_argument(
        "--threads",
        type=int,
        default=1,
        help="accepted for interface compatibility; execution is single-threaded",
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for random corpora (oracle-check)"
    )
    common.add_argument(
        "--guard-override",
        action="store_true",
        help="lift the built-in size guards on exhaustive commands",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument(
            "--in",
            dest="input_path",
            required=True,
            metavar="PATH",
            help="input graph (DIMACS or edge list, sniffed by header)",
        )

    p = sub.add_parser("reduce", parents=[common], help="build the gadget graph")
    add_input(p)
    p.add_argument("--out", required=True, metavar="PATH", help="gadget output path")
    p.add_argument("--roles", metavar="PATH", help="role sidecar path (default: <out>.roles)")
    p.add_argument("--format", choices=[DIMACS, EDGELIST], default=DIMACS)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("solve-clique", parents=[common], help="exact maximum clique")
    add_input(p)
    p.set_defaults(func=_cmd_solve_clique)

    p = sub.add_parser("solve-2club", parents=[common], help="exact maximum s-club")
    add_input(p)
    p.add_argument("--s", type=int, default=2, help="club diameter bound (default 2)")
    p.set_defaults(func=_cmd_solve_club)

    p = sub.add_parser(
        "verify", parents=[common], help="machine-check one (H, k) instance"
    )
    add_input(p)
    p.add_argument("--k", type=int, required=True, help="clique size to test")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser(
        "sweep", parents=[common], help="exhaustive equivalence sweep over all H on n vertices"
    )
    p.add_argument("--n", type=int, required=True, help="source graph order")
    p.add_argument("--k-min", type=int, default=None)
    p.add_argument("--k-max", type=int, default=None)
    p.add_argument(
        "--engine", choices=[ENGINE_BRANCHING, ENGINE_BRUTE], default=ENGINE_BRANCHING
    )
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser(
        "distance", parents=[common], help="vertex-deletion distance to s-club cluster"
    )
    add_input(p)
    p.add_argument("--s", type=int, default=2, help="club diameter bound (default 2)")
    p.add_argument("--dmax", type=int, default=2, help="deletion budget (default 2)")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser(
        "oracle-check", parents=[common], help="cross-check solvers against brute force"
    )
    p.add_argument("--count", type=int, default=20, help="number of random graphs")
    p.set_defaults(func=_cmd_oracle_check)
    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code is None else int(exc.code)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ClubkitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
