"""Command-line surface: compute, construct, verify, oracle, table,
selfcheck.

Structured results are JSON on stdout; tables are aligned text.  Exit
codes: 0 success, 1 violated precondition or hypothesis (the message
names it), 2 I/O or parse error, 3 oracle size limit.  The oracle size
is additionally capped by the TURAN_ORACLE_MAX_N environment variable
(default 7).

Note the two spellings of the cycle parameter: `compute` and `table`
take the threshold parameter k of the formulas together with --parity
(forbidding cycles of length >= 2k+1 or >= 2k), while `verify` and
`oracle` take --k as the forbidden cycle length itself.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import selfcheck as _selfcheck_mod
from .constructors import (
    build_H,
    build_St1,
    build_St2,
    build_block_star,
    build_extremal_odd,
    build_multipartite_G,
    build_woodall_G0,
    parse_block_star_spec,
)
from .errors import GraphFormatError, OracleSizeError, ParameterError
from .family import ForbiddenFamily, is_family_free
from .formulas import ex_even, ex_even_edges, ex_odd
from .graphs import count_cliques
from .graph_io import read_graph, write_graph
from .matching import berge_tutte_certificate, max_matching
from .oracle import brute_force_ex

_ORACLE_ENV = "TURAN_ORACLE_MAX_N"
_DEFAULT_ORACLE_CAP = 7


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genturan",
        description=(
            "Exact extremal clique counts for graphs with no long cycles "
            "and bounded matching number"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="evaluate an extremal value formula")
    p.add_argument("--parity", choices=["odd", "even"], required=True,
                   help="forbid cycles of length >= 2k+1 (odd) or >= 2k (even)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--edges-only", action="store_true",
                   help="use the closed-form edge count (requires r=2)")

    p = sub.add_parser("construct", help="build a witness graph")
    p.add_argument("--witness", required=True, choices=[
        "H", "extremal-odd", "st1", "st2", "g0", "multipartite",
        "block-star-spec-file",
    ])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--q", type=int)
    p.add_argument("--spec-file")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.add_argument("--output", help="write to file instead of stdout")

    p = sub.add_parser("verify", help="check a graph against a family")
    p.add_argument("--graph", required=True, help="path to the graph file")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.add_argument("--k", type=int, help="forbid cycles of length >= k")
    p.add_argument("--s", type=int, help="require matching number <= s")
    p.add_argument("--r", type=int, default=2, help="clique order to count")

    p = sub.add_parser("oracle", help="exhaustive maximum at small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="forbid cycles of length >= k")
    p.add_argument("--s", type=int, help="require matching number <= s")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--stable", action="store_true",
                   help="omit volatile metadata (elapsed time) from output")

    p = sub.add_parser("table", help="formula values over a range of n")
    p.add_argument("--parity", choices=["odd", "even"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--edges-only", action="store_true")

    sub.add_parser("selfcheck", help="run the embedded invariant suite")
    return parser


def _compute_value(parity: str, n: int, k: int, s: int, r: int, edges_only: bool):
    if edges_only and r != 2:
        raise ParameterError(f"--edges-only requires r=2, got r={r}")
    if parity == "odd":
        return ex_odd(n, k, s, r)
    if edges_only or (k == 2 and r == 2):
        return ex_even_edges(n, k, s)
    return ex_even(n, k, s, r)


def _cmd_compute(args) -> int:
    value = _compute_value(args.parity, args.n, args.k, args.s, args.r,
                           args.edges_only)
    payload = value.to_json()
    payload["params"] = {
        "parity": args.parity, "n": args.n, "k": args.k, "s": args.s,
        "r": args.r,
    }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_construct(args) -> int:
    def need(*names):
        for name in names:
            if getattr(args, name) is None:
                raise ParameterError(
                    f"witness {args.witness!r} requires --{name.replace('_', '-')}"
                )

    if args.witness == "H":
        need("n", "k", "a")
        graph = build_H(args.n, args.k, args.a)
    elif args.witness == "extremal-odd":
        need("n", "k", "s")
        graph = build_extremal_odd(args.n, args.k, args.s, args.r)
    elif args.witness == "st1":
        need("n", "k", "q")
        graph = build_St1(args.n, args.k, args.q)
    elif args.witness == "st2":
        need("n", "k", "q")
        graph = build_St2(args.n, args.k, args.q)
    elif args.witness == "g0":
        need("n", "k")
        graph = build_woodall_G0(args.n, args.k)
    elif args.witness == "multipartite":
        need("n", "k", "s")
        graph = build_multipartite_G(args.n, args.k, args.s)
    else:
        need("spec_file")
        with open(args.spec_file, "r", encoding="ascii") as fh:
            spec = parse_block_star_spec(fh.read())
        graph = build_block_star(spec)
    text = write_graph(graph, args.format)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    with open(args.graph, "r", encoding="ascii") as fh:
        graph = read_graph(fh.read(), args.format)
    family = ForbiddenFamily(
        cycle_min_len=args.k, matching_bound=args.s, clique_order=args.r
    )
    report = is_family_free(graph, family)
    payload = {
        "n": graph.n,
        "edges": graph.num_edges,
        "family": family.to_json(),
        "family_free": report.is_free,
        "violation": None,
        "clique_count": count_cliques(graph, args.r),
        "matching_number": max_matching(graph),
        "certificate": None,
    }
    if not report.is_free:
        payload["violation"] = {
            "constraint": report.violated,
            "cycle": list(report.cycle) if report.cycle else None,
            "matching": [list(e) for e in report.matching] if report.matching else None,
        }
    if args.s is not None and report.is_free:
        try:
            cert = berge_tutte_certificate(graph, args.s)
        except ParameterError:
            cert = None
        if cert is not None:
            payload["certificate"] = {
                "vertex_set": list(cert.vertex_set),
                "component_sizes": list(cert.component_sizes),
                "slack": cert.slack,
            }
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_oracle(args) -> int:
    cap = int(os.environ.get(_ORACLE_ENV, _DEFAULT_ORACLE_CAP))
    if args.n > cap:
        raise OracleSizeError(
            f"n={args.n} exceeds the oracle cap {cap} "
            f"(raise {_ORACLE_ENV} to override)"
        )
    family = ForbiddenFamily(
        cycle_min_len=args.k, matching_bound=args.s, clique_order=args.r
    )
    result = brute_force_ex(args.n, family, jobs=max(1, args.jobs))
    print(json.dumps(result.to_json(stable=args.stable), indent=2))
    return 0


def _cmd_table(args) -> int:
    if args.n_from > args.n_to:
        raise ParameterError("--n-from must be <= --n-to")
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        try:
            value = _compute_value(args.parity, n, args.k, args.s, args.r,
                                   args.edges_only)
            rows.append((n, str(value.value), value.regime,
                         "yes" if value.asymptotic_warning else "no"))
        except ParameterError:
            rows.append((n, "n/a", "-", "-"))
    headers = ("n", "value", "case", "below-threshold")
    table = [headers] + [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    for row in table:
        print("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return 0


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "construct":
            return _cmd_construct(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "table":
            return _cmd_table(args)
        if args.command == "selfcheck":
            return _selfcheck_mod.run_selfcheck()
        raise AssertionError(f"unhandled command {args.command!r}")
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
