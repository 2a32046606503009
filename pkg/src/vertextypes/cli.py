"""Command-line front end.

Subcommands: classify, construct, enumerate, verify, search.  Graphs stream
one graph6 string per line, so the enumerator can pipe straight into
classify.  Exit codes: 0 success / all checks pass, 1 verification or parse
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional, TextIO

from .classify import classify_all, is_pantypical, type_tuple
from .construct import (
    GENERATOR_VERSION,
    figure1_pair,
    pantypical_graph,
    t_extremal,
    vt_extremal,
)
from .generate import DEFAULT_ENUM_GUARD, EnumConstraint, enumerate_graphs
from .graph import Graph, degree_sequence, emit_edge_list, parse_edge_list
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .verify import (
    VerifyReport,
    expected_f,
    expected_g,
    find_separating_pair,
    min_pantypical_size,
    run_survey,
    search_pantypical_witness,
    search_type_witness,
    verify_theorem1,
    verify_theorem3,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--output", metavar="PATH", help="write output here instead of stdout"
    )
    p.add_argument(
        "--jobs", type=int, default=1, help="worker processes for enumeration"
    )
    p.add_argument(
        "--guard",
        type=int,
        default=DEFAULT_ENUM_GUARD,
        help=f"enumeration/canonical order guard (default {DEFAULT_ENUM_GUARD})",
    )
    p.add_argument(
        "--force-guard",
        action="store_true",
        help="acknowledge that raising --guard above the default may not finish",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="vertextypes",
        description="Vertex-type classification, extremal constructions, "
        "and exhaustive verification of the extremal values.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "classify", help="classify graphs read from a file or standard input"
    )
    p.add_argument("input", nargs="?", help="input path (default: stdin)")
    p.add_argument(
        "--format",
        choices=("graph6", "edge-list"),
        default="graph6",
        help="input format: graph6 lines (default) or a single edge list",
    )
    _add_common(p)

    p = sub.add_parser("construct", help="emit an extremal construction")
    p.add_argument("family", choices=("vt", "t", "pantypical", "figure1"))
    p.add_argument(
        "n", type=int, nargs="?", help="order (not used for figure1)"
    )
    p.add_argument(
        "--check",
        action="store_true",
        help="re-classify the construction and print the achieved count",
    )
    p.add_argument(
        "--format",
        choices=("graph6", "edge-list"),
        default="graph6",
        help="output format",
    )
    _add_common(p)

    p = sub.add_parser(
        "enumerate",
        help="stream all isomorphism classes of a given order, one graph6 per line",
    )
    p.add_argument("n", type=int)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--max-edges", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("verify", help="run verification checks, one JSON report per line")
    p.add_argument(
        "claim",
        choices=("theorem1", "theorem3", "corollary2", "figure1", "pansize"),
    )
    p.add_argument(
        "--n-max",
        type=int,
        default=None,
        help="largest order to verify exhaustively",
    )
    p.add_argument(
        "--construct-to",
        type=int,
        default=200,
        help="largest order for constructive checks",
    )
    _add_common(p)

    p = sub.add_parser(
        "search", help="re-derive a frozen witness, printed as a fixture JSON doc"
    )
    p.add_argument("objective", choices=("vt", "t", "pantypical", "figure1"))
    p.add_argument("--n", type=int, help="order (vt/t witnesses)")
    p.add_argument("--size", type=int, default=11, help="pantypical edge count")
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)

    return ap


def _check_guard(args) -> None:
    if args.guard > DEFAULT_ENUM_GUARD and not args.force_guard:
        raise _UsageError(
            f"--guard {args.guard} is above the default {DEFAULT_ENUM_GUARD}; "
            "pass --force-guard to acknowledge the exponential cost"
        )


class _UsageError(Exception):
    pass


def _emit(g: Graph, fmt: str) -> str:
    if fmt == "edge-list":
        return emit_edge_list(g)
    return emit_graph6(g).decode("ascii") + "\n"


def _classify_doc(g: Graph, line: Optional[int] = None) -> str:
    doc = {
        "graph6": emit_graph6(g).decode("ascii"),
        "order": g.n,
        "degree_sequence": list(degree_sequence(g)),
        "types": [t.value for t in classify_all(g)],
        "type_tuple": list(type_tuple(g)),
        "pantypical": is_pantypical(g),
    }
    if line is not None:
        doc = {"line": line, **doc}
    return json.dumps(doc)


def cmd_classify(args, out: TextIO) -> int:
    if args.input:
        with open(args.input, "r") as f:
            text = f.read()
    else:
        text = sys.stdin.read()
    if args.format == "edge-list":
        out.write(_classify_doc(parse_edge_list(text)) + "\n")
        return EXIT_OK
    status = EXIT_OK
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line.encode("ascii"))
        except (Graph6Error, UnicodeEncodeError, ValueError) as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = EXIT_FAIL
            continue
        out.write(_classify_doc(g, lineno) + "\n")
    return status


def cmd_construct(args, out: TextIO) -> int:
    if args.family == "figure1":
        a, b = figure1_pair()
        graphs = [a, b]
    else:
        if args.n is None:
            raise _UsageError(f"construct {args.family} needs an order argument")
        if args.family == "vt":
            graphs = [vt_extremal(args.n)]
        elif args.family == "t":
            graphs = [t_extremal(args.n)]
        else:
            graphs = [pantypical_graph(args.n)]
    for g in graphs:
        out.write(_emit(g, args.format))
    if args.check:
        for g in graphs:
            tt = type_tuple(g)
            if args.family == "vt":
                out.write(f"very_typical={tt[3]}\n")
            elif args.family == "t":
                out.write(f"typical={tt[4]}\n")
            elif args.family == "pantypical":
                out.write(f"pantypical={str(is_pantypical(g)).lower()}\n")
            else:
                out.write(f"very_weak={tt[6]}\n")
    return EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    constraint = EnumConstraint(
        min_degree=args.min_degree,
        max_degree=args.max_degree,
        max_edges=args.max_edges,
    )

    def visit(g: Graph) -> None:
        out.write(emit_graph6(g).decode("ascii") + "\n")

    enumerate_graphs(args.n, constraint, visit, guard=args.guard, jobs=args.jobs)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    reports: List[VerifyReport] = []
    if args.claim == "theorem1":
        n_max = args.n_max if args.n_max is not None else 9
        reports = verify_theorem1(
            n_max=n_max,
            construct_to=args.construct_to,
            guard=args.guard,
            jobs=args.jobs,
        )
    elif args.claim == "corollary2":
        n_max = args.n_max if args.n_max is not None else 9
        reports = [
            r
            for r in verify_theorem1(
                n_max=n_max,
                construct_to=args.construct_to,
                guard=args.guard,
                jobs=args.jobs,
            )
            if r.claim.startswith("corollary2")
        ]
    elif args.claim == "theorem3":
        n_max = args.n_max if args.n_max is not None else 8
        reports = [
            verify_theorem3(
                n_max=n_max,
                construct_to=args.construct_to,
                guard=args.guard,
                jobs=args.jobs,
            )
        ]
    elif args.claim == "figure1":
        import time

        t0 = time.perf_counter()
        a, b, ta, tb = find_separating_pair(
            (4, 4, 4, 3, 3, 2), guard=args.guard, jobs=args.jobs
        )
        witness = f"{emit_graph6(a).decode()},{emit_graph6(b).decode()}"
        found = sorted((ta[6], tb[6]))
        reports = [
            VerifyReport(
                "figure1", 6, found, [1, 3], witness, 2,
                int((time.perf_counter() - t0) * 1000), found == [1, 3],
            )
        ]
    else:  # pansize
        import time

        t0 = time.perf_counter()
        size, witness = min_pantypical_size(9, guard=args.guard, jobs=args.jobs)
        reports = [
            VerifyReport(
                "pansize", 9, size, 11, emit_graph6(witness).decode(), 0,
                int((time.perf_counter() - t0) * 1000), size == 11,
            )
        ]
    for r in reports:
        out.write(r.to_json() + "\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_search(args, out: TextIO) -> int:
    from .classify import VertexType, count_type

    if args.objective in ("vt", "t"):
        if args.n is None:
            raise _UsageError(f"search {args.objective} needs --n")
        vtype = (
            VertexType.VERY_TYPICAL if args.objective == "vt" else VertexType.TYPICAL
        )
        g = search_type_witness(
            args.n, vtype, seed=args.seed, guard=args.guard, jobs=args.jobs
        )
        doc = {
            "objective": "VT-max" if args.objective == "vt" else "T-max",
            "order": args.n,
            "graph6": emit_graph6(g).decode(),
            "achieved": count_type(g, vtype),
            "generator_version": GENERATOR_VERSION,
        }
    elif args.objective == "pantypical":
        g = search_pantypical_witness(
            size=args.size, guard=args.guard, jobs=args.jobs
        )
        doc = {
            "objective": "pantypical-min-size",
            "order": 9,
            "graph6": emit_graph6(g).decode(),
            "achieved": g.edge_count(),
            "generator_version": GENERATOR_VERSION,
        }
    else:
        a, b, ta, tb = find_separating_pair(
            (4, 4, 4, 3, 3, 2), guard=args.guard, jobs=args.jobs
        )
        doc = {
            "objective": "figure1-pair",
            "order": 6,
            "graph6": [emit_graph6(a).decode(), emit_graph6(b).decode()],
            "achieved": [ta[6], tb[6]],
            "generator_version": GENERATOR_VERSION,
        }
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


_COMMANDS = {
    "classify": cmd_classify,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "search": cmd_search,
}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        _check_guard(args)
        if args.output:
            with open(args.output, "w") as out:
                return _COMMANDS[args.command](args, out)
        return _COMMANDS[args.command](args, sys.stdout)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, LookupError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
