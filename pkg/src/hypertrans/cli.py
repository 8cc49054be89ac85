"""Command-line interface.

Exit codes: 0 success, 1 verified counterexample, 2 bad arguments or input,
3 write failure, 4 disconnected input, 5 over the enumeration budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import extremal
from .core import average_distance, sigma_vertex, transmission
from .enumeration import enumerate_unicyclic, enumerate_unicyclic_bruteforce
from .errors import Disconnected, HypergraphError, TooLarge
from .families import FamilySpec
from .hgr import read_hgr, write_atomic, write_hgr

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_WRITE, EXIT_DISCONNECTED, EXIT_BUDGET = range(6)


def _error(msg: str, code: int) -> int:
    print(f"hypertrans: {msg}", file=sys.stderr)
    return code


def _emit_json(target: str | None, payload: dict) -> bool:
    """Write the report; returns True when it went to standard output."""
    if target is None:
        return False
    text = json.dumps(payload, indent=2) + "\n"
    if target == "-":
        sys.stdout.write(text)
        return True
    write_atomic(target, text)
    return False


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = FamilySpec.parse(args.spec)
        G = spec.build()
    except HypergraphError as exc:
        return _error(str(exc), EXIT_USAGE)
    if args.out is not None:
        try:
            write_hgr(args.out, G)
        except OSError as exc:
            return _error(f"cannot write {args.out}: {exc}", EXIT_WRITE)
    print(f"n={G.n} m={G.m} sigma={transmission(G)}")
    return EXIT_OK


def cmd_sigma(args: argparse.Namespace) -> int:
    try:
        G = read_hgr(args.path)
    except (HypergraphError, OSError) as exc:
        return _error(str(exc), EXIT_USAGE)
    try:
        sigma = transmission(G)
    except Disconnected as exc:
        return _error(f"disconnected: {exc}", EXIT_DISCONNECTED)
    print(sigma)
    if args.per_vertex:
        for u in range(G.n):
            print(f"{u} {sigma_vertex(G, u)}")
    if args.average:
        avg = average_distance(G)
        print(f"{avg.numerator}/{avg.denominator}")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    run = enumerate_unicyclic_bruteforce if args.method == "bruteforce" else enumerate_unicyclic
    result = run(args.k, args.m)
    if not _emit_json(args.json, result.to_dict()):
        print(f"classes {len(result.entries)}")
        print("sigma [" + ",".join(str(s) for s in result.sigmas) + "]")
    return EXIT_OK


def _print_extremal(report: extremal.ExtremalReport) -> None:
    status = "PASS" if report.passed else "FAIL"
    print(
        f"{status} {report.direction} k={report.k} m={report.m} "
        f"value={report.enumerated_value} expected={report.formula_value} unique={report.unique}"
    )
    for note in report.notes:
        print(f"  {note}")
    if report.witness:
        print(f"  witness: {report.witness}")


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem == "graph-remark":
        report = extremal.graph_remark_check(args.m, witness_dir=args.witness_dir)
    else:
        if args.k is None:
            return _error("--k is required for --theorem min|max", EXIT_USAGE)
        report = extremal.verify_theorem(args.k, args.m, args.theorem, witness_dir=args.witness_dir)
    if not _emit_json(args.json, report.to_dict()):
        _print_extremal(report)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_lemma(args: argparse.Namespace) -> int:
    if args.exhaustive:
        if args.id != 6:
            return _error("--exhaustive is only available for lemma 6", EXIT_USAGE)
        report = extremal.lemma6_exhaustive(max_total=args.max_total, witness_dir=args.witness_dir)
    else:
        report = extremal.check_lemma(
            args.id, args.trials, args.seed, jobs=args.jobs, witness_dir=args.witness_dir
        )
    if not _emit_json(args.json, report.to_dict()):
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} lemma {report.lemma}: {report.satisfied}/{report.trials} satisfied")
        for path in report.witnesses:
            print(f"  witness: {path}")
    return EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypertrans",
        description="Transmission (Wiener index) of uniform unicyclic hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build a named family member")
    p.add_argument("spec", help="family spec, e.g. loose-cycle:k=3,g=3 or cg-star:k=3,g=2,t=2/0")
    p.add_argument("-o", "--out", help="write the instance to this .hgr file")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sigma", help="transmission of an .hgr file")
    p.add_argument("path", type=Path)
    p.add_argument("--per-vertex", action="store_true", help="also print each vertex's distance sum")
    p.add_argument("--average", action="store_true", help="also print the exact average distance")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("enumerate", help="all unicyclic classes of a given size")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("constructive", "bruteforce"), default="constructive")
    p.add_argument("--json", metavar="PATH", help="write the full result ('-' for stdout)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check an extremal theorem by enumeration")
    p.add_argument("--theorem", choices=("min", "max", "graph-remark"), required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", metavar="PATH", help="write the report ('-' for stdout)")
    p.add_argument("--witness-dir", default="witnesses", help="where counterexamples are dumped")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma", help="seeded property check of one lemma")
    p.add_argument("--id", type=int, choices=extremal.LEMMA_IDS, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical)")
    p.add_argument("--exhaustive", action="store_true", help="lemma 6 only: every small (k, p, q)")
    p.add_argument("--max-total", type=int, default=10, help="largest p+q for --exhaustive")
    p.add_argument("--json", metavar="PATH", help="write the report ('-' for stdout)")
    p.add_argument("--witness-dir", default="witnesses", help="where counterexamples are dumped")
    p.set_defaults(func=cmd_lemma)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        return _error(str(exc), EXIT_BUDGET)
    except OSError as exc:
        return _error(str(exc), EXIT_WRITE)
    except HypergraphError as exc:
        return _error(str(exc), EXIT_USAGE)


if __name__ == "__main__":
    raise SystemExit(main())
