"""``ect-lab`` command-line interface.

Exit status: 0 when everything checked out, 1 when a verification found a
violation, 2 on usage, input or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .coloring import Coloring, chromatic_number_exact
from .ect import apply_ect, color_classes
from .errors import ContractViolation, DimacsParseError, UnknownGraphError
from .generators import generate_random_planar, generate_sparse_planar, named_graph
from .graph import Graph
from .harness import (
    THEOREM1_CAP,
    THEOREM2_CAP,
    demo_proof_gap,
    verify_fct_sample,
    verify_theorem1_suite,
    verify_theorem2_suite,
)
from .io import read_graph, write_dimacs
from .minors import DEFAULT_BUDGET, search_k5_or_k33
from .planarity import is_planar

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def dumps(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


def _emit(text: str, out: str | None = None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)


def _graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--named", metavar="NAME", help="catalog graph, e.g. K5, C6, K3,3, petersen, split-K5")
    src.add_argument("--in", dest="infile", metavar="FILE", help="DIMACS .col file (or .json graph)")


def _load(args: argparse.Namespace) -> Graph:
    try:
        if args.named is not None:
            return named_graph(args.named)
        return read_graph(args.infile)
    except (UnknownGraphError, DimacsParseError, ContractViolation, OSError, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    if args.mode == "maximal":
        g = generate_random_planar(args.n, args.seed)
    else:
        g = generate_sparse_planar(args.n, args.seed, args.p)
    comment = f"ect-lab {__version__} gen mode={args.mode} n={args.n} seed={args.seed}"
    if args.mode == "subsample":
        comment += f" p={args.p}"
    _emit(write_dimacs(g, comment), args.out)
    return EXIT_OK


def cmd_chromatic(args: argparse.Namespace) -> int:
    _, coloring = chromatic_number_exact(_load(args))
    _emit(dumps(coloring.to_json()))
    return EXIT_OK


def cmd_ect(args: argparse.Namespace) -> int:
    g = _load(args)
    if args.coloring:
        try:
            coloring = Coloring.from_json(json.loads(Path(args.coloring).read_text(encoding="utf-8")))
            q = apply_ect(g, color_classes(g, coloring))
        except (OSError, ValueError, KeyError) as exc:
            raise UsageError(f"bad coloring: {exc}") from exc
    else:
        q = apply_ect(g, color_classes(g, chromatic_number_exact(g)[1]))
    _emit(dumps(q.to_json()))
    return EXIT_OK


def cmd_planar(args: argparse.Namespace) -> int:
    _emit(dumps(is_planar(_load(args)).to_json()))
    return EXIT_OK


def cmd_minor(args: argparse.Namespace) -> int:
    budget = None if args.budget == 0 else args.budget
    _emit(dumps(search_k5_or_k33(_load(args), budget).to_json()))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        if args.which == "theorem2":
            report = verify_theorem2_suite(
                args.count, args.n_max, args.seed, cap=args.cap or THEOREM2_CAP, workers=args.workers, catalog=args.catalog
            )
        elif args.which == "fct":
            report = verify_fct_sample(args.count, args.n_max, args.seed, mode=args.mode, p=args.p, workers=args.workers)
        else:
            report = verify_theorem1_suite(
                args.count, args.n_max, args.seed, cap=args.cap or THEOREM1_CAP, mode=args.mode, p=args.p, workers=args.workers
            )
    except ContractViolation as exc:
        raise UsageError(str(exc)) from exc
    _emit(dumps(report.to_json()), args.report)
    print(report.summary_line(), file=sys.stderr)
    return EXIT_OK if report.violations == 0 else EXIT_VIOLATION


def cmd_demo_gap(args: argparse.Namespace) -> int:
    gap = demo_proof_gap()
    _emit(dumps(gap.to_json()), args.report)
    status = "PASS" if gap.holds else "FAIL"
    print(f"demo-gap: {status} (split-K5 planar={gap.base_planar.planar}, identified planar={gap.identified_planar.planar})", file=sys.stderr)
    return EXIT_OK if gap.holds else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ect-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="random planar graph as DIMACS")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=("maximal", "subsample"), default="maximal")
    p.add_argument("--p", type=float, default=0.3, help="edge deletion probability for --mode subsample")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chromatic", help="exact chromatic number with witness coloring")
    _graph_input(p)
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("ect", help="contract color classes to the quotient graph")
    _graph_input(p)
    p.add_argument("--coloring", metavar="FILE", help='coloring JSON {"k": .., "colors": [..]}; default is a minimum coloring')
    p.set_defaults(func=cmd_ect)

    p = sub.add_parser("planar", help="planarity verdict with witness")
    _graph_input(p)
    p.set_defaults(func=cmd_planar)

    p = sub.add_parser("minor", help="search for a K5 or K3,3 minor")
    _graph_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, metavar="NODES", help="search node cap per target; 0 = unlimited")
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("verify", help="run a verification suite and emit a JSON report")
    p.add_argument("which", choices=("theorem2", "fct", "theorem1"))
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report", metavar="FILE")
    p.add_argument("--cap", type=int, help="colorings enumerated per graph (theorem2: 50, theorem1: 1000)")
    p.add_argument("--mode", choices=("maximal", "subsample"), default="maximal", help="planar instance family (fct, theorem1)")
    p.add_argument("--p", type=float, default=0.3, help="edge deletion probability for --mode subsample")
    p.add_argument("--catalog", action="store_true", help="theorem2 over the named catalog instead of random graphs")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo-gap", help="planar graph whose single identification gives K5")
    p.add_argument("--report", metavar="FILE")
    p.set_defaults(func=cmd_demo_gap)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ect-lab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
