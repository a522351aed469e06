"""Command line entry point: one check per invocation, one report out.

Exit status: 0 when every check passes, 1 when violations were found, 64 on
a usage error.  Runs that exist to exhibit a counterexample (``repro a12``
and any ``theorem --expect-counterexample``) invert this: 0 when the
counterexample is found and 2 when it is not.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import __version__
from .arith import QQ
from .axioms import AXIOMS, HJELMSLEV, IncompatibleModel, check_axioms, check_hjelmslev, default_axioms, repro_a12
from .plane import DegenerateError, MetricModel, ModelError
from .report import Report
from .theorems.facts import FACTS, UnknownFact, check_fact
from .theorems.medians import ModelRefused, check_median_uniqueness_lemma, check_medians
from .theorems.orderfree import check_bisector_facts, check_orderfree_sl
from .theorems.sl import sl_falsification_search

EXIT_OK, EXIT_VIOLATIONS, EXIT_NOT_FOUND, EXIT_USAGE = 0, 1, 2, 64

THEOREMS = ("medians", "sl-general", "sl-orderfree", "median-uniqueness", "bisector-facts")
EXHAUSTIVE_ONLY = ("medians", "sl-orderfree", "median-uniqueness", "bisector-facts")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _output_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="print the JSON report instead of a text summary")
    p.add_argument("--out", metavar="PATH", help="also write the JSON report to PATH")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-stable output")


def _budget_options(p: argparse.ArgumentParser, default_samples: Optional[int]) -> None:
    p.add_argument("--samples", type=int, default=None, help=f"sample budget (default {default_samples})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="enumerate a finite model completely")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weakgeo", description="Exact checks of metric-plane axioms and theorems on coordinate models.")
    parser.add_argument("--version", action="version", version=f"weakgeo {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("axioms", help="check the ordered metric plane axioms")
    p.add_argument("--model", required=True)
    p.add_argument("--axiom", action="append", choices=AXIOMS, help="repeatable; default: all applicable")
    _budget_options(p, 1000)
    _output_options(p)

    p = sub.add_parser("hjelmslev", help="check H1-H5 in the motion group of a finite model")
    p.add_argument("--model", required=True)
    p.add_argument("--axiom", action="append", choices=HJELMSLEV)
    _output_options(p)

    p = sub.add_parser("theorem", help="check a theorem on a model")
    p.add_argument("name", choices=THEOREMS)
    p.add_argument("--model", required=True)
    _budget_options(p, 1000)
    p.add_argument("--expect-counterexample", action="store_true",
                   help="succeed only if a violation is found")
    p.add_argument("--char3-guard", action="store_true", help="medians: refuse characteristic 3")
    _output_options(p)

    p = sub.add_parser("facts", help="sample one auxiliary fact or lemma")
    p.add_argument("--id", required=True, dest="fact", help=", ".join(FACTS))
    p.add_argument("--model", default="q:c=1")
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    _output_options(p)

    p = sub.add_parser("repro", help="rebuild a fixed counterexample")
    p.add_argument("which", choices=("a12",))
    p.add_argument("--model", default="q:c=-2", help="rational model to build it in (default q:c=-2)")
    _output_options(p)
    return parser


def _samples(args, default: int) -> int:
    n = default if args.samples is None else args.samples
    if n <= 0:
        raise UsageError("--samples must be positive")
    return n


def _run_axioms(args, m: MetricModel) -> Report:
    if args.exhaustive and args.samples is not None:
        raise UsageError("--samples and --exhaustive are exclusive")
    ids = args.axiom or default_axioms(m)
    if args.exhaustive:
        return check_axioms(ids, m, exhaustive=True)
    return check_axioms(ids, m, samples=_samples(args, 1000), seed=args.seed)


def _run_theorem(args, m: MetricModel) -> Report:
    if args.name in EXHAUSTIVE_ONLY:
        if args.samples is not None:
            raise UsageError(f"theorem {args.name} is checked exhaustively; drop --samples")
        if args.name == "medians":
            return check_medians(m, exclude_char3_guard=args.char3_guard)
        if args.name == "median-uniqueness":
            return check_median_uniqueness_lemma(m)
        if args.name == "sl-orderfree":
            return check_orderfree_sl(m)
        return check_bisector_facts(m)
    if args.exhaustive:
        raise UsageError("sl-general is a sampled search; use --samples")
    if not m.ordered:
        raise UsageError("sl-general needs an ordered model (q:c=...)")
    return sl_falsification_search(m, _samples(args, 1000), seed=args.seed)


def _run_repro(args) -> Report:
    m = MetricModel.parse(args.model)
    if m.field is not QQ:
        raise UsageError("repro a12 is built over the rationals")
    return repro_a12(m.c)


def run(args) -> Report:
    if args.command == "repro":
        return _run_repro(args)
    m = MetricModel.parse(args.model)
    if args.command == "axioms":
        return _run_axioms(args, m)
    if args.command == "hjelmslev":
        return check_hjelmslev(m, args.axiom)
    if args.command == "theorem":
        return _run_theorem(args, m)
    if args.samples <= 0:
        raise UsageError("--samples must be positive")
    return check_fact(args.fact, m, args.samples, args.seed)


def exit_code(args, rep: Report) -> int:
    expect = args.command == "repro" or getattr(args, "expect_counterexample", False)
    if expect:
        return EXIT_OK if rep.violations else EXIT_NOT_FOUND
    return EXIT_OK if rep.ok else EXIT_VIOLATIONS


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = run(args)
    except (UsageError, ModelError, IncompatibleModel, ModelRefused, UnknownFact, DegenerateError) as exc:
        print(f"weakgeo: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = rep.to_json(timing=not args.no_timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        sys.stdout.write(text)
    else:
        if args.no_timing:
            rep.elapsed_ms = 0
        print(rep.summary())
    return exit_code(args, rep)
