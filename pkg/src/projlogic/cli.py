"""``projlogic verify <suite> [options]``."""

from __future__ import annotations

import argparse
import sys

from .errors import ProjLogicError
from .report import EXIT_USAGE, emit_report
from .suites import SUITE_NAMES, SuiteConfig, run_suite


def _tol_pair(text: str) -> tuple[str, float]:
    name, sep, value = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected name=value, got {text!r}")
    try:
        return name.strip(), float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="projlogic")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run verification suites and write a report")
    v.add_argument("suite", choices=[*SUITE_NAMES, "all"])
    v.add_argument("--dim", type=int, default=3)
    v.add_argument("--samples", type=int, default=20_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--tol", type=_tol_pair, action="append", default=[], metavar="NAME=VALUE")
    v.add_argument("--family")
    v.add_argument("--operators", nargs="+", default=[])
    v.add_argument("--report", default="-", help="output path; '-' for stdout")
    v.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0
    cfg = SuiteConfig(dim=args.dim, n_samples=args.samples, seed=args.seed,
                      tol_overrides=dict(args.tol), suites=[args.suite], family=args.family,
                      operators=list(args.operators), workers=args.workers)
    try:
        records = run_suite(cfg)
    except (ProjLogicError, KeyError, ValueError) as exc:
        print(f"projlogic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return emit_report(records, args.report, cfg.echo())


if __name__ == "__main__":
    sys.exit(main())
