"""Command-line front end.

Exit codes: 0 special / success, 1 usage error, 2 non-special,
3 undetermined (search bound exhausted, or undetermined census rows).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from typing import Optional, Sequence

from .arith import format_rational, parse_rational
from .census import hypothesis1_scan, pipeline_check, run_census
from .criterion import (
    DEFAULT_Q_BOUND,
    NONSPECIAL_SAMEFIELD,
    NONSPECIAL_SQUARE,
    SPECIAL,
    classify_pair,
    find_special_primes,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NONSPECIAL = 2
EXIT_UNDETERMINED = 3

JOBS_ENV = "SPECIALPAIR_JOBS"


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let "-3/4" and "-5:5" through as values
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+|:-?\d+)?$")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _pair_arg(text: str, name: str):
    try:
        x = parse_rational(text)
    except ValueError:
        raise UsageError(f"{name}: cannot parse {text!r} as a rational number") from None
    if x == 0 or abs(x) == 1:
        raise UsageError(f"{name}: {text} is excluded (must not be 0 or +-1)")
    return x


def _int_pair_arg(text: str, name: str) -> int:
    x = _pair_arg(text, name)
    if x.denominator != 1:
        raise UsageError(f"{name}: {text} must be an integer")
    return x.numerator


def class_exit_code(kind: str) -> int:
    if kind == SPECIAL:
        return EXIT_OK
    if kind in (NONSPECIAL_SQUARE, NONSPECIAL_SAMEFIELD):
        return EXIT_NONSPECIAL
    return EXIT_UNDETERMINED


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_check(args) -> int:
    alpha = _pair_arg(args.alpha, "alpha")
    beta = _pair_arg(args.beta, "beta")
    t0 = time.perf_counter()
    cls = classify_pair(alpha, beta, args.qmax)
    report = {"alpha": format_rational(alpha), "beta": format_rational(beta), **cls.to_dict()}
    report["seconds"] = round(time.perf_counter() - t0, 6)
    _emit(report)
    return class_exit_code(cls.kind)


def cmd_witnesses(args) -> int:
    alpha = _pair_arg(args.alpha, "alpha")
    beta = _pair_arg(args.beta, "beta")
    found = find_special_primes(alpha, beta, args.pmax, args.count)
    if args.format == "json":
        _emit(
            {
                "alpha": format_rational(alpha),
                "beta": format_rational(beta),
                "witnesses": [
                    {"p": w.p, "ord_alpha": w.ord_alpha, "ord_beta": w.ord_beta, "ratio": w.ratio, "k": w.k}
                    for w in found
                ],
            }
        )
    else:
        print(f"{'p':>10} {'ord_alpha':>10} {'ord_beta':>10} {'ratio':>6} {'k':>10}")
        for w in found:
            print(f"{w.p:>10} {w.ord_alpha:>10} {w.ord_beta:>10} {w.ratio:>6} {w.k:>10}")
    return EXIT_OK if found else EXIT_NONSPECIAL


def cmd_census(args) -> int:
    out = args.out or f"census_{args.nmax}.csv"
    summary = run_census(
        args.nmax,
        args.qmax,
        args.jobs,
        out=None if args.resume else out,
        resume_from=out if args.resume else None,
        timing=not args.no_timing,
    )
    text = summary.to_json()
    if args.summary:
        with open(args.summary, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return EXIT_UNDETERMINED if summary.undetermined else EXIT_OK


def _beta_range(text: str) -> range:
    m = re.fullmatch(r"(-?\d+):(-?\d+)", text)
    if not m:
        raise UsageError(f"--beta-range: expected LO:HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise UsageError("--beta-range: LO must not exceed HI")
    return range(lo, hi + 1)


def cmd_hypothesis(args) -> int:
    if args.nmax < 16:
        raise UsageError("--nmax must be at least 16")
    if args.beta is not None:
        betas = [_int_pair_arg(args.beta, "--beta")]
    elif args.beta_range is not None:
        betas = [b for b in _beta_range(args.beta_range) if b not in (-1, 0, 1)]
    else:
        raise UsageError("one of --beta or --beta-range is required")
    reports = hypothesis1_scan(args.nmax, betas)
    _emit([r.__dict__ for r in reports])
    return EXIT_OK if all(r.passes for r in reports) else EXIT_UNDETERMINED


def cmd_pipeline(args) -> int:
    if args.nmax < 16:
        raise UsageError("--nmax must be at least 16")
    alpha = _int_pair_arg(args.alpha, "alpha")
    beta = _int_pair_arg(args.beta, "beta")
    report = pipeline_check(alpha, beta, args.nmax)
    d = report.to_dict()
    _emit(d)
    return EXIT_OK if report.special_via_pipeline else EXIT_UNDETERMINED


def _default_jobs() -> int:
    env = os.environ.get(JOBS_ENV)
    if env is None:
        return 1
    try:
        jobs = int(env)
    except ValueError:
        raise UsageError(f"{JOBS_ENV}={env!r} is not an integer") from None
    return jobs


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="specialpair", description="Special pairs and order dominance.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="classify a pair alpha, beta")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--qmax", type=int, default=DEFAULT_Q_BOUND)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("witnesses", help="list primes p where the pair is special")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.add_argument("--pmax", type=int, default=10**4)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("census", help="classify all pairs 1 < |alpha|, |beta| <= N")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--qmax", type=int, default=DEFAULT_Q_BOUND)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--out", help="CSV path (default census_<nmax>.csv)")
    p.add_argument("--resume", action="store_true", help="continue the partial CSV at --out")
    p.add_argument("--summary", help="also write the summary JSON here")
    p.add_argument("--no-timing", action="store_true", help="leave the micros column empty")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hypothesis", help="count primes with (beta/q) = 1 in the sieve window")
    p.add_argument("--nmax", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--beta")
    g.add_argument("--beta-range")
    p.set_defaults(func=cmd_hypothesis)

    p = sub.add_parser("pipeline", help="primitive-root / Wieferich pipeline for one pair")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "jobs", 0) is None:
            args.jobs = _default_jobs()
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as exc:
        print(f"specialpair: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        print(f"specialpair: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
