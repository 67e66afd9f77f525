"""Command line entry points: ``digits``, ``cf`` and ``verify``."""
from __future__ import annotations

import argparse
import csv
import sys
from fractions import Fraction

from . import diophantine
from .analysis import fmt_decimal
from .expansions import DEFAULT_MAX_PRECISION, ExpansionError, dumps_digits, generate_digits, parse_spec
from .verify import RunConfig, VerificationCase, emit_report, load_config, report_json, run_batch, run_case


def _window(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def cmd_digits(args) -> int:
    cd = generate_digits(parse_spec(args.const), args.base, args.count,
                         max_precision=args.max_precision, cache_dir=args.cache_dir)
    sys.stdout.write(dumps_digits(cd))
    return 0


def cmd_cf(args) -> int:
    cd = generate_digits(parse_spec(args.const), args.base, args.digits, max_precision=args.max_precision)
    cf = diophantine.continued_fraction(cd)
    q = [c[1] for c in cf.convergents]
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["k", "a_k", "q_k", "step_ratio"])
    for k in range(0, min(len(cf.terms), args.terms + 1)):
        ratio = ""
        if k + 1 < len(q) and q[k] >= 2:
            ratio = fmt_decimal(diophantine.log_ratio_interval(q[k + 1], q[k])[1])
        out.writerow([k, cf.terms[k], q[k], ratio])
    return 0


def cmd_verify(args) -> int:
    if args.config:
        config = load_config(args.config)
        if args.out:
            config.output_dir = args.out
        reports = run_batch(config)
        if config.output_dir is None:
            for rep in reports:
                sys.stdout.write(report_json(rep))
        return max((r.exit_code for r in reports), default=0)
    if not (args.const and args.base and args.digits and args.nmax):
        raise SystemExit("verify: need --config or all of --const --base --digits --nmax")
    case = VerificationCase(
        parse_spec(args.const), args.base, args.digits, args.nmax,
        window=args.window, mu_hint=Fraction(args.mu_hint) if args.mu_hint else None,
    )
    rep = run_case(case, RunConfig(cache_dir=args.cache_dir))
    if args.out:
        emit_report(rep, f"{args.out}/report.json", "json")
        emit_report(rep, f"{args.out}/profile.csv", "csv")
    else:
        sys.stdout.write(report_json(rep))
    return rep.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wordcomplexity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", help="certified digits in the DIGITS v1 format")
    p.add_argument("--const", required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--cache-dir")
    p.add_argument("--max-precision", type=int, default=DEFAULT_MAX_PRECISION)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("cf", help="certified partial quotients as CSV")
    p.add_argument("--const", required=True)
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--terms", type=int, default=20)
    p.add_argument("--max-precision", type=int, default=DEFAULT_MAX_PRECISION)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("verify", help="run verification cases")
    p.add_argument("--config")
    p.add_argument("--const")
    p.add_argument("--base", type=int)
    p.add_argument("--digits", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--window", type=_window)
    p.add_argument("--mu-hint")
    p.add_argument("--cache-dir")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ExpansionError, diophantine.DiophantineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
