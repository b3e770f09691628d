"""Command line interface.

Exit codes: 0 success, 2 inadmissible parameters, 3 precision budget
exceeded, 4 internal check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .analyzer import (
    PrecisionBudgetError,
    analyze_point,
    render_text,
    report_to_dict,
    scan_records,
    write_scan,
)
from .kubota import (
    AdmissibilityError,
    PoleError,
    WeightPoint,
    lp_interpolation,
    lp_series,
)
from .padic import PadicContext, format_padic
from .qexp import (
    TwinConventionError,
    dump_lines,
    eisenstein_critical,
    eisenstein_ordinary,
)

EXIT_OK = 0
EXIT_INADMISSIBLE = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def _parse_s(text: str) -> object:
    if "/" in text:
        return Fraction(text)
    return int(text)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="eiszeta",
        description="critical Eisenstein points of the p-adic eigencurve and "
        "the Kubota-Leopoldt zeta function",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one critical Eisenstein point")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("--k", type=int, required=True)
    a.add_argument("--eps-exponent", type=int, required=True)
    a.add_argument("--precision", type=int, default=20)
    a.add_argument("--qexp-terms", type=int, default=200)
    a.add_argument("--format", choices=("json", "text"), default="text")

    s = sub.add_parser("scan", help="batch scan over primes and weights")
    s.add_argument("--p-from", type=int, required=True)
    s.add_argument("--p-to", type=int, required=True)
    s.add_argument("--k-from", type=int)
    s.add_argument("--k-to", type=int)
    s.add_argument("--i-mode", choices=("all", "branch"), default="all")
    s.add_argument("--target-branch", type=int)
    s.add_argument("--precision", type=int, default=20)
    s.add_argument("--qexp-terms", type=int, default=200)
    s.add_argument("--irregular-only", action="store_true")
    s.add_argument("--out", required=True)

    l = sub.add_parser("lp", help="evaluate the p-adic L-function on a branch")
    l.add_argument("--p", type=int, required=True)
    l.add_argument("--branch", type=int, required=True)
    l.add_argument("--s", type=str, required=True,
                   help="argument in Z_p, as an integer or fraction a/b")
    l.add_argument("--precision", type=int, default=20)
    l.add_argument("--route", choices=("series", "interpolation", "both"),
                   default="series")

    q = sub.add_parser("qexp", help="dump a q-expansion")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--eps-exponent", type=int, required=True)
    q.add_argument("--terms", type=int, default=200)
    q.add_argument("--which", choices=("crit", "ord", "twin"), required=True)
    q.add_argument("--precision", type=int, default=20)
    return ap


def _cmd_analyze(args) -> int:
    report = analyze_point(
        args.p, args.k, args.eps_exponent,
        precision=args.precision, terms=args.qexp_terms,
    )
    if args.format == "json":
        print(json.dumps(report_to_dict(report), sort_keys=True, indent=2))
    else:
        print(render_text(report))
    return EXIT_OK


def _cmd_scan(args) -> int:
    if (args.k_from is None) != (args.k_to is None):
        print("error: --k-from and --k-to must be given together", file=sys.stderr)
        return EXIT_INADMISSIBLE
    records = scan_records(
        args.p_from, args.p_to,
        k_from=args.k_from, k_to=args.k_to,
        i_mode=args.i_mode, target_branch=args.target_branch,
        precision=args.precision, terms=args.qexp_terms,
        irregular_only=args.irregular_only,
    )
    try:
        out = open(args.out, "w")
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return 1
    with out:
        n = write_scan(records, out)
    print(f"wrote {n} records to {args.out}")
    return EXIT_OK


def _cmd_lp(args) -> int:
    ctx = PadicContext(args.p, args.precision)
    s = _parse_s(args.s)
    results = []
    if args.route in ("series", "both"):
        results.append(lp_series(s, args.branch, ctx))
    if args.route in ("interpolation", "both"):
        if not isinstance(s, int) or s > 0:
            print("error: the interpolation route needs s = 1 - n with n >= 1",
                  file=sys.stderr)
            return EXIT_INADMISSIBLE
        results.append(lp_interpolation(1 - s, args.branch, ctx))
    for lv in results:
        print(f"L_p({args.s}, branch {lv.branch}) [{lv.route}] = "
              f"{format_padic(lv.value)}  (precision {lv.precision_achieved})")
    if len(results) == 2:
        from .padic import agreement_precision

        a = agreement_precision(results[0].value, results[1].value)
        print(f"routes agree modulo {args.p}^{a}")
    return EXIT_OK


def _cmd_qexp(args) -> int:
    ctx = PadicContext(args.p, args.precision)
    if args.which == "crit":
        f = eisenstein_critical(args.p, args.k, args.eps_exponent, args.terms, ctx)
    else:
        w = WeightPoint.classical(args.p, args.k, args.eps_exponent)
        if args.which == "twin":
            w.validate_critical()
            w = w.twin()
        f = eisenstein_ordinary(w, args.terms, ctx)
    for line in dump_lines(f):
        print(line)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "scan": _cmd_scan,
        "lp": _cmd_lp,
        "qexp": _cmd_qexp,
    }
    try:
        return handlers[args.command](args)
    except (AdmissibilityError, PoleError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except PrecisionBudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except TwinConventionError as e:
        print(f"internal check failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
