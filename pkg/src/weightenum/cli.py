"""Command-line interface.

Exit codes: 0 success, 2 input or validation problem, 3 enumeration budget
exceeded, 4 violated mathematical precondition, 5 verification mismatch.
The flat-count budget can also be set with WEIGHTENUM_FLAT_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import closed_forms
from .codefile import format_code_text, parse_code_text
from .enumerators import analyze, comprehensive, macwilliams_transform
from .errors import (
    BudgetExceeded,
    DivisionByZero,
    NotDivisible,
    ParseError,
    WeightEnumError,
)
from .oracle import verify_enumerators
from .specialize import DEFAULT_PRIMES, compare_specializations
from .wpoly import WPoly

ENV_FLAT_BUDGET = "WEIGHTENUM_FLAT_BUDGET"


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (NotDivisible, DivisionByZero) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (ParseError, WeightEnumError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightenum",
        description="Exact weight enumerators of linear codes via saturated "
                    "column sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate",
                       help="comprehensive and refined enumerators of a code")
    _common_flags(p)
    p.add_argument("--dump-lattice", metavar="FILE", default=None,
                   help="also write the flat lattice (index sets, dims, "
                        "zetas) as JSON")
    p.add_argument("input", help="generator matrix file, or - for stdin")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("macwilliams",
                       help="MacWilliams transform of omega (code file or "
                            "polynomial JSON)")
    _common_flags(p)
    p.add_argument("--k", type=int, default=None,
                   help="dimension used for the q^-k factor "
                        "(defaults to the code dimension)")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_macwilliams)

    p = sub.add_parser("mindist", help="minimum Hamming distance")
    _common_flags(p)
    p.add_argument("input")
    p.set_defaults(handler=_cmd_mindist)

    p = sub.add_parser("specialize",
                       help="compare the rational enumerator with mod-p "
                            "reductions")
    _common_flags(p)
    p.add_argument("--primes", default=None,
                   help="comma-separated primes (default: all primes <= 50)")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_specialize)

    p = sub.add_parser("verify",
                       help="brute-force check of enumerators and distance")
    _common_flags(p)
    p.add_argument("--ext", default="1",
                   help="comma-separated scalar extension degrees (default 1)")
    p.add_argument("input")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("formula", help="closed-form refined enumerators")
    fsub = p.add_subparsers(dest="formula", required=True)
    ph = fsub.add_parser("hamming", help="dual Hamming code, parameters p, m")
    _common_flags(ph)
    ph.add_argument("--p", type=int, required=True)
    ph.add_argument("--m", type=int, required=True)
    ph.set_defaults(handler=_cmd_formula_hamming)
    pm = fsub.add_parser("mds", help="MDS code of length n and dimension k")
    _common_flags(pm)
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--k", type=int, required=True)
    pm.set_defaults(handler=_cmd_formula_mds)

    p = sub.add_parser("golay",
                       help="extended binary Golay code fixtures")
    _common_flags(p)
    p.add_argument("what", choices=("rho", "generator"))
    p.set_defaults(handler=_cmd_golay)

    return parser


def _common_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--allow-zero-columns", action="store_true")
    p.add_argument("--flat-budget", type=int, default=None)
    p.add_argument("--factor-display", action="store_true",
                   help="display q-coefficients factored into (q-c) pieces "
                        "where possible (cosmetic)")


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _flat_budget(args):
    if args.flat_budget is not None:
        return args.flat_budget
    env = os.environ.get(ENV_FLAT_BUDGET)
    return int(env) if env else None


def _load_code(args):
    return parse_code_text(_read_input(args.input),
                           allow_zero_columns=args.allow_zero_columns)


def _print_poly(w: WPoly, args, label: str | None = None) -> int:
    if args.format == "json":
        print(json.dumps(w.to_json_obj()))
    elif label:
        print(f"{label}: {w.format(args.factor_display)}")
    else:
        print(w.format(args.factor_display))
    return 0


def _cmd_enumerate(args) -> int:
    code = _load_code(args)
    if args.dump_lattice:
        from .lattice import enumerate_flats
        lat = enumerate_flats(code, budget=_flat_budget(args))
        Path(args.dump_lattice).write_text(
            json.dumps(lat.to_json_obj(), indent=2) + "\n", encoding="utf-8")
    result = analyze(code, budget=_flat_budget(args))
    if args.format == "json":
        print(json.dumps(result.to_json_obj(), indent=2))
        return 0
    print(f"field: {result.field_spec}")
    print(f"n: {result.n}")
    print(f"k: {result.k}")
    print(f"flats: {result.flat_count}")
    print(f"min_distance: {result.min_distance}")
    print(f"omega: {result.omega.format(args.factor_display)}")
    print(f"rho: {result.rho.format(args.factor_display)}")
    return 0


def _cmd_macwilliams(args) -> int:
    text = _read_input(args.input)
    if text.lstrip().startswith(("[", "{")):
        w = WPoly.from_json_obj(json.loads(text))
        if args.k is None:
            raise ParseError("--k is required with a polynomial JSON input")
        k = args.k
    else:
        code = parse_code_text(text,
                               allow_zero_columns=args.allow_zero_columns)
        w = comprehensive(code, budget=_flat_budget(args))
        k = args.k if args.k is not None else code.k
    return _print_poly(macwilliams_transform(w, k), args)


def _cmd_mindist(args) -> int:
    result = analyze(_load_code(args), budget=_flat_budget(args))
    if args.format == "json":
        print(json.dumps({"min_distance": result.min_distance}))
    else:
        print(result.min_distance)
    return 0


def _cmd_specialize(args) -> int:
    primes = DEFAULT_PRIMES
    if args.primes:
        primes = [int(p) for p in args.primes.split(",") if p.strip()]
    report = compare_specializations(_load_code(args), primes,
                                     budget=_flat_budget(args))
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), indent=2))
        return 0
    print(f"generic_rho: {report.generic_rho.format(args.factor_display)}")
    for res in report.results:
        status = "matches" if res.matches_generic else "differs"
        print(f"p={res.prime}: {status}")
        if not res.matches_generic:
            print(f"  rho: {res.rho.format(args.factor_display)}")
    listed = ",".join(str(p) for p in report.exceptional_primes) or "none"
    print(f"exceptional_primes: {listed}")
    return 0


def _cmd_verify(args) -> int:
    degrees = [int(d) for d in args.ext.split(",") if d.strip()]
    report = verify_enumerators(_load_code(args), ext_degrees=degrees,
                                flat_budget=_flat_budget(args))
    if args.format == "json":
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        print(f"code: [{report.n},{report.k}] over {report.field_spec}")
        print(f"flats: {report.flat_count}")
        print(f"min_distance: predicted {report.predicted_min_distance}, "
              f"observed {report.observed_min_distance}")
        for check in report.checks:
            ok = "ok" if check.weights_match and check.census_match else "MISMATCH"
            print(f"extension degree {check.degree} (order {check.field_order}): {ok}")
        print(f"verdict: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 5


def _cmd_formula_hamming(args) -> int:
    return _print_poly(closed_forms.hamming_dual_refined(args.p, args.m), args)


def _cmd_formula_mds(args) -> int:
    return _print_poly(closed_forms.mds_refined(args.n, args.k), args)


def _cmd_golay(args) -> int:
    if args.what == "rho":
        return _print_poly(closed_forms.golay24_table_rho(), args)
    code = closed_forms.golay24_generator()
    if args.format == "json":
        print(json.dumps({
            "field": code.field.spec_string(),
            "k": code.k,
            "n": code.n,
            "rows": [list(r) for r in code.generator.entries],
        }))
    else:
        sys.stdout.write(format_code_text(code))
    return 0


if __name__ == "__main__":
    sys.exit(main())
