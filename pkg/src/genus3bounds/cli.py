"""Command-line front end: analyze / count / hermitian / dioph / zeta.

Exit codes: 0 success, 1 internal invariant violation, 2 invalid input.
All list output is deterministically ordered, and batch analysis output is
byte-identical whatever --jobs is set to.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import bounds, curves, dioph, hermite
from .arith import NotAPrimePower, factor_prime_power
from .qorder import class_number
from .weil import RealWeilPoly, RootOutOfWeilRange, admissible

__all__ = ["main", "run"]


class UsageError(ValueError):
    pass


def _emit_text(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for key in payload:
            value = payload[key]
            if isinstance(value, (dict, list)) and value:
                print(f"{pad}{key}:")
                _emit_text(value, indent + 1)
            else:
                print(f"{pad}{key}: {value}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                _emit_text(item, indent)
                print(f"{pad}-")
            else:
                print(f"{pad}{item}")
    else:
        print(f"{pad}{payload}")


def _emit(payload, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _emit_text(payload)


def _parse_q_range(spec: str):
    if ".." in spec:
        lo_s, hi_s = spec.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise UsageError(f"empty range {spec!r}")
        out = []
        for q in range(max(lo, 2), hi + 1):
            try:
                factor_prime_power(q)
            except NotAPrimePower:
                continue
            out.append(q)
        if not out:
            raise UsageError(f"no prime powers in {spec!r}")
        return out
    return [int(spec)]


def _analyze_to_dict(q: int) -> dict:
    return bounds.analyze(q).to_dict()


def _cmd_analyze(args) -> int:
    qs = _parse_q_range(args.q)
    if len(qs) == 1:
        _emit(_analyze_to_dict(qs[0]), args.json)
        return 0
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_analyze_to_dict, qs))
    else:
        reports = [_analyze_to_dict(q) for q in qs]
    _emit(reports, args.json)
    return 0


def _cmd_count(args) -> int:
    with open(args.curve_file, "r", encoding="utf-8") as fh:
        record = json.load(fh)
    model = curves.model_from_dict(record)
    counts = [curves.count_model(model, r) for r in range(1, args.rmax + 1)]
    payload = {"model": curves.model_to_dict(model), "counts": counts}
    if args.rmax >= 3:
        try:
            h = curves.zeta_from_counts(counts[0], counts[1], counts[2], model.field.q)
            payload["zeta"] = {
                "poly": list(h.coeffs),
                "type": h.integer_roots(),
            }
        except (curves.NonIntegralSolution, RootOutOfWeilRange) as exc:
            payload["zeta"] = {"error": str(exc)}
    _emit(payload, args.json)
    return 0


def _cmd_hermitian(args) -> int:
    if args.rank == 2:
        if args.mode != "enumerate":
            raise UsageError("rank 2 supports mode 'enumerate'")
        classes = hermite.enumerate_reduced2(args.d, args.disc)
        payload = {
            "d": args.d,
            "rank": 2,
            "disc": args.disc,
            "classes": [
                {**hermite.form_to_dict(c.form), "indecomposable": c.indecomposable}
                for c in classes
            ],
        }
    elif args.rank == 3:
        if args.mode != "search":
            raise UsageError("rank 3 supports mode 'search'")
        if args.disc != 1:
            raise UsageError("the rank-3 search covers discriminant 1 (unimodular) only")
        forms = hermite.search_unimodular_indecomposable3(args.d, args.entry_bound, limit=args.limit)
        payload = {
            "d": args.d,
            "rank": 3,
            "disc": 1,
            "entry_bound": args.entry_bound,
            "complete": False,  # sound search, not a classification
            "indecomposable_certified": class_number(args.d) == 1,
            "forms": [hermite.form_to_dict(f) for f in forms],
        }
    else:
        raise UsageError("rank must be 2 or 3")
    _emit(payload, args.json)
    return 0


def _cmd_dioph(args) -> int:
    if args.emax < 1:
        raise UsageError("--emax must be >= 1")
    if args.family == "5e-x2x3":
        result = dioph.check_5e_family(args.emax, require_congruence=not args.no_congruence)
    elif args.family in ("pow-eq-x2x1", "pow-eq-x2x3"):
        if args.p is None:
            raise UsageError(f"--p is required for family {args.family}")
        a = 1 if args.family.endswith("x1") else 3
        result = dioph.solve_pow_eq_quadratic(args.p, a, args.emax, odd_only=args.odd_only)
    elif args.family == "pow-eq-x2-plus-c":
        if args.p is None or args.c is None:
            raise UsageError("--p and --c are required for family pow-eq-x2-plus-c")
        result = dioph.solve_x2_plus_c(args.c, args.p, args.emax)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    payload = result.to_dict()
    if not result.solutions and result.family == "pow-eq-x2xa":
        # look for a modulus certifying emptiness for every exponent
        certifying = None
        for modulus in range(2, 61):
            if dioph.mod_obstruction(result.params["p"], result.params["a"], modulus):
                certifying = modulus
                break
        payload["mod_obstruction"] = certifying
        payload["empty_for_all_e"] = certifying is not None
    _emit(payload, args.json)
    return 0


def _cmd_zeta(args) -> int:
    if (args.type is None) == (args.poly is None):
        raise UsageError("give exactly one of --type or --poly")
    try:
        if args.type is not None:
            h = RealWeilPoly.from_type(args.type, args.q)
        else:
            h = RealWeilPoly(args.poly, args.q)
        verdict = admissible(h, rmax=args.rmax)
        payload = {
            "q": args.q,
            "poly": list(h.coeffs),
            "type": h.integer_roots(),
            "admissible": verdict.ok,
            "counts": list(verdict.counts),
            "violations": [v.describe() for v in verdict.violations],
        }
    except (RootOutOfWeilRange, ValueError) as exc:
        payload = {"q": args.q, "admissible": False, "violations": [str(exc)]}
    _emit(payload, args.json)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genus3bounds",
        description="Bounds and certificates for point counts of genus-3 curves over finite fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="bound report for a prime power or range (e.g. 7 or 2..50)")
    p.add_argument("q", help="prime power, or inclusive range lo..hi (non prime powers skipped)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for ranges")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("count", help="count points of a curve model file over F_{q^r}")
    p.add_argument("curve_file", help="JSON model record (see curves module docstring)")
    p.add_argument("-r", "--rmax", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("hermitian", help="rank-2 class enumeration / rank-3 unimodular search")
    p.add_argument("mode", choices=["enumerate", "search"])
    p.add_argument("--d", type=int, required=True, help="negative quadratic discriminant")
    p.add_argument("--rank", type=int, required=True, choices=[2, 3])
    p.add_argument("--disc", type=int, default=1, help="form discriminant (rank 2) / 1 (rank 3)")
    p.add_argument("--entry-bound", type=int, default=6)
    p.add_argument("--limit", type=int, default=None, help="stop the rank-3 search after this many hits")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hermitian)

    p = sub.add_parser("dioph", help="bounded diophantine scans with exhaustiveness flags")
    p.add_argument(
        "--family",
        required=True,
        choices=["pow-eq-x2x1", "pow-eq-x2x3", "pow-eq-x2-plus-c", "5e-x2x3"],
    )
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--emax", type=int, required=True)
    p.add_argument("--odd-only", action="store_true", help="restrict to odd exponents")
    p.add_argument("--no-congruence", action="store_true", help="5e family: drop the 5 | 2x-1 filter")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_dioph)

    p = sub.add_parser("zeta", help="admissibility of a zeta type / real Weil polynomial")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--type", type=int, nargs="+", default=None, help="integer type entries x1 x2 x3")
    p.add_argument("--poly", type=int, nargs="+", default=None, help="monic coefficients, constant first")
    p.add_argument("--rmax", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_zeta)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, NotAPrimePower, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())
