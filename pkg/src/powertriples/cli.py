"""Command-line interface: verification, construction, families, curves and
searches with machine-readable output.

Exit codes: 0 = success/verified, 1 = verified-false (a tuple that fails, a
construction with no result, a proof report with a failing identity),
2 = usage error.  Output is JSON by default (CSV where it makes sense) and is
byte-identical across runs for identical inputs; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import curves, families, search, triples
from .rationals import format_rational, parse_gaussian, parse_rational

SCHEMA_VERIFY = "powertriples/verify-v1"
SCHEMA_CONSTRUCT = "powertriples/construct-v1"
SCHEMA_CURVE = "powertriples/curve-v1"
SCHEMA_SEARCH_RS = "powertriples/search-rs-v1"
SCHEMA_PELL = "powertriples/pell-v1"
SCHEMA_TAXICAB = "powertriples/taxicab-v1"
SCHEMA_EULER = "powertriples/euler-octic-v1"


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("POWERTRIPLES_THREADS", "1")))
    except ValueError:
        return 1


def _emit_json(payload, args=None) -> None:
    print(json.dumps(payload, indent=2))


def _emit_csv(rows, fieldnames) -> None:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _parse_elements(raw, gaussian: bool):
    if gaussian:
        return [parse_gaussian(item) for item in raw]
    return [parse_rational(item) for item in raw]


def _cmd_verify(args) -> int:
    elements = _parse_elements(args.elements, args.gaussian)
    result = triples.verify_tuple(elements, args.k)
    if isinstance(result, triples.PowerTuple):
        payload = {"schema": SCHEMA_VERIFY, "verified": True, **result.to_json()}
        _emit_json(payload, args)
        return 0
    payload = {"schema": SCHEMA_VERIFY, "verified": False, **result.to_json()}
    _emit_json(payload, args)
    return 1


def _cmd_construct(args) -> int:
    r = parse_rational(args.r)
    s = parse_rational(args.s)
    triple = triples.construct_regular(r, s, args.k)
    if triple is None:
        _emit_json(
            {
                "schema": SCHEMA_CONSTRUCT,
                "found": False,
                "r": format_rational(r),
                "s": format_rational(s),
                "k": args.k,
            },
            args,
        )
        return 1
    _emit_json({"found": True, **triple.to_json()}, args)
    return 0


def _family_param(args):
    if args.family == "fam2k":
        if args.kparam is None:
            raise ValueError("fam2k requires --kparam")
        return (parse_rational(args.kparam), parse_rational(args.param))
    return parse_rational(args.param)


def _cmd_family(args) -> int:
    if args.sweep is not None:
        lo, hi = args.sweep
        if lo > hi:
            raise ValueError("sweep range must satisfy LO <= HI")
        emitted = 0
        for value in range(lo, hi + 1):
            param = Fraction(value)
            if args.family == "fam2k":
                if args.kparam is None:
                    raise ValueError("fam2k requires --kparam")
                param = (parse_rational(args.kparam), param)
            try:
                point = families.family_triple(args.family, param)
            except (families.ExcludedParameterError, triples.DegenerateTripleError) as exc:
                print(f"skipping {value}: {exc}", file=sys.stderr)
                continue
            print(json.dumps(point.to_json()))
            emitted += 1
        return 0 if emitted else 1
    point = families.family_triple(args.family, _family_param(args))
    _emit_json(point.to_json(), args)
    return 0


def _cmd_prove_family(args) -> int:
    report = families.symbolic_verify(args.family)
    _emit_json(report.to_json(), args)
    return 0 if report.all_passed else 1


def _cmd_curve(args) -> int:
    params = [parse_rational(p) for p in args.params]
    curve = curves.curve_catalog(args.curve_id, *params)
    payload = {"schema": SCHEMA_CURVE, "id": args.curve_id, "coefficients": curve.to_json()}
    if args.point is not None:
        point = curves.Point(parse_rational(args.point[0]), parse_rational(args.point[1]))
        payload["point"] = point.to_json()
        payload["on_curve"] = curves.on_curve(curve, point)
        if payload["on_curve"]:
            if args.mul is not None:
                result = curves.scalar_mul(curve, args.mul, point)
                payload["multiple"] = {"n": args.mul, **result.to_json()}
            if args.order:
                payload["torsion_order"] = curves.torsion_order(curve, point)
        elif args.mul is not None or args.order:
            _emit_json(payload, args)
            return 1
    _emit_json(payload, args)
    return 0


def _cmd_search_rs(args) -> int:
    hits = search.search_integer_pairs(
        args.bound, threads=args.threads, checkpoint=args.checkpoint
    )
    rows = [h.to_json() for h in hits]
    if args.csv:
        _emit_csv(rows, ["r", "s", "t", "t_integral"])
    else:
        _emit_json({"schema": SCHEMA_SEARCH_RS, "bound": args.bound, "hits": rows}, args)
    return 0


def _cmd_pell(args) -> int:
    sols = search.pell_sequence(args.count)
    rows = [s.to_json() for s in sols]
    if args.csv:
        _emit_csv(rows, ["index", "p", "r"])
    else:
        _emit_json({"schema": SCHEMA_PELL, "count": args.count, "solutions": rows}, args)
    return 0


def _cmd_taxicab(args) -> int:
    hits = search.taxicab_search(
        args.bound,
        args.k,
        require_square_product=args.require_square_product,
        threads=args.threads,
        checkpoint=args.checkpoint,
    )
    rows = []
    for h in hits:
        row = h.to_json()
        if args.sextic_forms and h.k == 3 and h.square_product:
            dec = search.sextic_form_check(h)
            row["sextic_form"] = dec.to_json() if dec else None
        rows.append(row)
    if args.csv:
        fields = ["x", "y", "z", "w", "k", "sum", "square_product", "sqrt_witness"]
        _emit_csv([{k: v for k, v in r.items() if k in fields} for r in rows], fields)
    else:
        _emit_json(
            {"schema": SCHEMA_TAXICAB, "bound": args.bound, "k": args.k, "hits": rows},
            args,
        )
    return 0


def _cmd_gaussian(args) -> int:
    result = search.gaussian_verify_and_scan(args.box)
    _emit_json(result.to_json(), args)
    return 0


def _cmd_euler_octic(args) -> int:
    report = search.euler_reduction_check()
    payload = report.to_json()
    payload["schema"] = SCHEMA_EULER
    if args.a is not None:
        payload["evaluation"] = search.euler_quartic_parametrization(
            parse_rational(args.a)
        ).to_json()
    _emit_json(payload, args)
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powertriples",
        description="Exact higher-power rational Diophantine triple toolkit",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="run metadata on stderr"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a k-th power Diophantine tuple")
    p.add_argument("--k", type=int, required=True, help="the power k >= 2")
    p.add_argument("--gaussian", action="store_true", help="elements lie in Q(i), e.g. 28+4i")
    p.add_argument("elements", nargs="+", help="tuple elements, rationals as p/q")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="build the regular 2k-th power triple from (r, s)")
    p.add_argument("r")
    p.add_argument("s")
    p.add_argument("--k", type=int, default=2, help="half power k (default 2: quartic)")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("family", help="evaluate a parametric family at a parameter")
    p.add_argument("family", choices=families.FAMILY_IDS)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--param", help="parameter u (or alpha) as p/q")
    group.add_argument(
        "--sweep",
        nargs=2,
        type=int,
        metavar=("LO", "HI"),
        help="integer parameter sweep, one FamilyPoint JSON per line",
    )
    p.add_argument("--kparam", help="the k of fam2k")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("prove-family", help="exact symbolic identity suite for a family")
    p.add_argument("family", choices=[f for f in families.FAMILY_IDS if f != "fam2k"])
    p.set_defaults(func=_cmd_prove_family)

    p = sub.add_parser("curve", help="catalog curves and point operations")
    p.add_argument("curve_id", choices=curves.CURVE_IDS)
    p.add_argument("params", nargs="*", help="curve parameters as p/q")
    p.add_argument("--point", nargs=2, metavar=("X", "Y"), help="affine point to use")
    p.add_argument("--mul", type=int, help="compute n times the point")
    p.add_argument("--order", action="store_true", help="compute the point's torsion order")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("search-rs", help="integer (r, s) pair search")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--checkpoint", help="JSON checkpoint path for resumable runs")
    p.add_argument("--json", dest="csv", action="store_false", default=False, help="JSON output (default)")
    p.add_argument("--csv", dest="csv", action="store_true", help="CSV output")
    p.set_defaults(func=_cmd_search_rs)

    p = sub.add_parser("pell", help="solutions of p^2 - 3r^2 = 1")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--checkpoint", help="accepted for interface parity; run is instant")
    p.add_argument("--json", dest="csv", action="store_false", default=False)
    p.add_argument("--csv", dest="csv", action="store_true")
    p.set_defaults(func=_cmd_pell)

    p = sub.add_parser("taxicab", help="equal sums of two k-th powers, square-product filter")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--k", type=int, choices=(3, 4), required=True)
    p.add_argument("--require-square-product", action="store_true")
    p.add_argument("--sextic-forms", action="store_true", help="attach x^6 + h^3 y^6 decompositions")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.add_argument("--checkpoint")
    p.add_argument("--json", dest="csv", action="store_false", default=False)
    p.add_argument("--csv", dest="csv", action="store_true")
    p.set_defaults(func=_cmd_taxicab)

    p = sub.add_parser("gaussian", help="verify the Q(i) triples; scan small seeds")
    p.add_argument("--box", type=int, default=0, help="seed bound |re|,|im| <= box")
    p.set_defaults(func=_cmd_gaussian)

    p = sub.add_parser("euler-octic", help="Euler quartic parametrization identity suite")
    p.add_argument("--a", help="also evaluate the four forms at this rational")
    p.set_defaults(func=_cmd_euler_octic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verbose:
        print(f"powertriples {args.command}", file=sys.stderr)
    try:
        return args.func(args)
    except (
        ValueError,
        KeyError,
        ZeroDivisionError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
