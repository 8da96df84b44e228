"""Command-line front end.  Every analysis is a subcommand with
machine-readable output (json, csv, or text).

Exit codes: 0 success, 1 negative predicate verdict (a non-Gorenstein cone
for `gor`, no product form for `product`, disagreeing criteria for
`crosscheck`), 2 for every error (usage, parse, budget, horizon).

JSON objects carry "schema": 1; unbounded integers are emitted as decimal
strings so they survive any JSON reader, while small structural indices
(n, fails_at, thresholds) stay plain numbers.
"""

from __future__ import annotations

import argparse
import json
import sys

from .enumeration import (
    BudgetExceeded,
    cross_check_gorenstein,
    denominator_exponents,
    detect_product_form,
    ehrhart_counts,
    h_star,
    numerator_H,
    weight_series,
)
from .exact_arith import is_palindromic, is_unimodal
from .gcd_structure import (
    failure_threshold_check,
    f_sequence,
    find_n0,
    gcd_profile,
    ratio_table,
)
from .gorenstein import (
    gorenstein_fail_index,
    lecture_hall_gorenstein,
    parse_matrix,
    simple_cone_gorenstein,
)
from .sequences import CoprimalityError, parse_sequence_spec, recognize_u_generated

SCHEMA = 1


def _emit(args, payload):
    """Render one result object in the chosen format, byte-deterministically."""
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv_rows(payload))
    else:
        for key, value in payload.items():
            if key == "schema":
                continue
            sys.stdout.write(f"{key}: {_flat(value)}\n")


def _flat(value):
    if isinstance(value, list):
        return " ".join(_flat(v) for v in value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}={_flat(v)}" for k, v in value.items()) + "}"
    if value is None:
        return "-"
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _csv_rows(payload):
    # tables serialize as real CSV; anything else flattens to key,value rows
    if "rows" in payload:
        out = ["n,gcd,normalizer,u_n"]
        out += [f"{r['n']},{r['gcd']},{r['normalizer']},{r['u']}" for r in payload["rows"]]
        return "\n".join(out) + "\n"
    if "coefficients" in payload:
        out = ["degree,coefficient"]
        out += [f"{m},{c}" for m, c in enumerate(payload["coefficients"])]
        return "\n".join(out) + "\n"
    out = ["key,value"]
    out += [f"{k},{_flat(v)}" for k, v in payload.items() if k != "schema"]
    return "\n".join(out) + "\n"


def _strs(values):
    return [str(v) for v in values]


def _realized(args):
    spec = parse_sequence_spec(args.seq)
    n = args.n
    if n is None and spec.needs_length():
        raise ValueError(f"--n is required for '{args.seq}'")
    terms = spec.realize(n)
    return spec, terms


def _gor_payload(result, extra):
    payload = {"schema": SCHEMA, **extra, "gorenstein": result.gorenstein}
    if result.gorenstein:
        payload["point"] = _strs(result.point)
    else:
        payload["fails_at"] = result.fails_at
        payload["witness"] = str(result.witness)
    return payload


def cmd_gor(args):
    if args.matrix is not None:
        if args.seq is not None:
            raise ValueError("--matrix and --seq are mutually exclusive")
        with open(args.matrix, encoding="utf-8") as fh:
            rows = parse_matrix(fh.read())
        result = simple_cone_gorenstein(rows)
        payload = _gor_payload(result, {"matrix": args.matrix})
    else:
        if args.seq is None:
            raise ValueError("one of --seq or --matrix is required")
        _, terms = _realized(args)
        result = lecture_hall_gorenstein(terms)
        payload = _gor_payload(result, {"seq": args.seq, "n": len(terms)})
    _emit(args, payload)
    return 0 if result.gorenstein else 1


def cmd_series(args):
    _, terms = _realized(args)
    f = weight_series(terms, args.m)
    _emit(
        args,
        {
            "schema": SCHEMA,
            "seq": args.seq,
            "n": len(terms),
            "m": args.m,
            "coefficients": _strs(f.coeffs),
        },
    )
    return 0


def cmd_numerator(args):
    _, terms = _realized(args)
    H = numerator_H(terms)
    _emit(
        args,
        {
            "schema": SCHEMA,
            "seq": args.seq,
            "n": len(terms),
            "denominator_exponents": _strs(denominator_exponents(terms)),
            "coefficients": _strs(H.coeffs),
            "palindromic": is_palindromic(H),
        },
    )
    return 0


def cmd_hstar(args):
    _, terms = _realized(args)
    hs = h_star(terms)
    payload = {
        "schema": SCHEMA,
        "seq": args.seq,
        "n": len(terms),
        "coefficients": _strs(hs.coeffs.coeffs),
        "denominator_exponent": str(hs.denominator_exponent),
        "power": hs.power,
        "q1": str(hs.coeffs(1)),
        "symmetric": hs.symmetric,
        "unimodal": hs.unimodal,
    }
    if args.t is not None:
        payload["ehrhart_counts"] = _strs(ehrhart_counts(terms, args.t))
    _emit(args, payload)
    return 0


def cmd_product(args):
    _, terms = _realized(args)
    f = weight_series(terms, args.m)
    exponents = detect_product_form(f, len(terms))
    payload = {
        "schema": SCHEMA,
        "seq": args.seq,
        "n": len(terms),
        "m": args.m,
        "product_form": exponents is not None,
        "exponents": None if exponents is None else _strs(exponents),
    }
    _emit(args, payload)
    return 0 if exponents is not None else 1


def cmd_gcd_table(args):
    table = ratio_table(args.l, args.b, args.n)
    payload = {
        "schema": SCHEMA,
        "l": str(args.l),
        "b": str(args.b),
        "n": args.n,
        "rows": [
            {"n": n, "gcd": str(g), "normalizer": str(norm), "u": str(u)}
            for (n, g, norm, u) in table.rows
        ],
    }
    _emit(args, payload)
    return 0


def cmd_profile(args):
    prof = gcd_profile(args.l, args.b)
    f = f_sequence(args.l, args.b, args.n) if args.n else None
    payload = {
        "schema": SCHEMA,
        "l": str(args.l),
        "b": str(args.b),
        "r": str(prof.r),
        "t": str(prof.t),
        "sigma": str(prof.sigma),
        "gamma": str(prof.gamma),
        "beta": str(prof.beta),
    }
    if f is not None:
        payload["f_sequence"] = _strs(f)
    _emit(args, payload)
    return 0


def cmd_n0(args):
    prof = gcd_profile(args.l, args.b)
    n0 = find_n0(args.l, args.b, args.horizon)
    payload = {
        "schema": SCHEMA,
        "l": str(args.l),
        "b": str(args.b),
        "n0": n0,
        "threshold": str(prof.t * (prof.r + abs(args.b))),
    }
    if args.horizon is not None:
        payload["horizon"] = args.horizon
    _emit(args, payload)
    return 0


def cmd_classify(args):
    spec, terms = _realized(args)
    payload = {
        "schema": SCHEMA,
        "seq": args.seq,
        "kind": spec.kind,
        "n": len(terms),
        "terms": _strs(terms),
    }
    try:
        u = recognize_u_generated(terms)
    except CoprimalityError as exc:
        payload["u_generation"] = {"status": "hypothesis-violated", "detail": str(exc)}
    else:
        if u is None:
            payload["u_generation"] = {"status": "not-u-generated"}
        else:
            payload["u_generation"] = {"status": "recognized", "u": _strs(u)}
    result = lecture_hall_gorenstein(terms)
    payload["gorenstein"] = result.gorenstein
    if result.gorenstein:
        payload["point"] = _strs(result.point)
    else:
        payload["fails_at"] = result.fails_at
        payload["witness"] = str(result.witness)
    if spec.kind == "recurrence":
        l, b = spec.params
        prof = gcd_profile(l, b)
        payload["profile"] = {
            "r": str(prof.r),
            "t": str(prof.t),
            "sigma": str(prof.sigma),
            "gamma": str(prof.gamma),
            "beta": str(prof.beta),
        }
        horizon = args.horizon if args.horizon is not None else 64
        payload["fail_index"] = gorenstein_fail_index(l, b, horizon)
        payload["fail_horizon"] = horizon
        if b != -1:
            verdict = failure_threshold_check(l, b)
            payload["threshold_check"] = {
                "applicable": verdict.applicable,
                "threshold": verdict.threshold,
                "actual": verdict.actual,
            }
    _emit(args, payload)
    return 0


def cmd_crosscheck(args):
    _, terms = _realized(args)
    report = cross_check_gorenstein(terms)
    _emit(
        args,
        {
            "schema": SCHEMA,
            "seq": args.seq,
            "n": len(terms),
            "recursion_gorenstein": report.recursion_gorenstein,
            "numerator_palindromic": report.numerator_palindromic,
            "hstar_palindromic": report.hstar_palindromic,
            "agree": report.agree,
        },
    )
    return 0 if report.agree else 1


def _add_seq(p, required=True):
    p.add_argument("--seq", required=required, help="sequence spec, e.g. rec:3,9 or list:1,3,5")
    p.add_argument("--n", type=int, help="number of terms to realize")


def _add_format(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lhcone",
        description="Gorenstein decisions, generating functions, and gcd invariants "
        "of lecture hall cones, in exact arithmetic",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gor", help="decide the Gorenstein property")
    _add_seq(p, required=False)
    p.add_argument("--matrix", help="file with one inequality row per line (p/q entries)")
    _add_format(p)
    p.set_defaults(func=cmd_gor)

    p = sub.add_parser("series", help="weight series coefficients through degree M")
    _add_seq(p)
    p.add_argument("--m", type=int, required=True, help="truncation degree")
    _add_format(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("numerator", help="generating function numerator")
    _add_seq(p)
    _add_format(p)
    p.set_defaults(func=cmd_numerator)

    p = sub.add_parser("hstar", help="h*-vector of the associated polytope")
    _add_seq(p)
    p.add_argument("--t", type=int, help="also report lattice counts for dilates 0..T")
    _add_format(p)
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("product", help="test for a pure product-form series")
    _add_seq(p)
    p.add_argument("--m", type=int, default=64, help="truncation degree (default 64)")
    _add_format(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("gcd-table", help="normalized consecutive-gcd table")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="number of rows")
    _add_format(p)
    p.set_defaults(func=cmd_gcd_table)

    p = sub.add_parser("profile", help="gcd profile r, t, sigma, gamma, beta")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, help="also report the reduced f-sequence to n")
    _add_format(p)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("n0", help="stable growth index for the failure bound")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--horizon", type=int, help="verification window (default adaptive)")
    _add_format(p)
    p.set_defaults(func=cmd_n0)

    p = sub.add_parser("classify", help="full report: u-generation, Gorenstein, profile")
    _add_seq(p)
    p.add_argument("--horizon", type=int, help="fail-index search horizon (default 64)")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("crosscheck", help="three-way Gorenstein criteria agreement")
    _add_seq(p)
    _add_format(p)
    p.set_defaults(func=cmd_crosscheck)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
