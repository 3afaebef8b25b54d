"""Command line front end.

Five subcommands: seq prints terms, approx prints certified digits,
verify sweeps identity suites, bench races the convergent engines,
oeis compares regenerated terms against the bundled reference files.
Exit codes: 0 success, 1 a verification or consistency failure, 2 a
usage or input problem.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from . import newton as newton_mod
from .approx import Method, approximate, bench_methods
from .exact import ConsistencyError
from .products import cd_run
from .sequences import Family, SeqSpec, coupled_iterate, reduced_cd, second_order_iterate
from .verify import SUITE_NAMES, run_suite

_PLAIN_LIMIT = 60


def _plain_value(value: object) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    text = str(value)
    if isinstance(value, int) and len(text) > _PLAIN_LIMIT:
        return text[:_PLAIN_LIMIT] + f"…({value.bit_length()} bits)"
    return text


def _json_value(value: object) -> object:
    if isinstance(value, bool) or isinstance(value, float):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _emit(args: argparse.Namespace, command: str, params: dict,
          columns: list[str], rows: list[dict], record: bool = False) -> None:
    fmt = args.format
    if fmt == "json":
        doc = {
            "command": command,
            "params": params,
            "rows": [{c: _json_value(row[c]) for c in columns} for row in rows],
        }
        print(json.dumps(doc))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([str(row[c]) for c in columns])
    elif record:
        for row in rows:
            for c in columns:
                print(f"{c} {_plain_value(row[c])}")
    else:
        for row in rows:
            print(" ".join(_plain_value(row[c]) for c in columns))


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def cmd_seq(args: argparse.Namespace) -> int:
    count = args.count
    _require(count >= 1, f"count must be positive, got {count}")
    family = args.family
    _require(args.r is None or family == "product",
             "r applies to the product family only")
    params = {"family": family, "count": count}
    for key in ("k", "h", "m", "r"):
        value = getattr(args, key)
        if value is not None and not (key == "h" and value == 1):
            params[key] = value
    if args.seed is not None:
        params["seed"] = list(args.seed)

    if family in ("ab", "tilde", "uv"):
        spec = SeqSpec(Family(family), k=args.k, h=args.h)
        rows = [{"n": t.n, "a": t.num, "b": t.den}
                for t in coupled_iterate(spec, count)]
    elif family == "cd":
        spec = SeqSpec(Family.CD_REDUCED, k=args.k, m=args.m)
        rows = [{"n": t.n, "a": t.num, "b": t.den}
                for t in reduced_cd(spec.m, count)]
    elif family == "w":
        spec = SeqSpec(Family.W_FAMILY, k=args.k, seed=args.seed)
        k = spec.k
        values = second_order_iterate(2 * (k + 1), -((k - 1) ** 2),
                                      *spec.seed, count)
        rows = [{"n": n, "value": v} for n, v in enumerate(values)]
    elif family == "u2":
        spec = SeqSpec(Family.U_FAMILY, k=args.k, m=args.m, seed=args.seed)
        m = spec.m
        values = second_order_iterate(2 * (m + 1), -(m * m), *spec.seed, count)
        rows = [{"n": n, "value": v} for n, v in enumerate(values)]
    elif family == "newton":
        _require(args.k is not None, "the newton family needs --k")
        rows = [{"n": st.n, "a": st.a, "b": st.b}
                for st in newton_mod.newton_run(args.k, count - 1, args.h)]
    elif family == "product":
        _require(args.k is None and args.h == 1,
                 "the product family takes --r, not --k or --h")
        _require(args.r is not None, "the product family needs --r")
        rows = [{"n": st.n, "a": st.c, "b": st.d}
                for st in cd_run(args.r, count - 1)]
    else:
        raise ValueError(f"unknown family {family!r}")

    columns = ["n", "value"] if family in ("w", "u2") else ["n", "a", "b"]
    _emit(args, "seq", params, columns, rows)
    return 0


def cmd_approx(args: argparse.Namespace) -> int:
    result = approximate(args.k, args.h, args.digits, Method(args.method))
    params = {"k": args.k, "h": args.h, "digits": args.digits,
              "method": args.method}
    row = {
        "digits": result.digits,
        "method": result.method.value,
        "n_used": result.n_used,
        "k": result.k,
        "h": result.h,
        "error_bound": result.error_bound,
    }
    _emit(args, "approx", params,
          ["digits", "method", "n_used", "k", "h", "error_bound"],
          [row], record=True)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suite(args.suite, args.k_min, args.k_max, args.n_max)
    params = {"suite": args.suite, "k_min": args.k_min,
              "k_max": args.k_max, "n_max": args.n_max}
    rows = []
    failed = 0
    for rep in reports:
        if rep.failure is None:
            witness = "-"
        else:
            failed += 1
            f = rep.failure
            at = f"n={f.n}" if f.m is None else f"n={f.n} m={f.m}"
            witness = f"{at} lhs={f.lhs} rhs={f.rhs}"
        rows.append({
            "result": "PASS" if rep.passed else "FAIL",
            "identity": rep.identity,
            "k": rep.k,
            "n_max": rep.n_max,
            "passes": rep.passes,
            "witness": witness,
        })
    _emit(args, "verify", params,
          ["result", "identity", "k", "n_max", "passes", "witness"], rows)
    if args.format == "plain":
        print(f"{len(rows) - failed} passed, {failed} failed")
    return 1 if failed else 0


def cmd_bench(args: argparse.Namespace) -> int:
    methods = [Method(name.strip())
               for name in args.methods.split(",") if name.strip()]
    records = bench_methods(args.k, args.digits, methods)
    params = {"k": args.k, "digits": args.digits,
              "methods": [m.value for m in methods]}
    rows = [{
        "method": rec.method.value,
        "k": rec.k,
        "digits_requested": rec.digits_requested,
        "iterations": rec.iterations,
        "multiplications": rec.multiplications,
        "peak_bits": rec.peak_bits,
        "wall_time_s": rec.wall_time_s,
        "digits": rec.digits,
    } for rec in records]
    _emit(args, "bench", params,
          ["method", "k", "digits_requested", "iterations",
           "multiplications", "peak_bits", "wall_time_s", "digits"], rows)
    return 0


def cmd_oeis(args: argparse.Namespace) -> int:
    ids = [token.strip() for token in args.check.split(",") if token.strip()]
    _require(bool(ids), "no series ids given")
    data_dir = os.environ.get("SURDSEQ_DATA_DIR") or args.data_dir
    params = {"check": ids}
    if data_dir:
        params["data_dir"] = str(data_dir)
    rows = []
    mismatched = 0
    for series_id in ids:
        expected = newton_mod.reference_terms(series_id, data_dir)
        got = newton_mod.generated_terms(series_id, len(expected))
        ok = got == expected
        if not ok:
            mismatched += 1
        rows.append({"id": series_id, "terms": len(expected),
                     "result": "PASS" if ok else "FAIL"})
    _emit(args, "oeis", params, ["id", "terms", "result"], rows)
    return 1 if mismatched else 0


def _seed_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("seed must look like w0,w1")
    return int(parts[0]), int(parts[1])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="surdseq",
        description="Exact convergents to square roots of rationals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=["plain", "json", "csv"],
                       default="plain", help="output format")

    p = sub.add_parser("seq", help="print terms of one sequence family")
    p.add_argument("--family", required=True,
                   choices=["ab", "tilde", "uv", "cd", "w", "u2",
                            "newton", "product"])
    p.add_argument("--k", type=int, help="radicand parameter")
    p.add_argument("--h", type=int, default=1,
                   help="denominator parameter (uv and newton)")
    p.add_argument("--m", type=int, help="reduction parameter, k = 2m+1")
    p.add_argument("--r", type=int, help="product family parameter")
    p.add_argument("--seed", type=_seed_pair,
                   help="w0,w1 seed for the w and u2 families")
    p.add_argument("--count", type=int, required=True,
                   help="number of terms to print")
    add_format(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("approx", help="certified digits of sqrt(k/h)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.add_argument("--digits", type=int, required=True,
                   help="decimal places to certify")
    p.add_argument("--method", choices=[m.value for m in Method],
                   default="linear")
    add_format(p)
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("verify", help="run identity suites over a k range")
    p.add_argument("--suite", required=True, choices=list(SUITE_NAMES))
    p.add_argument("--k-min", type=int, default=2)
    p.add_argument("--k-max", type=int, default=12)
    p.add_argument("--n-max", type=int, default=30)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="race the convergent engines")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=int, required=True)
    p.add_argument("--methods", default="linear,jump,newton",
                   help="comma separated method names")
    add_format(p)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("oeis", help="compare regenerated terms against "
                                    "the bundled reference files")
    p.add_argument("--check", required=True,
                   help="comma separated series ids")
    p.add_argument("--data-dir", default=None,
                   help="directory of reference files (the SURDSEQ_DATA_DIR "
                        "environment variable overrides this)")
    add_format(p)
    p.set_defaults(func=cmd_oeis)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    # the whole point of this tool is huge exact integers; lift the
    # interpreter's digit cap on int-to-str conversion where present
    try:
        sys.set_int_max_str_digits(0)
    except (AttributeError, ValueError):
        pass
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    raise SystemExit(main())
