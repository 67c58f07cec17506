"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd

import mpmath

from .asymptotics import DEFAULT_PRECISION, asymptotic_ratio, mahler_report
from .errors import BadGcd, NoConvergence, TooLarge, UnitCircleRoot, YGraphError
from .graph import validate_params
from .jacobian import jacobian_of, jacobian_y111_closed
from .oracles import MAX_SUITE_N, consistency_suite
from .trees import tree_count

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

JACOBIAN_METHODS = {"snf": "full", "reduced": "reduced", "closed": None}


class InputError(Exception):
    pass


def _emit(obj: dict, args) -> None:
    if not args.timing:
        obj.pop("timing_ms", None)
    print(json.dumps(obj, sort_keys=False))


def _params(args):
    try:
        return validate_params(args.n, args.k, args.l, args.m)
    except YGraphError as exc:
        raise InputError(str(exc)) from exc


def cmd_jacobian(args) -> int:
    p = _params(args)
    start = time.perf_counter()
    if args.method == "closed":
        if p.jumps != (1, 1, 1):
            raise InputError("closed form requires k = l = m = 1")
        if p.n < 4:
            raise InputError(f"closed form requires n >= 4, got n={p.n}")
        group = jacobian_y111_closed(p.n)
    else:
        group = jacobian_of(p, JACOBIAN_METHODS[args.method])
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        _emit(
            {
                "params": p.as_dict(),
                "method": args.method,
                "invariant_factors": list(group.invariant_factors),
                "free_rank": group.free_rank,
                "order": str(group.order),
                "timing_ms": round(elapsed, 3),
            },
            args,
        )
    else:
        print(f"Jac(Y({p.n};{p.k},{p.l},{p.m})) via {args.method}")
        print("invariant factors: " + (" ".join(map(str, group.invariant_factors)) or "(trivial)"))
        print(f"free rank: {group.free_rank}")
        print(f"order: {group.order}")
        if args.timing:
            print(f"time: {elapsed:.1f} ms")
    return EXIT_OK


def cmd_trees(args) -> int:
    p = _params(args)
    start = time.perf_counter()
    if args.method == "closed" and (p.jumps != (1, 1, 1) or p.n < 4):
        raise InputError("closed form requires k = l = m = 1 and n >= 4")
    try:
        if args.method == "chebyshev":
            from .trees import tree_count_chebyshev

            report = tree_count_chebyshev(p, args.precision, args.max_precision)
        else:
            report = tree_count(p, args.method)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    elapsed = (time.perf_counter() - start) * 1000
    if args.json:
        obj = {"params": p.as_dict(), "method": report.method, "value": str(report.value)}
        if report.precision_used is not None:
            obj["precision_bits"] = report.precision_used
        obj["timing_ms"] = round(elapsed, 3)
        _emit(obj, args)
    else:
        print(report.value)
        if report.precision_used is not None:
            print(f"precision: {report.precision_used} bits")
        if args.timing:
            print(f"time: {elapsed:.1f} ms")
    return EXIT_OK


def cmd_asymptotics(args) -> int:
    k, l, m = args.k, args.l, args.m
    if min(k, l, m) < 1:
        raise InputError("jumps must be positive")
    g = gcd(gcd(k, l), m)
    if g != 1:
        raise InputError(f"gcd(k,l,m)={g}; growth constant requires gcd(k,l,m)=1")
    start = time.perf_counter()
    try:
        rep = mahler_report(k, l, m, args.precision, args.grid)
    except UnitCircleRoot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    elapsed = (time.perf_counter() - start) * 1000
    s = k * k + l * l + m * m
    digits = 20
    if args.json:
        _emit(
            {
                "params": {"k": k, "l": l, "m": m},
                "method": "mahler",
                "values": {
                    "A_roots": mpmath.nstr(rep.A_roots, digits),
                    "A_integral": mpmath.nstr(rep.A_integral, digits),
                    "relative_difference": mpmath.nstr(rep.relative_gap, 3),
                },
                "asymptotic_law": f"tau(n) ~ n/{s} * A^n",
                "precision_bits": rep.precision,
                "timing_ms": round(elapsed, 3),
            },
            args,
        )
    else:
        print(f"A_{{{k},{l},{m}}} (roots)    = {mpmath.nstr(rep.A_roots, digits)}")
        print(f"A_{{{k},{l},{m}}} (integral) = {mpmath.nstr(rep.A_integral, digits)}")
        print(f"relative difference  = {mpmath.nstr(rep.relative_gap, 3)}")
        print(f"tau(n) ~ n/{s} * A^n")
        if args.timing:
            print(f"time: {elapsed:.1f} ms")
    return EXIT_OK


def _sweep_row(job):
    n, k, l, m, A = job
    p = validate_params(n, k, l, m)
    tau = tree_count(p, "resultant").value
    group = jacobian_of(p, "reduced")
    ratio = "" if A is None else mpmath.nstr(asymptotic_ratio(tau, k, l, m, n, A), 12)
    return [n, str(tau), " ".join(map(str, group.invariant_factors)), ratio]


def cmd_sweep(args) -> int:
    k, l, m = args.k, args.l, args.m
    ns = list(range(args.n_from, args.n_to + 1))
    for n in ns:
        try:
            validate_params(n, k, l, m)
        except YGraphError as exc:
            raise InputError(f"n={n}: {exc}") from exc
    A = None
    if ns and gcd(gcd(k, l), m) == 1:
        A = mahler_report(k, l, m).A_roots
    jobs = [(n, k, l, m, A) for n in ns]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_sweep_row, jobs))
    else:
        rows = [_sweep_row(j) for j in jobs]
    try:
        with open(args.out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["n", "tau", "jacobian", "ratio"])
            w.writerows(rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_FAIL
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = consistency_suite(args.max_n, chebyshev=not args.no_chebyshev)
    except TooLarge as exc:
        raise InputError(str(exc)) from exc
    enum_cases = sum(1 for c in report.cases if "enumeration" in c.tree_counts)
    print(f"{len(report.cases)} parameter sets, {report.checks_run} checks, "
          f"{enum_cases} with enumeration oracle")
    bad = report.first_failure()
    if bad is None:
        print("all checks passed")
        return EXIT_OK
    p = bad.params
    print(f"FAILED at (n,k,l,m)=({p.n},{p.k},{p.l},{p.m}): {'; '.join(bad.failures)}")
    return EXIT_FAIL


def _add_graph_args(sp, with_n=True):
    if with_n:
        sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--json", action="store_true", help="structured output")
    sp.add_argument("--timing", action="store_true", help="report wall time")


def _max_n(text: str) -> int:
    v = int(text)
    if not 1 <= v <= MAX_SUITE_N:
        raise argparse.ArgumentTypeError(f"--max-n must be between 1 and {MAX_SUITE_N}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ygraph",
        description="Jacobian groups, spanning-tree counts and growth constants of Y-graphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("jacobian", help="Jacobian group of Y(n;k,l,m)")
    _add_graph_args(sp)
    sp.add_argument("--method", choices=list(JACOBIAN_METHODS), default="reduced")
    sp.set_defaults(func=cmd_jacobian)

    sp = sub.add_parser("trees", help="number of spanning trees")
    _add_graph_args(sp)
    sp.add_argument(
        "--method", choices=["kirchhoff", "resultant", "chebyshev", "closed"], default="resultant"
    )
    sp.add_argument("--precision", type=int, default=64, help="starting precision in bits")
    sp.add_argument("--max-precision", type=int, default=None,
                    help="precision cap in bits (default 4096 or $YGRAPH_MAX_PRECISION)")
    sp.set_defaults(func=cmd_trees)

    sp = sub.add_parser("asymptotics", help="growth constant A_{k,l,m}")
    _add_graph_args(sp, with_n=False)
    sp.add_argument("--precision", type=int, default=DEFAULT_PRECISION)
    sp.add_argument("--grid", type=int, default=2**14, help="quadrature points")
    sp.set_defaults(func=cmd_asymptotics)

    sp = sub.add_parser("sweep", help="CSV table over a range of n")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n-from", type=int, required=True)
    sp.add_argument("--n-to", type=int, required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("verify", help="cross-check every route on small graphs")
    sp.add_argument("--max-n", type=_max_n, required=True)
    sp.add_argument("--no-chebyshev", action="store_true", help="skip the numeric route")
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BadGcd) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
