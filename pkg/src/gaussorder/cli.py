"""Command-line front end.

Commands: bound, order, table, verify, partitions. Exit codes are a stable
contract: 0 success, 1 mathematical violation (an order fell below a proven
bound, which would mean a bug), 2 invalid parameters, 3 resource guard
(input too large for exact desk-scale computation). GAUSSORDER_GUARD_BITS
overrides the default 96-bit factorization guard.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .arith import DEFAULT_BIT_GUARD
from .bounds import EXAMPLE_PAIRS, exact_bound_z1, exact_bound_z2, render_table, table_row
from .errors import InvalidParameter, ResourceGuard
from .field import build_element, gauss_period, make_params
from .order import element_order
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    count_partitions,
    count_partitions_bounded,
    count_partitions_nondivisible,
)
from .verify import sweep

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2
EXIT_GUARD = 3


def _guard_bits(override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get("GAUSSORDER_GUARD_BITS")
    return int(env) if env else DEFAULT_BIT_GUARD


def _cmd_bound(args) -> int:
    report = table_row(args.p, args.r, exact=args.exact)
    if args.json:
        print(json.dumps(report.to_dict()))
        return EXIT_OK
    print(f"p={report.p} r={report.r} regime={report.regime}")
    print(f"log2 group order: {report.log2_group_order:.2f}")
    for name, value in (
        ("z1", report.log2_z1),
        ("z2", report.log2_z2),
        ("z3", report.log2_z3),
    ):
        text = f"{value:.2f}" if value is not None else "n/a (gap regime)"
        print(f"log2 {name} closed form: {text}")
    if args.exact:
        print(f"exact z1 bound: {report.exact_bound_z1}")
        print(f"exact z2 bound: {report.exact_bound_z2}")
        print(f"exact z3 bound: {report.exact_bound_z3}")
    return EXIT_OK


def _cmd_order(args) -> int:
    guard = _guard_bits(args.guard)
    params = make_params(args.p, args.r)
    x = build_element(params, args.e, args.f, args.a)
    result = element_order(params, x, guard)
    b1 = exact_bound_z1(args.p, args.r)
    z2_applies = args.p >= 5 and args.a % args.p not in (1, args.p - 1)
    b2 = exact_bound_z2(args.p, args.r) if z2_applies else None
    is_gp = x == gauss_period(params)
    divisor_ok = None
    if is_gp:
        divisor_ok = (params.p**params.s - 1) % result.order == 0
    ok = result.order >= b1 and (b2 is None or result.order >= b2)
    if divisor_ok is not None:
        ok = ok and divisor_ok
    if args.json:
        print(
            json.dumps(
                {
                    "p": args.p,
                    "r": args.r,
                    "e": args.e,
                    "f": args.f,
                    "a": args.a,
                    "element": list(x.coeffs),
                    "group_order": result.group_order,
                    "group_order_factorization": [
                        list(pair) for pair in result.group_order_factorization
                    ],
                    "order": result.order,
                    "bound_z1": b1,
                    "bound_z2": b2,
                    "is_gauss_period": is_gp,
                    "gauss_period_divisor_ok": divisor_ok,
                    "pass": ok,
                }
            )
        )
        return EXIT_OK if ok else EXIT_VIOLATION
    print(f"p={args.p} r={args.r} e={args.e} f={args.f} a={args.a}")
    print(f"element: {x.to_string()}")
    print(f"group order: {result.group_order} = {result.group_order_factorization}")
    print(f"exact order: {result.order}")
    print(f"z1 bound {b1}: {'PASS' if result.order >= b1 else 'FAIL'}")
    if b2 is not None:
        print(f"z2 bound {b2}: {'PASS' if result.order >= b2 else 'FAIL'}")
    if is_gp:
        half_minus = params.p**params.s - 1
        print(
            f"element is the gauss period; order divides p^s - 1 = {half_minus}: "
            f"{'PASS' if divisor_ok else 'FAIL'}"
        )
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_table(args) -> int:
    pairs: list[tuple[int, int]] = []
    if args.examples:
        pairs.extend(EXAMPLE_PAIRS)
    custom_p = args.p or []
    custom_r = args.r or []
    if len(custom_p) != len(custom_r):
        raise InvalidParameter("--p and --r must be given the same number of times")
    pairs.extend(zip(custom_p, custom_r))
    if not pairs:
        raise InvalidParameter("nothing to tabulate: pass --examples or --p/--r pairs")
    reports = [table_row(p, r, exact=args.exact) for (p, r) in pairs]
    if args.json:
        print(json.dumps([rep.to_dict() for rep in reports]))
    else:
        print(render_table(reports))
    return EXIT_OK


def _cmd_verify(args) -> int:
    guard = _guard_bits(args.guard)
    report = sweep(args.p_max, args.r_max, guard, args.cap)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(report.summary())
        for violation in report.violations:
            print(f"VIOLATION: {violation}")
    return EXIT_OK if report.zero_violations else EXIT_VIOLATION


def _cmd_partitions(args) -> int:
    print(f"U({args.n}) = {count_partitions(args.n)}")
    if args.d is not None:
        print(f"U({args.n},{args.d}) = {count_partitions_bounded(args.n, args.d)}")
    ok = True
    if args.q_mod is not None:
        q = count_partitions_nondivisible(args.n, args.q_mod)
        print(f"Q({args.n},{args.q_mod}) = {q}")
        u = count_partitions_bounded(args.n, args.q_mod - 1)
        ok = u == q
        print(
            f"Glaisher check U({args.n},{args.q_mod - 1}) = {u} vs "
            f"Q({args.n},{args.q_mod}) = {q}: {'PASS' if ok else 'FAIL'}"
        )
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussorder",
        description=(
            "High-order elements of F_p[x]/Phi_r(x): exact multiplicative "
            "orders, partition-count lower bounds, and verification sweeps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    bound = sub.add_parser("bound", help="bound report for one (p, r)")
    bound.add_argument("p", type=int)
    bound.add_argument("r", type=int)
    bound.add_argument("--exact", action="store_true", help="include exact partition bounds")
    bound.add_argument("--json", action="store_true")
    bound.set_defaults(func=_cmd_bound)

    order = sub.add_parser(
        "order", help="exact order of theta^e (theta^f + a), checked against bounds"
    )
    for name in ("p", "r", "e", "f", "a"):
        order.add_argument(name, type=int)
    order.add_argument("--guard", type=int, default=None, metavar="BITS")
    order.add_argument("--json", action="store_true")
    order.set_defaults(func=_cmd_order)

    table = sub.add_parser("table", help="bound table for several (p, r) rows")
    table.add_argument("--examples", action="store_true", help="include the four built-in rows")
    table.add_argument("--p", type=int, action="append")
    table.add_argument("--r", type=int, action="append")
    table.add_argument("--exact", action="store_true", help="also compute exact partition bounds")
    table.add_argument("--json", action="store_true")
    table.set_defaults(func=_cmd_table)

    verify = sub.add_parser("verify", help="exhaustive verification sweep")
    verify.add_argument("--p-max", type=int, default=5)
    verify.add_argument("--r-max", type=int, default=13)
    verify.add_argument("--guard", type=int, default=None, metavar="BITS")
    verify.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    partitions = sub.add_parser("partitions", help="partition counts U(n), U(n,d), Q(n,d)")
    partitions.add_argument("n", type=int)
    partitions.add_argument("--d", type=int, default=None, help="multiplicity bound for U(n,d)")
    partitions.add_argument(
        "--q-mod", type=int, default=None, help="part-divisibility modulus for Q(n,d)"
    )
    partitions.set_defaults(func=_cmd_partitions)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidParameter as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ResourceGuard as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
