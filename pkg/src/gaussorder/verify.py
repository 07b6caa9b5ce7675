"""Brute-force oracles and the exhaustive verification sweep.

The oracles re-run the counting mechanics behind the partition bounds on
concrete small instances: they materialize every bounded partition, evaluate
the corresponding product of conjugate factors in the field, and confirm the
products are pairwise distinct (the count of distinct products must *equal*
the partition count, not merely reach it). The sweep then instantiates every
admissible parameter tuple in a range and checks exact orders against every
bound this package computes, recording violations instead of raising, so a
full run always produces a report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache

from .arith import DEFAULT_BIT_GUARD, factorize, is_prime, is_primitive_root, two_adic_part
from .bounds import exact_bound_z1, exact_bound_z2, exact_bound_z3
from .errors import BadConstant, ZeroConstant
from .field import (
    FieldParams,
    build_element,
    constant,
    frobenius,
    gauss_period,
    make_params,
    monomial,
    one,
)
from .order import decompose_vw, element_order, verify_z_decomposition
from .partitions import DEFAULT_ENUMERATION_CAP, enumerate_partitions_bounded

# The three product families whose pairwise distinctness is checked:
#   element  conjugates theta^(ej) (theta^j + a)              partitioning r - 2
#   w        theta^(-j(e+1)) (a theta^j + 1)(theta^j + a)     partitioning (r-3)/2
#   v        theta^(-j(e+1)) (a theta^j + 1)(theta^j + a)^-1  partitioning (r-3)/2
PRODUCT_VARIANTS = ("element", "w", "v")


@lru_cache(maxsize=None)
def _alpha_map(p: int, r: int) -> dict[int, int]:
    """residue j -> exponent alpha with p^alpha = j (mod r); p primitive."""
    out = {}
    value = 1
    for alpha in range(r - 1):
        out[value] = alpha
        value = value * p % r
    return out


def check_partition_products_distinct(
    params: FieldParams,
    e: int,
    a: int,
    variant: str,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """True iff the products over all bounded partitions are pairwise distinct.

    For each partition (u_1..u_n) of the variant's total n with every
    u_j <= p - 1, the product prod_j factor_j^(u_j) is evaluated in the
    field; distinctness of all these products is exactly what makes the
    partition count a lower bound for the generated subgroup's order.
    """
    p, r = params.p, params.r
    a %= p
    if a == 0:
        raise ZeroConstant("constant a must be non-zero in F_p")
    if variant == "element":
        total = r - 2
    elif variant in ("w", "v"):
        if a in (1, p - 1):
            raise BadConstant(f"a = {a} must avoid {{1, -1}} for variant {variant!r}")
        total = (r - 3) // 2
    else:
        raise ValueError(f"unknown variant {variant!r}")
    specs = enumerate_partitions_bounded(total, p - 1, cap)

    # factor_j and its powers up to the multiplicity bound
    unit = one(params)
    tables: list[list] = [[]]
    for j in range(1, total + 1):
        if variant == "element":
            fj = monomial(params, e * j) * (monomial(params, j) + constant(params, a))
        else:
            linear = monomial(params, j) * constant(params, a) + unit
            shifted = monomial(params, j) + constant(params, a)
            fj = monomial(params, -j * (e + 1)) * linear
            fj = fj * (shifted if variant == "w" else shifted.inv())
        powers = [unit]
        for _ in range(p - 1):
            powers.append(powers[-1] * fj)
        tables.append(powers)

    products = set()
    for spec in specs:
        value = unit
        for j, u in enumerate(spec.multiplicities, start=1):
            if u:
                value = value * tables[j][u]
        products.add(value.coeffs)
    return len(products) == len(specs)


def check_gauss_period_subfield(params: FieldParams) -> bool:
    """(theta + theta^(-1))^(p^s - 1) = 1: the Gauss period lies in the
    index-2 subfield, so its order divides p^s - 1.

    Pure exponentiation (square-and-multiply), no factoring, so this runs
    even at reference-table scale like (5, 257).
    """
    exponent = params.p**params.s - 1
    return (gauss_period(params) ** exponent).is_one()


def check_frobenius_conjugates(params: FieldParams, e: int, a: int) -> bool:
    """For every j in 1..r-2: (theta^e (theta + a))^(p^alpha_j) equals
    theta^(ej) (theta^j + a), where p^alpha_j = j (mod r)."""
    alpha = _alpha_map(params.p, params.r)
    base = build_element(params, e, 1, a)
    for j in range(1, params.r - 1):
        if frobenius(params, base, alpha[j]) != build_element(params, e * j, j, a):
            return False
    return True


@dataclass
class SweepReport:
    """Merge of all per-instance results of one verification sweep."""

    p_max: int
    r_max: int
    bit_guard: int
    enumeration_cap: int
    pairs_checked: list = dataclass_field(default_factory=list)
    pairs_skipped: list = dataclass_field(default_factory=list)
    checks: dict = dataclass_field(default_factory=dict)
    checks_skipped: dict = dataclass_field(default_factory=dict)
    violations: list = dataclass_field(default_factory=list)
    max_order_to_bound_ratio: float | None = None

    @property
    def zero_violations(self) -> bool:
        return not self.violations

    @property
    def instances_checked(self) -> int:
        return sum(self.checks.values())

    def summary(self) -> str:
        ratio = (
            f"{self.max_order_to_bound_ratio:.2f}"
            if self.max_order_to_bound_ratio is not None
            else "n/a"
        )
        return (
            f"sweep p<={self.p_max} r<={self.r_max}: "
            f"{len(self.pairs_checked)} field(s), "
            f"{self.instances_checked} checks, "
            f"{len(self.violations)} violation(s), "
            f"{len(self.pairs_skipped)} pair(s) skipped, "
            f"max log(order)/log(bound) = {ratio}"
        )

    def to_dict(self) -> dict:
        return {
            "p_max": self.p_max,
            "r_max": self.r_max,
            "bit_guard": self.bit_guard,
            "enumeration_cap": self.enumeration_cap,
            "pairs_checked": self.pairs_checked,
            "pairs_skipped": self.pairs_skipped,
            "checks": self.checks,
            "checks_skipped": self.checks_skipped,
            "violations": self.violations,
            "max_order_to_bound_ratio": self.max_order_to_bound_ratio,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SweepReport":
        return cls(**data)


def _primes_up_to(limit: int) -> list[int]:
    return [n for n in range(2, limit + 1) if is_prime(n)]


def sweep(
    p_max: int = 13,
    r_max: int = 23,
    bit_guard: int = DEFAULT_BIT_GUARD,
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP,
) -> SweepReport:
    """Check every bound and identity on every admissible (p, r, e, f, a).

    Pairs run when p and r are prime, p is primitive mod r, and the group
    order p^(r-1) - 1 fits the bit guard; others are recorded as skipped.
    Exact orders are computed directly on the f = 1 grid; for f != 1 the
    element is first checked to equal the alpha_f-fold Frobenius power of its
    f = 1 counterpart (recorded as its own check), which transports the exact
    order, since automorphism powers preserve orders. Any instance that fails
    any check lands in `violations`; nothing raises mid-sweep.
    """
    report = SweepReport(p_max, r_max, bit_guard, enumeration_cap)

    def record(kind: str, ok: bool, **context) -> None:
        report.checks[kind] = report.checks.get(kind, 0) + 1
        if not ok:
            report.violations.append({"kind": kind, **context})

    def skip(kind: str) -> None:
        report.checks_skipped[kind] = report.checks_skipped.get(kind, 0) + 1

    for r in _primes_up_to(r_max):
        if r < 3:
            continue
        for p in _primes_up_to(p_max):
            if p == r or not is_primitive_root(p, r):
                continue
            group_order = p ** (r - 1) - 1
            if group_order.bit_length() > bit_guard:
                report.pairs_skipped.append(
                    [p, r, f"group order has {group_order.bit_length()} bits"]
                )
                continue
            params = make_params(p, r)
            fact = factorize(group_order, bit_guard)
            report.pairs_checked.append([p, r])
            b1 = exact_bound_z1(p, r)
            b2 = exact_bound_z2(p, r)
            b3 = exact_bound_z3(p, r)
            half_minus = p**params.s - 1
            half_plus = p**params.s + 1

            # exact orders on the f = 1 grid
            base_orders: dict[tuple[int, int], int] = {}
            for a in range(1, p):
                for e in range(r):
                    x = build_element(params, e, 1, a)
                    base_orders[(e, a)] = element_order(params, x, bit_guard, fact).order

            # order bounds for every (e, f, a)
            for a in range(1, p):
                for f in range(1, r):
                    for e in range(r):
                        if f == 1:
                            order = base_orders[(e, a)]
                        else:
                            g = e * pow(f, -1, r) % r
                            x = build_element(params, e, f, a)
                            conjugate = frobenius(
                                params,
                                build_element(params, g, 1, a),
                                _alpha_map(p, r)[f % r],
                            )
                            matches = x == conjugate
                            record("conjugacy_transport", matches, p=p, r=r, e=e, f=f, a=a)
                            order = (
                                base_orders[(g, a)]
                                if matches
                                else element_order(params, x, bit_guard, fact).order
                            )
                        record(
                            "order_vs_z1", order >= b1,
                            p=p, r=r, e=e, f=f, a=a, order=order, bound=b1,
                        )
                        if p >= 5 and a not in (1, p - 1):
                            record(
                                "order_vs_z2", order >= b2,
                                p=p, r=r, e=e, f=f, a=a, order=order, bound=b2,
                            )
                        if order >= 2 and b1 >= 2:
                            ratio = math.log(order) / math.log(b1)
                            if (
                                report.max_order_to_bound_ratio is None
                                or ratio > report.max_order_to_bound_ratio
                            ):
                                report.max_order_to_bound_ratio = ratio

            # Gauss period: subfield membership, exact divisor, z1 bound
            gp = gauss_period(params)
            record("gauss_period_subfield", (gp**half_minus).is_one(), p=p, r=r)
            gp_order = element_order(params, gp, bit_guard, fact).order
            record(
                "gauss_period_divisor", half_minus % gp_order == 0,
                p=p, r=r, order=gp_order,
            )
            record(
                "gauss_period_bound", gp_order >= b1,
                p=p, r=r, order=gp_order, bound=b1,
            )

            # v/w closed forms against the defining big powers, and their
            # order-divisor properties, for every (e, a)
            for a in range(1, p):
                for e in range(r):
                    try:
                        v, w = decompose_vw(params, e, a, check_powers=True)
                        powers_ok = True
                    except AssertionError:
                        v, w = decompose_vw(params, e, a, check_powers=False)
                        powers_ok = False
                    record("vw_power_identity", powers_ok, p=p, r=r, e=e, a=a)
                    record(
                        "v_order_divides_half_plus", (v**half_plus).is_one(),
                        p=p, r=r, e=e, a=a,
                    )
                    record(
                        "w_order_divides_half_minus", (w**half_minus).is_one(),
                        p=p, r=r, e=e, a=a,
                    )

            # combined element z: branch condition, coprime factor orders,
            # order product, z3 bound (odd p >= 5; a outside {0, 1, -1})
            if p >= 5:
                for a in range(2, p - 1):
                    record(
                        "z_two_adic_branch",
                        (two_adic_part(half_minus) == 2)
                        != (two_adic_part(half_plus) == 2),
                        p=p, r=r, a=a,
                    )
                    zrep = verify_z_decomposition(params, a, bit_guard, fact)
                    context = dict(
                        p=p, r=r, a=a, order_z=zrep.order_z, branch=zrep.branch,
                    )
                    record("z_order_product", zrep.product_matches, **context)
                    record("z_orders_coprime", zrep.orders_coprime, **context)
                    record("z_bound", zrep.bound_satisfied, bound=b3, **context)

            # distinct-products oracle, all three variants, within the cap
            for variant in PRODUCT_VARIANTS:
                total = r - 2 if variant == "element" else (r - 3) // 2
                kind = f"products_{variant}"
                if total > enumeration_cap:
                    skip(kind)
                    continue
                for a in range(1, p):
                    if variant != "element" and a in (1, p - 1):
                        continue
                    for e in range(r):
                        record(
                            kind,
                            check_partition_products_distinct(
                                params, e, a, variant, enumeration_cap
                            ),
                            p=p, r=r, e=e, a=a,
                        )

            # Frobenius conjugate identity for every (e, a)
            for a in range(1, p):
                for e in range(r):
                    record(
                        "frobenius_conjugates",
                        check_frobenius_conjugates(params, e, a),
                        p=p, r=r, e=e, a=a,
                    )

    return report
