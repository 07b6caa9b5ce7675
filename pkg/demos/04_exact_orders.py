#!/usr/bin/env python3
"""Exact multiplicative orders at desk scale, checked against the bounds,
plus the coprime-order decomposition of the combined element z.

Run:  python demos/04_exact_orders.py
"""

from gaussorder import (
    build_element,
    build_z,
    decompose_vw,
    element_order,
    exact_bound_z1,
    exact_bound_z3,
    gauss_period,
    make_params,
    subgroup_order_pair,
    verify_z_decomposition,
)

# Exact orders work whenever p^(r-1) - 1 can be fully factored (default
# guard: 96 bits). In F_16 everything is hand-checkable.
params = make_params(2, 5)
x = build_element(params, 1, 1, 1)  # theta (theta + 1)
result = element_order(params, x)
print(f"F_16: group order {result.group_order} = {result.group_order_factorization}")
print(f"ord(theta(theta+1)) = {result.order}  (z1 bound: {exact_bound_z1(2, 5)})")

gp = gauss_period(params)
print(f"ord(theta+theta^-1) = {element_order(params, gp).order}, "
      f"divides p^s - 1 = {params.p ** params.s - 1}")
print(f"subgroup <gauss period, theta(theta+1)> has order "
      f"{subgroup_order_pair(params, gp, x)}")

# v and w split the group order: b^(p^s - 1) has order dividing p^s + 1 and
# b^(p^s + 1) has order dividing p^s - 1. Closed forms avoid the big powers;
# check_powers=True verifies them against honest exponentiation.
params = make_params(5, 7)
v, w = decompose_vw(params, e=0, a=2, check_powers=True)
print(f"\nF_{{5^6}}: v = {v.to_string()}")
print(f"         w = {w.to_string()}")
print(f"ord(v) = {element_order(params, v).order} | p^s + 1 = {5**3 + 1}")
print(f"ord(w) = {element_order(params, w).order} | p^s - 1 = {5**3 - 1}")

# The combined element z multiplies a power of the Gauss period with a power
# of (a theta + 1)(theta + a)^(-1), chosen so the factor orders are coprime;
# its order is then the product of the factor orders.
z = build_z(params, 2)
report = verify_z_decomposition(params, 2)
print(f"\nz = {z.to_string()}")
print(f"branch: {report.branch}")
print(f"ord(z) = {report.order_z} = {report.order_factor1} * {report.order_factor2}, "
      f"coprime: {report.orders_coprime}")
print(f"z3 bound {exact_bound_z3(5, 7)} satisfied: {report.bound_satisfied}")
