#!/usr/bin/env python3
"""Tour of the field layer: building F_p(theta) = F_p[x]/Phi_r(x) and the
named elements the rest of the package studies.

Run:  python demos/01_field_arithmetic.py
"""

from gaussorder import (
    FieldElement,
    FieldParams,
    build_element,
    cyclotomic_is_irreducible,
    frobenius,
    gauss_period,
    make_params,
    theta,
)

# F_16 presented as F_2[x]/Phi_5(x): the smallest interesting case.
params = make_params(2, 5)
print(f"params: p={params.p}, r={params.r}, field size p^(r-1) = {params.p ** params.extension_degree}")
print(f"multiplicative group order: {params.group_order}")

# theta is the coset of x; it has order exactly r, and theta^(r-1) is the
# first power that needs reduction modulo Phi_r.
t = theta(params)
for k in range(6):
    print(f"theta^{k} = {(t ** k).to_string()}")

# The Gauss period theta + theta^(-1). Over F_2 with r = 5 its canonical
# coefficients are 1 + theta^2 + theta^3.
gp = gauss_period(params)
print(f"\ngauss period theta + theta^-1 = {gp.to_string()}")
print(f"same element via theta^-1 (theta^2 + 1): {build_element(params, 4, 2, 1) == gp}")

# The general candidate element theta^e (theta^f + a).
x = build_element(params, 1, 1, 1)
print(f"\ntheta (theta + 1) = {x.to_string()}")
print(f"x * x^-1 = {(x * x.inv()).to_string()}")

# Frobenius x -> x^(p^k) is a coefficient permutation here; it agrees with
# honest exponentiation.
print(f"\nfrobenius(x, 1) == x^p: {frobenius(params, x, 1) == x ** params.p}")
print(f"frobenius fixes the gauss period at k = s: {frobenius(params, gp, params.s) == gp}")

# Elements serialize to a small wire format and round-trip.
wire = x.to_string()
print(f"\nwire format: {wire!r} -> {FieldElement.from_string(wire) == x}")

# Phi_r is irreducible over F_p exactly when p is primitive mod r. The raw
# FieldParams constructor skips validation, so the reducible case is visible:
print(f"\nPhi_5 irreducible over F_2: {cyclotomic_is_irreducible(params)}")
print(f"Phi_7 irreducible over F_2: {cyclotomic_is_irreducible(FieldParams(2, 7))} "
      "(2 has order 3 mod 7; Phi_7 splits into two cubics)")
