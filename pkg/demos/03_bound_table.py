#!/usr/bin/env python3
"""Lower bounds on element orders: exact partition counts vs closed forms,
and the four built-in reference rows.

Run:  python demos/03_bound_table.py
"""

from gaussorder import (
    EXAMPLE_PAIRS,
    classify_regime,
    closed_form,
    exact_bound_z1,
    exact_bound_z2,
    exact_bound_z3,
    log2_int,
    render_table,
    table_row,
)

# Three bound families:
#   z1 for theta^e (theta^f + a) with any non-zero a,
#   z2 for the same element when a avoids {1, -1},
#   z3 for the combined element z with coprime-order factors.
p, r = 5, 7
print(f"(p, r) = ({p}, {r}), regime {classify_regime(p, r)}")
print(f"  exact z1 = U(r-2, p-1)                 = {exact_bound_z1(p, r)}")
print(f"  exact z2 = floor(U((r-3)/2, p-1)^2 /2) = {exact_bound_z2(p, r)}")
print(f"  exact z3 = floor(z1_count * ... / 2)   = {exact_bound_z3(p, r)}")

# The closed forms only hold in two regimes; in between ('gap') the exact
# counts are the only bounds on offer.
for pair in ((5, 257), (107, 97), (7, 23)):
    print(f"regime of {pair}: {classify_regime(*pair)}")

# The built-in table: three case1 rows and one case2 row.
print()
print(render_table([table_row(p, r) for (p, r) in EXAMPLE_PAIRS]))

# In case1 the exact partition count always dominates its closed form -- the
# closed form is an explicit lower estimate of the count:
print("\nexact count vs closed form (log2), case1 rows:")
for p, r in EXAMPLE_PAIRS[:3]:
    exact = log2_int(exact_bound_z1(p, r))
    closed = closed_form(p, r, "z1").log2
    print(f"  (p={p}, r={r}): exact z1 {exact:8.2f} >= closed form {closed:7.2f}")

# Note on the case2 row (107, 97): a direct evaluation of the closed forms
# gives 24.88 / 29.94 / 39.17, slightly above the reference row's 24.71 /
# 28.71 / 38.89; the package reports its own computed values.
row = table_row(107, 97)
print(f"\ncase2 computed values: {row.log2_z1:.2f} / {row.log2_z2:.2f} / {row.log2_z3:.2f}")
