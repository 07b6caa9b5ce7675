#!/usr/bin/env python3
"""The three partition counters and the enumeration oracle behind them.

U(n)   partitions of n
U(n,d) partitions in which every part appears at most d times
Q(n,d) partitions into parts not divisible by d

Run:  python demos/02_partition_counting.py
"""

from gaussorder import (
    count_partitions,
    count_partitions_bounded,
    count_partitions_nondivisible,
    enumerate_partitions_bounded,
)

print("n, U(n):", [(n, count_partitions(n)) for n in range(10)])

# Bounded multiplicities: U(9, 1) counts the distinct-part partitions of 9.
specs = enumerate_partitions_bounded(9, 1)
print(f"\nU(9,1) = {count_partitions_bounded(9, 1)}; the partitions themselves:")
for spec in specs:
    print("  ", "+".join(map(str, spec.parts())))

# The enumeration length always equals the DP count; that agreement is the
# package's main counting oracle.
for n, d in ((12, 2), (15, 3), (20, 1)):
    assert len(enumerate_partitions_bounded(n, d)) == count_partitions_bounded(n, d)
print("\nenumeration agrees with the DP on (12,2), (15,3), (20,1)")

# Glaisher's identity U(n, d-1) = Q(n, d), the bridge between the two
# restricted counters. Spot check it on a grid:
worst = max(
    abs(count_partitions_bounded(n, d - 1) - count_partitions_nondivisible(n, d))
    for n in range(0, 41)
    for d in range(2, 9)
)
print(f"Glaisher identity U(n,d-1) = Q(n,d) over n <= 40, d <= 8: max deviation {worst}")

# Counts grow far beyond fixed-width integers; everything stays exact.
print(f"\nU(255, 4) = {count_partitions_bounded(255, 4)}")
print(f"U(1007, 10) has {count_partitions_bounded(1007, 10).bit_length()} bits")
