"""Integer partition counters and the brute-force enumeration oracle.

Counts are exact Python ints (they overflow fixed-width types quickly: already
the bounded count for n = 255, d = 4 has dozens of digits). The three counters
share one O(n^2) dynamic program over generating functions:

    unbounded parts:        prod_k 1/(1 - x^k)
    multiplicities <= d:    prod_k (1 - x^((d+1)k)) / (1 - x^k)
    parts not divis. by d:  prod_{d !| k} 1/(1 - x^k)

`enumerate_partitions_bounded` materializes the actual multiplicity vectors
and is intended as a cross-checking oracle, not a production path; it refuses
totals above a configurable cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapExceeded

DEFAULT_ENUMERATION_CAP = 60


def _require_total(n: int) -> None:
    if n < 0:
        raise ValueError("partition totals must be non-negative")


@lru_cache(maxsize=None)
def count_partitions(n: int) -> int:
    """Number of partitions of n; 1 for n = 0 (the empty partition)."""
    _require_total(n)
    counts = [0] * (n + 1)
    counts[0] = 1
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            counts[m] += counts[m - k]
    return counts[n]


@lru_cache(maxsize=None)
def count_partitions_bounded(n: int, d: int) -> int:
    """Partitions of n in which every part appears at most d times.

    Equals count_partitions(n) once d >= n; 0 for n >= 1 with d = 0.
    """
    _require_total(n)
    if d < 0:
        raise ValueError("multiplicity bound must be non-negative")
    counts = [0] * (n + 1)
    counts[0] = 1
    for k in range(1, n + 1):
        window = (d + 1) * k
        # multiply by (1 - x^((d+1)k)): descending so sources stay unmodified
        for m in range(n, window - 1, -1):
            counts[m] -= counts[m - window]
        # divide by (1 - x^k)
        for m in range(k, n + 1):
            counts[m] += counts[m - k]
    return counts[n]


@lru_cache(maxsize=None)
def count_partitions_nondivisible(n: int, d: int) -> int:
    """Partitions of n into parts not divisible by d (d >= 2 is the
    meaningful range; d = 1 forbids every part)."""
    _require_total(n)
    if d < 1:
        raise ValueError("divisibility modulus must be >= 1")
    counts = [0] * (n + 1)
    counts[0] = 1
    for k in range(1, n + 1):
        if k % d == 0:
            continue
        for m in range(k, n + 1):
            counts[m] += counts[m - k]
    return counts[n]


@dataclass(frozen=True)
class PartitionSpec:
    """One partition of `n`, stored as the multiplicity vector u_1..u_n
    (index j-1 holds u_j, the number of times part j is used)."""

    n: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if len(self.multiplicities) != self.n:
            raise ValueError("multiplicity vector must have length n")
        if sum(j * u for j, u in enumerate(self.multiplicities, start=1)) != self.n:
            raise ValueError("multiplicities do not partition n")

    def parts(self) -> list[int]:
        """The partition in conventional descending-part form."""
        out: list[int] = []
        for j in range(self.n, 0, -1):
            out.extend([j] * self.multiplicities[j - 1])
        return out


@lru_cache(maxsize=None)
def enumerate_partitions_bounded(
    n: int, d: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[PartitionSpec, ...]:
    """All multiplicity vectors with sum j*u_j = n and every u_j <= d.

    The result length always equals count_partitions_bounded(n, d); that
    agreement is the package's core counting oracle. Totals above `cap`
    raise CapExceeded.
    """
    _require_total(n)
    if n > cap:
        raise CapExceeded(n, cap)
    out: list[PartitionSpec] = []
    vector = [0] * n

    def emit_from(remaining: int, max_part: int) -> None:
        if remaining == 0:
            out.append(PartitionSpec(n, tuple(vector)))
            return
        for part in range(min(max_part, remaining), 0, -1):
            for mult in range(1, min(d, remaining // part) + 1):
                vector[part - 1] = mult
                emit_from(remaining - part * mult, part - 1)
            vector[part - 1] = 0

    if d >= 1 or n == 0:
        emit_from(n, n)
    return tuple(out)
