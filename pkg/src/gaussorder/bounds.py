"""Lower bounds on multiplicative orders: exact partition counts and
closed-form exponential estimates, with parameter-regime selection.

Three bound families are tracked throughout the package, named after the
columns of the summary table this module reproduces:

    z1  order of theta^e * (theta^f + a) for any non-zero a:
        at least  U(r-2, p-1)                      (U = bounded partitions)
    z2  the same element when a avoids {1, -1}:
        at least  floor(U((r-3)/2, p-1)^2 / 2)
    z3  the combined element z of field.build_z:
        at least  floor(U(r-2, p-1) * U((r-3)/2, p-1) / 2)

The partition counts are exact (dynamic programming, arbitrary precision).
The closed forms replace the counts with explicit exponentials that hold in
two regimes:

    case1   r - 3 >= 2 p^2   (extension degree large relative to p)
    case2   r - 2 < p        (characteristic large relative to r)
    gap     neither; only the exact counts apply.

Closed forms are evaluated in log space; the constant 2.5 (an approximation
of pi * sqrt(2/3) from the underlying partition estimates) is used literally,
since that is what the reference values tabulate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import WrongRegime
from .field import make_params
from .partitions import count_partitions_bounded

REGIME_CASE1 = "case1"
REGIME_CASE2 = "case2"
REGIME_GAP = "gap"

BOUND_NAMES = ("z1", "z2", "z3")

# The four built-in table rows: three in case1, one in case2.
EXAMPLE_PAIRS = ((5, 257), (3, 401), (11, 1009), (107, 97))

_LN2 = math.log(2)


def log2_int(n: int) -> float:
    """log2 of a positive int of any size (math.log2 overflows above ~2^1024)."""
    if n <= 0:
        raise ValueError("log2_int requires n >= 1")
    bits = n.bit_length()
    if bits <= 900:
        return math.log2(n)
    shift = bits - 64
    return math.log2(n >> shift) + shift


class LogBound(NamedTuple):
    """A closed-form bound value carried in log space."""

    ln: float

    @property
    def log2(self) -> float:
        return self.ln / _LN2


def classify_regime(p: int, r: int) -> str:
    """Which closed-form regime (p, r) falls in; the two cases are mutually
    exclusive (r >= 2p^2 + 3 and r < p + 2 cannot both hold)."""
    if r - 3 >= 2 * p * p:
        return REGIME_CASE1
    if r - 2 < p:
        return REGIME_CASE2
    return REGIME_GAP


def exact_bound_z1(p: int, r: int) -> int:
    """U(r-2, p-1): holds for every admissible (e, f, a)."""
    return count_partitions_bounded(r - 2, p - 1)


def exact_bound_z2(p: int, r: int) -> int:
    """floor(U((r-3)/2, p-1)^2 / 2): requires a outside {0, 1, -1}, so it is
    vacuous (but still well defined) for p = 2 and p = 3."""
    u = count_partitions_bounded((r - 3) // 2, p - 1)
    return u * u // 2


def exact_bound_z3(p: int, r: int) -> int:
    """floor(U(r-2, p-1) * U((r-3)/2, p-1) / 2) for the combined element z."""
    return (
        count_partitions_bounded(r - 2, p - 1)
        * count_partitions_bounded((r - 3) // 2, p - 1)
        // 2
    )


def closed_form_case1(p: int, r: int, which: str) -> LogBound:
    """Closed-form bounds valid for r - 3 >= 2 p^2.

    z1: (p(p-1) / 160(r-2))^sqrt(p)     * exp(2.5      sqrt((1 - 1/p)(r-2)))
    z2: (p(p-1) /  80(r-3))^(2 sqrt(p)) * exp(2.5 sqrt2 sqrt((1 - 1/p)(r-3))) / 2
    z3: (p(p-1) /  80(r-3))^sqrt(p)     * exp(2.5 (1 + sqrt2/2)
                                              * sqrt((1 - 1/p)(r-3))) / 2
    """
    if classify_regime(p, r) != REGIME_CASE1:
        raise WrongRegime(f"(p={p}, r={r}) does not satisfy r - 3 >= 2p^2")
    frac = 1.0 - 1.0 / p
    if which == "z1":
        ln = math.sqrt(p) * math.log(p * (p - 1) / (160.0 * (r - 2)))
        ln += 2.5 * math.sqrt(frac * (r - 2))
    elif which == "z2":
        ln = -_LN2 + 2 * math.sqrt(p) * math.log(p * (p - 1) / (80.0 * (r - 3)))
        ln += 2.5 * math.sqrt(2.0) * math.sqrt(frac * (r - 3))
    elif which == "z3":
        ln = -_LN2 + math.sqrt(p) * math.log(p * (p - 1) / (80.0 * (r - 3)))
        ln += 2.5 * (1.0 + math.sqrt(2.0) / 2.0) * math.sqrt(frac * (r - 3))
    else:
        raise ValueError(f"unknown bound name {which!r}")
    return LogBound(ln)


def closed_form_case2(p: int, r: int, which: str) -> LogBound:
    """Closed-form bounds valid for r - 2 < p (the multiplicity cap p - 1 is
    then inactive, so plain partition counts drive the estimates).

    z1: exp(2.5 sqrt(r-2)) / (13 (r-2))
    z2: 2 exp(2.5 sqrt2 sqrt(r-3)) / (169 (r-3)^2)
    z3: exp(2.5 (1 + sqrt2/2) sqrt(r-3)) / (169 (r-2)(r-3))
    """
    if classify_regime(p, r) != REGIME_CASE2:
        raise WrongRegime(f"(p={p}, r={r}) does not satisfy r - 2 < p")
    if which == "z1":
        ln = 2.5 * math.sqrt(r - 2) - math.log(13.0 * (r - 2))
    elif which == "z2":
        ln = _LN2 + 2.5 * math.sqrt(2.0) * math.sqrt(r - 3)
        ln -= math.log(169.0 * (r - 3) ** 2)
    elif which == "z3":
        ln = 2.5 * (1.0 + math.sqrt(2.0) / 2.0) * math.sqrt(r - 3)
        ln -= math.log(169.0 * (r - 2) * (r - 3))
    else:
        raise ValueError(f"unknown bound name {which!r}")
    return LogBound(ln)


def closed_form(p: int, r: int, which: str) -> Optional[LogBound]:
    """Dispatch on the regime; None in the gap where no closed form applies."""
    regime = classify_regime(p, r)
    if regime == REGIME_CASE1:
        return closed_form_case1(p, r, which)
    if regime == REGIME_CASE2:
        return closed_form_case2(p, r, which)
    return None


@dataclass(frozen=True)
class BoundReport:
    """Everything this module can say about one parameter pair.

    log2_z1/z2/z3 are the closed-form bounds (None in the gap regime);
    exact_bound_z1/z2/z3 are the partition-count bounds (None only when the
    report was produced with exact=False to skip the DP work).
    """

    p: int
    r: int
    regime: str
    log2_group_order: float
    log2_z1: Optional[float]
    log2_z2: Optional[float]
    log2_z3: Optional[float]
    exact_bound_z1: Optional[int]
    exact_bound_z2: Optional[int]
    exact_bound_z3: Optional[int]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "regime": self.regime,
            "log2_group_order": self.log2_group_order,
            "log2_z1": self.log2_z1,
            "log2_z2": self.log2_z2,
            "log2_z3": self.log2_z3,
            "exact_bound_z1": self.exact_bound_z1,
            "exact_bound_z2": self.exact_bound_z2,
            "exact_bound_z3": self.exact_bound_z3,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        return cls(**data)


def table_row(p: int, r: int, exact: bool = True) -> BoundReport:
    """One summary-table row for validated (p, r).

    Always fills the group size and the regime's closed-form bounds; with
    exact=True (the default) also computes the three partition bounds.
    """
    make_params(p, r)
    regime = classify_regime(p, r)
    logs = {name: closed_form(p, r, name) for name in BOUND_NAMES}
    return BoundReport(
        p=p,
        r=r,
        regime=regime,
        log2_group_order=(r - 1) * math.log2(p),
        log2_z1=logs["z1"].log2 if logs["z1"] else None,
        log2_z2=logs["z2"].log2 if logs["z2"] else None,
        log2_z3=logs["z3"].log2 if logs["z3"] else None,
        exact_bound_z1=exact_bound_z1(p, r) if exact else None,
        exact_bound_z2=exact_bound_z2(p, r) if exact else None,
        exact_bound_z3=exact_bound_z3(p, r) if exact else None,
    )


def render_table(reports: list[BoundReport]) -> str:
    """Aligned text table (two decimal places, '-' where a value is absent)."""
    header = f"{'p':>5} {'r':>6} {'regime':>7} {'log2|F*|':>10} {'log2_z1':>9} {'log2_z2':>9} {'log2_z3':>9}"
    lines = [header]
    for rep in reports:
        cells = [
            f"{rep.p:>5}",
            f"{rep.r:>6}",
            f"{rep.regime:>7}",
            f"{rep.log2_group_order:>10.2f}",
        ]
        for v in (rep.log2_z1, rep.log2_z2, rep.log2_z3):
            cells.append(f"{v:>9.2f}" if v is not None else f"{'-':>9}")
        lines.append(" ".join(cells))
    return "\n".join(lines)
