"""Arithmetic in F_p(theta) = F_p[x]/Phi_r(x) and the named element builders.

Representation. For an odd prime r, Phi_r(x) = x^(r-1) + ... + x + 1. Elements
are coefficient vectors of length r-1 over F_p, lowest degree first, in
canonical reduced form: products are first folded through theta^r = 1 (Phi_r
divides x^r - 1) and the stray x^(r-1) term is then eliminated via
x^(r-1) = -(x^(r-2) + ... + 1). Equality is plain tuple comparison.

Phi_r is irreducible over F_p exactly when p is a primitive root modulo r;
`make_params` enforces that (so the quotient ring is a field), but the raw
`FieldParams` constructor does not, which lets `cyclotomic_is_irreducible`
demonstrate the reducible case too.

Multiplication uses numpy's integer convolution with an exact-overflow guard;
everything stays in exact integers throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import (
    factorize,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    two_adic_part,
)
from .errors import (
    BadConstant,
    BranchUndefined,
    ExponentNotCoprime,
    InvalidParameter,
    NotCoprime,
    NotPrime,
    NotPrimitiveRoot,
    ZeroConstant,
)

# Schoolbook convolution beats numpy's call overhead below this many coeffs.
_SCHOOLBOOK_MAX_LEN = 8


@dataclass(frozen=True)
class FieldParams:
    """Parameter pair (p, r) for F_p[x]/Phi_r(x).

    `certificate` carries the primitivity proof data produced by
    `make_params`: pairs (ell, p^((r-1)/ell) mod r) for the prime divisors ell
    of r - 1, all distinct from 1. It is advisory and excluded from equality.
    """

    p: int
    r: int
    certificate: tuple[tuple[int, int], ...] | None = field(
        default=None, compare=False, repr=False
    )

    @property
    def s(self) -> int:
        """Half the extension degree: r = 2s + 1."""
        return (self.r - 1) // 2

    @property
    def extension_degree(self) -> int:
        return self.r - 1

    @property
    def group_order(self) -> int:
        """Order of the multiplicative group, p^(r-1) - 1."""
        return self.p ** (self.r - 1) - 1


def make_params(p: int, r: int) -> FieldParams:
    """Validated field parameters, or a specific InvalidParameter subclass.

    Requires p prime, r an odd prime >= 3, p != r, and p a primitive root
    modulo r (equivalently: Phi_r irreducible over F_p).
    """
    if not is_prime(p):
        raise NotPrime(p, role="characteristic p")
    if not is_prime(r):
        raise NotPrime(r, role="cyclotomic index r")
    if r < 3:
        raise InvalidParameter("r must be an odd prime, so r >= 3")
    if p == r:
        raise NotCoprime(f"p and r must differ (both are {p})")
    if not is_primitive_root(p, r):
        raise NotPrimitiveRoot(p, r, order=multiplicative_order(p, r))
    certificate = tuple(
        (ell, pow(p, (r - 1) // ell, r)) for ell in factorize(r - 1).primes
    )
    return FieldParams(p, r, certificate)


def _fold_mod_phi(raw: list[int] | np.ndarray, p: int, r: int) -> tuple[int, ...]:
    """Reduce a coefficient sequence of any length to canonical form."""
    folded = [0] * r
    for i, c in enumerate(raw):
        folded[i % r] += int(c)
    top = folded[r - 1]
    return tuple((c - top) % p for c in folded[: r - 1])


def _mul_coeffs(a: tuple[int, ...], b: tuple[int, ...], p: int, r: int) -> tuple[int, ...]:
    n = r - 1
    if n <= _SCHOOLBOOK_MAX_LEN:
        prod = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return _fold_mod_phi(prod, p, r)
    # exactness guard: coefficient magnitudes stay below 2^62
    if n * (p - 1) * (p - 1) < (1 << 62):
        prod = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        folded = np.zeros(r, dtype=np.int64)
        head = prod[:r]
        folded[: head.shape[0]] += head
        tail = prod[r:]
        folded[: tail.shape[0]] += tail
        top = folded[r - 1]
        return tuple(((folded[: r - 1] - top) % p).tolist())
    prod = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
    return _fold_mod_phi(prod, p, r)


@dataclass(frozen=True)
class FieldElement:
    """An element of F_p[x]/Phi_r(x) in canonical form (immutable, hashable)."""

    params: FieldParams
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.params.r - 1:
            raise ValueError(
                f"expected {self.params.r - 1} coefficients, got {len(self.coeffs)}"
            )
        if any(not 0 <= c < self.params.p for c in self.coeffs):
            raise ValueError("coefficients must already be reduced mod p")

    @classmethod
    def from_coeffs(cls, params: FieldParams, raw) -> "FieldElement":
        """Build from any coefficient sequence, folding and reducing."""
        return cls(params, _fold_mod_phi(list(raw), params.p, params.r))

    def _require_same_field(self, other: "FieldElement") -> None:
        if self.params != other.params:
            raise ValueError("elements live in different fields")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._require_same_field(other)
        p = self.params.p
        return FieldElement(
            self.params, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._require_same_field(other)
        p = self.params.p
        return FieldElement(
            self.params, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "FieldElement":
        p = self.params.p
        return FieldElement(self.params, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._require_same_field(other)
        return FieldElement(
            self.params, _mul_coeffs(self.coeffs, other.coeffs, self.params.p, self.params.r)
        )

    def inv(self) -> "FieldElement":
        """Multiplicative inverse by extended Euclid against Phi_r."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero element")
        p, r = self.params.p, self.params.r
        phi = [1] * r
        g, _, v = _poly_ext_gcd(phi, list(self.coeffs), p)
        if len(g) != 1:
            # only reachable when Phi_r is reducible (unvalidated params)
            raise ZeroDivisionError("element is a zero divisor; Phi_r not irreducible")
        scale = pow(g[0], -1, p)
        return FieldElement.from_coeffs(self.params, [c * scale % p for c in v])

    def __pow__(self, k: int) -> "FieldElement":
        """Square-and-multiply; negative exponents go through inv()."""
        if k < 0:
            return self.inv() ** (-k)
        result = one(self.params)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_string(self) -> str:
        """Wire format, e.g. 'p=2 r=5 [0,1,1,0]' (lowest degree first)."""
        return f"p={self.params.p} r={self.params.r} [{','.join(map(str, self.coeffs))}]"

    @classmethod
    def from_string(cls, text: str) -> "FieldElement":
        m = re.fullmatch(r"p=(\d+) r=(\d+) \[([\d,\s]*)\]", text.strip())
        if m is None:
            raise ValueError(f"unparseable element string: {text!r}")
        p, r = int(m.group(1)), int(m.group(2))
        coeffs = [int(c) for c in m.group(3).split(",")] if m.group(3).strip() else []
        return cls(FieldParams(p, r), tuple(coeffs))

    def __repr__(self) -> str:
        return f"FieldElement({self.to_string()})"


def zero(params: FieldParams) -> FieldElement:
    return FieldElement(params, (0,) * (params.r - 1))


def one(params: FieldParams) -> FieldElement:
    return constant(params, 1)


def constant(params: FieldParams, c: int) -> FieldElement:
    return FieldElement(params, (c % params.p,) + (0,) * (params.r - 2))


def monomial(params: FieldParams, k: int) -> FieldElement:
    """theta^k in canonical form, any integer k (theta has order r)."""
    k %= params.r
    if k <= params.r - 2:
        coeffs = tuple(1 if i == k else 0 for i in range(params.r - 1))
        return FieldElement(params, coeffs)
    # theta^(r-1) = -(theta^(r-2) + ... + 1)
    return FieldElement(params, ((params.p - 1),) * (params.r - 1))


def theta(params: FieldParams) -> FieldElement:
    """The generator theta = x mod Phi_r."""
    return monomial(params, 1)


def build_element(params: FieldParams, e: int, f: int, a: int) -> FieldElement:
    """The candidate high-order element theta^e * (theta^f + a).

    e is any integer (reduced mod r since theta^r = 1); f must be coprime
    with r; a must be a non-zero residue mod p.
    """
    a %= params.p
    if a == 0:
        raise ZeroConstant("constant a must be non-zero in F_p")
    if f % params.r == 0:
        raise ExponentNotCoprime(f"f = {f} is divisible by r = {params.r}")
    return monomial(params, e) * (monomial(params, f) + constant(params, a))


def gauss_period(params: FieldParams) -> FieldElement:
    """The Gauss period theta + theta^(-1) = theta + theta^(r-1)."""
    return monomial(params, 1) + monomial(params, params.r - 1)


def frobenius(params: FieldParams, x: FieldElement, k: int) -> FieldElement:
    """x^(p^k), computed by the coefficient permutation theta^i -> theta^(i*p^k).

    Valid because the ring has characteristic p, so (sum c_i theta^i)^p =
    sum c_i theta^(i*p), and theta^r = 1 closes the exponent arithmetic mod r.
    """
    if k < 0:
        raise ValueError("frobenius power k must be non-negative")
    t = pow(params.p, k, params.r)
    raw = [0] * params.r
    for i, c in enumerate(x.coeffs):
        raw[(i * t) % params.r] += c
    return FieldElement.from_coeffs(params, raw)


def mobius_factor(params: FieldParams, a: int) -> FieldElement:
    """(a*theta + 1) * (theta + a)^(-1), the unit-circle factor used by z."""
    a %= params.p
    num = theta(params) * constant(params, a) + one(params)
    den = theta(params) + constant(params, a)
    return num * den.inv()


def build_z(params: FieldParams, a: int) -> FieldElement:
    """The combined element z with coprime-order factors.

    Uses the Gauss period g = theta + theta^(-1) and the factor
    m = (a*theta + 1)(theta + a)^(-1):

        z = g^2 * m    when the 2-part of p^s - 1 is exactly 2
        z = g * m^2    when the 2-part of p^s + 1 is exactly 2

    For odd p exactly one case holds (p^s -+ 1 are consecutive even numbers);
    a must avoid {0, 1, -1} and p = 2 leaves both conditions false.
    """
    a %= params.p
    if a in (0, 1, params.p - 1):
        raise BadConstant(f"a = {a} must avoid {{0, 1, -1}} mod p = {params.p}")
    if params.p == 2:
        raise BranchUndefined("p = 2: neither 2-part condition can hold")
    g = gauss_period(params)
    m = mobius_factor(params, a)
    half = params.p**params.s
    if two_adic_part(half - 1) == 2:
        return g * g * m
    if two_adic_part(half + 1) == 2:
        return g * m * m
    raise BranchUndefined("no branch applies")  # unreachable for odd p


def z_factors(params: FieldParams, a: int) -> tuple[FieldElement, FieldElement]:
    """The two coprime-order factors whose product is build_z(params, a)."""
    a %= params.p
    if a in (0, 1, params.p - 1):
        raise BadConstant(f"a = {a} must avoid {{0, 1, -1}} mod p = {params.p}")
    if params.p == 2:
        raise BranchUndefined("p = 2: neither 2-part condition can hold")
    g = gauss_period(params)
    m = mobius_factor(params, a)
    if two_adic_part(params.p**params.s - 1) == 2:
        return g * g, m
    return g, m * m


# ---------------------------------------------------------------------------
# dense polynomial helpers over F_p (little-endian lists, trimmed)
# ---------------------------------------------------------------------------

def _poly_trim(v: list[int]) -> list[int]:
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    num = num[:]
    q = [0] * max(1, len(num) - len(den) + 1)
    inv_lead = pow(den[-1], -1, p)
    for shift in range(len(num) - len(den), -1, -1):
        factor = num[shift + len(den) - 1] * inv_lead % p
        if factor:
            q[shift] = factor
            for i, d in enumerate(den):
                num[shift + i] = (num[shift + i] - factor * d) % p
    return _poly_trim(q), _poly_trim(num)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        _, rem = _poly_divmod(a, b, p)
        a, b = b, rem
    return a


def _poly_ext_gcd(a: list[int], b: list[int], p: int):
    """Returns (g, u, v) with u*a + v*b = g over F_p."""
    r0, r1 = _poly_trim(a[:]), _poly_trim(b[:])
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while r1:
        q, rem = _poly_divmod(r0, r1, p)
        r0, r1 = r1, rem
        u0, u1 = u1, _poly_sub(u0, _poly_mul(q, u1, p), p)
        v0, v1 = v1, _poly_sub(v0, _poly_mul(q, v1, p), p)
    return r0, u0, v0


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _poly_trim(out)


@lru_cache(maxsize=None)
def _cyclotomic_irreducible(p: int, r: int) -> bool:
    # Rabin's irreducibility test for Phi_r over F_p, degree n = r - 1.
    # Powers x^(p^m) mod Phi_r are the monomials theta^(p^m mod r), which makes
    # both conditions cheap: the containment condition x^(p^n) = x reduces to
    # p^n = 1 (mod r), and each gcd condition is one dense polynomial gcd.
    n = r - 1
    if pow(p, n, r) != 1:
        return False
    phi = [1] * r
    for ell in factorize(n).primes:
        t = pow(p, n // ell, r)
        poly = [0] * r
        poly[t] += 1
        poly[1] -= 1
        folded = [c % p for c in poly[: r - 1]]
        # theta^(r-1) contributes -(1 + x + ... + x^(r-2))
        if poly[r - 1]:
            folded = [(c - poly[r - 1]) % p for c in folded]
        g = _poly_gcd(phi, folded, p)
        if len(g) != 1:
            return False
    return True


def cyclotomic_is_irreducible(params: FieldParams) -> bool:
    """True iff Phi_r is irreducible over F_p (no validity assumed on params).

    For params produced by `make_params` this always returns True; the point
    of the function is that it decides irreducibility directly (Rabin's
    criterion) rather than re-running the primitive-root test.
    """
    return _cyclotomic_irreducible(params.p, params.r)
