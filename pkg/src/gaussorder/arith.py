"""Exact integer arithmetic: primality, factorization, modular orders.

Everything here works on plain Python ints (arbitrary precision). The
factorization routine is trial division plus Brent's cycle-finding variant of
Pollard's rho, which is ample for the <= ~96-bit group orders this package
computes exact orders in. Numbers above the bit guard are refused with
`GuardExceeded` instead of being left to grind.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import GuardExceeded, NotPrime

DEFAULT_BIT_GUARD = 96

# Deterministic Miller-Rabin witness set for n < 2^64 (Sorenson & Webster).
_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_PROBABLE_ROUNDS = 40

_SMALL_PRIME_LIMIT = 10_000


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i, f in enumerate(flags) if f]


_SMALL_PRIMES = _sieve(_SMALL_PRIME_LIMIT)


def _miller_rabin_round(n: int, a: int, d: int, s: int) -> bool:
    # n - 1 = d * 2^s with d odd; returns False iff a witnesses compositeness
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 2^64, 40-round Miller-Rabin above.

    The rounds above 2^64 use bases drawn from an RNG seeded by n itself, so
    results are reproducible across runs.
    """
    if n < 2:
        return False
    for p in _WITNESSES_64:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        bases = _WITNESSES_64
    else:
        rng = random.Random(n)
        bases = [rng.randrange(2, n - 1) for _ in range(_PROBABLE_ROUNDS)]
    return all(_miller_rabin_round(n, a, d, s) for a in bases)


@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization of `n` as ordered (prime, exponent) pairs.

    Invariants are enforced at construction: primes strictly increasing, all
    exponents positive, and the product of prime powers reconstructs `n`.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        product = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly increasing")
            if exponent < 1:
                raise ValueError("exponents must be positive")
            if not is_prime(prime):
                raise ValueError(f"{prime} is not prime")
            previous = prime
            product *= prime**exponent
        if product != self.n:
            raise ValueError(f"factors reconstruct {product}, not {self.n}")

    def __iter__(self):
        return iter(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{k}" if k > 1 else str(p) for p, k in self.factors)


def _brent_rho(n: int, seed: int) -> int:
    """Find a non-trivial factor of odd composite n (Brent's variant)."""
    rng = random.Random(seed)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = q = 1
        r = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # rare cycle degenerate; retry with fresh parameters


def factorize(n: int, bit_guard: int = DEFAULT_BIT_GUARD) -> Factorization:
    """Fully factor n >= 1; refuse inputs above `bit_guard` bits.

    Trial division by primes below 10^4 first, then Brent rho on whatever
    composite remains. The rho seed is derived from the input, so repeated
    calls factor identically.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    if n.bit_length() > bit_guard:
        raise GuardExceeded(n.bit_length(), bit_guard)
    counts: dict[int, int] = {}
    m = n
    for p in _SMALL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    pending = [m] if m > 1 else []
    while pending:
        m = pending.pop()
        if m == 1:
            continue
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _brent_rho(m, seed=m)
        pending.append(d)
        pending.append(m // d)
    return Factorization(n, tuple(sorted(counts.items())))


def two_adic_part(n: int) -> int:
    """Largest power of 2 dividing n (e.g. 2 means n = 2 mod 4)."""
    if n < 1:
        raise ValueError("two_adic_part requires n >= 1")
    return n & -n


def multiplicative_order(g: int, m: int, bit_guard: int = DEFAULT_BIT_GUARD) -> int:
    """Least k >= 1 with g^k = 1 (mod m), for gcd(g, m) = 1 and m >= 2.

    Starts from Euler's phi(m) and strips prime factors, so it needs the full
    factorization of phi(m); `GuardExceeded` propagates when that is out of
    reach.
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    g %= m
    if math.gcd(g, m) != 1:
        raise ValueError(f"{g} is not a unit modulo {m}")
    phi = 1
    for prime, exponent in factorize(m, bit_guard):
        phi *= prime ** (exponent - 1) * (prime - 1)
    order = phi
    for prime in factorize(phi, bit_guard).primes:
        while order % prime == 0 and pow(g, order // prime, m) == 1:
            order //= prime
    return order


def is_primitive_root(g: int, r: int) -> bool:
    """True iff g has multiplicative order r - 1 modulo the prime r."""
    if not is_prime(r):
        raise NotPrime(r, role="modulus")
    g %= r
    if g == 0:
        return False
    return all(pow(g, (r - 1) // ell, r) != 1 for ell in factorize(r - 1).primes)
