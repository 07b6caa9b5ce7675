"""Exception hierarchy shared by all gaussorder modules.

Two families matter for callers: `InvalidParameter` (the inputs violate a
mathematical precondition) and `ResourceGuard` (the computation is valid but
too large for desk scale and was refused rather than left to run forever).
The CLI maps these to exit codes 2 and 3 respectively.
"""


class GaussOrderError(Exception):
    """Base class for all errors raised by this package."""


class ResourceGuard(GaussOrderError):
    """Base class for refusals due to configured size limits."""


class GuardExceeded(ResourceGuard):
    """An integer exceeds the bit guard for exact factorization/orders."""

    def __init__(self, n_bits: int, bit_guard: int):
        self.n_bits = n_bits
        self.bit_guard = bit_guard
        super().__init__(f"{n_bits}-bit value exceeds the {bit_guard}-bit guard")


class CapExceeded(ResourceGuard):
    """A partition enumeration target exceeds the enumeration cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"enumeration of partitions of {n} exceeds cap {cap}")


class InvalidParameter(GaussOrderError):
    """Base class for precondition violations on user-supplied parameters."""


class NotPrime(InvalidParameter):
    def __init__(self, n: int, role: str = "parameter"):
        self.n = n
        super().__init__(f"{role} {n} is not prime")


class NotCoprime(InvalidParameter):
    pass


class NotPrimitiveRoot(InvalidParameter):
    def __init__(self, g: int, r: int, order: int | None = None):
        self.g = g
        self.r = r
        detail = f" (order {order} != {r - 1})" if order is not None else ""
        super().__init__(f"{g} is not a primitive root modulo {r}{detail}")


class ZeroConstant(InvalidParameter):
    """The additive constant a must be a non-zero residue."""


class ExponentNotCoprime(InvalidParameter):
    """The exponent f in theta^e*(theta^f + a) must be coprime with r."""


class BadConstant(InvalidParameter):
    """The constant a must avoid {0, 1, -1} for the combined element z."""


class BranchUndefined(InvalidParameter):
    """Neither branch condition of the z construction holds (p = 2)."""


class ZeroElement(InvalidParameter):
    """The zero element has no multiplicative order."""


class WrongRegime(InvalidParameter):
    """A closed-form bound was requested outside its parameter regime."""
