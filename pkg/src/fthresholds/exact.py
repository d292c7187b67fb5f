"""Exact arithmetic primitives: normalized rationals and checked prime powers.

Every threshold, exponent and report value in this package is an exact
rational; nothing in the core touches floating point.  Rationals are
`fractions.Fraction` (arbitrary precision, always stored reduced with a
positive denominator), with helpers for the canonical "n/d" wire format.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

PRIME_LIMIT = 2**31
POWER_LIMIT = 2**63

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic primality test by trial division; valid for p < 2^31."""
    if p >= PRIME_LIMIT:
        raise DomainError(f"prime candidate {p} out of range (must be < 2^31)")
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def rational(num: int, den: int = 1) -> Fraction:
    """Reduced fraction with positive denominator.

    Raises ZeroDivisionError when den == 0.
    """
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical serialized form "n/d", denominator always explicit."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "n/d" or a bare integer "n" (meaning n/1)."""
    s = text.strip()
    if not _RATIONAL_RE.match(s):
        raise DomainError(f"not a rational: {text!r}")
    return Fraction(s)


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The unique smallest-denominator rational in the closed interval [lo, hi]."""
    if lo > hi:
        raise DomainError(f"empty interval [{lo}, {hi}]")
    n = math.ceil(lo)
    if n <= hi:
        return Fraction(n)
    k = math.floor(lo)
    # Both endpoints lie strictly between k and k+1; recurse on the reciprocal tail.
    return k + 1 / simplest_between(1 / (hi - k), 1 / (lo - k))


def farey_below(x: Fraction, max_den: int) -> Fraction:
    """Largest rational strictly below x with denominator <= max_den."""
    if max_den < 1:
        raise DomainError("denominator bound must be positive")
    best = None
    for d in range(1, max_den + 1):
        num = math.ceil(x * d) - 1
        cand = Fraction(num, d)
        if best is None or cand > best:
            best = cand
    return best


@dataclass(frozen=True)
class PrimePower:
    """A validated prime power q = p^e with q < 2^63."""

    p: int
    e: int
    q: int

    def __post_init__(self):
        if self.e < 1:
            raise DomainError(f"exponent must be >= 1, got {self.e}")
        if not is_prime(self.p):
            raise DomainError(f"{self.p} is not prime")
        expected = self.p**self.e
        if self.q != expected:
            raise DomainError(f"inconsistent prime power: {self.p}^{self.e} != {self.q}")
        if self.q >= POWER_LIMIT:
            raise OverflowError(f"{self.p}^{self.e} >= 2^63")

    def __str__(self) -> str:
        return f"{self.p}^{self.e}"


def prime_power(p: int, e: int) -> PrimePower:
    """Construct p^e, rejecting composite p and powers >= 2^63."""
    if e < 1:
        raise DomainError(f"exponent must be >= 1, got {e}")
    if e >= 63:
        # smallest admissible base is 2, and 2^63 already overflows
        raise OverflowError(f"{p}^{e} >= 2^63")
    return PrimePower(p, e, p**e)
