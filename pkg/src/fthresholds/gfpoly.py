"""Sparse multivariate polynomials over prime fields F_p.

A polynomial is a map from exponent tuples to coefficients, with coefficients
kept as canonical residues in [0, p) and zero coefficients never stored.
Monomial comparisons use degrevlex throughout, so printed output and every
tie-break in the package are deterministic.
"""

from __future__ import annotations

from typing import Iterable

from .errors import DomainError
from .exact import PrimePower, is_prime

EXPONENT_LIMIT = 2**32

Monomial = tuple  # tuple[int, ...], one entry per variable


def drl_key(m: Monomial):
    """Degrevlex sort key; larger key means larger monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    """Lexicographic sort key (x1 > x2 > ...); experimental, untested surface."""
    return tuple(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class GFPoly:
    """Immutable sparse polynomial in F_p[x_1..x_n]."""

    __slots__ = ("n", "p", "terms", "_hash")

    def __init__(self, n: int, p: int, terms: dict):
        # Internal constructor: `terms` must already be canonical.
        self.n = n
        self.p = p
        self.terms = terms
        self._hash = None

    @classmethod
    def make(cls, n: int, p: int, items: Iterable[tuple[Monomial, int]]) -> "GFPoly":
        """Build from (monomial, coefficient) pairs, reducing mod p and merging."""
        if n < 1:
            raise DomainError(f"need at least one variable, got n={n}")
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        terms: dict = {}
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != n:
                raise DomainError(f"monomial {mono} has {len(mono)} exponents, expected {n}")
            for e in mono:
                if e < 0:
                    raise DomainError(f"negative exponent in {mono}")
                if e >= EXPONENT_LIMIT:
                    raise OverflowError(f"exponent {e} >= 2^32")
            c = (terms.get(mono, 0) + coeff) % p
            if c:
                terms[mono] = c
            elif mono in terms:
                del terms[mono]
        return cls(n, p, terms)

    @classmethod
    def zero(cls, n: int, p: int) -> "GFPoly":
        return cls.make(n, p, ())

    @classmethod
    def one(cls, n: int, p: int) -> "GFPoly":
        return cls.constant(1, n, p)

    @classmethod
    def constant(cls, c: int, n: int, p: int) -> "GFPoly":
        return cls.make(n, p, [((0,) * n, c)])

    @classmethod
    def variable(cls, i: int, n: int, p: int) -> "GFPoly":
        """The variable x_{i+1} (0-based index i)."""
        if not 0 <= i < n:
            raise DomainError(f"variable index {i} out of range for n={n}")
        mono = tuple(1 if j == i else 0 for j in range(n))
        return cls.make(n, p, [(mono, 1)])

    @classmethod
    def from_monomial(cls, mono: Monomial, n: int, p: int, coeff: int = 1) -> "GFPoly":
        return cls.make(n, p, [(tuple(mono), coeff)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.n, 0)

    def vanishes_at_origin(self) -> bool:
        return self.constant_term() == 0

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(sum(m) for m in self.terms)

    def lead_monomial(self, key=drl_key) -> Monomial:
        if not self.terms:
            raise DomainError("zero polynomial has no lead monomial")
        return max(self.terms, key=key)

    def lead_coeff(self, key=drl_key) -> int:
        return self.terms[self.lead_monomial(key)]

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending degrevlex order."""
        return sorted(self.terms.items(), key=lambda kv: drl_key(kv[0]), reverse=True)

    def _check_ambient(self, other: "GFPoly"):
        if self.n != other.n or self.p != other.p:
            raise DomainError(
                f"ambient mismatch: (n={self.n}, p={self.p}) vs (n={other.n}, p={other.p})"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GFPoly):
            return NotImplemented
        return self.n == other.n and self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.p, frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "GFPoly") -> "GFPoly":
        self._check_ambient(other)
        terms = dict(self.terms)
        p = self.p
        for m, c in other.terms.items():
            v = (terms.get(m, 0) + c) % p
            if v:
                terms[m] = v
            elif m in terms:
                del terms[m]
        return GFPoly(self.n, p, terms)

    def __neg__(self) -> "GFPoly":
        p = self.p
        return GFPoly(self.n, p, {m: p - c for m, c in self.terms.items()})

    def __sub__(self, other: "GFPoly") -> "GFPoly":
        return self + (-other)

    def scale(self, c: int) -> "GFPoly":
        c %= self.p
        if c == 0:
            return GFPoly.zero(self.n, self.p)
        return GFPoly(self.n, self.p, {m: (v * c) % self.p for m, v in self.terms.items()})

    def monic(self) -> "GFPoly":
        if self.is_zero:
            return self
        inv = pow(self.lead_coeff(), -1, self.p)
        return self.scale(inv)

    def mul_term(self, mono: Monomial, coeff: int) -> "GFPoly":
        """Multiply by a single term coeff * x^mono."""
        coeff %= self.p
        if coeff == 0:
            return GFPoly.zero(self.n, self.p)
        out = {}
        for m, c in self.terms.items():
            mm = monomial_mul(m, mono)
            for e in mm:
                if e >= EXPONENT_LIMIT:
                    raise OverflowError(f"exponent {e} >= 2^32")
            out[mm] = (c * coeff) % self.p
        return GFPoly(self.n, self.p, out)

    def __mul__(self, other: "GFPoly") -> "GFPoly":
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return GFPoly.zero(self.n, self.p)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        p = self.p
        out: dict = {}
        for m2, c2 in b.items():
            for m1, c1 in a.items():
                mm = monomial_mul(m1, m2)
                v = (out.get(mm, 0) + c1 * c2) % p
                if v:
                    out[mm] = v
                elif mm in out:
                    del out[mm]
        for mm in out:
            for e in mm:
                if e >= EXPONENT_LIMIT:
                    raise OverflowError(f"exponent {e} >= 2^32")
        return GFPoly(self.n, p, out)

    def mul_truncated(self, other: "GFPoly", bound: int) -> "GFPoly":
        """Product with every term having some exponent >= bound dropped.

        Deletion happens inside the accumulation loop; sound because exponents
        only grow under multiplication, so a dropped term can never contribute
        to a surviving one later.
        """
        self._check_ambient(other)
        p = self.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mm = monomial_mul(m1, m2)
                if any(e >= bound for e in mm):
                    continue
                v = (out.get(mm, 0) + c1 * c2) % p
                if v:
                    out[mm] = v
                elif mm in out:
                    del out[mm]
        return GFPoly(self.n, p, out)

    def pow(self, r: int) -> "GFPoly":
        if r < 0:
            raise DomainError("negative power")
        result = GFPoly.one(self.n, self.p)
        base = self
        while r:
            if r & 1:
                result = result * base
            r >>= 1
            if r:
                base = base * base
        return result

    def truncate(self, bound: int) -> "GFPoly":
        """Drop every term having some exponent >= bound."""
        return GFPoly(
            self.n, self.p, {m: c for m, c in self.terms.items() if all(e < bound for e in m)}
        )

    def __str__(self) -> str:
        from .parsing import format_terms

        return format_terms(self.terms, self.n)

    def __repr__(self) -> str:
        return f"GFPoly({self}, n={self.n}, p={self.p})"


def poly_add(f: GFPoly, g: GFPoly) -> GFPoly:
    return f + g


def poly_mul(f: GFPoly, g: GFPoly) -> GFPoly:
    return f * g


def poly_pow_truncated(f: GFPoly, r: int, q: PrimePower) -> GFPoly:
    """f^r with terms exceeding the box {exponents <= q.q - 1} dropped at each step.

    The result is nonzero iff f^r has a monomial with all exponents <= q.q - 1,
    i.e. iff f^r lies outside (x_1^q, ..., x_n^q).
    """
    if r < 0:
        raise DomainError("negative power")
    if f.p != q.p:
        raise DomainError(f"field characteristic {f.p} does not match q = {q}")
    result = GFPoly.one(f.n, f.p).truncate(q.q)
    for _ in range(r):
        if result.is_zero:
            break
        result = result.mul_truncated(f, q.q)
    return result
