"""Newton polytopes of monomial ideals: orders, thresholds, multiplier ideals.

The Newton polytope of a monomial ideal is the convex hull of its exponent
vectors plus the nonnegative orthant.  For a positive rational vector v,

    ord_P(v) = max { t >= 0 : v in t*P }

is computed by the exact LP  max sum(z_j)  s.t.  sum_j z_j * a_j <= v, z >= 0:
writing a point of t*P as t * (convex combination) + (nonnegative slack) and
substituting z_j = t * theta_j linearizes the problem, and the optimum equals
the largest admissible t.  The log canonical threshold of the ideal is
ord_P(1,...,1), and membership of x^u in the multiplier ideal at exponent
lambda is the strict inequality ord_P(u + 1) > lambda.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError
from .gfpoly import Monomial
from .groebner import MonomialIdeal, minimize_points
from .lp import OPTIMAL, UNBOUNDED, LPResult, simplex_max


class _Infinity:
    """Exact positive infinity for threshold conventions (no floats)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("_Infinity")

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


@dataclass(frozen=True)
class NewtonPolytope:
    """conv(exponent points) + nonnegative orthant; up-closed by construction."""

    points: tuple[Monomial, ...]
    n: int

    @classmethod
    def from_points(cls, points: Iterable[Monomial], n: int) -> "NewtonPolytope":
        pts = [tuple(q) for q in points]
        for q in pts:
            if len(q) != n or any(e < 0 for e in q):
                raise DomainError(f"bad exponent point {q} for n={n}")
        # Dominated points (componentwise >= another) never support the lower
        # boundary, so pruning them changes no order value.
        return cls(minimize_points(pts), n)

    @classmethod
    def from_monomial_ideal(cls, a: MonomialIdeal) -> "NewtonPolytope":
        return cls.from_points(a.gens, a.n)

    @property
    def is_empty(self) -> bool:
        return not self.points


def order_lp(P: NewtonPolytope, v: Sequence[Fraction]) -> LPResult:
    """The LP whose optimum is ord_P(v); exposes the exact witness z."""
    if P.is_empty:
        raise DomainError("empty Newton polytope")
    if len(v) != P.n:
        raise DomainError(f"vector length {len(v)} != n = {P.n}")
    v = [Fraction(x) for x in v]
    if any(x <= 0 for x in v):
        raise DomainError("order vector must be strictly positive")
    A = [[Fraction(pt[i]) for pt in P.points] for i in range(P.n)]
    c = [Fraction(1)] * len(P.points)
    return simplex_max(c, A, v)


def newton_order(P: NewtonPolytope, v: Sequence[Fraction]):
    """ord_P(v) = max{t >= 0 : v in t*P}; INFINITY when 0 is a polytope point."""
    res = order_lp(P, v)
    if res.status == UNBOUNDED:
        # Only possible when the zero vector is an exponent point.
        return INFINITY
    assert res.status == OPTIMAL
    return res.optimum


def lct_monomial(a: MonomialIdeal):
    """Log canonical threshold of a monomial ideal at the origin.

    Conventions: lct(0) = 0 and lct of the unit ideal is infinite.
    """
    if a.is_zero:
        return Fraction(0)
    if a.is_unit():
        return INFINITY
    ones = [Fraction(1)] * a.n
    return newton_order(NewtonPolytope.from_monomial_ideal(a), ones)


def _membership_box(a: MonomialIdeal, lam: Fraction) -> int:
    # Enumeration cap per coordinate.  For t slightly above lam, any witness z
    # with sum(z) = t satisfies, in constraint row i,
    #     sum_j z_j * a_j[i] <= t * M < ceil(lam * M) + 1,
    # where M is the largest coordinate over all exponent points.  So once
    # u_i >= ceil(lam * M), row i is slack and raising u_i further cannot change
    # membership: minimal generators of the multiplier ideal live in the box.
    M = max(max(pt) for pt in a.gens)
    return math.ceil(lam * M)


def multiplier_ideal_monomial(a: MonomialIdeal, lam: Fraction) -> MonomialIdeal:
    """Multiplier ideal of a monomial ideal: {x^u : ord_P(u + 1) > lam}."""
    lam = Fraction(lam)
    if a.is_zero:
        raise DomainError("multiplier ideal of the zero ideal is not defined here")
    if lam < 0:
        raise DomainError("exponent must be >= 0")
    if a.is_unit():
        return MonomialIdeal([(0,) * a.n], a.n)
    P = NewtonPolytope.from_monomial_ideal(a)
    cap = _membership_box(a, lam)
    members = []
    for u in itertools.product(range(cap + 1), repeat=a.n):
        shifted = [Fraction(e + 1) for e in u]
        if newton_order(P, shifted) > lam:
            members.append(u)
    return MonomialIdeal(members, a.n)


def jumping_candidates(a: MonomialIdeal, bound: Fraction) -> list[Fraction]:
    """All jumping numbers of a monomial ideal in (0, bound], sorted ascending.

    Every value is of the form ord_P(u + 1); scanning u over the enumeration
    box for exponent `bound` finds every jump up to the bound.
    """
    bound = Fraction(bound)
    if a.is_zero or a.is_unit():
        raise DomainError("jumping numbers need a nonzero proper ideal")
    if bound <= 0:
        return []
    P = NewtonPolytope.from_monomial_ideal(a)
    cap = _membership_box(a, bound)
    values = set()
    for u in itertools.product(range(cap + 1), repeat=a.n):
        shifted = [Fraction(e + 1) for e in u]
        val = newton_order(P, shifted)
        if isinstance(val, Fraction) and 0 < val <= bound:
            values.add(val)
    return sorted(values)
