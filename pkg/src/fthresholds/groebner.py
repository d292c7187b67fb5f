"""Minimal Buchberger engine over F_p[x_1..x_n], plus monomial-ideal fast paths.

The monomial order is degrevlex everywhere.  Reduced Groebner bases are unique,
so ideal equality is a term-for-term comparison of bases.  Monomial ideals
bypass Buchberger entirely: membership is divisibility and every operation
keeps the generator antichain minimal.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError
from .exact import PrimePower
from .gfpoly import (
    GFPoly,
    Monomial,
    drl_key,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

DEFAULT_PAIR_CAP = 100_000


def normal_form(f: GFPoly, basis: Sequence[GFPoly]) -> GFPoly:
    """Remainder of multivariate division of f by `basis` under degrevlex.

    No term of the result is divisible by the lead monomial of any divisor.
    """
    divisors = [(g.lead_monomial(), g.lead_coeff(), g) for g in basis if not g.is_zero]
    if not divisors or f.is_zero:
        return f
    p = f.p
    work = dict(f.terms)
    remainder: dict = {}
    while work:
        m = max(work, key=drl_key)
        c = work[m]
        for hm, hc, g in divisors:
            if monomial_divides(hm, m):
                shift = tuple(a - b for a, b in zip(m, hm))
                factor = (c * pow(hc, -1, p)) % p
                for gm, gc in g.terms.items():
                    mm = monomial_mul(gm, shift)
                    v = (work.get(mm, 0) - factor * gc) % p
                    if v:
                        work[mm] = v
                    elif mm in work:
                        del work[mm]
                break
        else:
            remainder[m] = c
            del work[m]
    return GFPoly(f.n, f.p, remainder)


def _spoly(f: GFPoly, g: GFPoly) -> GFPoly:
    lf, lg = f.lead_monomial(), g.lead_monomial()
    lcm = monomial_lcm(lf, lg)
    p = f.p
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    cf = pow(f.lead_coeff(), -1, p)
    cg = pow(g.lead_coeff(), -1, p)
    return f.mul_term(sf, cf) - g.mul_term(sg, cg)


def _pair_key(lcm: Monomial, i: int, j: int):
    # Process pairs by degree of the lcm, then degrevlex of the lcm: deterministic.
    return (sum(lcm), tuple(-e for e in reversed(lcm)), i, j)


def groebner_basis(gens: Iterable[GFPoly], pair_cap: int = DEFAULT_PAIR_CAP) -> tuple[GFPoly, ...]:
    """The unique reduced Groebner basis of the ideal generated by `gens`."""
    basis = [g.monic() for g in gens if not g.is_zero]
    if not basis:
        return ()
    heap: list = []
    for i in range(len(basis)):
        for j in range(i):
            lcm = monomial_lcm(basis[i].lead_monomial(), basis[j].lead_monomial())
            heapq.heappush(heap, (_pair_key(lcm, j, i), j, i))
    processed = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        f, g = basis[i], basis[j]
        lf, lg = f.lead_monomial(), g.lead_monomial()
        lcm = monomial_lcm(lf, lg)
        if lcm == monomial_mul(lf, lg):
            continue  # product criterion: coprime lead monomials
        processed += 1
        if processed > pair_cap:
            raise CapacityError(f"S-pair cap of {pair_cap} exceeded")
        r = normal_form(_spoly(f, g), basis)
        if r.is_zero:
            continue
        r = r.monic()
        k = len(basis)
        for t in range(k):
            lcm = monomial_lcm(basis[t].lead_monomial(), r.lead_monomial())
            heapq.heappush(heap, (_pair_key(lcm, t, k), t, k))
        basis.append(r)
    return _reduce_basis(basis)


def _reduce_basis(basis: list[GFPoly]) -> tuple[GFPoly, ...]:
    # Minimalize: drop elements whose lead monomial is divisible by another's.
    order = sorted(range(len(basis)), key=lambda i: drl_key(basis[i].lead_monomial()))
    keep: list[GFPoly] = []
    for i in order:
        lm = basis[i].lead_monomial()
        if not any(monomial_divides(g.lead_monomial(), lm) for g in keep):
            keep.append(basis[i])
    # Autoreduce until stable.
    changed = True
    while changed:
        changed = False
        for i in range(len(keep)):
            rest = keep[:i] + keep[i + 1 :]
            r = normal_form(keep[i], rest)
            if r.is_zero:
                keep.pop(i)
                changed = True
                break
            r = r.monic()
            if r != keep[i]:
                keep[i] = r
                changed = True
    keep.sort(key=lambda g: drl_key(g.lead_monomial()), reverse=True)
    return tuple(keep)


class Ideal:
    """Finitely generated ideal of F_p[x_1..x_n] with a cached reduced GB."""

    __slots__ = ("gens", "n", "p", "_gb", "_pair_cap")

    def __init__(self, gens: Iterable[GFPoly], n: int = None, p: int = None,
                 pair_cap: int = DEFAULT_PAIR_CAP):
        gens = [g for g in gens if not g.is_zero]
        if n is None or p is None:
            if not gens:
                raise DomainError("ambient (n, p) required for the zero ideal")
            n, p = gens[0].n, gens[0].p
        for g in gens:
            if g.n != n or g.p != p:
                raise DomainError("generators live in different ambient rings")
        self.gens = tuple(gens)
        self.n = n
        self.p = p
        self._gb = None
        self._pair_cap = pair_cap

    @classmethod
    def from_strings(cls, texts: list[str] | str, n: int, p: int) -> "Ideal":
        from .parsing import parse_ideal

        return parse_ideal(texts, n, p)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def groebner_basis(self) -> tuple[GFPoly, ...]:
        if self._gb is None:
            self._gb = groebner_basis(self.gens, self._pair_cap)
        return self._gb

    def contains(self, f: GFPoly) -> bool:
        if f.is_zero:
            return True
        if self.is_zero:
            return False
        return normal_form(f, self.groebner_basis()).is_zero

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if self.n != other.n or self.p != other.p:
            raise DomainError("ambient mismatch in ideal comparison")
        return self.groebner_basis() == other.groebner_basis()

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return any(g.total_degree() == 0 for g in gb)

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.gens]

    def __repr__(self) -> str:
        return f"Ideal({self.to_strings()}, n={self.n}, p={self.p})"


def buchberger(I: Ideal) -> Ideal:
    """Compute and cache the reduced Groebner basis of I; returns I."""
    I.groebner_basis()
    return I


def ideal_member(f: GFPoly, I: Ideal) -> bool:
    return I.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.equals(J)


def minimize_points(points: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Antichain of minimal exponent vectors under componentwise <=."""
    pts = set(tuple(p) for p in points)
    if not pts:
        return ()
    n = len(next(iter(pts)))
    if n == 1:
        return (min(pts),)
    if n == 2:
        # Sweep by first coordinate; a point is dominated iff some kept point
        # with smaller-or-equal x also has smaller-or-equal y.
        keep2: list[Monomial] = []
        min_y = None
        for q in sorted(pts):
            if min_y is None or q[1] < min_y:
                keep2.append(q)
                min_y = q[1]
        return tuple(sorted(keep2, key=drl_key))
    ordered = sorted(pts, key=drl_key)
    keep: list[Monomial] = []
    for q in ordered:
        if not any(monomial_divides(k, q) for k in keep):
            keep.append(q)
    return tuple(keep)


class MonomialIdeal:
    """Monomial ideal given by its minimal generator antichain."""

    __slots__ = ("n", "gens")

    def __init__(self, points: Iterable[Monomial], n: int):
        pts = [tuple(q) for q in points]
        for q in pts:
            if len(q) != n:
                raise DomainError(f"exponent vector {q} has wrong length (n={n})")
            if any(e < 0 for e in q):
                raise DomainError(f"negative exponent in {q}")
        self.n = n
        self.gens = minimize_points(pts)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.n,)

    def contains_monomial(self, mono: Monomial) -> bool:
        return any(monomial_divides(g, mono) for g in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_monomial(g) for g in other.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.n == other.n and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.n, self.gens))

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.gens + other.gens, self.n)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.is_zero or other.is_zero:
            return MonomialIdeal((), self.n)
        return MonomialIdeal(
            [monomial_mul(a, b) for a in self.gens for b in other.gens], self.n
        )

    def pow(self, r: int) -> "MonomialIdeal":
        if r < 0:
            raise DomainError("negative power")
        result = MonomialIdeal([(0,) * self.n], self.n)
        for _ in range(r):
            result = result * self
        return result

    def bracket(self, q: PrimePower) -> "MonomialIdeal":
        return MonomialIdeal([tuple(e * q.q for e in g) for g in self.gens], self.n)

    def floor_root(self, q: PrimePower) -> "MonomialIdeal":
        """Smallest monomial ideal J with self contained in J^[q]."""
        return MonomialIdeal([tuple(e // q.q for e in g) for g in self.gens], self.n)

    def to_ideal(self, p: int) -> Ideal:
        return Ideal([GFPoly.from_monomial(g, self.n, p) for g in self.gens], n=self.n, p=p)

    def to_strings(self) -> list[str]:
        from .parsing import format_monomial

        return [format_monomial(g, self.n) or "1" for g in self.gens]

    def __repr__(self) -> str:
        return f"MonomialIdeal({self.to_strings()}, n={self.n})"
