"""Bracket powers, Frobenius roots, nu-invariants, fpt enclosures, test ideals.

Central facts used throughout (R = F_p[x_1..x_n], q = p^e, m = (x_1..x_n)):

  * R is free over the subring R^q with monomial basis {x^g : 0 <= g_i <= q-1},
    and coefficient q-th roots in F_p are trivial (c^p = c).  Writing a
    polynomial b = sum_g (b_g)^q x^g, the ideal generated by all b_g over all
    generators of an ideal is its Frobenius root b^[1/q]: the smallest J with
    b contained in J^[q].
  * Adjunction: b <= c^[q]  iff  b^[1/q] <= c.  In particular a^r lies outside
    m^[q] exactly when (a^r)^[1/q] is not contained in m, which is the
    membership kernel behind the nu computations at large q.
  * For principal ideals, ((f^{pN'} * g))^[1/p] = f^{N'} * (g)^[1/p], so
    (f^N)^[1/p^e] follows the base-p digits of N one level at a time without
    ever expanding f^N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, DomainError, InvariantViolation
from .exact import PrimePower, farey_below, prime_power, simplest_between
from .gfpoly import GFPoly, drl_key
from .groebner import Ideal, MonomialIdeal, ideal_equal

DEFAULT_DP_CAP = 200_000
DEFAULT_NODE_CAP = 1_000_000
DEFAULT_EXPANSION_CAP = 2_000


@dataclass(frozen=True)
class NuValue:
    """nu(e): the largest r with a^r not contained in m^[p^e] (0 for a = (0))."""

    q: PrimePower
    nu: int


@dataclass(frozen=True)
class FptEnclosure:
    """Rigorous interval around the F-pure threshold at the origin.

    low = nu(e)/q is a lower bound because nu(e)/p^e increases to the
    threshold.  For the upper bound, let k be the number of generators: any
    product of (nu+1)q' + (k-1)(q'-1) generators contains some generator to
    the q'-th power at least nu+1 times, hence lies in (a^{nu+1})^[q'] which
    is inside m^[q q'].  Therefore nu(e+e')/p^(e+e') < (nu+k)/p^e for every
    e', and the threshold is at most high = (nu+k)/q.  For principal ideals
    (k = 1) this is the classical width-1/q enclosure.
    """

    low: Fraction
    high: Fraction
    q: PrimePower
    nu: int
    ngens: int

    @property
    def width(self) -> Fraction:
        return self.high - self.low


@dataclass(frozen=True)
class TestIdealResult:
    ideal: Ideal
    lam: Fraction
    e_used: int
    stabilized: bool


def _frob_power(g: GFPoly, qv: int) -> GFPoly:
    # (sum c x^a)^q = sum c x^(q a) over F_p: Frobenius fixes coefficients.
    return GFPoly.make(g.n, g.p, [(tuple(e * qv for e in m), c) for m, c in g.terms.items()])


def bracket_power(I: Ideal, q: PrimePower) -> Ideal:
    """The ideal generated by g^q over the generators g of I."""
    if I.p != q.p:
        raise DomainError(f"ambient characteristic {I.p} does not match q = {q}")
    return Ideal([_frob_power(g, q.q) for g in I.gens], n=I.n, p=I.p)


def _root_buckets(g: GFPoly, qv: int) -> list[GFPoly]:
    """Split g = sum_gamma (g_gamma)^q * x^gamma; return the nonzero g_gamma."""
    buckets: dict = {}
    for m, c in g.terms.items():
        beta = tuple(e // qv for e in m)
        gamma = tuple(e % qv for e in m)
        buckets.setdefault(gamma, {})[beta] = c
    out = []
    for gamma in sorted(buckets, key=drl_key):
        out.append(GFPoly(g.n, g.p, buckets[gamma]))
    return out


def frobenius_root(b: Ideal, q: PrimePower) -> Ideal:
    """The smallest ideal J with b contained in J^[q]."""
    if b.p != q.p:
        raise DomainError(f"ambient characteristic {b.p} does not match q = {q}")
    gens: list[GFPoly] = []
    seen = set()
    for g in b.gens:
        for piece in _root_buckets(g, q.q):
            if piece not in seen:
                seen.add(piece)
                gens.append(piece)
    return Ideal(gens, n=b.n, p=b.p)


def _poly_sort_key(g: GFPoly):
    return tuple(g.sorted_terms())


def _linear_reduce(polys: list[GFPoly], n: int, p: int) -> list[GFPoly]:
    """Echelonize a generating set over F_p (same ideal, bounded count).

    Rows are combined linearly only, so the span (hence the ideal) is
    unchanged while the number of generators drops to at most the dimension
    of the ambient coefficient space.
    """
    rows = sorted(
        {g for g in polys if not g.is_zero},
        key=lambda g: (drl_key(g.lead_monomial()), _poly_sort_key(g)),
        reverse=True,
    )
    pivots: dict = {}
    for g in rows:
        work = dict(g.terms)
        while work:
            m = max(work, key=drl_key)
            piv = pivots.get(m)
            if piv is None:
                inv = pow(work[m], -1, p)
                pivots[m] = {mm: (cc * inv) % p for mm, cc in work.items()}
                break
            c = work[m]
            for mm, cc in piv.items():
                v = (work.get(mm, 0) - c * cc) % p
                if v:
                    work[mm] = v
                elif mm in work:
                    del work[mm]
    return [
        GFPoly(n, p, dict(pivots[m]))
        for m in sorted(pivots, key=drl_key, reverse=True)
    ]


def _root_step(polys: list[GFPoly], n: int, p: int) -> list[GFPoly]:
    """One-level Frobenius root of the ideal generated by `polys`, echelonized."""
    pieces: list[GFPoly] = []
    for g in polys:
        pieces.extend(_root_buckets(g, p))
    return _linear_reduce(pieces, n, p)


def _principal_digit_root(fpowers: list[GFPoly], N: int, e: int) -> tuple[list[GFPoly], int]:
    """Generators of (f^(N mod p^e))^[1/p^e] via base-p digits; returns residue N // p^e."""
    f = fpowers[1]
    n, p = f.n, f.p
    J = [GFPoly.one(n, p)]
    M = N
    for _ in range(e):
        d = M % p
        M //= p
        prods = J if d == 0 else [fpowers[d] * g for g in J]
        J = _root_step(prods, n, p)
    return J, M


def frobenius_root_principal_power(f: GFPoly, N: int, q: PrimePower) -> Ideal:
    """(f^N)^[1/q] without expanding f^N, one base-p digit of N at a time."""
    if N < 0:
        raise DomainError("negative power")
    if f.p != q.p:
        raise DomainError(f"field characteristic {f.p} does not match q = {q}")
    if N == 0:
        return Ideal([GFPoly.one(f.n, f.p)], n=f.n, p=f.p)
    if f.is_zero:
        return Ideal([], n=f.n, p=f.p)
    fpowers = _small_powers(f)
    J, M = _principal_digit_root(fpowers, N, q.e)
    if M:
        fM = f.pow(M)
        J = [fM * g for g in J]
    return Ideal(J, n=f.n, p=f.p)


def _small_powers(f: GFPoly) -> list[GFPoly]:
    """[f^0, f^1, ..., f^(p-1)]."""
    powers = [GFPoly.one(f.n, f.p)]
    for _ in range(f.p - 1):
        powers.append(powers[-1] * f)
    return powers


def _outside_m(gens: list[GFPoly]) -> bool:
    return any(g.constant_term() for g in gens)


def _nu_principal(f: GFPoly, e: int) -> int:
    """nu for a principal ideal via digit-root membership tests.

    nu(1) is found by direct truncated probing (nu(1) <= n(p-1)); then each
    level satisfies p*nu(l) <= nu(l+1) <= p*nu(l) + p - 1: the lower bound
    because survival is preserved by p-th powers, the upper because
    f^(nu+1) in m^[q] forces f^(p(nu+1)) into m^[pq].  The window is scanned
    from the top; f^r lies outside m^[q] iff (f^r)^[1/q] has a generator with
    nonzero constant term (adjunction against m).
    """
    p = f.p
    fpowers = _small_powers(f)
    value = 0
    t = GFPoly.one(f.n, p).truncate(p)
    while True:
        t = t.mul_truncated(f, p)
        if t.is_zero:
            break
        value += 1
    for level in range(2, e + 1):
        base = p * value
        found = None
        for s in range(p - 1, -1, -1):
            gens, _ = _principal_digit_root(fpowers, base + s, level)
            if _outside_m(gens):
                found = base + s
                break
        if found is None:
            raise InvariantViolation("principal nu window lost its lower bound")
        value = found
    return value


def _full_max_power_degree(points: list[tuple], n: int) -> int | None:
    """If `points` is exactly the degree-d antichain of m^d, return d."""
    if not points:
        return None
    degs = {sum(m) for m in points}
    if len(degs) != 1:
        return None
    d = degs.pop()
    if d < 1:
        return None
    expected = math.comb(d + n - 1, n - 1)
    return d if len(set(points)) == expected else None


def _nu_mixed(f: GFPoly, d: int, qv: int, term_cap: int) -> int:
    """nu for (f) + m^d.

    Every generator product is f^i * x^v with |v| = d*j, and any v >= 0 with
    |v| = d*j is a sum of j degree-d monomials.  Such a product survives iff
    some surviving term x^c of the truncated f^i fits under the box:
    c + v <= (q-1, ..., q-1) componentwise, which is possible iff
    d*j <= n(q-1) - |c|.  So for each i only the minimal total degree among
    surviving terms of f^i matters.
    """
    p, n = f.p, f.n
    limit = n * (qv - 1)
    fterms = list(f.terms.items())
    best = limit // d  # i = 0: the empty f-part
    cur = {(0,) * n: 1}
    i = 0
    while cur:
        i += 1
        nxt: dict = {}
        for m, c in cur.items():
            for fm, fc in fterms:
                mm = tuple(a + b for a, b in zip(m, fm))
                if any(x >= qv for x in mm):
                    continue
                v = (nxt.get(mm, 0) + c * fc) % p
                if v:
                    nxt[mm] = v
                elif mm in nxt:
                    del nxt[mm]
        if len(nxt) > term_cap:
            raise CapacityError(f"term-set cap of {term_cap} exceeded in mixed nu")
        cur = nxt
        if cur:
            mindeg = min(sum(m) for m in cur)
            best = max(best, i + (limit - mindeg) // d)
    return best


def _nu_monomial(points: list[tuple], qv: int, n: int, node_cap: int) -> int:
    """Exact nu for a monomial ideal by bounded branch-and-bound.

    Maximizes the number of generator factors c_1 + ... + c_k subject to
    sum_i c_i * v_i <= (q-1, ..., q-1): a product of monomial generators
    escapes m^[q] exactly when every coordinate stays below q.
    """
    gens = sorted(set(points), key=lambda m: (sum(m), drl_key(m)))
    degs = [sum(m) for m in gens]
    suffix_min = [0] * len(gens)
    running = None
    for i in range(len(gens) - 1, -1, -1):
        running = degs[i] if running is None else min(running, degs[i])
        suffix_min[i] = running
    best = 0
    nodes = 0

    def rec(i: int, count: int, budget: tuple, rem: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_cap:
            raise CapacityError(f"node cap of {node_cap} exceeded in monomial nu")
        if count > best:
            best = count
        if i == len(gens):
            return
        if count + rem // suffix_min[i] <= best:
            return
        v = gens[i]
        cmax = min(budget[t] // v[t] for t in range(n) if v[t] > 0)
        for c in range(cmax, -1, -1):
            nb = tuple(budget[t] - c * v[t] for t in range(n))
            rec(i + 1, count + c, nb, rem - c * degs[i])

    rec(0, 0, (qv - 1,) * n, n * (qv - 1))
    return best


def _nu_dp(gens: list[GFPoly], qv: int, term_cap: int) -> int:
    """Reference path: level sets of deduplicated q-truncated generator products."""
    truncated = [g.truncate(qv) for g in gens]
    level = sorted({g for g in truncated if not g.is_zero}, key=_poly_sort_key)
    r = 0
    while level:
        r += 1
        seen = set()
        for u in level:
            for g in truncated:
                prod = u.mul_truncated(g, qv)
                if not prod.is_zero:
                    seen.add(prod)
        if len(seen) > term_cap:
            raise CapacityError(f"term-set cap of {term_cap} exceeded in nu DP")
        level = sorted(seen, key=_poly_sort_key)
    return r


def nu(a: Ideal, e: int, *, method: str = "auto", term_cap: int = DEFAULT_DP_CAP,
       node_cap: int = DEFAULT_NODE_CAP) -> NuValue:
    """The largest r with a^r not contained in m^[p^e] (convention: 0 for a = (0)).

    Requires every generator to vanish at the origin.  Dispatches to exact
    fast paths (monomial, principal, principal + power of the maximal ideal)
    and falls back to the deduplicated product DP otherwise.
    """
    q = prime_power(a.p, e)
    for g in a.gens:
        if not g.vanishes_at_origin():
            raise DomainError("nu requires generators vanishing at the origin")
    if a.is_zero:
        return NuValue(q, 0)
    if method == "dp":
        return NuValue(q, _nu_dp(list(a.gens), q.q, term_cap))
    if method != "auto":
        raise DomainError(f"unknown nu method {method!r}")
    monos = [g for g in a.gens if g.is_monomial()]
    others = [g for g in a.gens if not g.is_monomial()]
    if not others:
        value = _nu_monomial([g.lead_monomial() for g in monos], q.q, a.n, node_cap)
    elif len(others) == 1:
        f = others[0]
        if not monos:
            value = _nu_principal(f, e)
        else:
            d = _full_max_power_degree([g.lead_monomial() for g in monos], a.n)
            if d is not None:
                value = _nu_mixed(f, d, q.q, term_cap)
            else:
                value = _nu_dp(list(a.gens), q.q, term_cap)
    else:
        value = _nu_dp(list(a.gens), q.q, term_cap)
    return NuValue(q, value)


def fpt_enclosure(a: Ideal, e: int, **caps) -> FptEnclosure:
    """[nu/q, (nu+k)/q] with k the generator count; contains the true threshold."""
    nv = nu(a, e, **caps)
    k = len(a.gens)
    low = Fraction(nv.nu, nv.q.q)
    high = Fraction(nv.nu + k, nv.q.q)
    return FptEnclosure(low=low, high=high, q=nv.q, nu=nv.nu, ngens=k)


def _monomial_power_root(points: list[tuple], n: int, p: int, N: int, q: PrimePower) -> Ideal:
    a = MonomialIdeal(points, n)
    return a.pow(N).floor_root(q).to_ideal(p)


def _expanded_power_root(gens: list[GFPoly], n: int, p: int, N: int, q: PrimePower,
                         cap: int) -> Ideal:
    prods = {GFPoly.one(n, p)}
    for _ in range(N):
        nxt = set()
        for u in prods:
            for g in gens:
                nxt.add(u * g)
                if len(nxt) > cap:
                    raise CapacityError(f"power expansion cap of {cap} exceeded")
        prods = nxt
    return frobenius_root(Ideal(sorted(prods, key=_poly_sort_key), n=n, p=p), q)


def _power_root(a: Ideal, N: int, q: PrimePower, cap: int) -> Ideal:
    """(a^N)^[1/q] along the cheapest applicable route."""
    if N == 0:
        return Ideal([GFPoly.one(a.n, a.p)], n=a.n, p=a.p)
    if a.is_zero:
        return Ideal([], n=a.n, p=a.p)
    if len(a.gens) == 1:
        return frobenius_root_principal_power(a.gens[0], N, q)
    if all(g.is_monomial() for g in a.gens):
        return _monomial_power_root([g.lead_monomial() for g in a.gens], a.n, a.p, N, q)
    return _expanded_power_root(list(a.gens), a.n, a.p, N, q, cap)


def test_ideal(a: Ideal, lam: Fraction, e_max: int,
               expansion_cap: int = DEFAULT_EXPANSION_CAP) -> TestIdealResult:
    """tau(a^lam) via the ascending chain I_e = (a^ceil(lam p^e))^[1/p^e].

    Stops when two consecutive ideals agree (stabilized) or at e_max
    (stabilized=False, honestly).  The chain is verified ascending at every
    step; a unit value is final since the chain can only grow.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise DomainError("exponent must be >= 0")
    if e_max < 1:
        raise DomainError("e_max must be >= 1")
    prime_power(a.p, e_max)  # validates p^e_max < 2^63
    prev = None
    for e in range(1, e_max + 1):
        q = prime_power(a.p, e)
        N = math.ceil(lam * q.q)
        current = _power_root(a, N, q, expansion_cap)
        if prev is not None:
            if not current.contains_ideal(prev):
                raise InvariantViolation("test ideal chain is not ascending")
            if ideal_equal(prev, current):
                return TestIdealResult(current, lam, e, True)
        if current.is_unit():
            return TestIdealResult(current, lam, e, True)
        prev = current
    return TestIdealResult(prev, lam, e_max, False)


def is_unit_ideal(I: Ideal) -> bool:
    """True iff 1 lies in I (the reduced GB contains a nonzero constant)."""
    return I.is_unit()


def proves_below_threshold(a: Ideal, lam: Fraction, e_max: int) -> bool:
    """Sound one-sided proof that lam is strictly below the threshold at 0.

    ceil(lam * p^e) <= nu(e) means a^ceil(lam p^e) escapes m^[p^e], so the
    level-e chain value escapes m and tau(a^lam) is trivial at the origin.
    Complete in the limit: any lam below the threshold is eventually caught.
    """
    lam = Fraction(lam)
    for e in range(1, e_max + 1):
        q = prime_power(a.p, e)
        if math.ceil(lam * q.q) <= nu(a, e).nu:
            return True
    return False


def fpt_point(a: Ideal, e: int, *, e_max: int = None, den_limit: int = None) -> Fraction | None:
    """Rational point value of the threshold, when the tau route confirms it.

    Takes the smallest-denominator rational in the level-e enclosure as the
    candidate; confirms that the stabilized tau at the candidate vanishes at
    the origin while the largest grid rational below it (denominators up to q)
    is provably under the threshold.  Returns None when no confirmation is
    reached.  Stabilization of the chain is heuristic, so a confirmed point is
    only as strong as the stabilized tau value; the below-proof is exact.
    """
    enc = fpt_enclosure(a, e)
    dlim = den_limit if den_limit is not None else enc.q.q
    cand = simplest_between(enc.low, enc.high)
    if cand.denominator > dlim or cand <= 0:
        return None
    emax = e_max if e_max is not None else max(e, 3)
    at = test_ideal(a, cand, emax)
    at_origin_proper = all(g.vanishes_at_origin() for g in at.ideal.gens)
    if not (at.stabilized and at_origin_proper):
        return None
    below = farey_below(cand, dlim)
    if below > 0 and not proves_below_threshold(a, below, emax):
        return None
    return cand
