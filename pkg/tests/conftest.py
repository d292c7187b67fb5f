"""Shared helpers: random generators and independent brute-force oracles.

The oracles here deliberately avoid the code paths they check: truncation is
applied only once at the end, ideal powers are expanded as explicit products,
and binomial survival is decided with exact binomial coefficients.
"""

import itertools
import math
import random

from fthresholds.gfpoly import GFPoly


def rand_gfpoly(rng: random.Random, n: int, p: int, max_deg: int, max_terms: int,
                vanish: bool = False) -> GFPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(rng.randint(0, max_deg) for _ in range(n))
        if sum(mono) > max_deg:
            continue
        if vanish and sum(mono) == 0:
            continue
        terms[mono] = rng.randint(1, p - 1)
    return GFPoly.make(n, p, terms.items())


def rand_homogeneous(rng: random.Random, n: int, p: int, deg: int) -> GFPoly:
    monos = [m for m in itertools.product(range(deg + 1), repeat=n) if sum(m) == deg]
    terms = {}
    for m in monos:
        c = rng.randint(0, p - 1)
        if c:
            terms[m] = c
    return GFPoly.make(n, p, terms.items())


def pow_truncate_oracle(f: GFPoly, r: int, qv: int) -> GFPoly:
    """Full power first, one deletion pass at the end."""
    return f.pow(r).truncate(qv)


def nu_bruteforce(gens: list[GFPoly], qv: int) -> int:
    """Largest r such that some full product of r generators survives truncation.

    Expands every generator multiset without intermediate truncation; only
    usable on tiny instances.
    """
    n, p = gens[0].n, gens[0].p
    best = 0
    r = 1
    while True:
        survivor = False
        for combo in itertools.combinations_with_replacement(gens, r):
            prod = GFPoly.one(n, p)
            for g in combo:
                prod = prod * g
            if not prod.truncate(qv).is_zero:
                survivor = True
                break
        if not survivor:
            return best
        best = r
        r += 1


def cusp_nu_oracle(p: int, e: int) -> int:
    """nu of (x^2 + y^3) over F_p by exact binomial survival.

    f^r = sum_k C(r,k) x^(2k) y^(3(r-k)); a term survives iff 2k <= q-1,
    3(r-k) <= q-1 and C(r,k) is nonzero mod p.
    """
    q = p**e
    best = 0
    for r in range(q):
        k_lo = max(0, r - (q - 1) // 3)
        k_hi = min(r, (q - 1) // 2)
        for k in range(k_hi, k_lo - 1, -1):
            if math.comb(r, k) % p:
                best = r
                break
    return best
