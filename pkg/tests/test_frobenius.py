"""Bracket powers, Frobenius roots, nu, enclosures, and test ideals."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fthresholds.errors import DomainError
from fthresholds.exact import prime_power
from fthresholds.frobenius import (
    bracket_power,
    fpt_enclosure,
    fpt_point,
    frobenius_root,
    frobenius_root_principal_power,
    is_unit_ideal,
    nu,
    proves_below_threshold,
)
from fthresholds.frobenius import test_ideal as tau_chain
from fthresholds.gfpoly import GFPoly
from fthresholds.groebner import Ideal, ideal_equal, ideal_member
from fthresholds.parsing import parse_gfpoly
from fthresholds.reduction import truncate_ideal

from conftest import cusp_nu_oracle, nu_bruteforce, rand_gfpoly, rand_homogeneous


def gf(text, n=2, p=5):
    return parse_gfpoly(text, n, p)


def ideal(texts, n=2, p=5):
    return Ideal.from_strings(texts, n, p)


def cusp(p):
    return ideal(["x^2 + y^3"], 2, p)


def test_bracket_power_examples():
    I = bracket_power(ideal(["x", "y"], p=3), prime_power(3, 2))
    assert ideal_equal(I, ideal(["x^9", "y^9"], p=3))
    J = bracket_power(ideal(["x + y"]), prime_power(5, 1))
    assert [str(g) for g in J.gens] == ["x^5 + y^5"]
    Z = bracket_power(Ideal([], n=2, p=5), prime_power(5, 1))
    assert Z.is_zero


def test_frobenius_root_examples():
    q5 = prime_power(5, 1)
    assert ideal_equal(frobenius_root(ideal(["x^5*y^3"]), q5), ideal(["x"]))
    # x^5 y^3 really does lie in (x)^[5]
    assert ideal_member(gf("x^5*y^3"), ideal(["x^5"]))
    assert frobenius_root(ideal(["x^4"]), q5).is_unit()
    assert ideal_equal(frobenius_root(ideal(["x^5 + y^5"]), q5), ideal(["x + y"]))
    assert frobenius_root(Ideal([], n=2, p=5), q5).is_zero


def test_principal_power_examples():
    q4 = prime_power(2, 2)
    r = frobenius_root_principal_power(gf("x", 2, 2), 7, q4)
    assert ideal_equal(r, ideal(["x"], p=2))
    r0 = frobenius_root_principal_power(gf("x", 2, 2), 0, q4)
    assert r0.is_unit()
    # cusp at p=7: f^6 lies in m^[7], so the root sits inside (x, y)
    q7 = prime_power(7, 1)
    root = frobenius_root_principal_power(gf("x^2 + y^3", 2, 7), 6, q7)
    assert ideal(["x", "y"], p=7).contains_ideal(root)


def test_nu_examples():
    for p, e in [(2, 3), (3, 2), (5, 1), (7, 2)]:
        q = p**e
        assert nu(ideal(["x", "y"], p=p), e).nu == 2 * (q - 1)
    assert nu(cusp(7), 1).nu == 5
    assert nu(cusp(5), 1).nu == 3


def test_nu_oracle_cross_checks():
    # exact binomial-coefficient oracle for the cusp at small q
    for p in (5, 7):
        for e in (1, 2):
            assert nu(cusp(p), e).nu == cusp_nu_oracle(p, e)
    # independent full-expansion brute force on small random ideals
    rng = random.Random(7)
    for _ in range(10):
        p = rng.choice([2, 3])
        gens = [rand_gfpoly(rng, 2, p, max_deg=2, max_terms=2, vanish=True)
                for _ in range(rng.randint(1, 2))]
        gens = [g for g in gens if not g.is_zero]
        if not gens:
            continue
        I = Ideal(gens, n=2, p=p)
        assert nu(I, 1).nu == nu_bruteforce(gens, p)


def test_nu_conventions_and_errors():
    q = prime_power(5, 1)
    assert nu(Ideal([], n=2, p=5), 1).nu == 0
    with pytest.raises(DomainError):
        nu(ideal(["x + 1"]), 1)


def test_nu_bound():
    rng = random.Random(3)
    for _ in range(10):
        p = rng.choice([2, 3, 5])
        n = rng.choice([1, 2])
        gens = [rand_gfpoly(rng, n, p, max_deg=3, max_terms=3, vanish=True)
                for _ in range(rng.randint(1, 2))]
        gens = [g for g in gens if not g.is_zero]
        if not gens:
            continue
        e = rng.choice([1, 2])
        value = nu(Ideal(gens, n=n, p=p), e).nu
        assert value <= n * (p**e - 1)


def test_fpt_enclosure_examples():
    enc = fpt_enclosure(ideal(["x", "y"], p=3), 2)
    assert (enc.low, enc.nu) == (Fraction(16, 9), 16)
    assert enc.low <= 2 <= enc.high  # k = 2 generators: high = 18/9
    enc7 = fpt_enclosure(cusp(7), 1)
    assert (enc7.low, enc7.high) == (Fraction(5, 7), Fraction(6, 7))
    assert enc7.low <= Fraction(5, 6) <= enc7.high
    enc5 = fpt_enclosure(cusp(5), 1)
    assert (enc5.low, enc5.high) == (Fraction(3, 5), Fraction(4, 5))
    assert enc5.width == Fraction(1, 5)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_adjunction(seed):
    """b <= c^[q] iff b^[1/q] <= c, via Groebner membership."""
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    e = rng.choice([1, 2])
    q = prime_power(p, e)
    n = 2
    b = Ideal([rand_gfpoly(rng, n, p, 4, 3) for _ in range(rng.randint(1, 2))], n=n, p=p)
    c = Ideal([rand_gfpoly(rng, n, p, 4, 3) for _ in range(rng.randint(1, 2))], n=n, p=p)
    if rng.random() < 0.5 and not c.is_zero:
        # force the containment branch: build b inside c^[q]
        cq = bracket_power(c, q)
        mix = [sum((g.scale(rng.randint(1, p - 1)) for g in cq.gens), GFPoly.zero(n, p))
               for _ in range(2)]
        b = Ideal([m for m in mix if not m.is_zero], n=n, p=p)
    lhs = bracket_power(c, q).contains_ideal(b)
    rhs = c.contains_ideal(frobenius_root(b, q))
    assert lhs == rhs


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_root_of_sum(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    q = prime_power(p, rng.choice([1, 2]))
    b = Ideal([rand_gfpoly(rng, 2, p, 4, 3)], n=2, p=p)
    c = Ideal([rand_gfpoly(rng, 2, p, 4, 3)], n=2, p=p)
    combined = Ideal(list(b.gens) + list(c.gens), n=2, p=p)
    lhs = frobenius_root(combined, q)
    rhs = Ideal(list(frobenius_root(b, q).gens) + list(frobenius_root(c, q).gens), n=2, p=p)
    assert ideal_equal(lhs, rhs)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_nu_supermultiplicative_and_nested_enclosures(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    f = rand_gfpoly(rng, 2, p, max_deg=4, max_terms=3, vanish=True)
    if f.is_zero:
        return
    I = Ideal([f], n=2, p=p)
    values = [nu(I, e).nu for e in (1, 2, 3)]
    for e in (1, 2):
        assert values[e] >= p * values[e - 1]
    encs = [fpt_enclosure(I, e) for e in (1, 2, 3)]
    for a, b in zip(encs, encs[1:]):
        assert b.low >= a.low
        assert max(a.low, b.low) <= min(a.high, b.high)  # intervals intersect


@given(st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_tau_monotone_in_lambda(seed):
    rng = random.Random(seed)
    p = rng.choice([3, 5, 7])
    f = rand_gfpoly(rng, 2, p, max_deg=4, max_terms=3, vanish=True)
    if f.is_zero:
        return
    a = Ideal([f], n=2, p=p)
    k = rng.randint(1, 11)
    lam = Fraction(k, 12)
    mu = Fraction(k + rng.randint(1, 12 - k), 12)
    t_lam = tau_chain(a, lam, 3)
    t_mu = tau_chain(a, mu, 3)
    assert t_lam.ideal.contains_ideal(t_mu.ideal)


def test_test_ideal_spot_values():
    a = ideal(["x^2", "y^3"], p=7)
    half = tau_chain(a, Fraction(1, 2), 3)
    assert half.ideal.is_unit() and is_unit_ideal(half.ideal)
    five_sixths = tau_chain(a, Fraction(5, 6), 3)
    assert ideal_equal(five_sixths.ideal, ideal(["x", "y"], p=7))
    assert five_sixths.stabilized and five_sixths.e_used <= 3
    anything = tau_chain(ideal(["x^3 + y^4"], p=5), Fraction(0), 2)
    assert anything.ideal.is_unit()


def test_test_ideal_derived_floor_example():
    # ceil(5 * 49 / 6) = 41; floors of a^41 exponent pairs give exactly (x, y)
    a = ideal(["x^2", "y^3"], p=7)
    got = set()
    for k in range(42):
        beta = ((2 * k) // 49, (3 * (41 - k)) // 49)
        got.add(beta)
    assert (1, 0) in got and (0, 1) in got and (0, 0) not in got


@given(st.integers(0, 10**6))
@settings(max_examples=12, deadline=None)
def test_two_routes_consistency(seed):
    """Enclosures and the tau route never disagree (homogeneous inputs keep
    the relevant singular point at the origin)."""
    rng = random.Random(seed)
    p = rng.choice([3, 5, 7])
    f = rand_homogeneous(rng, 2, p, rng.randint(2, 4))
    if f.is_zero:
        return
    a = Ideal([f], n=2, p=p)
    lam = Fraction(rng.randint(1, 18), 12)
    result = tau_chain(a, lam, 3)
    encs = [fpt_enclosure(a, e) for e in (1, 2, 3)]
    if result.ideal.is_unit():
        for enc in encs:
            assert lam < enc.high
    elif result.stabilized:
        for enc in encs:
            assert lam >= enc.low


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_principal_power_digit_vs_expand(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    f = rand_gfpoly(rng, 2, p, max_deg=3, max_terms=3)
    if f.is_zero:
        return
    for e in (1, 2):
        q = prime_power(p, e)
        for N in (0, 1, 2, 3, 5, 8, 12):
            fast = frobenius_root_principal_power(f, N, q)
            slow = frobenius_root(Ideal([f.pow(N)], n=2, p=p), q)
            assert ideal_equal(fast, slow)


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_nu_fast_paths_match_dp(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3, 5])
    style = rng.choice(["principal", "monomial", "mixed"])
    if style == "principal":
        f = rand_gfpoly(rng, 2, p, max_deg=3, max_terms=3, vanish=True)
        if f.is_zero:
            return
        I = Ideal([f], n=2, p=p)
    elif style == "monomial":
        pts = [tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(rng.randint(1, 3))]
        pts = [m for m in pts if sum(m) > 0]
        if not pts:
            return
        I = Ideal([GFPoly.from_monomial(m, 2, p) for m in pts], n=2, p=p)
    else:
        f = gf("x^2 + y^3", 2, p)
        I = truncate_ideal(Ideal([f], n=2, p=p), rng.randint(1, 4))
    for e in (1, 2):
        assert nu(I, e).nu == nu(I, e, method="dp").nu


def test_fpt_point_certification():
    assert fpt_point(cusp(7), 2) == Fraction(5, 6)
    assert fpt_point(cusp(5), 3, e_max=5) == Fraction(4, 5)
    assert fpt_point(ideal(["x", "y"], p=3), 2) == 2
    # p = 2: the cusp threshold is 1/2
    assert fpt_point(cusp(2), 4, e_max=6) == Fraction(1, 2)


def test_proves_below_threshold():
    a = cusp(7)
    assert proves_below_threshold(a, Fraction(1, 2), 2)
    assert not proves_below_threshold(a, Fraction(9, 10), 3)


def test_ascending_chain_is_verified():
    # stabilization loop runs the containment check internally; a healthy input
    # must pass it for every step up to e_max without raising
    a = ideal(["x^2 + y^3"], p=5)
    result = tau_chain(a, Fraction(4, 5), 4)
    assert not result.ideal.is_unit()


def test_tau_general_route_matches_principal():
    # (f, x*f) generates the same ideal as (f): the explicit power-expansion
    # route must agree with the digit route on it
    for p in (3, 5):
        f = gf("x^2 + y^3", 2, p)
        plain = Ideal([f], n=2, p=p)
        padded = Ideal([f, gf("x", 2, p) * f], n=2, p=p)
        for lam in (Fraction(1, 2), Fraction(5, 6), Fraction(1)):
            t1 = tau_chain(plain, lam, 2)
            t2 = tau_chain(padded, lam, 2)
            assert ideal_equal(t1.ideal, t2.ideal), (p, lam)


def test_tau_expansion_capacity():
    from fthresholds.errors import CapacityError

    a = ideal(["x^2 + y", "x*y + x"], p=5)
    with pytest.raises(CapacityError):
        tau_chain(a, Fraction(3, 2), 3, expansion_cap=2)


def test_tau_monomial_route():
    # monomial ideals are exempt from the expansion cap; powers stay antichains
    a = ideal(["x^2", "y^3"], p=7)
    res = tau_chain(a, Fraction(5, 6), 3, expansion_cap=1)
    assert ideal_equal(res.ideal, ideal(["x", "y"], p=7))
