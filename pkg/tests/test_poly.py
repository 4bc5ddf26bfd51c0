from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from rrcyclic.cyclo import factor_xn_minus_1
from rrcyclic.errors import FieldMismatchError
from rrcyclic.gf import ext_field, field_create, field_for_order
from rrcyclic.poly import (Poly, format_poly, is_squarefree, parse_poly, poly_arith, poly_eval, poly_gcd,
                           poly_lcm)

from conftest import all_divisors

GF2, GF4, GF8 = field_for_order(2), field_for_order(4), field_for_order(8)


def P(F, *coeffs):
    return Poly(F, coeffs)


def polys(F, max_len=12):
    return st.lists(st.integers(0, F.order - 1), max_size=max_len).map(lambda c: Poly(F, c))


def test_normalization_and_zero():
    z = Poly(GF2, [0, 0])
    assert z.is_zero() and z.coeffs == () and z.degree is None
    assert Poly(GF4, [1, 2, 0, 0]).degree == 1
    assert Poly.zero(GF2) == z


def test_spec_examples():
    f = P(GF2, 1, 0, 1, 1)
    assert f * Poly.one(GF2) == f
    x1 = P(GF2, 1, 1)
    assert x1 * x1 == P(GF2, 1, 0, 1)
    q, r = divmod(Poly.xn_minus_1(GF2, 7), P(GF2, 1, 1, 0, 1))
    assert q == P(GF2, 1, 1, 1, 0, 1) and r.is_zero()
    assert q * P(GF2, 1, 1, 0, 1) == Poly.xn_minus_1(GF2, 7)
    assert poly_lcm(x1, P(GF2, 1, 1, 0, 1)) == x1 * P(GF2, 1, 1, 0, 1)
    assert poly_arith(x1, x1, "add").is_zero()
    with pytest.raises(ValueError):
        poly_arith(x1, x1, "sub")


def test_gcd_with_minimal_polynomials():
    for q, n in [(2, 7), (2, 31), (4, 15), (8, 9)]:
        F = field_for_order(q)
        x_minus_1 = P(F, 1, 1)
        for lead, f in factor_xn_minus_1(q, n).items():
            if f.degree >= 2:
                assert poly_gcd(x_minus_1, f) == Poly.one(F)


def test_gcd_lcm_edge_cases():
    f = P(GF4, 2, 3, 2)
    assert poly_gcd(f, f) == f.monic()
    assert poly_gcd(f, Poly.zero(GF4)) == f.monic()
    assert poly_lcm(f, Poly.zero(GF4)).is_zero()
    with pytest.raises(ZeroDivisionError):
        poly_gcd(Poly.zero(GF4), Poly.zero(GF4))
    with pytest.raises(ZeroDivisionError):
        divmod(f, Poly.zero(GF4))
    with pytest.raises(FieldMismatchError):
        _ = f + P(GF2, 1)


def test_eval():
    F = field_create(3)
    assert P(F, 1, 1, 0, 1)(F.primitive) == 0
    E, F2 = ext_field(GF2, 3), GF2
    f = P(F2, 1, 1, 0, 1)
    assert poly_eval(f, E.elem(E.primitive)).value == 0
    assert poly_eval(P(GF2, 1, 1), GF2.elem(1)).value == 0
    E6 = ext_field(GF2, 6)
    beta = E6.elem(E6.alpha_pow(3))
    assert poly_eval(Poly.xn_minus_1(GF2, 21), beta).value == 0
    with pytest.raises(FieldMismatchError):
        poly_eval(P(GF4, 1, 1), E6.elem(1))


def test_squarefree_examples():
    for n in (3, 7, 15, 21):
        assert is_squarefree(Poly.xn_minus_1(GF2, n))
    mb = P(GF2, 1, 1, 0, 1)
    assert not is_squarefree(P(GF2, 1, 1) ** 2 * mb)
    x6 = Poly.xn_minus_1(GF2, 6)
    assert x6 == Poly.xn_minus_1(GF2, 3) ** 2 and not is_squarefree(x6)
    with pytest.raises(ValueError):
        is_squarefree(Poly.zero(GF2))


@pytest.mark.parametrize("q,n", [(2, n) for n in range(1, 32, 2)] + [(4, 5), (4, 15), (8, 7)])
def test_squarefree_agrees_with_factorization(q, n):
    F = field_for_order(q)
    # every divisor of x^n - 1 is squarefree; squaring any nonconstant factor breaks it
    for g in all_divisors(q, n)[:64]:
        assert is_squarefree(g)
        if g.degree:
            assert not is_squarefree(g * g)
    # x^(2n) - 1 = (x^n - 1)^2 in characteristic 2
    assert not is_squarefree(Poly.xn_minus_1(F, 2 * n))


def test_divmod_reconstruction_10k_pairs():
    rng = random.Random(20260101)
    for i in range(10_000):
        F = (GF2, GF4, GF8)[i % 3]
        f = Poly(F, [rng.randrange(F.order) for _ in range(rng.randrange(0, 25))])
        g = Poly(F, [rng.randrange(F.order) for _ in range(rng.randrange(1, 12))])
        if g.is_zero():
            g = Poly.one(F)
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero() or r.degree < g.degree


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([GF2, GF4, GF8]).flatmap(lambda F: st.tuples(polys(F), polys(F))))
def test_gcd_lcm_properties(pair):
    f, g = pair
    if f.is_zero() and g.is_zero():
        return
    d = poly_gcd(f, g)
    assert d.is_monic()
    assert d.divides(f) and d.divides(g)
    if f.is_zero() or g.is_zero():
        return
    m = poly_lcm(f, g)
    assert m.is_monic() and f.divides(m) and g.divides(m)
    assert (d * m).monic() == (f * g).monic()


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([GF2, GF4]).flatmap(lambda F: st.tuples(polys(F), polys(F), polys(F))))
def test_ring_axioms(t):
    a, b, c = t
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + a == Poly.zero(a.field)


@settings(max_examples=200, deadline=None)
@given(polys(GF4))
def test_text_roundtrip_and_reciprocal(f):
    assert parse_poly(GF4, format_poly(f)) == f
    if not f.is_zero() and f.coeffs[0]:
        assert f.reciprocal().reciprocal() == f


def test_parse_poly_forms():
    assert parse_poly(GF2, "[1,1,0,1]") == P(GF2, 1, 1, 0, 1)
    assert parse_poly(GF2, [1, 1]) == P(GF2, 1, 1)
    assert parse_poly(GF2, "[]").is_zero()
