from __future__ import annotations

import itertools

import pytest

from rrcyclic.errors import FieldMismatchError, InvalidLengthError, UnsupportedFieldError
from rrcyclic.gf import (PRIMITIVE_POLYS, Field, FieldElem, ext_field, field_arith, field_create,
                         field_for_order, nth_root_of_unity, prime_factors)


def _order_by_iteration(F: Field, a: int) -> int:
    x, t = a, 1
    while x != 1:
        x = F.mul(x, a)
        t += 1
    return t


@pytest.mark.parametrize("s", range(1, 17))
def test_table_polynomials_are_primitive(s):
    F = field_create(s)
    assert F.order == 2 ** s
    assert F.order_of(F.primitive) == F.order - 1
    if s <= 12:
        assert _order_by_iteration(F, F.primitive) == F.order - 1


def test_table_is_lexicographically_least():
    # the first primitive polynomial of each small degree, found by brute force
    def is_primitive(p, d):
        n = (1 << d) - 1
        a, seen = 1, set()
        for _ in range(n):
            seen.add(a)
            a <<= 1
            if a >> d & 1:
                a ^= p
        return len(seen) == n and a == 1

    for d in range(2, 11):
        least = next(p for p in range((1 << d) | 1, 1 << (d + 1), 2) if is_primitive(p, d))
        assert PRIMITIVE_POLYS[d] == least


def test_small_fields_match_examples():
    assert field_create(3).primitive_poly == (1, 1, 0, 1)
    assert field_create(2).primitive_poly == (1, 1, 1)
    gf2 = field_create(1)
    assert gf2.order == 2 and gf2.primitive == 1
    F4 = field_create(2)
    a = F4.elem(F4.primitive)
    assert a * a == a + F4.elem(1)


@pytest.mark.parametrize("s", [0, 17])
def test_field_create_range(s):
    with pytest.raises(UnsupportedFieldError):
        field_create(s)


@pytest.mark.parametrize("s", range(1, 7))
def test_field_axioms_exhaustive(s):
    F = field_create(s)
    els = range(F.order)
    mul, add = F.mul, F.add
    for a in els:
        assert add(a, a) == 0
        assert mul(a, 1) == a
        if a:
            assert mul(a, F.inv(a)) == 1
        for b in els:
            ab = mul(a, b)
            assert ab == mul(b, a)
            assert add(a, b) == add(b, a)
            for c in els:
                assert mul(a, add(b, c)) == add(ab, mul(a, c))
                assert mul(ab, c) == mul(a, mul(b, c))


def test_pow_and_inverse_rules():
    F = field_create(4)
    for a in range(1, F.order):
        assert F.pow(a, F.order - 1) == 1
        assert F.pow(a, -1) == F.inv(a)
        assert F.pow(a, 5) == F.mul(F.pow(a, 2), F.pow(a, 3))
    assert F.pow(0, 0) == 1 and F.pow(0, 3) == 0
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.elem(0).inv()


def test_field_arith_dispatch_and_mismatch():
    F = field_create(3)
    a, b = F.elem(3), F.elem(5)
    assert field_arith(a, a, "add") == F.elem(0)
    assert field_arith(a, b, "mul") == a * b
    assert field_arith(a, None, "inv") * a == F.elem(1)
    assert field_arith(a, None, "pow", e=7) == F.elem(1)
    with pytest.raises(ValueError):
        field_arith(a, b, "sub")
    with pytest.raises(FieldMismatchError):
        _ = a + field_create(2).elem(1)
    with pytest.raises(ValueError):
        FieldElem(F, 8)


def test_tableless_field_agrees_with_tables():
    big = Field(24)
    assert not big.has_tables
    assert big.order_of(big.primitive) == big.order - 1
    x, y = 0x123456, 0xABCDEF
    assert big.mul(big.inv(x), x) == 1
    assert big.mul(x, big.add(y, 1)) == big.add(big.mul(x, y), x)
    small = Field(8)
    nt = Field.__new__(Field)
    nt.__dict__.update(small.__dict__)
    nt._exp = nt._log = None
    for a, b in itertools.product(range(1, 256, 7), range(1, 256, 11)):
        assert nt.mul(a, b) == small.mul(a, b)
        assert nt.pow(a, b) == small.pow(a, b)
        assert nt.order_of(a) == small.order_of(a)


def test_ext_field_prime_subfield():
    E = ext_field(field_create(1), 3)
    assert E.order == 8 and E.embed(1) == 1 and E.embed(0) == 0


@pytest.mark.parametrize("s,m", [(1, 3), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)])
def test_embedding_is_a_homomorphism(s, m):
    B = field_create(s)
    E = ext_field(B, m)
    assert E.order == B.order ** m and E.base is B
    img = [E.embed(v) for v in range(B.order)]
    assert len(set(img)) == B.order
    for a, b in itertools.product(range(B.order), repeat=2):
        assert E.embed(B.add(a, b)) == E.add(img[a], img[b])
        assert E.embed(B.mul(a, b)) == E.mul(img[a], img[b])
    assert {v for v in range(E.order) if E.in_subfield(v)} == set(img)
    for v in range(B.order):
        assert E.restrict(img[v]) == v


def test_embedded_generator_orders():
    E = ext_field(field_create(2), 2)
    assert E.order == 16 and E.order_of(E.embed(field_create(2).primitive)) == 3
    E = ext_field(field_create(3), 2)
    sub = [E.embed(v) for v in range(8)]
    assert all(E.add(a, b) in sub for a in sub for b in sub)


def test_ext_field_limits():
    with pytest.raises(UnsupportedFieldError):
        ext_field(field_create(8), 5)
    with pytest.raises(UnsupportedFieldError):
        ext_field(field_create(2), 0)
    assert ext_field(field_create(2), 1) is field_create(2)
    with pytest.raises(UnsupportedFieldError):
        field_for_order(6)


def _has_exact_order(F, x, n):
    if F.pow(x, n) != 1:
        return False
    return all(F.pow(x, n // p) != 1 for p in prime_factors(n))


@pytest.mark.parametrize("base,m,n,exp", [(2, 2, 15, 1), (1, 6, 21, 3), (1, 10, 93, 11)])
def test_nth_root_of_unity_examples(base, m, n, exp):
    E = ext_field(field_create(base), m)
    beta = nth_root_of_unity(E, n)
    assert beta.value == E.alpha_pow(exp)
    assert beta.order() == n and _has_exact_order(E, beta.value, n)


def test_nth_root_of_unity_all_divisors():
    E = field_create(12)
    N = E.order - 1
    for n in (d for d in range(1, N + 1) if N % d == 0):
        assert nth_root_of_unity(E, n).order() == n
    with pytest.raises(InvalidLengthError):
        nth_root_of_unity(E, 11)
