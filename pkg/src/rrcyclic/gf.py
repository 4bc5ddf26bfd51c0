"""Finite fields of characteristic two.

Elements are canonical integers in ``[0, order)``: the bits of an element are
its coordinates in the polynomial basis ``1, x, x^2, ...`` modulo the field's
primitive polynomial, so addition is XOR and ``0``/``1`` are the field's zero
and one.  Fields up to ``2^TABLE_MAX_DEGREE`` elements carry log/antilog tables;
larger ones fall back to carry-less multiplication.

An extension ``GF(q^m)`` is always built directly over GF(2).  The field it
extends is kept as ``base`` together with an explicit embedding, so
coefficients "in GF(q)" are ordinary extension elements that happen to lie in
the subfield of order ``q``.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from .errors import FieldMismatchError, InternalConsistencyError, InvalidLengthError, UnsupportedFieldError

# Least primitive polynomial of each degree over GF(2), read as a binary
# number (bit i is the coefficient of x^i).  Degree 1 is the degenerate x + 1.
PRIMITIVE_POLYS = {
    1: 0x3, 2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11D,
    9: 0x211, 10: 0x409, 11: 0x805, 12: 0x1053, 13: 0x201B, 14: 0x402B,
    15: 0x8003, 16: 0x1002D, 17: 0x20009, 18: 0x40027, 19: 0x80027,
    20: 0x100009, 21: 0x200005, 22: 0x400003, 23: 0x800021, 24: 0x100001B,
    25: 0x2000009, 26: 0x4000047, 27: 0x8000027, 28: 0x10000009,
    29: 0x20000005, 30: 0x40000053, 31: 0x80000009, 32: 0x1000000AF,
}

MAX_BASE_DEGREE = 16
MAX_DEGREE = 32
TABLE_MAX_DEGREE = 20


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _clmul_mod(a: int, b: int, poly: int, degree: int) -> int:
    top = 1 << degree
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= poly
    return r


class Field:
    """GF(2^degree), optionally designated as an extension of a subfield ``base``."""

    def __init__(self, degree: int, base: "Field | None" = None):
        if not 1 <= degree <= MAX_DEGREE:
            raise UnsupportedFieldError(f"GF(2^{degree}) is not supported")
        self.degree = degree
        self.order = 1 << degree
        self.poly = PRIMITIVE_POLYS[degree]
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if degree <= TABLE_MAX_DEGREE:
            self._build_tables()
        self.primitive = self.alpha_pow(1)

        self.base = self if base is None else base
        self.base_order = self.base.order
        self.m = degree // self.base.degree
        # alpha^subfield_step generates the multiplicative group of the subfield
        self.subfield_step = (self.order - 1) // (self.base_order - 1)
        self._embed, self._restrict = self._build_embedding()

    def _build_tables(self) -> None:
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        a = 1
        for i in range(n):
            exp[i] = a
            log[a] = i
            a <<= 1
            if a & self.order:
                a ^= self.poly
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log

    def _build_embedding(self):
        base = self.base
        if base is self:
            return None, None
        if base.order == 2:
            return [0, 1], {0: 0, 1: 1}
        # Send the base generator to the first alpha^(step*u) that is a root of
        # the base's own primitive polynomial, so the map is additive as well.
        gamma = None
        for u in range(1, base.order - 1):
            if gcd(u, base.order - 1) != 1:
                continue
            cand = self.alpha_pow(self.subfield_step * u)
            if self._eval_binary_poly(base.poly, cand) == 0:
                gamma = cand
                break
        if gamma is None:
            raise InternalConsistencyError("no root of the base primitive polynomial in the subfield")
        embed = [0] * base.order
        for v in range(1, base.order):
            embed[v] = self.pow(gamma, base.log(v))
        restrict = {e: v for v, e in enumerate(embed)}
        return embed, restrict

    def _eval_binary_poly(self, poly: int, a: int) -> int:
        acc = 0
        for bit in reversed(range(poly.bit_length())):
            acc = self.mul(acc, a)
            if poly >> bit & 1:
                acc ^= 1
        return acc

    def __repr__(self) -> str:
        if self.base is self:
            return f"GF(2^{self.degree})"
        return f"GF(2^{self.degree}) over GF(2^{self.base.degree})"

    @property
    def characteristic(self) -> int:
        return 2

    @property
    def primitive_poly(self) -> tuple[int, ...]:
        return tuple(self.poly >> i & 1 for i in range(self.degree + 1))

    @property
    def has_tables(self) -> bool:
        return self._exp is not None

    # -- integer-level arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return _clmul_mod(a, b, self.poly, self.degree)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        n = self.order - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % n]
        e %= n
        r = 1
        while e:
            if e & 1:
                r = _clmul_mod(r, a, self.poly, self.degree)
            a = _clmul_mod(a, a, self.poly, self.degree)
            e >>= 1
        return r

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        if self._log is None:
            raise UnsupportedFieldError(f"{self!r} has no log table")
        return self._log[a]

    def alpha_pow(self, i: int) -> int:
        n = self.order - 1
        if self._exp is not None:
            return self._exp[i % n]
        r, a, e = 1, 2 if self.degree > 1 else 1, i % n
        while e:
            if e & 1:
                r = _clmul_mod(r, a, self.poly, self.degree)
            a = _clmul_mod(a, a, self.poly, self.degree)
            e >>= 1
        return r

    def order_of(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.order - 1
        if self._log is not None:
            return n // gcd(n, self._log[a])
        t = n
        for p in prime_factors(n):
            while t % p == 0 and self.pow(a, t // p) == 1:
                t //= p
        return t

    # -- subfield view ---------------------------------------------------------

    def in_subfield(self, a: int) -> bool:
        """True when ``a`` lies in the designated subfield of order ``base_order``."""
        if a == 0 or self.base is self:
            return True
        if self._log is not None:
            return self._log[a] % self.subfield_step == 0
        return a in self._restrict

    def embed(self, v: int) -> int:
        """Image in this field of base-field element ``v``."""
        if self.base is self:
            return v
        return self._embed[v]

    def restrict(self, a: int) -> int:
        """Base-field element whose image is ``a``."""
        if self.base is self:
            return a
        if not self.in_subfield(a):
            raise InternalConsistencyError(f"element {a} of {self!r} is outside the subfield")
        return self._restrict[a]

    def elem(self, v: int) -> "FieldElem":
        return FieldElem(self, v)


class FieldElem:
    """A field element bound to its field; thin operator wrapper over ``Field``."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        if not 0 <= value < field.order:
            raise ValueError(f"{value} is not an element of {field!r}")
        self.field = field
        self.value = value

    def _other(self, other: "FieldElem") -> int:
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")
        return other.value

    def __add__(self, other):
        return FieldElem(self.field, self.value ^ self._other(other))

    __sub__ = __add__

    def __mul__(self, other):
        return FieldElem(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other):
        return FieldElem(self.field, self.field.div(self.value, self._other(other)))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inv(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return self.field.order_of(self.value)

    def __eq__(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.field is other.field and self.value == other.value

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FieldElem({self.value} in {self.field!r})"


@lru_cache(maxsize=None)
def field_create(s: int) -> Field:
    """GF(2^s) for ``1 <= s <= 16`` from the fixed primitive-polynomial table."""
    if not 1 <= s <= MAX_BASE_DEGREE:
        raise UnsupportedFieldError(f"base field GF(2^{s}) is out of range 1..{MAX_BASE_DEGREE}")
    return Field(s)


@lru_cache(maxsize=None)
def _ext_field_cached(base: Field, m: int) -> Field:
    return Field(base.degree * m, base=base)


def ext_field(base: Field, m: int) -> Field:
    """GF(q^m) with ``base`` (of order q) as its designated subfield."""
    if m < 1:
        raise UnsupportedFieldError(f"extension degree {m} must be positive")
    if base.base is not base:
        raise UnsupportedFieldError("extensions of extension fields are not supported")
    if base.degree * m > MAX_DEGREE:
        raise UnsupportedFieldError(f"GF(2^{base.degree * m}) exceeds the supported degree {MAX_DEGREE}")
    if m == 1:
        return base
    return _ext_field_cached(base, m)


def field_for_order(q: int) -> Field:
    s = q.bit_length() - 1
    if q < 2 or q != 1 << s:
        raise UnsupportedFieldError(f"q = {q} is not a power of two")
    return field_create(s)


def field_arith(a: FieldElem, b: FieldElem | None, op: str, e: int | None = None) -> FieldElem:
    """Dispatch one of ``add``, ``mul``, ``inv``, ``pow``."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        return a ** e
    raise ValueError(f"unknown field operation {op!r}")


def nth_root_of_unity(F: Field, n: int) -> FieldElem:
    """alpha^((order-1)/n), an element of multiplicative order exactly n."""
    if n < 1 or (F.order - 1) % n:
        raise InvalidLengthError(f"{n} does not divide {F.order - 1}")
    return FieldElem(F, F.alpha_pow((F.order - 1) // n))
