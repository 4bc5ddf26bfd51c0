"""Dense univariate polynomials over a characteristic-two ``Field``.

Coefficients are stored ascending (index = exponent) as canonical field
integers, normalized so the last stored coefficient is nonzero.  The zero
polynomial has an empty coefficient tuple and ``degree`` ``None``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatchError
from .gf import Field, FieldElem


def _bits_to_int(coeffs: Sequence[int]) -> int:
    r = 0
    for i, c in enumerate(coeffs):
        if c:
            r |= 1 << i
    return r


def _int_to_bits(v: int) -> tuple[int, ...]:
    return tuple(v >> i & 1 for i in range(v.bit_length()))


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    i = 0
    while b:
        if b & 1:
            r ^= a << i
        b >>= 1
        i += 1
    return r


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for v in c:
            if not 0 <= v < field.order:
                raise ValueError(f"coefficient {v} is not an element of {field!r}")
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: int = 1) -> "Poly":
        return cls(field, (0,) * degree + (coeff,))

    @classmethod
    def xn_minus_1(cls, field: Field, n: int) -> "Poly":
        return cls(field, (1,) + (0,) * (n - 1) + (1,))

    @classmethod
    def from_roots(cls, field: Field, roots: Iterable[int]) -> "Poly":
        p = cls.one(field)
        for r in roots:
            p = p * cls(field, (r, 1))
        return p

    # -- basic properties ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.lead == 1

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == 1:
                terms.append(mono)
            else:
                terms.append(str(c) if i == 0 else f"{c}*{mono}")
        return " + ".join(terms)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] ^= v
        return Poly(self.field, out)

    __sub__ = __add__

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field, ())
        F = self.field
        if F.order == 2:
            return Poly(F, _int_to_bits(_clmul(_bits_to_int(a), _bits_to_int(b))))
        out = [0] * (len(a) + len(b) - 1)
        if F.has_tables:
            exp, log = F._exp, F._log
            lb = [(j, log[v]) for j, v in enumerate(b) if v]
            for i, u in enumerate(a):
                if u:
                    lu = log[u]
                    for j, l in lb:
                        out[i + j] ^= exp[lu + l]
        else:
            for i, u in enumerate(a):
                if u:
                    for j, v in enumerate(b):
                        if v:
                            out[i + j] ^= F.mul(u, v)
        return Poly(F, out)

    def scale(self, c: int) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, v) for v in self.coeffs])

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, (0,) * k + self.coeffs)

    def __pow__(self, e: int) -> "Poly":
        r = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        if F.order == 2:
            a, b = _bits_to_int(self.coeffs), _bits_to_int(other.coeffs)
            db = b.bit_length()
            q = 0
            while a.bit_length() >= db:
                s = a.bit_length() - db
                q |= 1 << s
                a ^= b << s
            return Poly(F, _int_to_bits(q)), Poly(F, _int_to_bits(a))
        rem = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        inv_lead = F.inv(d[-1])
        if len(rem) <= dd:
            return Poly(F, ()), Poly(F, rem)
        quot = [0] * (len(rem) - dd)
        for i in reversed(range(len(quot))):
            c = rem[i + dd]
            if not c:
                continue
            c = F.mul(c, inv_lead)
            quot[i] = c
            for j, v in enumerate(d):
                if v:
                    rem[i + j] ^= F.mul(c, v)
        return Poly(F, quot), Poly(F, rem[:dd])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when ``self`` divides ``other``."""
        return (other % self).is_zero()

    def monic(self) -> "Poly":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def derivative(self) -> "Poly":
        # characteristic 2: i * c is c for odd i and 0 for even i
        return Poly(self.field, [c if i & 1 else 0 for i, c in enumerate(self.coeffs)][1:])

    def reciprocal(self, degree: int | None = None) -> "Poly":
        """x^degree * f(1/x); ``degree`` defaults to deg(f)."""
        if not self.coeffs:
            return self
        d = self.degree if degree is None else degree
        padded = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return Poly(self.field, reversed(padded))

    def __call__(self, a: int) -> int:
        """Horner evaluation at a canonical element of ``self.field``."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.mul(acc, a) ^ c
        return acc


def poly_arith(f: Poly, g: Poly, op: str):
    """``add``, ``mul`` or ``divmod`` of two polynomials over the same field."""
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    f._check(g)
    if f.is_zero() and g.is_zero():
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    """Monic least common multiple; zero if either argument is zero."""
    if f.is_zero() or g.is_zero():
        f._check(g)
        if f.is_zero() and g.is_zero():
            raise ZeroDivisionError("lcm(0, 0) is undefined")
        return Poly.zero(f.field)
    return ((f * g) // poly_gcd(f, g)).monic()


def poly_eval(f: Poly, a: FieldElem) -> FieldElem:
    """Evaluate ``f`` at ``a``; ``a`` may live in an extension whose base is ``f.field``."""
    E = a.field
    if E is f.field:
        return FieldElem(E, f(a.value))
    if E.base is f.field:
        acc = 0
        for c in reversed(f.coeffs):
            acc = E.mul(acc, a.value) ^ E.embed(c)
        return FieldElem(E, acc)
    raise FieldMismatchError(f"cannot evaluate a polynomial over {f.field!r} at an element of {E!r}")


def is_squarefree(f: Poly) -> bool:
    """True iff gcd(f, f') = 1."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no squarefree status")
    return poly_gcd(f, f.derivative()).degree == 0


def parse_poly(field: Field, text: str | Sequence[int]) -> Poly:
    """Read the ascending index-list form, e.g. ``"[1,1,0,1]"`` for x^3 + x + 1."""
    if isinstance(text, str):
        body = text.strip().lstrip("[").rstrip("]")
        values = [int(t) for t in body.split(",") if t.strip()]
    else:
        values = [int(t) for t in text]
    return Poly(field, values)


def format_poly(f: Poly) -> str:
    return "[" + ",".join(str(c) for c in f.coeffs) + "]"
