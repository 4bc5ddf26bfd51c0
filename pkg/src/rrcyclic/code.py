"""Cyclic and general linear codes over GF(q), q a power of two."""

from __future__ import annotations

import json
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np

from .cyclo import all_cosets, cyclotomic_coset, minimal_poly_of, splitting_field
from .errors import InvalidGeneratorError, InvalidLengthError, InvalidParametersError
from .gf import Field, field_for_order
from .poly import Poly, format_poly, parse_poly


# -- linear algebra over GF(q) ----------------------------------------------------


def row_reduce(M, F: Field) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of ``M`` over ``F`` and its pivot columns."""
    rows = [[int(v) for v in r] for r in np.asarray(M, dtype=np.int64).tolist()]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][col])
        if inv != 1:
            rows[r] = [F.mul(inv, v) for v in rows[r]]
        pr = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [a ^ F.mul(c, b) for a, b in zip(rows[i], pr)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(M, F: Field) -> int:
    return len(row_reduce(M, F)[1])


def nullspace(M, F: Field, n: int | None = None) -> np.ndarray:
    """Basis (as rows) of {x : M x^T = 0}."""
    M = np.asarray(M, dtype=np.int64)
    if n is None:
        n = M.shape[1]
    if M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = row_reduce(M, F)
    free = [j for j in range(n) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(R, pivots):
            v[p] = row[f]  # characteristic 2: -a = a
        basis.append(v)
    return np.array(basis, dtype=np.int64).reshape(len(basis), n)


def mat_vec(M, v: Sequence[int], F: Field) -> list[int]:
    out = []
    for row in np.asarray(M, dtype=np.int64).tolist():
        acc = 0
        for a, b in zip(row, v):
            if a and b:
                acc ^= F.mul(a, b)
        out.append(acc)
    return out


# -- codes ------------------------------------------------------------------------


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix.

    ``check`` may be supplied when a parity-check matrix is known in closed
    form; otherwise it is computed as a nullspace on first use.  ``cyclic``
    marks codes invariant under the cyclic shift, which lets the distance
    search fix one support position.
    """

    def __init__(self, field: Field, generator_matrix, check_matrix=None, cyclic: bool = False, name: str = ""):
        G = np.asarray(generator_matrix, dtype=np.int64)
        if G.ndim != 2:
            raise InvalidParametersError("generator matrix must be two-dimensional")
        self.field = field
        self.q = field.order
        self.length = G.shape[1]
        self.gen = G
        self._check = None if check_matrix is None else np.asarray(check_matrix, dtype=np.int64)
        self.cyclic = cyclic
        self.name = name

    @property
    def dimension(self) -> int:
        return self.gen.shape[0]

    @property
    def check(self) -> np.ndarray:
        if self._check is None:
            self._check = nullspace(self.gen, self.field, self.length)
        return self._check

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        if len(message) != self.dimension:
            raise InvalidParametersError(f"message length {len(message)} != k = {self.dimension}")
        F = self.field
        out = [0] * self.length
        for m, row in zip(message, self.gen.tolist()):
            if m:
                for j, v in enumerate(row):
                    if v:
                        out[j] ^= F.mul(m, v)
        return tuple(out)

    def contains(self, word: Sequence[int]) -> bool:
        return not any(mat_vec(self.check, word, self.field))

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"LinearCode{label}[{self.length},{self.dimension}]_{self.q}"


class CyclicCode:
    """The cyclic code of length ``length`` over GF(q) generated by the monic divisor ``generator`` of x^n - 1."""

    def __init__(self, q: int, length: int, generator: Poly, designed_distance: int | None = None,
                 offset: int | None = None, family: str | None = None):
        self.q = q
        self.length = length
        self.generator = generator
        self.designed_distance = designed_distance
        self.offset = offset
        self.family = family

    @property
    def field(self) -> Field:
        return self.generator.field

    @property
    def dimension(self) -> int:
        return self.length - self.generator.degree

    @property
    def simple_root(self) -> bool:
        return gcd(self.q, self.length) == 1

    @cached_property
    def check_poly(self) -> Poly:
        return Poly.xn_minus_1(self.field, self.length) // self.generator

    @cached_property
    def defining_set(self) -> frozenset[int]:
        """Exponents i with g(beta^i) = 0 for the standard n-th root of unity beta."""
        if not self.simple_root:
            raise InvalidLengthError("defining sets need gcd(q, n) = 1")
        out = set()
        for c in all_cosets(self.q, self.length):
            if minimal_poly_of(self.q, self.length, c.leader).divides(self.generator):
                out.update(c.members)
        return frozenset(out)

    def generator_matrix(self) -> np.ndarray:
        """Rows x^i g(x), i = 0..k-1."""
        n, k = self.length, self.dimension
        G = np.zeros((k, n), dtype=np.int64)
        g = self.generator.coeffs
        for i in range(k):
            G[i, i:i + len(g)] = g
        return G

    def parity_check_matrix(self) -> np.ndarray:
        """Rows x^i h~(x), i = 0..n-k-1, with h~ the reciprocal of the check polynomial."""
        n, k = self.length, self.dimension
        H = np.zeros((n - k, n), dtype=np.int64)
        h = self.check_poly.reciprocal().coeffs
        for i in range(n - k):
            H[i, i:i + len(h)] = h
        return H

    def encode(self, message: Sequence[int]) -> tuple[int, ...]:
        """Non-systematic encoding m(x) g(x)."""
        if len(message) != self.dimension:
            raise InvalidParametersError(f"message length {len(message)} != k = {self.dimension}")
        c = (Poly(self.field, message) * self.generator).coeffs
        return tuple(c) + (0,) * (self.length - len(c))

    def contains(self, word: Sequence[int]) -> bool:
        return (Poly(self.field, word) % self.generator).is_zero()

    def as_linear(self) -> LinearCode:
        return LinearCode(self.field, self.generator_matrix(), self.parity_check_matrix(), cyclic=True,
                          name=self.family or "")

    def to_dict(self) -> dict:
        d = {"q": self.q, "N": self.length, "generator": list(self.generator.coeffs), "k": self.dimension}
        if self.family:
            d["family"] = self.family
        if self.designed_distance is not None:
            d["designed_distance"] = self.designed_distance
            d["offset"] = self.offset
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CyclicCode):
            return NotImplemented
        return self.q == other.q and self.length == other.length and self.generator == other.generator

    def __hash__(self) -> int:
        return hash((self.q, self.length, self.generator.coeffs))

    def __repr__(self) -> str:
        return f"CyclicCode[{self.length},{self.dimension}]_{self.q}(g={format_poly(self.generator)})"


def cyclic_from_generator(q: int, n: int, g: Poly | Sequence[int] | str) -> CyclicCode:
    """Validate ``g`` as a monic divisor of x^n - 1 over GF(q) and wrap it."""
    F = field_for_order(q)
    if n < 1:
        raise InvalidLengthError(f"length {n} must be positive")
    if not isinstance(g, Poly):
        g = parse_poly(F, g)
    elif g.field is not F:
        raise InvalidGeneratorError(f"generator lives over {g.field!r}, expected GF({q})")
    if g.is_zero() or not g.is_monic():
        raise InvalidGeneratorError(f"generator {g!r} must be a nonzero monic polynomial")
    if not g.divides(Poly.xn_minus_1(F, n)):
        raise InvalidGeneratorError(f"{g!r} does not divide x^{n} - 1 over GF({q})")
    return CyclicCode(q, n, g)


def code_from_dict(d: dict) -> CyclicCode:
    try:
        q, n, gen = int(d["q"]), int(d["N"]), d["generator"]
    except (KeyError, TypeError) as exc:
        raise InvalidParametersError(f"code description needs q, N and generator: {exc}") from None
    c = cyclic_from_generator(q, n, gen)
    if "k" in d and int(d["k"]) != c.dimension:
        raise InvalidParametersError(f"stated k = {d['k']} but the generator gives k = {c.dimension}")
    c.family = d.get("family")
    return c


def code_from_json(text: str) -> CyclicCode:
    return code_from_dict(json.loads(text))


def bch_defining_set(q: int, n: int, delta: int, b: int = 0) -> frozenset[int]:
    """Union of the cosets of b, b+1, ..., b+delta-2 (mod n)."""
    if n < 1 or gcd(q, n) != 1:
        raise InvalidLengthError(f"BCH codes need gcd(q={q}, n={n}) = 1")
    if delta < 1:
        raise InvalidParametersError(f"designed distance {delta} must be at least 1")
    out = set()
    for i in range(b, b + delta - 1):
        if i % n not in out:
            out.update(cyclotomic_coset(q, n, i).members)
    return frozenset(out)


def bch_code(q: int, n: int, delta: int, b: int = 0) -> CyclicCode:
    """BCH code C_(q,n,delta,b): generator lcm of the minimal polynomials of beta^b .. beta^(b+delta-2).

    ``delta = 1`` gives the whole space (generator 1).
    """
    F = field_for_order(q)
    T = bch_defining_set(q, n, delta, b)
    splitting_field(q, n)  # fail early on unsupported extension degrees
    g = Poly.one(F)
    seen = set()
    for i in sorted(T):
        lead = cyclotomic_coset(q, n, i).leader
        if lead not in seen:
            seen.add(lead)
            g = g * minimal_poly_of(q, n, lead)
    return CyclicCode(q, n, g, designed_distance=delta, offset=b)


def bch_dimension(q: int, n: int, delta: int, b: int = 0) -> int:
    return n - len(bch_defining_set(q, n, delta, b))
