"""Cyclotomic cosets, coset-leader statistics and minimal polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

from .errors import InternalConsistencyError, InvalidLengthError, InvalidParametersError, ResourceError
from .gf import Field, FieldElem, ext_field, field_for_order
from .poly import Poly

COSET_LEADER_CAP = 1 << 20


@dataclass(frozen=True)
class CyclotomicCoset:
    q: int
    n: int
    leader: int
    members: tuple[int, ...]  # ascending

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a % self.n in self.members


@dataclass(frozen=True)
class CosetLeaderProfile:
    q: int
    n: int
    leaders_ascending: tuple[int, ...]
    sizes: tuple[int, ...]
    h: int | None = None
    delta_h: int | None = None
    lambda_value: Fraction | None = None
    upsilon: int | None = None

    def order_statistic(self, h: int, largest: bool = False) -> int:
        """The h-th (1-based) nonzero coset leader, counted from the small end by default."""
        if not 1 <= h <= len(self.leaders_ascending):
            raise InvalidParametersError(f"h = {h} outside 1..{len(self.leaders_ascending)}")
        return self.leaders_ascending[-h] if largest else self.leaders_ascending[h - 1]


def _check_coprime(q: int, n: int) -> None:
    if n < 1 or gcd(q, n) != 1:
        raise InvalidLengthError(f"gcd(q={q}, n={n}) must be 1")


def multiplicative_order(q: int, n: int) -> int:
    """ord_n(q): least l >= 1 with q^l = 1 (mod n)."""
    _check_coprime(q, n)
    if n == 1:
        return 1
    t, x = 1, q % n
    while x != 1:
        x = x * q % n
        t += 1
    return t


def cyclotomic_coset(q: int, n: int, a: int) -> CyclotomicCoset:
    _check_coprime(q, n)
    a %= n
    members = {a}
    x = a * q % n
    while x != a:
        members.add(x)
        x = x * q % n
    ordered = tuple(sorted(members))
    return CyclotomicCoset(q, n, ordered[0], ordered)


def coset_leaders(q: int, n: int) -> CosetLeaderProfile:
    """Nonzero coset leaders mod n in increasing order, with their coset sizes."""
    _check_coprime(q, n)
    if n > COSET_LEADER_CAP:
        raise ResourceError(f"n = {n} exceeds the coset-leader cap {COSET_LEADER_CAP}")
    seen = bytearray(n)
    leaders, sizes = [], []
    for a in range(1, n):
        if seen[a]:
            continue
        size = 0
        x = a
        while not seen[x]:
            seen[x] = 1
            size += 1
            x = x * q % n
        leaders.append(a)
        sizes.append(size)
    return CosetLeaderProfile(q, n, tuple(leaders), tuple(sizes))


@lru_cache(maxsize=None)
def all_cosets(q: int, n: int) -> tuple[CyclotomicCoset, ...]:
    """Every q-cyclotomic coset mod n (the zero coset first), ordered by leader."""
    _check_coprime(q, n)
    seen = bytearray(n)
    out = []
    for a in range(n):
        if not seen[a]:
            c = cyclotomic_coset(q, n, a)
            for x in c.members:
                seen[x] = 1
            out.append(c)
    return tuple(out)


def is_prime(m: int) -> bool:
    return m >= 2 and all(m % p for p in range(2, int(m ** 0.5) + 1))


def delta_h(m: int, largest: bool = False) -> tuple[int, int]:
    """(h, delta_h) with h = (2^(m-1)-1)/m and delta_h the h-th nonzero leader mod 2^m - 1.

    By default the h-th smallest leader is returned; ``largest=True`` counts
    from the top instead.
    """
    if m < 3 or not is_prime(m):
        raise InvalidParametersError(f"m = {m} must be a prime >= 3")
    h = ((1 << (m - 1)) - 1) // m
    prof = coset_leaders(2, (1 << m) - 1)
    return h, prof.order_statistic(h, largest=largest)


def upsilon(m: int) -> int:
    """floor(log2 m)."""
    return m.bit_length() - 1


def lambda_bound(m: int) -> tuple[Fraction, Fraction]:
    """(Lambda, (2^m-2)/m - 1 + 2*Lambda): the closed-form lower bound on delta_h for prime m >= 11."""
    if not is_prime(m):
        raise InvalidParametersError(f"m = {m} must be prime")
    if not 11 <= m <= 19:
        raise ResourceError(f"m = {m} outside the supported range 11..19")
    v = upsilon(m)
    lam = Fraction(0)
    for i in range(2, m // (v + 2) + 1):
        term = Fraction(comb(m - i * (v + 1) - 1, i - 1) * 2 ** (m - i * (v + 2)), i)
        lam += term if i % 2 == 0 else -term
    lam += (2 ** (m - v - 2) - 2 ** v) // (2 ** (v + 1) - 1) + 1
    base = Fraction(2 ** m - 2, m) - 1
    return lam, base + 2 * lam


def coset_leader_profile(m: int) -> CosetLeaderProfile:
    """Leader profile mod 2^m - 1 annotated with h, delta_h, upsilon and (m >= 11) Lambda."""
    h, d = delta_h(m)
    prof = coset_leaders(2, (1 << m) - 1)
    lam = lambda_bound(m)[0] if 11 <= m <= 19 else None
    return CosetLeaderProfile(2, prof.n, prof.leaders_ascending, prof.sizes, h, d, lam, upsilon(m))


@lru_cache(maxsize=None)
def splitting_field(q: int, n: int) -> tuple[Field, int]:
    """(GF(q^m), beta) with m = ord_n(q) and beta = alpha^((q^m-1)/n) of order n."""
    m = multiplicative_order(q, n)
    E = ext_field(field_for_order(q), m)
    return E, E.alpha_pow((E.order - 1) // n)


def minimal_poly(F_ext: Field, beta: FieldElem | int, i: int, F_base: Field, n: int | None = None) -> Poly:
    """Minimal polynomial over ``F_base`` of beta^i: the product of (x - beta^j) over the coset of i."""
    b = beta.value if isinstance(beta, FieldElem) else beta
    if F_ext.base is not F_base:
        raise InvalidParametersError(f"{F_base!r} is not the designated subfield of {F_ext!r}")
    if n is None:
        n = F_ext.order_of(b)
    coset = cyclotomic_coset(F_base.order, n, i)
    roots = [F_ext.pow(b, j) for j in coset.members]
    prod = Poly.from_roots(F_ext, roots)
    if not all(F_ext.in_subfield(c) for c in prod.coeffs):
        raise InternalConsistencyError(f"minimal polynomial of beta^{i} has coefficients outside {F_base!r}")
    return Poly(F_base, [F_ext.restrict(c) for c in prod.coeffs])


@lru_cache(maxsize=None)
def minimal_poly_of(q: int, n: int, i: int) -> Poly:
    """Cached minimal polynomial of beta^i for the standard beta of ``splitting_field(q, n)``."""
    E, beta = splitting_field(q, n)
    return minimal_poly(E, beta, i, E.base, n)


def factor_xn_minus_1(q: int, n: int, F_ext: Field | None = None) -> dict[int, Poly]:
    """Irreducible factors of x^n - 1 over GF(q), keyed by coset leader."""
    if F_ext is None:
        return {c.leader: minimal_poly_of(q, n, c.leader) for c in all_cosets(q, n)}
    if (F_ext.order - 1) % n:
        raise InvalidLengthError(f"{F_ext!r} has no element of order {n}")
    beta = F_ext.alpha_pow((F_ext.order - 1) // n)
    return {c.leader: minimal_poly(F_ext, beta, c.leader, F_ext.base, n) for c in all_cosets(q, n)}
