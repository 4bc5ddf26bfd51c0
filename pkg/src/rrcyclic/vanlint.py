"""The (u | u+v) combination of two nested cyclic codes as a repeated-root cyclic code.

For odd n and divisors g1, g2 of x^n - 1 over GF(q), q even, let C1 = <g1> and
C2 = <lcm(g1, g2)> (a subcode of C1).  The Plotkin sum
{(u | u+v) : u in C1, v in C2} is permutation-equivalent to the cyclic code of
length 2n generated by g1^2 g2 / gcd(g1, g2); it has dimension k1 + k2 and
minimum distance min{2 d(C1), d(C2)}.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property

import numpy as np

from .code import CyclicCode, LinearCode, cyclic_from_generator
from .dist import DistanceResult, ResourceError, bch_lower_bound, estimate_distance, weight_distribution
from .errors import FieldMismatchError, InvalidGeneratorError, InvalidLengthError, UnsupportedFieldError
from .gf import field_for_order
from .poly import Poly, parse_poly, poly_gcd, poly_lcm

EQUIVALENCE_CAP = 1 << 22
COMPONENT_BUDGET = 10 ** 9


def _linear(c) -> LinearCode:
    return c if isinstance(c, LinearCode) else c.as_linear()


def plotkin_sum(C1, C2) -> LinearCode:
    """{(u | u+v)}: generator [[G1, G1], [0, G2]], parity check [[H1, 0], [H2, H2]]."""
    a, b = _linear(C1), _linear(C2)
    if a.length != b.length:
        raise InvalidLengthError(f"lengths differ: {a.length} vs {b.length}")
    if a.field is not b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")
    n = a.length
    G1, G2 = a.gen, b.gen
    G = np.vstack([np.hstack([G1, G1]), np.hstack([np.zeros_like(G2), G2])]).reshape(-1, 2 * n)
    H1, H2 = a.check, b.check
    H = np.vstack([np.hstack([H1, np.zeros_like(H1)]), np.hstack([H2, H2])]).reshape(-1, 2 * n)
    return LinearCode(a.field, G, H, cyclic=False, name="plotkin")


def predicted_distance(d1: DistanceResult | None, d2: DistanceResult | None) -> DistanceResult | None:
    """min{2 d1, d2} over intervals; ``None`` stands for a zero code (no nonzero words)."""
    if d1 is None and d2 is None:
        return None
    if d1 is None:
        return d2
    if d2 is None:
        lo, hi = 2 * d1.low, None if d1.high is None else 2 * d1.high
    else:
        lo = min(2 * d1.low, d2.low)
        highs = [h for h in (None if d1.high is None else 2 * d1.high, d2.high) if h is not None]
        hi = min(highs) if highs else None
    return DistanceResult.interval(lo, hi)


def component_distance(c: CyclicCode, budget: int = COMPONENT_BUDGET) -> DistanceResult | None:
    """Distance of a component code as tightly as cheaply possible; ``None`` for the zero code."""
    if c.dimension == 0:
        return None
    try:
        res = estimate_distance(c, budget=budget)
    except ResourceError as exc:  # pragma: no cover - estimate_distance already catches
        res = exc.partial
    return res


@dataclass
class CombinedCode:
    q: int
    base_length: int
    g1: Poly
    g2: Poly
    code: CyclicCode
    c1: CyclicCode
    c2: CyclicCode
    d1_override: DistanceResult | None = dc_field(default=None, repr=False)
    d2_override: DistanceResult | None = dc_field(default=None, repr=False)

    @property
    def predicted_dim(self) -> int:
        gcd_deg = poly_gcd(self.g1, self.g2).degree
        return 2 * self.base_length - 2 * self.g1.degree - self.g2.degree + gcd_deg

    @cached_property
    def d1(self) -> DistanceResult | None:
        return self.d1_override if self.d1_override is not None else component_distance(self.c1)

    @cached_property
    def d2(self) -> DistanceResult | None:
        if self.d2_override is not None:
            return self.d2_override
        res = component_distance(self.c2)
        if res is not None and not res.is_exact and self.c2.simple_root:
            res = DistanceResult.interval(max(res.low, bch_lower_bound(self.c2)), res.high)
        return res

    @cached_property
    def predicted_distance(self) -> DistanceResult | None:
        return predicted_distance(self.d1, self.d2)

    def plotkin(self) -> LinearCode:
        return plotkin_sum(self.c1, self.c2)

    def __repr__(self) -> str:
        return f"CombinedCode(q={self.q}, n={self.base_length}, code={self.code!r})"


def vanlint_combine(q: int, n: int, g1, g2, d1: DistanceResult | None = None,
                    d2: DistanceResult | None = None) -> CombinedCode:
    """Length-2n cyclic code generated by g1^2 g2 / gcd(g1, g2).

    ``d1``/``d2`` may supply known component distances (of <g1> and
    <lcm(g1, g2)>); otherwise they are computed on first use.
    """
    if q % 2:
        raise UnsupportedFieldError(f"q = {q} is odd; the combination is only valid in characteristic 2")
    F = field_for_order(q)
    if n < 1 or n % 2 == 0:
        raise InvalidLengthError(f"base length n = {n} must be odd")
    g1 = g1 if isinstance(g1, Poly) else parse_poly(F, g1)
    g2 = g2 if isinstance(g2, Poly) else parse_poly(F, g2)
    c1 = cyclic_from_generator(q, n, g1)
    cyclic_from_generator(q, n, g2)
    lcm = poly_lcm(g1, g2)
    c2 = cyclic_from_generator(q, n, lcm)
    g = (g1 * g1 * g2 // poly_gcd(g1, g2)).monic()
    if not g.is_monic():  # pragma: no cover
        raise InvalidGeneratorError("combined generator is not monic")
    code = cyclic_from_generator(q, 2 * n, g)
    return CombinedCode(q, n, g1, g2, code, c1, c2, d1, d2)


def equivalence_check(q: int, n: int, g1, g2) -> bool:
    """Weight-distribution equality between the Plotkin sum and the combined cyclic code.

    Equal distributions are evidence of, not proof of, permutation equivalence.
    """
    cc = vanlint_combine(q, n, g1, g2)
    k = cc.c1.dimension + cc.c2.dimension
    if q ** k > EQUIVALENCE_CAP:
        raise ResourceError(f"q^(k1+k2) = {q}^{k} exceeds the equivalence cap 2^22")
    return weight_distribution(cc.plotkin()) == weight_distribution(cc.code)
