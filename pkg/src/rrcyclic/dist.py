"""Minimum-distance engines.

* ``min_distance_exhaustive``: walk every codeword (q^k <= 2^24).
* ``min_weight_upto``: meet-in-the-middle search for low-weight codewords.
  A weight-w codeword is a set of w parity-check columns with nonzero
  coefficients whose combination vanishes.  The coefficient on the lowest
  position is normalized to 1, so each codeword is found once per scalar
  class; the lower half of the support is hashed by syndrome and the upper
  half is streamed against it.  For cyclic codes the support is also rotated
  to contain position 0, and the remaining minimum-weight words are recovered
  as cyclic shifts.
* ``bch_lower_bound``: 1 + longest circular run in the defining set.
* ``weight_distribution``: full weight histogram for small codes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from math import comb
from typing import Sequence

import numpy as np

from . import kernels
from .code import CyclicCode, LinearCode
from .errors import InvalidParametersError, NotApplicableError, ResourceError

EXHAUSTIVE_CAP = 1 << 24
DISTRIBUTION_CAP = 1 << 22
ESTIMATE_EXHAUSTIVE_CAP = 1 << 16
DEFAULT_BUDGET = 10 ** 10
DEFAULT_WMAX = 9
# the left half of each weight level is held in memory; refuse levels whose table would not fit
LEFT_TABLE_BYTES = 4 << 30
# codeword enumeration replaces a search level when q^k is below this and below the level cost
ENUMERATION_CAP = 1 << 20


def default_budget() -> int:
    env = os.environ.get("RRCYCLIC_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


class Status(str, Enum):
    EXACT = "Exact"
    LOWER_BOUND = "LowerBound"
    INTERVAL = "Interval"


@dataclass(frozen=True)
class DistanceResult:
    status: Status
    low: int
    high: int | None = None  # None means unbounded above
    witness: tuple[int, ...] | None = None

    @classmethod
    def exact(cls, d: int, witness: Sequence[int] | None = None) -> "DistanceResult":
        return cls(Status.EXACT, d, d, None if witness is None else tuple(witness))

    @classmethod
    def lower_bound(cls, low: int) -> "DistanceResult":
        return cls(Status.LOWER_BOUND, low, None)

    @classmethod
    def interval(cls, low: int, high: int | None) -> "DistanceResult":
        if high is None:
            return cls.lower_bound(low)
        if high < low:
            raise InvalidParametersError(f"empty interval [{low}, {high}]")
        if low == high:
            return cls.exact(low)
        return cls(Status.INTERVAL, low, high)

    @property
    def is_exact(self) -> bool:
        return self.status is Status.EXACT

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"distance is only bounded: {self}")
        return self.low

    def admits(self, d: int) -> bool:
        """True when d is consistent with this result."""
        return self.low <= d and (self.high is None or d <= self.high)

    def __str__(self) -> str:
        if self.is_exact:
            return str(self.low)
        if self.high is None:
            return f">={self.low}"
        return f"{self.low}..{self.high}"

    def to_dict(self) -> dict:
        d = {"status": self.status.value, "low": self.low, "high": self.high}
        if self.witness is not None:
            d["witness"] = list(self.witness)
        return d


def _as_linear(c) -> LinearCode:
    if isinstance(c, LinearCode):
        return c
    if isinstance(c, CyclicCode):
        return c.as_linear()
    raise TypeError(f"expected a code, got {type(c).__name__}")


def hamming_weight(word: Sequence[int]) -> int:
    return sum(1 for v in word if v)


def _message_from_index(idx: int, q: int, k: int) -> list[int]:
    digits = [0] * k
    for i in reversed(range(k)):
        idx, digits[i] = divmod(idx, q)
    return digits


def min_distance_exhaustive(c, impl=None) -> DistanceResult:
    """Exact distance by walking all q^k codewords; witness is the first minimum in message order."""
    lin = _as_linear(c)
    k, q = lin.dimension, lin.q
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if q ** k > EXHAUSTIVE_CAP:
        raise ResourceError(f"q^k = {q}^{k} exceeds the exhaustive cap 2^24; use min_weight_upto")
    d, idx = kernels.min_weight_scan(lin.gen, lin.field, impl)
    witness = lin.encode(_message_from_index(idx, q, k))
    return DistanceResult.exact(d, witness)


def weight_distribution(c, impl=None) -> list[int]:
    """A_0..A_N."""
    lin = _as_linear(c)
    if lin.q ** lin.dimension > DISTRIBUTION_CAP:
        raise ResourceError(f"q^k = {lin.q}^{lin.dimension} exceeds the distribution cap 2^22")
    if lin.dimension == 0:
        return [1] + [0] * lin.length
    return kernels.weight_histogram(lin.gen, lin.field, impl)


def _left_entries(n: int, q: int, w: int, anchor: bool) -> int:
    ls = (w + 1) // 2
    if anchor:
        return comb(n - 1, ls - 1) * (q - 1) ** (ls - 1)
    return comb(n, ls) * (q - 1) ** (ls - 1)


def _left_table_bytes(n: int, q: int, w: int, anchor: bool) -> int:
    # syndrome, chain link and bucket head (8 bytes each) plus positions and coefficients (4 bytes each)
    return _left_entries(n, q, w, anchor) * (24 + 8 * ((w + 1) // 2))


def _level_cost(n: int, q: int, w: int, anchor: bool) -> int:
    ls, rs = (w + 1) // 2, w // 2
    right = comb(max(n - ls, 0), rs) * (q - 1) ** rs
    return _left_entries(n, q, w, anchor) + right


def search_cost(c, wmax: int = DEFAULT_WMAX) -> int:
    """Subset visits ``min_weight_upto`` would spend to clear weights 1..wmax."""
    lin = _as_linear(c)
    return sum(_level_cost(lin.length, lin.q, w, lin.cyclic) for w in range(1, wmax + 1))


def _canonical(sols, n: int, field, cyclic: bool) -> tuple[int, ...]:
    """Codeword with colex-smallest support (coefficients scaled to 1 at the lowest index)."""
    best_key, best = None, None
    shifts = range(n) if cyclic else (0,)
    for positions, coeffs in sols:
        for s in shifts:
            pairs = sorted(((p + s) % n, v) for p, v in zip(positions, coeffs))
            key = tuple(p for p, _ in reversed(pairs))
            if best_key is not None and key > best_key:
                continue
            inv = field.inv(pairs[0][1])
            scaled = tuple((p, field.mul(inv, v)) for p, v in pairs)
            cand = (key, tuple(v for _, v in scaled))
            if best_key is None or cand < (best_key, tuple(v for _, v in best)):
                best_key, best = key, scaled
    word = [0] * n
    for p, v in best:
        word[p] = v
    return tuple(word)


def _min_weight_words(lin: LinearCode):
    """(d, all nonzero words of weight d as (positions, coefficients)) by walking every codeword."""
    F, q, k = lin.field, lin.q, lin.dimension
    mul = np.array([[F.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    digits = np.indices((q,) * k).reshape(k, -1).T[1:]  # every nonzero message
    words = np.zeros((len(digits), lin.length), dtype=np.int64)
    for i, row in enumerate(lin.gen):
        words ^= mul[digits[:, i][:, None], row[None, :]]
    weights = np.count_nonzero(words, axis=1)
    d = int(weights.min())
    sols = []
    for word in words[weights == d]:
        pos = np.flatnonzero(word)
        sols.append((tuple(int(p) for p in pos), tuple(int(v) for v in word[pos])))
    return d, sols


def min_weight_upto(c, wmax: int = DEFAULT_WMAX, budget: int | None = None, impl=None,
                    enumerate: bool = True) -> DistanceResult:
    """Exact(d) with canonical witness if some nonzero codeword has weight d <= wmax, else LowerBound(wmax+1).

    Weight levels are searched by syndrome collision.  With ``enumerate`` the
    search switches to walking all q^k codewords once that is cheaper than the
    next level; both give the same result and witness.  Raises ``ResourceError`` (with ``partial`` = the lower bound reached) when
    the next weight level would push the subset-visit count past ``budget``.
    """
    if wmax < 1:
        raise InvalidParametersError(f"wmax = {wmax} must be at least 1")
    if budget is None:
        budget = default_budget()
    lin = _as_linear(c)
    n, q, F = lin.length, lin.q, lin.field
    if lin.dimension == 0:
        return DistanceResult.lower_bound(wmax + 1)
    H = lin.check
    r = H.shape[0]
    if r == 0:
        # the full space: every unit vector is a codeword
        return DistanceResult.exact(1, (1,) + (0,) * (n - 1))
    width = r * F.degree
    cols = kernels.pack_scaled_columns(H, F)
    spent = 0
    words = q ** lin.dimension
    for w in range(1, min(wmax, n) + 1):
        cost = _level_cost(n, q, w, lin.cyclic)
        if enumerate and words <= min(cost, ENUMERATION_CAP) and q <= 256 and spent + words <= budget:
            # walking all q^k codewords is cheaper than this search level
            d, sols = _min_weight_words(lin)
            if d > wmax:
                return DistanceResult.lower_bound(wmax + 1)
            return DistanceResult.exact(d, _canonical(sols, n, F, False))
        if spent + cost > budget:
            raise ResourceError(
                f"search budget {budget} exhausted before weight {w} (spent {spent}, level needs {cost})",
                partial=DistanceResult.lower_bound(w),
            )
        if _left_table_bytes(n, q, w, lin.cyclic) > LEFT_TABLE_BYTES:
            raise ResourceError(
                f"weight level {w} needs a left table above {LEFT_TABLE_BYTES >> 30} GiB",
                partial=DistanceResult.lower_bound(w),
            )
        sols = kernels.collision_search(cols, q, width, (w + 1) // 2, w // 2, lin.cyclic, impl)
        spent += cost
        if sols:
            return DistanceResult.exact(w, _canonical(sols, n, F, lin.cyclic))
    return DistanceResult.lower_bound(wmax + 1)


def longest_circular_run(T: set[int] | frozenset[int], n: int) -> int:
    if not T:
        return 0
    if len(T) >= n:
        return n
    best = run = 0
    for i in range(2 * n):
        if i % n in T:
            run += 1
            best = max(best, run)
        else:
            run = 0
    return min(best, n)


def bch_lower_bound(c: CyclicCode) -> int:
    """1 + length of the longest run of consecutive residues in the defining set."""
    if not isinstance(c, CyclicCode) or not c.simple_root:
        raise NotApplicableError("the BCH bound needs a simple-root cyclic code")
    return 1 + longest_circular_run(c.defining_set, c.length)


def estimate_distance(c, wmax: int = DEFAULT_WMAX, budget: int | None = None) -> DistanceResult:
    """Best available distance information: exhaustive when small, else search plus BCH bound."""
    lin = _as_linear(c)
    if lin.dimension == 0:
        raise ValueError("the zero code has no nonzero codewords")
    if lin.q ** lin.dimension <= ESTIMATE_EXHAUSTIVE_CAP:
        return min_distance_exhaustive(lin)
    try:
        res = min_weight_upto(lin, wmax, budget)
    except ResourceError as exc:
        res = exc.partial
    if res.is_exact:
        return res
    low = res.low
    if isinstance(c, CyclicCode) and c.simple_root:
        low = max(low, bch_lower_bound(c))
    return DistanceResult.interval(low, lin.length - lin.dimension + 1)
