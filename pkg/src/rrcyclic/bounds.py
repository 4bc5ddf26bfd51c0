"""Classical bounds on linear codes and optimality classification.

All arithmetic is on Python integers, so q^n is exact for every length used.
A bound "admits" (n, k, d, q) when it does not rule out an [n, k, d]_q linear
code.  A code is certified distance-optimal when some bound rejects d + 1:
a linear [n, k, d']_q code yields one with every smaller distance, so that
rules out all d' > d.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb

from .errors import InvalidParametersError, NotApplicableError

BOUND_NAMES = ("sphere_packing", "fu", "singleton", "griesmer")


def hamming_volume(q: int, n: int, r: int) -> int:
    """Size of a Hamming ball of radius r in GF(q)^n."""
    if not 0 <= r <= n:
        raise InvalidParametersError(f"radius {r} outside 0..{n}")
    return sum(comb(n, i) * (q - 1) ** i for i in range(r + 1))


def _check(n: int, k: int, d: int) -> None:
    if not (1 <= k <= n and d >= 1):
        raise InvalidParametersError(f"need 1 <= k <= n and d >= 1, got n={n}, k={k}, d={d}")


def sphere_packing_margin(n: int, k: int, d: int, q: int) -> tuple[int, int]:
    _check(n, k, d)
    return hamming_volume(q, n, min((d - 1) // 2, n)), q ** (n - k)


def sphere_packing_admits(n: int, k: int, d: int, q: int) -> bool:
    lhs, rhs = sphere_packing_margin(n, k, d, q)
    return lhs <= rhs


def sphere_packing_optimal(n: int, k: int, d: int, q: int) -> bool:
    """V(floor(d/2)) > q^(n-k): the sphere packing bound already excludes distance d + 1."""
    _check(n, k, d)
    return hamming_volume(q, n, min(d // 2, n)) > q ** (n - k)


def fu_margin(n: int, k: int, d: int, q: int) -> tuple[int, int]:
    _check(n, k, d)
    if d % 2:
        raise NotApplicableError(f"the even-distance bound needs even d, got {d}")
    if k > n - 1:
        return 1, 0  # no room for a code with d >= 2
    lhs = sum(comb(n - 1, i) * (q - 1) ** i for i in range((d - 2) // 2 + 1))
    return lhs, q ** (n - 1 - k)


def fu_bound_admits(n: int, k: int, d: int, q: int) -> bool:
    """sum_{i <= (d-2)/2} C(n-1, i)(q-1)^i <= q^(n-1-k), for even d."""
    lhs, rhs = fu_margin(n, k, d, q)
    return lhs <= rhs


def singleton_admits(n: int, k: int, d: int) -> bool:
    return d <= n - k + 1


def griesmer_sum(k: int, d: int, q: int) -> int:
    return sum(-(-d // q ** i) for i in range(k))


def griesmer_admits(n: int, k: int, d: int, q: int) -> bool:
    return griesmer_sum(k, d, q) <= n


@dataclass(frozen=True)
class BoundCheck:
    admits: bool
    lhs: int
    rhs: int


class Optimality(str, Enum):
    DISTANCE_OPTIMAL = "DistanceOptimal"
    NOT_DETERMINED = "NotDeterminedHere"


def check_bounds(n: int, k: int, d: int, q: int) -> dict[str, BoundCheck]:
    """Every applicable bound on (n, k, d, q); the even-distance bound only for even d."""
    _check(n, k, d)
    out = {}
    lhs, rhs = sphere_packing_margin(n, k, d, q)
    out["sphere_packing"] = BoundCheck(lhs <= rhs, lhs, rhs)
    if d % 2 == 0:
        lhs, rhs = fu_margin(n, k, d, q)
        out["fu"] = BoundCheck(lhs <= rhs, lhs, rhs)
    out["singleton"] = BoundCheck(d <= n - k + 1, d, n - k + 1)
    out["griesmer"] = BoundCheck(griesmer_sum(k, d, q) <= n, griesmer_sum(k, d, q), n)
    return out


def rejecting_bounds(n: int, k: int, d: int, q: int) -> tuple[str, ...]:
    return tuple(name for name, c in check_bounds(n, k, d, q).items() if not c.admits)


@dataclass(frozen=True)
class BoundVerdict:
    params: tuple[int, int, int, int]  # (n, k, d, q)
    per_bound: dict[str, BoundCheck]
    optimality: Optimality
    via: tuple[str, ...] = ()
    # bounds rejecting d+1 and d+2, for reporting which bound kills which step
    next_rejections: dict[int, tuple[str, ...]] = field(default_factory=dict)
    note: str = ""

    @property
    def admissible(self) -> bool:
        return all(c.admits for c in self.per_bound.values())

    @property
    def optimal(self) -> bool:
        return self.optimality is Optimality.DISTANCE_OPTIMAL

    def to_dict(self) -> dict:
        n, k, d, q = self.params
        return {
            "n": n, "k": k, "d": d, "q": q,
            "optimality": self.optimality.value,
            "via": list(self.via),
            "admissible": self.admissible,
            "per_bound": {name: {"admits": c.admits, "lhs": c.lhs, "rhs": c.rhs} for name, c in self.per_bound.items()},
            "next_rejections": {str(k_): list(v) for k_, v in self.next_rejections.items()},
            "note": self.note,
        }


def classify(n: int, k: int, d: int, q: int) -> BoundVerdict:
    """Bound checks for (n, k, d, q) and whether the implemented bounds certify distance-optimality."""
    per = check_bounds(n, k, d, q)
    nxt = {}
    for dd in (d + 1, d + 2):
        nxt[dd] = rejecting_bounds(n, k, dd, q)
    via = nxt[d + 1]
    if not all(c.admits for c in per.values()):
        note = "parameters violate " + ", ".join(nm for nm, c in per.items() if not c.admits)
        return BoundVerdict((n, k, d, q), per, Optimality.NOT_DETERMINED, (), nxt, note)
    if via:
        return BoundVerdict((n, k, d, q), per, Optimality.DISTANCE_OPTIMAL, via, nxt)
    return BoundVerdict((n, k, d, q), per, Optimality.NOT_DETERMINED, (), nxt,
                        f"no implemented bound excludes d = {d + 1}")
