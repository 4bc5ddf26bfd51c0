"""Parametric families of combined (u | u+v) cyclic codes.

Each family fixes two BCH components C_(q,n,delta,b) of an odd base length n
and combines them into a cyclic code of length 2n.  ``build_family`` returns
the construction together with the parameters and optimality statements the
family promises; ``verify_family`` checks those promises by computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .bounds import Optimality, classify
from .code import CyclicCode, bch_code
from .cyclo import all_cosets, coset_leaders, delta_h, is_prime, splitting_field
from .dist import (
    DistanceResult,
    ResourceError,
    bch_lower_bound,
    default_budget,
    min_weight_upto,
    search_cost,
)
from .errors import InvalidParametersError
from .gf import field_for_order
from .poly import Poly, poly_eval
from .vanlint import CombinedCode, predicted_distance, vanlint_combine


class FamilyId(str, Enum):
    T31 = "T31"
    T32 = "T32"
    T33 = "T33"
    T34 = "T34"
    T35 = "T35"
    T37 = "T37"
    T41 = "T41"
    T42 = "T42"
    T51 = "T51"
    T52 = "T52"
    T53 = "T53"
    T61 = "T61"
    T62 = "T62"
    T71 = "T71"
    T72 = "T72"

    @classmethod
    def parse(cls, tag: "str | FamilyId") -> "FamilyId":
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise InvalidParametersError(f"unknown family {tag!r}; expected one of {[f.value for f in cls]}") from None


# one-line summaries shown by the CLI
FAMILY_SUMMARY = {
    FamilyId.T31: "[2(2^m-1), 2(2^m-1)-m-2, 4]_2, m >= 4",
    FamilyId.T32: "[2(q^m-1), 2(q^m-1)-m-2, 3]_q, q >= 4, m >= 2",
    FamilyId.T33: "[2(q^m-1), 2(q^m-1)-2m-2, 4]_q, q >= 4, m >= 2",
    FamilyId.T34: "[2n, 2n-m-2, 3..4]_q, n = (q^m-1)/(q-1)",
    FamilyId.T35: "[2n, 2n-2m-2, 4]_q, n = (q^m-1)/(q-1)",
    FamilyId.T37: "[2n, 2n-2m-1, 4]_4, n = 2^(2m-1)-1",
    FamilyId.T41: "[2(2^m-1), 2(2^m-1)-3m-1, 6]_2, m >= 3",
    FamilyId.T42: "[2(2^m-1), 2(2^m-1)-4m-2, 8]_2, m >= 5",
    FamilyId.T51: "[2(2^m-1)/3, 2(2^m-1)/3-4m-2, 8]_2, m even >= 8",
    FamilyId.T52: "[6(2^m-1), 6(2^m-1)-7m-2, 8]_2, m odd >= 5",
    FamilyId.T53: "[6(2^m-1), 6(2^m-1)-9m-1, >=10]_2, m odd >= 5",
    FamilyId.T61: "[2(q^m-1), 2(q^m-1)-4m-2 (q=4) or -5m-2 (q>4), 6]_q",
    FamilyId.T62: "[2n, 2n-6m+2, 6]_4, n = 2^(2m-1)-1",
    FamilyId.T71: "[2n, n, >= delta_h+3]_2, n = 2^m-1, m prime",
    FamilyId.T72: "[2n, n+2^(m-2)+(m+1)/2, >= (n-1)/m]_2, n = 2^m-1, m prime",
}

BINARY = {FamilyId.T31, FamilyId.T41, FamilyId.T42, FamilyId.T51, FamilyId.T52, FamilyId.T53,
          FamilyId.T71, FamilyId.T72}
QUATERNARY = {FamilyId.T37, FamilyId.T62}


@dataclass(frozen=True)
class FamilySpec:
    """Everything a family fixes before any polynomial is built."""
    n: int
    c1: tuple[int, int]  # (designed distance, offset) of the first BCH component
    c2: tuple[int, int]
    K: int
    claim: DistanceResult
    component_dims: tuple[int, int]
    component_bounds: tuple[int, int]  # designed distances the proof relies on
    optimality_claim: tuple[str, ...]
    in_range: bool
    note: str = ""


def _spec(f: FamilyId, q: int, m: int) -> FamilySpec:
    exact = DistanceResult.exact
    if f in BINARY and q != 2:
        raise InvalidParametersError(f"{f.value} is a binary family; got q = {q}")
    if f in QUATERNARY and q != 4:
        raise InvalidParametersError(f"{f.value} is defined over GF(4); got q = {q}")
    if f not in BINARY and q < 4:
        raise InvalidParametersError(f"{f.value} needs an even q >= 4; got q = {q}")
    if m < 2:
        raise InvalidParametersError(f"m = {m} must be at least 2")

    if f is FamilyId.T31:
        n = 2 ** m - 1
        return FamilySpec(n, (2, 0), (3, 0), 2 * n - m - 2, exact(4), (n - 1, n - m - 1), (2, 3),
                          ("sphere_packing",), m >= 4)
    if f in (FamilyId.T32, FamilyId.T33, FamilyId.T61):
        n = q ** m - 1
        if f is FamilyId.T32:
            return FamilySpec(n, (2, 0), (3, 0), 2 * n - m - 2, exact(3), (n - 1, n - m - 1), (2, 3),
                              ("fu", "sphere_packing"), True)
        if f is FamilyId.T33:
            opt = ("sphere_packing",) if q * m > 8 else ()
            note = "" if opt else "optimality is only promised for qm > 8"
            return FamilySpec(n, (2, 0), (4, 0), 2 * n - 2 * m - 2, exact(4), (n - 1, n - 2 * m - 1), (2, 4),
                              opt, True, note)
        cosets2 = 3 if q == 4 else 4
        return FamilySpec(n, (3, 0), (6, 0), 2 * n - (cosets2 + 1) * m - 2, exact(6),
                          (n - m - 1, n - cosets2 * m - 1), (3, 6), (), True)
    if f in (FamilyId.T34, FamilyId.T35):
        n = (q ** m - 1) // (q - 1)
        if f is FamilyId.T34:
            return FamilySpec(n, (2, 0), (3, 0), 2 * n - m - 2, DistanceResult.interval(3, 4),
                              (n - 1, n - m - 1), (2, 3), (), True)
        return FamilySpec(n, (2, 0), (4, 0), 2 * n - 2 * m - 2, exact(4), (n - 1, n - 2 * m - 1), (2, 4),
                          (), True)
    if f in (FamilyId.T37, FamilyId.T62):
        n = 2 ** (2 * m - 1) - 1
        if f is FamilyId.T37:
            opt = ("sphere_packing",) if m >= 3 else ()
            note = "" if opt else "optimality is only promised for m >= 3"
            return FamilySpec(n, (2, 0), (4, 0), 2 * n - 2 * m - 1, exact(4), (n - 1, n - 2 * m), (2, 4),
                              opt, True, note)
        return FamilySpec(n, (3, 1), (6, 0), 2 * n - 6 * m + 2, exact(6), (n - 2 * m + 1, n - 4 * m + 1),
                          (3, 6), (), True)
    if f is FamilyId.T41:
        n = 2 ** m - 1
        return FamilySpec(n, (3, 1), (6, 0), 2 * n - 3 * m - 1, exact(6), (n - m, n - 2 * m - 1), (3, 6),
                          (), m >= 3)
    if f is FamilyId.T42:
        n = 2 ** m - 1
        note = "" if m >= 5 else "m < 5: parameters are outside the family's promise"
        return FamilySpec(n, (3, 0), (8, 0), 2 * n - 4 * m - 2, exact(8), (n - m - 1, n - 3 * m - 1), (3, 8),
                          (), m >= 5, note)
    if f is FamilyId.T51:
        if m % 2:
            raise InvalidParametersError(f"T51 needs even m (3 must divide 2^m - 1); got m = {m}")
        n = (2 ** m - 1) // 3
        return FamilySpec(n, (4, 0), (8, 0), 2 * n - 4 * m - 2, exact(8), (n - m - 1, n - 3 * m - 1), (4, 8),
                          (), m >= 8)
    if f in (FamilyId.T52, FamilyId.T53):
        n = 3 * (2 ** m - 1)
        ok = m % 2 == 1 and m >= 5
        if f is FamilyId.T52:
            return FamilySpec(n, (4, 0), (8, 0), 2 * n - 7 * m - 2, exact(8),
                              (n - 2 * m - 1, n - 5 * m - 1), (4, 8), (), ok)
        return FamilySpec(n, (5, 1), (10, n - 4), 2 * n - 9 * m - 1, DistanceResult.lower_bound(10),
                          (n - 3 * m, n - 6 * m - 1), (5, 10), (), ok)
    if f in (FamilyId.T71, FamilyId.T72):
        if m < 3 or not is_prime(m):
            raise InvalidParametersError(f"{f.value} needs a prime m >= 3; got m = {m}")
        n = 2 ** m - 1
        h, dh = delta_h(m)
        if f is FamilyId.T71:
            return FamilySpec(n, (dh + 2, 1), (dh + 2, 0), n, DistanceResult.lower_bound(dh + 3),
                              (2 ** (m - 1), 2 ** (m - 1) - 1), (dh + 2, dh + 3), (), True,
                              f"h = {h}, delta_h = {dh}")
        h2 = h
        h1 = (h2 + 1) // 2
        d1 = delta_h_at(m, h1)
        d2 = dh
        return FamilySpec(n, (d1, 1), (d2 + 2, 1), n + 2 ** (m - 2) + (m + 1) // 2,
                          DistanceResult.lower_bound(-(-(n - 1) // m)),
                          (n - (h1 - 1) * m, 2 ** (m - 1)), (d1, d2 + 2), (), True,
                          f"h1 = {h1}, h2 = {h2}, delta_h1 = {d1}, delta_h2 = {d2}")
    raise InvalidParametersError(f"unhandled family {f}")  # pragma: no cover


def delta_h_at(m: int, h: int) -> int:
    """The h-th smallest nonzero 2-cyclotomic coset leader mod 2^m - 1."""
    return coset_leaders(2, 2 ** m - 1).order_statistic(h)


@dataclass
class FamilyResult:
    family: FamilyId
    q: int
    m: int
    n: int
    combined: CombinedCode
    bch1: CyclicCode
    bch2: CyclicCode
    spec: FamilySpec

    @property
    def code(self) -> CyclicCode:
        return self.combined.code

    @property
    def predicted(self) -> tuple[int, int, DistanceResult]:
        return 2 * self.n, self.spec.K, self.spec.claim

    @property
    def optimality_claim(self) -> tuple[str, ...]:
        return self.spec.optimality_claim

    @property
    def in_theorem_range(self) -> bool:
        return self.spec.in_range

    def label(self) -> str:
        N, K, claim = self.predicted
        return f"[{N},{K},{claim}]_{self.q}"

    def to_dict(self) -> dict:
        N, K, claim = self.predicted
        return {
            "family": self.family.value,
            "q": self.q,
            "m": self.m,
            "n": self.n,
            "N": self.code.length,
            "K": self.code.dimension,
            "predicted": {"N": N, "K": K, "d": str(claim)},
            "components": [
                {"designed_distance": c.designed_distance, "offset": c.offset, "k": c.dimension}
                for c in (self.bch1, self.bch2)
            ],
            "generator": list(self.code.generator.coeffs),
            "optimality_claim": list(self.optimality_claim),
            "in_theorem_range": self.in_theorem_range,
            "note": self.spec.note,
        }


def build_family(f: FamilyId | str, q: int, m: int) -> FamilyResult:
    """Construct family ``f`` at (q, m) from its two BCH components."""
    f = FamilyId.parse(f)
    spec = _spec(f, q, m)
    splitting_field(q, spec.n)
    b1 = bch_code(q, spec.n, *spec.c1)
    b2 = bch_code(q, spec.n, *spec.c2)
    combined = vanlint_combine(q, spec.n, b1.generator, b2.generator)
    combined.code.family = f.value
    return FamilyResult(f, q, m, spec.n, combined, b1, b2, spec)


def weight3_witness(q: int, m: int) -> Poly:
    """A weight-3 word 1 + b1 x^i + b2 x^(n-1) of C_(q, n, 3, 0), n = q^m - 1.

    Scans i upward for b = (beta^i + 1) / (beta^(n-1) + 1) in GF(q) minus {0, 1}
    and returns the first hit, checked by evaluation at 1 and beta.
    """
    if q < 4 or q % 2:
        raise InvalidParametersError(f"q = {q} must be even and at least 4")
    if m < 2:
        raise InvalidParametersError(f"m = {m} must be at least 2")
    n = q ** m - 1
    E, beta = splitting_field(q, n)
    F = field_for_order(q)
    denom = E.pow(beta, n - 1) ^ 1
    for i in range(1, n - 1):
        b = E.div(E.pow(beta, i) ^ 1, denom)
        if b in (0, 1) or not E.in_subfield(b):
            continue
        bb = E.restrict(b)
        b1 = F.inv(1 ^ bb)
        b2 = F.mul(bb, b1)
        coeffs = [0] * n
        coeffs[0], coeffs[i], coeffs[n - 1] = 1, b1, b2
        c = Poly(F, coeffs)
        if c(1) != 0 or poly_eval(c, E.elem(beta)).value != 0:
            raise InvalidParametersError("weight-3 candidate failed the root check")  # pragma: no cover
        return c
    raise InvalidParametersError(f"no weight-3 word found for (q, m) = ({q}, {m})")  # pragma: no cover


# -- verification ---------------------------------------------------------------------


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class Check:
    name: str
    status: CheckStatus
    detail: str = ""


@dataclass
class FamilyReport:
    result: FamilyResult
    checks: list[Check] = field(default_factory=list)
    distance: DistanceResult | None = None
    verdict: object = None

    @property
    def passed(self) -> bool:
        return all(c.status is not CheckStatus.FAIL for c in self.checks)

    @property
    def budget_exhausted(self) -> bool:
        return any(c.status is CheckStatus.SKIPPED and "budget" in c.detail for c in self.checks)

    def add(self, name: str, ok: bool | None, detail: str = "") -> None:
        status = CheckStatus.SKIPPED if ok is None else (CheckStatus.PASS if ok else CheckStatus.FAIL)
        self.checks.append(Check(name, status, detail))

    def lines(self) -> list[str]:
        return [f"{c.status.value:7s} {c.name}: {c.detail}" for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "family": self.result.to_dict(),
            "distance": None if self.distance is None else self.distance.to_dict(),
            "checks": [{"name": c.name, "status": c.status.value, "detail": c.detail} for c in self.checks],
            "passed": self.passed,
        }


def _coset_sizes(c: CyclicCode) -> dict[int, int]:
    q, n = c.q, c.length
    out = {}
    for s in all_cosets(q, n):
        if s.members[0] in c.defining_set:
            out[s.leader] = len(s)
    return out


def distance_by_identity(r: FamilyResult, budget: int | None = None) -> DistanceResult:
    """min{2 d(C1), d(C2)} with component distances from search and the BCH bound."""
    budget = default_budget() if budget is None else budget
    parts = []
    for comp, designed in ((r.combined.c1, r.spec.component_bounds[0]), (r.combined.c2, r.spec.component_bounds[1])):
        if comp.dimension == 0:
            parts.append(None)
            continue
        bch = bch_lower_bound(comp) if comp.simple_root else 1
        wmax = max(bch, 2)
        try:
            res = min_weight_upto(comp, wmax=wmax, budget=budget)
        except ResourceError as exc:
            res = exc.partial
        if not res.is_exact:
            res = DistanceResult.interval(max(res.low, bch), comp.length - comp.dimension + 1)
        parts.append(res)
    return predicted_distance(parts[0], parts[1])


def verify_family(r: FamilyResult, budget: int | None = None, wmax: int | None = None) -> FamilyReport:
    """Check dimension, component structure, distance and optimality promises of ``r``."""
    budget = default_budget() if budget is None else budget
    rep = FamilyReport(r)
    N, K, claim = r.predicted
    code = r.code

    def judge(ok):
        # outside the family's hypotheses a mismatch is informative, not a contradiction
        if ok is None or r.in_theorem_range:
            return ok
        return True if ok else None

    # (a) length and dimension
    rep.add("length", code.length == N, f"computed {code.length}, predicted {N}")
    rep.add("dimension", judge(code.dimension == K),
            f"computed {code.dimension}, predicted {K}" + ("" if r.in_theorem_range else " (outside range)"))
    rep.add("dimension identity", code.dimension == r.combined.predicted_dim,
            f"k1 + k2 = {r.combined.predicted_dim}")

    # (b) components
    for label, comp, dim, designed in (("C1", r.bch1, r.spec.component_dims[0], r.spec.component_bounds[0]),
                                       ("C2", r.bch2, r.spec.component_dims[1], r.spec.component_bounds[1])):
        got = comp.dimension
        rep.add(f"{label} dimension", judge(got == dim),
                f"computed {got}, expected {dim}; coset sizes {_coset_sizes(comp)}")
        bb = bch_lower_bound(comp)
        # the T71 second component relies on an odd-distance argument, not the BCH bound alone
        need = designed if not (r.family is FamilyId.T71 and label == "C2") else designed - 1
        rep.add(f"{label} BCH bound", judge(bb >= need), f"BCH bound {bb}, needed {need}")
    if r.family is FamilyId.T72:
        rep.add("C2 inside C1", r.bch1.defining_set <= r.bch2.defining_set, "defining-set containment")

    # (c) distance
    target = claim.high if claim.high is not None else claim.low
    w = wmax if wmax is not None else target
    cost = search_cost(code, w)
    dist = None
    if cost <= budget:
        try:
            dist = min_weight_upto(code, wmax=w, budget=budget)
        except ResourceError as exc:
            dist = exc.partial
        how = f"direct search up to weight {w}"
    else:
        dist = distance_by_identity(r, budget)
        how = f"component identity (direct search would need {cost} visits)"
    rep.distance = dist
    overlap = (claim.high is None or dist.low <= claim.high) and (dist.high is None or dist.high >= claim.low)
    if dist.is_exact:
        ok = claim.admits(dist.value)
    elif not overlap:
        ok = False
    elif claim.high is None and dist.low >= claim.low:
        ok = True  # a lower-bound claim is confirmed by any lower bound reaching it
    else:
        ok = None
        how += "; consistent with the claim but not confirmed within the budget"
    rep.add("distance", judge(ok), f"claim {claim}, computed {dist} by {how}")

    # (d) optimality
    if code.dimension == 0:
        rep.add("optimality", None, "zero code")
        return rep
    d_for_bounds = dist.value if dist.is_exact else claim.low
    verdict = classify(code.length, code.dimension, d_for_bounds, r.q)
    rep.verdict = verdict
    if r.optimality_claim:
        killed = set(verdict.next_rejections.get(d_for_bounds + 1, ())) | set(verdict.next_rejections.get(d_for_bounds + 2, ()))
        missing = [b for b in r.optimality_claim if b not in killed]
        ok = verdict.optimality is Optimality.DISTANCE_OPTIMAL and not missing
        rep.add("optimality", judge(ok), f"{verdict.optimality.value} via {', '.join(verdict.via) or '-'}; "
                                  f"claimed {', '.join(r.optimality_claim)}")
    else:
        rep.add("optimality", None, f"no optimality promise; bounds say {verdict.optimality.value}"
                                    + (f" via {', '.join(verdict.via)}" if verdict.via else ""))
    return rep
