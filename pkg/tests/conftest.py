from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from rrcyclic.code import CyclicCode, cyclic_from_generator
from rrcyclic.cyclo import factor_xn_minus_1
from rrcyclic.gf import field_for_order
from rrcyclic.poly import Poly


@lru_cache(maxsize=None)
def irreducible_factors(q: int, n: int) -> tuple[Poly, ...]:
    return tuple(factor_xn_minus_1(q, n).values())


def product(F, polys) -> Poly:
    out = Poly.one(F)
    for p in polys:
        out = out * p
    return out


def all_divisors(q: int, n: int) -> list[Poly]:
    """Every monic divisor of x^n - 1 (gcd(q, n) = 1), one per subset of irreducible factors."""
    F = field_for_order(q)
    fs = irreducible_factors(q, n)
    return [product(F, [f for f, bit in zip(fs, mask) if bit])
            for mask in itertools.product((0, 1), repeat=len(fs))]


def disjoint_pairs(q: int, n: int):
    """Ordered pairs (g1, g2) with g1 * g2 dividing x^n - 1: each factor goes to g1, g2 or neither."""
    F = field_for_order(q)
    fs = irreducible_factors(q, n)
    for assign in itertools.product((0, 1, 2), repeat=len(fs)):
        g1 = product(F, [f for f, a in zip(fs, assign) if a == 1])
        g2 = product(F, [f for f, a in zip(fs, assign) if a == 2])
        yield g1, g2


def all_codes(q: int, n: int) -> list[CyclicCode]:
    """Every cyclic code of length n, for n odd or twice an odd number."""
    if n % 2:
        return [cyclic_from_generator(q, n, g) for g in all_divisors(q, n)]
    F = field_for_order(q)
    fs = irreducible_factors(q, n // 2)
    out = []
    for exps in itertools.product((0, 1, 2), repeat=len(fs)):
        g = Poly.one(F)
        for f, e in zip(fs, exps):
            g = g * f ** e
        out.append(cyclic_from_generator(q, n, g))
    return out


# -- acceptance reporting: one PASS/FAIL line per criterion, whatever the capture mode --

_CRITERIA: dict[int, str] = {}
_DETAILS: dict[int, list[str]] = {}


@pytest.fixture
def note(request):
    """Attach a detail line to the summary of the criterion this test belongs to."""
    num = int(request.node.name.split("_")[2])
    return lambda text: _DETAILS.setdefault(num, []).append(text)


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    num = int(name.split("_")[2])
    if report.when == "call" or report.outcome != "passed":
        prev = _CRITERIA.get(num, "PASS")
        _CRITERIA[num] = "PASS" if prev == "PASS" and report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        details = "; ".join(_DETAILS.get(num, []))
        terminalreporter.write_line(f"criterion {num}: {_CRITERIA[num]}" + (f"  ({details})" if details else ""))


@pytest.fixture(params=["python", "compiled"])
def impl(request):
    from rrcyclic import kernels
    if request.param == "compiled" and not kernels.COMPILED_AVAILABLE:
        pytest.skip("compiled kernels not built")
    return kernels.backend(request.param)
