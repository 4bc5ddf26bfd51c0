from __future__ import annotations

import pytest

from rrcyclic.code import LinearCode, bch_code, cyclic_from_generator
from rrcyclic.dist import (DistanceResult, ResourceError, Status, bch_lower_bound, default_budget,
                           estimate_distance, hamming_weight, longest_circular_run, min_distance_exhaustive,
                           min_weight_upto, search_cost, weight_distribution)
from rrcyclic.errors import InvalidParametersError, NotApplicableError
from rrcyclic.families import FamilyId, build_family
from rrcyclic.gf import field_for_order
from rrcyclic.poly import Poly

from conftest import all_codes

GF2 = field_for_order(2)
HAMMING = bch_code(2, 7, 3, 1)


def _in_code(c, word):
    return c.contains(word) and any(word)


def test_exhaustive_examples():
    assert min_distance_exhaustive(HAMMING).value == 3
    even = cyclic_from_generator(2, 7, HAMMING.generator * Poly(GF2, [1, 1]))
    assert even.dimension == 3 and min_distance_exhaustive(even).value == 4
    rep = cyclic_from_generator(2, 7, Poly.xn_minus_1(GF2, 7) // Poly(GF2, [1, 1]))
    assert min_distance_exhaustive(rep).value == 7
    with pytest.raises(ValueError):
        min_distance_exhaustive(cyclic_from_generator(2, 7, Poly.xn_minus_1(GF2, 7)))
    with pytest.raises(ResourceError):
        min_distance_exhaustive(bch_code(2, 63, 3, 1))


def test_exhaustive_witness_is_first_in_message_order():
    res = min_distance_exhaustive(HAMMING)
    # messages in lexicographic order, last digit fastest: 0001 encodes x^3 g(x)
    assert res.witness == HAMMING.encode([0, 0, 0, 1])
    assert hamming_weight(res.witness) == 3


def test_weight_distribution_examples():
    assert weight_distribution(HAMMING) == [1, 0, 0, 7, 7, 0, 0, 1]
    full = cyclic_from_generator(2, 3, [1])
    assert weight_distribution(full) == [1, 3, 3, 1]
    zero = cyclic_from_generator(2, 7, Poly.xn_minus_1(GF2, 7))
    assert weight_distribution(zero) == [1] + [0] * 7
    for c in all_codes(4, 5):
        dist = weight_distribution(c)
        assert sum(dist) == 4 ** c.dimension and dist[0] == 1


def test_min_weight_upto_examples():
    assert min_weight_upto(build_family(FamilyId.T32, 4, 2).code, 4).value == 3
    assert min_weight_upto(build_family(FamilyId.T31, 2, 4).code, 5).value == 4
    for q, n in [(2, 7), (4, 5), (8, 9)]:
        par = cyclic_from_generator(q, n, [1, 1])
        assert min_weight_upto(par, 3).value == 2
    full = cyclic_from_generator(2, 5, [1])
    assert min_weight_upto(full, 3).value == 1


def test_min_weight_upto_bounds_and_errors():
    rep = cyclic_from_generator(2, 15, Poly.xn_minus_1(GF2, 15) // Poly(GF2, [1, 1]))
    r = min_weight_upto(rep, 5)
    assert r.status is Status.LOWER_BOUND and r.low == 6 and r.high is None
    with pytest.raises(InvalidParametersError):
        min_weight_upto(rep, 0)
    zero = cyclic_from_generator(2, 7, Poly.xn_minus_1(GF2, 7))
    assert min_weight_upto(zero, 4) == DistanceResult.lower_bound(5)


def test_budget_exhaustion_reports_level_reached():
    c = build_family(FamilyId.T41, 2, 5).code
    cost3 = search_cost(c, 3)
    with pytest.raises(ResourceError) as exc:
        min_weight_upto(c, 6, budget=cost3)
    assert exc.value.partial == DistanceResult.lower_bound(4)
    assert min_weight_upto(c, 6, budget=search_cost(c, 6)).value == 6


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("RRCYCLIC_BUDGET", "1e3")
    assert default_budget() == 1000
    with pytest.raises(ResourceError):
        min_weight_upto(build_family(FamilyId.T41, 2, 5).code, 6)
    monkeypatch.delenv("RRCYCLIC_BUDGET")
    assert default_budget() == 10 ** 10


@pytest.mark.parametrize("q,n", [(2, 7), (2, 15), (2, 9), (2, 14), (4, 5), (4, 6), (4, 15), (8, 7)])
def test_oracle_agreement_and_witnesses(q, n):
    for c in all_codes(q, n):
        if c.dimension == 0 or q ** c.dimension > 1 << 16:
            continue
        exact = min_distance_exhaustive(c)
        res = min_weight_upto(c, n, enumerate=False)
        assert res.is_exact and res.value == exact.value
        assert hamming_weight(res.witness) == res.value and _in_code(c, res.witness)
        low = min(p for p, v in enumerate(res.witness) if v)
        assert res.witness[low] == 1
        if c.simple_root:
            assert bch_lower_bound(c) <= exact.value
        # monotone in wmax: below d only lower bounds, at and above d the exact value
        for w in range(1, min(exact.value, 4)):
            assert min_weight_upto(c, w).low == w + 1


def test_canonical_witness_is_colex_least():
    # Hamming [7,4]: the weight-3 words have supports {i, i+1, i+3}; colex least is {0, 1, 3}
    w = min_weight_upto(HAMMING, 3).witness
    assert w == (1, 1, 0, 1, 0, 0, 0)


def test_non_cyclic_linear_code():
    G = [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]]
    lin = LinearCode(GF2, G)
    assert min_weight_upto(lin, 5).value == min_distance_exhaustive(lin).value == 2
    F4 = field_for_order(4)
    lin4 = LinearCode(F4, [[1, 0, 1, 2, 3], [0, 1, 1, 3, 2]])
    assert min_weight_upto(lin4, 5).value == min_distance_exhaustive(lin4).value


def test_bch_lower_bound_examples():
    assert bch_lower_bound(HAMMING) == 3
    assert bch_lower_bound(bch_code(2, 127, 8, 0)) >= 8
    for q, n in [(2, 7), (4, 15), (8, 9)]:
        assert bch_lower_bound(bch_code(q, n, 2, 0)) == 2
    with pytest.raises(NotApplicableError):
        bch_lower_bound(cyclic_from_generator(2, 14, [1, 1]))
    assert longest_circular_run({0, 5, 6}, 7) == 3
    assert longest_circular_run(set(), 7) == 0
    assert longest_circular_run(set(range(7)), 7) == 7


def test_distance_result_semantics():
    e = DistanceResult.exact(4)
    assert e.is_exact and e.value == 4 and str(e) == "4" and e.admits(4) and not e.admits(5)
    lb = DistanceResult.lower_bound(10)
    assert str(lb) == ">=10" and lb.admits(40) and not lb.admits(9)
    with pytest.raises(ValueError):
        _ = lb.value
    iv = DistanceResult.interval(3, 4)
    assert str(iv) == "3..4" and iv.status is Status.INTERVAL
    assert DistanceResult.interval(5, 5) == DistanceResult.exact(5)
    with pytest.raises(InvalidParametersError):
        DistanceResult.interval(5, 4)
    assert iv.to_dict() == {"status": "Interval", "low": 3, "high": 4}


def test_estimate_distance():
    assert estimate_distance(HAMMING).value == 3
    big = bch_code(2, 127, 8, 0)
    est = estimate_distance(big, wmax=4)
    assert est.low >= 8 and est.high == 127 - 105 + 1


def test_enumeration_switch_matches_search():
    rep = cyclic_from_generator(2, 31, Poly.xn_minus_1(GF2, 31) // Poly(GF2, [1, 1]))
    assert min_weight_upto(rep, 31).value == 31
    assert min_weight_upto(rep, 20) == DistanceResult.lower_bound(21)
    for q, n in [(2, 21), (4, 5), (8, 7)]:
        for c in all_codes(q, n):
            if 0 < c.dimension <= 3:
                assert min_weight_upto(c, n) == min_weight_upto(c, n, enumerate=False)


def test_left_table_memory_guard(monkeypatch):
    import rrcyclic.dist as dist
    monkeypatch.setattr(dist, "LEFT_TABLE_BYTES", 10_000)
    rep = cyclic_from_generator(2, 31, Poly.xn_minus_1(GF2, 31) // Poly(GF2, [1, 1]))
    with pytest.raises(ResourceError, match="left table") as exc:
        min_weight_upto(rep, 31, enumerate=False)
    assert 1 < exc.value.partial.low < 31
