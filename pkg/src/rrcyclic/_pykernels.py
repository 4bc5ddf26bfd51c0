"""Pure-Python versions of the distance-search kernels.

Same signatures and results as the compiled ``_kernels`` module; see
``rrcyclic.kernels`` for the data layout.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations, product


def _scan(rows, q, n, hist):
    k = len(rows)
    if k == 0:
        if hist is not None:
            hist[0] += 1
        return n + 1, -1
    s = len(rows[0][0])
    cur = [0] * s
    digits = [0] * k
    best, best_idx = n + 1, -1
    if hist is not None:
        hist[0] += 1
    for t in range(1, q ** k):
        pos = k - 1
        while True:
            old = digits[pos]
            new = old + 1
            if new == q:
                new = 0
            delta = rows[pos][old ^ new]
            for b in range(s):
                cur[b] ^= delta[b]
            digits[pos] = new
            if new:
                break
            pos -= 1
        acc = 0
        for v in cur:
            acc |= v
        w = acc.bit_count()
        if hist is not None:
            hist[w] += 1
        elif w < best:
            best, best_idx = w, t
    return best, best_idx


def weight_histogram(rows, q, n):
    hist = [0] * (n + 1)
    _scan(rows, q, n, hist)
    return hist


def min_weight_scan(rows, q, n):
    return _scan(rows, q, n, None)


def collision_search(cols, q, left_size, right_size, anchor):
    n = len(cols)
    nonzero = range(1, q)
    table = defaultdict(list)
    if anchor:
        left_sets = ((0,) + c for c in combinations(range(1, n), left_size - 1))
    else:
        left_sets = combinations(range(n), left_size)
    for L in left_sets:
        head = cols[L[0]][1]
        for tail in product(nonzero, repeat=left_size - 1):
            syn = head
            for p, c in zip(L[1:], tail):
                syn ^= cols[p][c]
            table[syn].append((L, (1,) + tail))
    sols = []
    # every right part must sit above max(L) >= left_size - 1
    for R in combinations(range(left_size, n), right_size):
        lo = R[0] if R else n
        for co in product(nonzero, repeat=right_size):
            syn = 0
            for p, c in zip(R, co):
                syn ^= cols[p][c]
            hits = table.get(syn)
            if hits:
                for L, lc in hits:
                    if L[-1] < lo:
                        sols.append((L + R, lc + co))
    return sols
