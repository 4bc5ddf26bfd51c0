# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled distance-search kernels.

Mirrors ``_pykernels`` exactly; ``rrcyclic.kernels`` describes the layouts.
"""

import numpy as np
from math import comb

from libc.stdint cimport uint64_t, int64_t, int32_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline bint _next_comb(int32_t* c, int t, int hi) noexcept nogil:
    # lexicographic successor of an increasing t-tuple with entries < hi
    cdef int i = t - 1
    cdef int j
    while i >= 0 and c[i] == hi - t + i:
        i -= 1
    if i < 0:
        return 0
    c[i] += 1
    for j in range(i + 1, t):
        c[j] = c[j - 1] + 1
    return 1


cdef inline bint _next_digits(int32_t* d, int t, int lo, int q) noexcept nogil:
    # odometer over digits d[0..t) in [lo, q), last digit fastest
    cdef int i = t - 1
    while i >= 0:
        d[i] += 1
        if d[i] < q:
            return 1
        d[i] = lo
        i -= 1
    return 0


cdef inline bint _next_anchor(int32_t* c, int t, int n) noexcept nogil:
    # c[0] stays 0; advance c[1..t) over increasing tuples drawn from 1..n-1
    if t <= 1:
        return 0
    return _next_comb(&c[1], t - 1, n)


def _scan(const uint64_t[:, :, :, ::1] rows, int q, int n, bint want_hist):
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t s = rows.shape[2]
    cdef Py_ssize_t W = rows.shape[3]
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] hist = hist_arr
    if k == 0:
        hist[0] = 1
        return hist_arr, n + 1, -1
    cur_arr = np.zeros((s, W), dtype=np.uint64)
    dig_arr = np.zeros(k, dtype=np.int32)
    cdef uint64_t[:, ::1] cur = cur_arr
    cdef int32_t[::1] digits = dig_arr
    cdef uint64_t total = (<uint64_t>q) ** k
    cdef uint64_t t
    cdef Py_ssize_t pos, b, w
    cdef int old, new, wt, best = n + 1
    cdef int64_t best_idx = -1
    cdef uint64_t acc
    hist[0] = 1
    with nogil:
        t = 1
        while t < total:
            pos = k - 1
            while True:
                old = digits[pos]
                new = old + 1
                if new == q:
                    new = 0
                for b in range(s):
                    for w in range(W):
                        cur[b, w] ^= rows[pos, old ^ new, b, w]
                digits[pos] = new
                if new:
                    break
                pos -= 1
            wt = 0
            for w in range(W):
                acc = 0
                for b in range(s):
                    acc |= cur[b, w]
                wt += __builtin_popcountll(acc)
            if want_hist:
                hist[wt] += 1
            elif wt < best:
                best = wt
                best_idx = <int64_t>t
            t += 1
    return hist_arr, best, best_idx


def weight_histogram(rows, int q, int n):
    return [int(v) for v in _scan(rows, q, n, True)[0]]


def min_weight_scan(rows, int q, int n):
    _, best, idx = _scan(rows, q, n, False)
    return best, idx


def _left_count(n, q, ls, anchor):
    if anchor:
        return comb(n - 1, ls - 1) * (q - 1) ** (ls - 1)
    return comb(n, ls) * (q - 1) ** (ls - 1)


def collision_search(const uint64_t[:, ::1] cols, int q, int left_size, int right_size, bint anchor):
    cdef int n = cols.shape[0]
    cdef int ls = left_size, rs = right_size
    cdef Py_ssize_t count = _left_count(n, q, ls, anchor)
    if count == 0 or n - ls < rs:
        return []

    syn_arr = np.empty(count, dtype=np.uint64)
    pos_arr = np.empty((count, ls), dtype=np.int32)
    coef_arr = np.empty((count, ls), dtype=np.int32)
    cdef uint64_t[::1] syn = syn_arr
    cdef int32_t[:, ::1] lpos = pos_arr
    cdef int32_t[:, ::1] lcoef = coef_arr

    cdef int bits = 1
    while (1 << bits) < 2 * count:
        bits += 1
    cdef uint64_t mask = (<uint64_t>1 << bits) - 1
    head_arr = np.full(1 << bits, -1, dtype=np.int64)
    next_arr = np.empty(count, dtype=np.int64)
    cdef int64_t[::1] head = head_arr
    cdef int64_t[::1] nxt = next_arr

    comb_arr = np.zeros(max(ls, rs, 1), dtype=np.int32)
    dig_arr = np.zeros(max(ls, rs, 1), dtype=np.int32)
    cdef int32_t[::1] c = comb_arr
    cdef int32_t[::1] d = dig_arr
    cdef Py_ssize_t e = 0, i
    cdef uint64_t s, hsh
    cdef int64_t slot
    cdef bint more

    # left parts: first coefficient fixed to 1, hashed by syndrome
    with nogil:
        if anchor:
            c[0] = 0
            for i in range(1, ls):
                c[i] = i
        else:
            for i in range(ls):
                c[i] = i
        more = 1
        while more:
            d[0] = 1
            for i in range(1, ls):
                d[i] = 1
            while True:
                s = 0
                for i in range(ls):
                    s ^= cols[c[i], d[i]]
                    lpos[e, i] = c[i]
                    lcoef[e, i] = d[i]
                syn[e] = s
                hsh = ((s * <uint64_t>0x9E3779B97F4A7C15) >> (64 - bits)) & mask
                nxt[e] = head[hsh]
                head[hsh] = e
                e += 1
                if ls <= 1 or not _next_digits(&d[1], ls - 1, 1, q):
                    break
            if anchor:
                more = _next_anchor(&c[0], ls, n)
            else:
                more = _next_comb(&c[0], ls, n)

    sols = []
    # right parts start above max(L) >= ls - 1
    cdef int lo
    if rs == 0:
        for e in range(count):
            if syn[e] == 0:
                sols.append((tuple(pos_arr[e].tolist()), tuple(coef_arr[e].tolist())))
        return sols
    for i in range(rs):
        c[i] = ls + i
    more = c[rs - 1] < n
    while more:
        lo = c[0]
        for i in range(rs):
            d[i] = 1
        while True:
            s = 0
            for i in range(rs):
                s ^= cols[c[i], d[i]]
            hsh = ((s * <uint64_t>0x9E3779B97F4A7C15) >> (64 - bits)) & mask
            slot = head[hsh]
            while slot >= 0:
                if syn[slot] == s and lpos[slot, ls - 1] < lo:
                    sols.append((
                        tuple(pos_arr[slot].tolist()) + tuple([c[i] for i in range(rs)]),
                        tuple(coef_arr[slot].tolist()) + tuple([d[i] for i in range(rs)]),
                    ))
                slot = nxt[slot]
            if not _next_digits(&d[0], rs, 1, q):
                break
        more = _next_comb(&c[0], rs, n)
    return sols

