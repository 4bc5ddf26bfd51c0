"""Backend selection and data layout for the distance-search kernels.

Two interchangeable implementations exist: the compiled ``_kernels``
extension and the pure-Python ``_pykernels``.  The compiled one is used when it
imports, unless ``RRCYCLIC_PURE_PYTHON=1`` is set.  ``BACKEND`` names the one
in use.

Layouts
-------
A vector over GF(2^s) of length n is stored as s bitplanes of ``ceil(n/64)``
words each: bit j of plane b is bit b of coordinate j.  Its Hamming weight is
the popcount of the OR of its planes.

``pack_scaled_rows(G, F)`` gives the array ``rows[i, c]`` = planes of c * G[i]
used by the exhaustive scan.  Because scalars are XOR-additive, moving digit i
from a to b changes the codeword by ``rows[i, a ^ b]``.

``pack_scaled_columns(H, F)`` gives ``cols[j, c]``: column j of H scaled by c,
packed as one syndrome integer of ``r * s`` bits (bit ``b * r + i`` is bit b of
entry i).  The compiled search needs ``r * s <= 64``.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .gf import Field

try:  # pragma: no cover - depends on the build
    from . import _kernels as _compiled
except ImportError:  # pragma: no cover
    _compiled = None

COMPILED_AVAILABLE = _compiled is not None


def _choose():
    if _compiled is not None and os.environ.get("RRCYCLIC_PURE_PYTHON", "") not in ("1", "true", "yes"):
        return _compiled, "compiled"
    return _pykernels, "python"


_impl, BACKEND = _choose()


def backend(name: str | None = None):
    """The kernel module for ``name`` ("compiled" or "python"); the active one by default."""
    if name is None:
        return _impl
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _compiled is None:
            raise ImportError("the compiled kernel extension is not built")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")


def pack_scaled_rows(G, F: Field) -> np.ndarray:
    """(k, q, s, W) uint64 array of scaled generator rows as bitplanes."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape if G.ndim == 2 else (0, 0)
    q, s = F.order, F.degree
    W = max(1, (n + 63) // 64)
    out = np.zeros((k, q, s, W), dtype=np.uint64)
    for i in range(k):
        row = [int(v) for v in G[i]]
        for c in range(1, q):
            planes = [0] * s
            for j, v in enumerate(row):
                if v:
                    e = F.mul(c, v)
                    for b in range(s):
                        if e >> b & 1:
                            planes[b] |= 1 << j
            for b in range(s):
                p = planes[b]
                for w in range(W):
                    out[i, c, b, w] = (p >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def rows_as_lists(packed: np.ndarray):
    """Python-int form of ``pack_scaled_rows`` output for the fallback kernel."""
    k, q, s, W = packed.shape
    out = []
    for i in range(k):
        per = []
        for c in range(q):
            planes = []
            for b in range(s):
                v = 0
                for w in range(W):
                    v |= int(packed[i, c, b, w]) << (64 * w)
                planes.append(v)
            per.append(tuple(planes))
        out.append(per)
    return out


def pack_scaled_columns(H, F: Field) -> list[list[int]]:
    """cols[j][c] = packed syndrome of c times column j of H (Python ints)."""
    H = np.asarray(H, dtype=np.int64)
    r, n = H.shape
    q, s = F.order, F.degree
    cols = []
    for j in range(n):
        col = [int(v) for v in H[:, j]]
        per = [0] * q
        for c in range(1, q):
            syn = 0
            for i, v in enumerate(col):
                if v:
                    e = F.mul(c, v)
                    for b in range(s):
                        if e >> b & 1:
                            syn |= 1 << (b * r + i)
            per[c] = syn
        cols.append(per)
    return cols


def weight_histogram(G, F: Field, impl=None) -> list[int]:
    n = np.asarray(G).shape[1]
    packed = pack_scaled_rows(G, F)
    mod = impl or _impl
    if mod is _pykernels:
        return _pykernels.weight_histogram(rows_as_lists(packed), F.order, n)
    return mod.weight_histogram(packed, F.order, n)


def min_weight_scan(G, F: Field, impl=None) -> tuple[int, int]:
    """(minimum nonzero weight, index of the first message attaining it)."""
    n = np.asarray(G).shape[1]
    packed = pack_scaled_rows(G, F)
    mod = impl or _impl
    if mod is _pykernels:
        return _pykernels.min_weight_scan(rows_as_lists(packed), F.order, n)
    return mod.min_weight_scan(packed, F.order, n)


def collision_search(cols, q: int, width: int, left_size: int, right_size: int, anchor: bool, impl=None):
    """All weight-(left_size + right_size) syndrome collisions, as (positions, coefficients).

    Left parts have first coefficient 1 (and position 0 when ``anchor``);
    right parts lie strictly above the left part, so each normalized codeword
    with the given support size is reported exactly once.
    """
    mod = impl or _impl
    if mod is _compiled and width <= 64:
        arr = np.array(cols, dtype=np.uint64).reshape(len(cols), q)
        return mod.collision_search(arr, q, left_size, right_size, anchor)
    return _pykernels.collision_search(cols, q, left_size, right_size, anchor)
