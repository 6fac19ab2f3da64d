"""Compiled lattice-point counting loop.

Integer arithmetic only (int64); :func:`pack_plan` refuses plans whose
intermediate values could overflow, in which case callers fall back to the
pure-Python counter.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_LIMIT = 1 << 62


def pack_plan(plan, n: int):
    dim = plan.dim
    width = max(1, max(len(rows) for rows in plan.levels))
    coef = np.zeros((dim, width, max(dim, 1)), dtype=np.int64)
    step = np.zeros((dim, width), dtype=np.int64)
    rhs = np.zeros((dim, width), dtype=np.int64)
    nrows = np.zeros(dim, dtype=np.int64)

    # every visited coordinate lies in n*P, so |x_i| <= n * extent
    coord_bound = n * plan.extent + 1
    for rows in plan.levels:
        for pre, c, b, s in rows:
            worst = abs(n * b) + sum(abs(s * a) for a in pre) * coord_bound
            if worst >= _LIMIT or abs(s * c) >= _LIMIT:
                return None

    for k, rows in enumerate(plan.levels):
        nrows[k] = len(rows)
        for r, (pre, c, b, s) in enumerate(rows):
            for i, a in enumerate(pre):
                coef[k, r, i] = s * a
            step[k, r] = s * c
            rhs[k, r] = n * b
    return coef, step, rhs, nrows, dim


@njit(cache=True)
def _interval(coef, step, rhs, nrows, k, x):
    lo = -(1 << 62)
    hi = 1 << 62
    for r in range(nrows[k]):
        t = rhs[k, r]
        for i in range(k):
            t -= coef[k, r, i] * x[i]
        c = step[k, r]
        if c > 0:
            v = t // c
            if v < hi:
                hi = v
        else:
            v = -((-t) // c)
            if v > lo:
                lo = v
    return lo, hi


@njit(cache=True)
def _count(coef, step, rhs, nrows, dim):
    x = np.zeros(dim, dtype=np.int64)
    cur = np.zeros(dim, dtype=np.int64)
    top = np.zeros(dim, dtype=np.int64)
    lo, hi = _interval(coef, step, rhs, nrows, 0, x)
    if dim == 1:
        return max(0, hi - lo + 1)
    total = 0
    k = 0
    cur[0] = lo
    top[0] = hi
    while True:
        if cur[k] > top[k]:
            if k == 0:
                break
            k -= 1
            cur[k] += 1
            continue
        x[k] = cur[k]
        if k + 1 == dim - 1:
            lo, hi = _interval(coef, step, rhs, nrows, k + 1, x)
            if hi >= lo:
                total += hi - lo + 1
            cur[k] += 1
        else:
            k += 1
            lo, hi = _interval(coef, step, rhs, nrows, k, x)
            cur[k] = lo
            top[k] = hi
    return total


def count(packed, n: int) -> int:
    coef, step, rhs, nrows, dim = packed
    return int(_count(coef, step, rhs, nrows, dim))


@njit(cache=True)
def _fill(coef, step, rhs, nrows, dim, out):
    # same traversal as _count; `out` is pre-sized from _count
    x = np.zeros(dim, dtype=np.int64)
    cur = np.zeros(dim, dtype=np.int64)
    top = np.zeros(dim, dtype=np.int64)
    row = 0
    lo, hi = _interval(coef, step, rhs, nrows, 0, x)
    if dim == 1:
        for v in range(lo, hi + 1):
            out[row, 0] = v
            row += 1
        return row
    k = 0
    cur[0] = lo
    top[0] = hi
    while True:
        if cur[k] > top[k]:
            if k == 0:
                break
            k -= 1
            cur[k] += 1
            continue
        x[k] = cur[k]
        if k + 1 == dim - 1:
            lo, hi = _interval(coef, step, rhs, nrows, k + 1, x)
            for v in range(lo, hi + 1):
                for i in range(k + 1):
                    out[row, i] = x[i]
                out[row, k + 1] = v
                row += 1
            cur[k] += 1
        else:
            k += 1
            lo, hi = _interval(coef, step, rhs, nrows, k, x)
            cur[k] = lo
            top[k] = hi
    return row


def enumerate_points(packed, n: int) -> np.ndarray:
    """All lattice points of the dilate as an (N, dim) int64 array, in
    lexicographic order."""
    coef, step, rhs, nrows, dim = packed
    total = int(_count(coef, step, rhs, nrows, dim))
    out = np.empty((total, dim), dtype=np.int64)
    _fill(coef, step, rhs, nrows, dim, out)
    return out
