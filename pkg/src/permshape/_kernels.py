"""Hot loops for patience sorting, Schensted row insertion, and cycle scans.

The kernels are JIT-compiled with numba when it is installed (the normal
case); otherwise pure-Python equivalents with identical semantics are used.
All kernels take plain int64 numpy arrays so they stay picklable and
cache-friendly across worker processes.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


@njit(cache=True)
def _lis_jit(values):
    n = values.shape[0]
    tops = np.empty(n, dtype=np.int64)
    k = 0
    for idx in range(n):
        x = values[idx]
        lo, hi = 0, k
        while lo < hi:
            mid = (lo + hi) >> 1
            if tops[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        tops[lo] = x
        if lo == k:
            k += 1
    return k


@njit(cache=True)
def _shape_jit(values):
    # Row r of the insertion tableau evolves by patience-with-replacement;
    # the elements bumped out of row r, in bump order, are the insertion
    # stream for row r+1. Peeling level by level visits each bump once.
    n = values.shape[0]
    row_lengths = np.empty(n, dtype=np.int64)
    nrows = 0
    cur = values.copy()
    tops = np.empty(n, dtype=np.int64)
    bumped = np.empty(n, dtype=np.int64)
    while cur.shape[0] > 0:
        m = cur.shape[0]
        k = 0
        nb = 0
        for idx in range(m):
            x = cur[idx]
            lo, hi = 0, k
            while lo < hi:
                mid = (lo + hi) >> 1
                if tops[mid] < x:
                    lo = mid + 1
                else:
                    hi = mid
            if lo == k:
                tops[k] = x
                k += 1
            else:
                bumped[nb] = tops[lo]
                tops[lo] = x
                nb += 1
        row_lengths[nrows] = k
        nrows += 1
        cur = bumped[:nb].copy()
    return row_lengths[:nrows]


@njit(cache=True)
def _cycle_scan_jit(zero_based):
    n = zero_based.shape[0]
    seen = np.zeros(n, dtype=np.uint8)
    num_cycles = 0
    fixed = 0
    two = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = zero_based[j]
            length += 1
        num_cycles += 1
        if length == 1:
            fixed += 1
        elif length == 2:
            two += 1
    return num_cycles, fixed, two


def _lis_py(values):
    from bisect import bisect_left

    tops: list[int] = []
    for x in values:
        j = bisect_left(tops, x)
        if j == len(tops):
            tops.append(x)
        else:
            tops[j] = x
    return len(tops)


def _shape_py(values):
    from bisect import bisect_left

    row_lengths = []
    cur = list(values)
    while cur:
        tops: list[int] = []
        bumped: list[int] = []
        for x in cur:
            j = bisect_left(tops, x)
            if j == len(tops):
                tops.append(x)
            else:
                bumped.append(tops[j])
                tops[j] = x
        row_lengths.append(len(tops))
        cur = bumped
    return np.asarray(row_lengths, dtype=np.int64)


def _cycle_scan_py(zero_based):
    n = len(zero_based)
    seen = bytearray(n)
    num_cycles = fixed = two = 0
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = 1
            j = int(zero_based[j])
            length += 1
        num_cycles += 1
        if length == 1:
            fixed += 1
        elif length == 2:
            two += 1
    return num_cycles, fixed, two


def lis_length(values: np.ndarray) -> int:
    """Length of the longest strictly increasing subsequence of distinct ints."""
    if values.shape[0] == 0:
        return 0
    if HAVE_NUMBA:
        return int(_lis_jit(np.ascontiguousarray(values, dtype=np.int64)))
    return _lis_py(values.tolist())


def insertion_shape(values: np.ndarray) -> np.ndarray:
    """Row lengths of the Schensted insertion tableau of a distinct-int word."""
    if values.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    if HAVE_NUMBA:
        return _shape_jit(np.ascontiguousarray(values, dtype=np.int64))
    return _shape_py(values.tolist())


def cycle_scan(zero_based: np.ndarray) -> tuple[int, int, int]:
    """(number of cycles, fixed points, 2-cycles) of a 0-based permutation array."""
    if zero_based.shape[0] == 0:
        return 0, 0, 0
    if HAVE_NUMBA:
        a, b, c = _cycle_scan_jit(np.ascontiguousarray(zero_based, dtype=np.int64))
        return int(a), int(b), int(c)
    return _cycle_scan_py(zero_based)


def warm_up() -> None:
    """Trigger JIT compilation of all kernels (no-op without numba)."""
    w = np.array([2, 0, 1], dtype=np.int64)
    lis_length(w)
    insertion_shape(w)
    cycle_scan(w)
