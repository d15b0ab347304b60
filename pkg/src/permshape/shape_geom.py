"""Height profiles of Young diagrams, the VKLS limit curve, and sup distances.

Coordinate conventions
----------------------
The canonical internal convention is *integer diagonal coordinates*: the
diagram is drawn in the rotated (Russian) orientation, the cell in row i and
column j sits on diagonal t = j - i, and the boundary profile is

    L(t) = |t| + 2 * #{cells on diagonal t},

an integer-valued, 1-Lipschitz, piecewise-linear function with kinks at the
integers, equal to |t| for t >= lambda_1 and t <= -lambda'_1, and satisfying
L(t) == t (mod 2) at integer t.

The alternative *unit-cell coordinates* draw each cell as a unit square
before rotating, so kinks sit at multiples of sqrt(2)/2 and both axes are
compressed by sqrt(2): L_cell(x) = L(x * sqrt(2)) / sqrt(2). Both scaled
evaluations used by the limit statements,

    F_n(s) = L(2 s sqrt(n)) / (2 sqrt(n))          (integer convention)
    G_n(s) = L_cell(s sqrt(2 n)) / sqrt(2 n)       (unit-cell convention)

are the same function of s under that map; ``scaled_height`` and
``scaled_height_unit`` implement the two routes independently so the
reconciliation can be tested numerically rather than assumed.
"""

from __future__ import annotations

import math
from typing import Iterator

import numpy as np

from .diagram import YoungDiagram, conjugate_diagram

SQRT2 = math.sqrt(2.0)


# -- exact integer profile ------------------------------------------------


def height_profile(d: YoungDiagram, ts: np.ndarray) -> np.ndarray:
    """Exact L(t) at integer t, vectorized."""
    ts = np.asarray(ts, dtype=np.int64)
    out = np.abs(ts)
    parts = d.parts_array()
    if parts.size == 0:
        return out
    i = np.arange(1, parts.size + 1, dtype=np.int64)
    diag = parts - i  # strictly decreasing in i
    pos = ts >= 0
    if pos.any():
        # count of rows with parts[i] - i >= t
        out[pos] += 2 * np.searchsorted(-diag, -ts[pos], side="right")
    neg = ~pos
    if neg.any():
        conj = conjugate_diagram(d).parts_array()
        j = np.arange(1, conj.size + 1, dtype=np.int64)
        cdiag = conj - j
        out[neg] += 2 * np.searchsorted(-cdiag, ts[neg], side="right")
    return out


def height_at(d: YoungDiagram, t: int) -> int:
    """Exact L(t) at a single integer t."""
    return int(height_profile(d, np.asarray([t]))[0])


def height_interp(d: YoungDiagram, x: float) -> float:
    """L at real x by linear interpolation between the integer kinks."""
    t0 = math.floor(x)
    frac = x - t0
    lo, hi = height_profile(d, np.asarray([t0, t0 + 1]))
    return float(lo) * (1.0 - frac) + float(hi) * frac


def height_unit_cells(d: YoungDiagram, x: float) -> float:
    """Profile in unit-cell coordinates (kinks at multiples of sqrt(2)/2)."""
    return height_interp(d, x * SQRT2) / SQRT2


def scaled_height(d: YoungDiagram, n: int, s: float) -> float:
    """F_n(s) = L(2 s sqrt(n)) / (2 sqrt(n)) in integer coordinates."""
    c = 2.0 * math.sqrt(n)
    return height_interp(d, s * c) / c


def scaled_height_unit(d: YoungDiagram, n: int, s: float) -> float:
    """Same rescaled profile evaluated through unit-cell coordinates."""
    c = math.sqrt(2.0 * n)
    return height_unit_cells(d, s * c) / c


# -- limit curve -----------------------------------------------------------


def omega(s):
    """The Vershik-Kerov-Logan-Shepp curve.

    (2/pi)(s arcsin s + sqrt(1-s^2)) on |s| < 1 and |s| outside; even,
    convex, 1-Lipschitz, with omega(s) >= |s| and equality iff |s| >= 1.
    Accepts scalars or arrays.
    """
    arr = np.asarray(s, dtype=np.float64)
    scalar = arr.ndim == 0
    a = np.atleast_1d(arr)
    out = np.abs(a)
    inside = out < 1.0
    si = a[inside]
    out[inside] = (2.0 / np.pi) * (si * np.arcsin(si) + np.sqrt(1.0 - si * si))
    return float(out[0]) if scalar else out


def limit_curve(s, p: float):
    """Rescaled comparison curve for a profile with fixed-point fraction p.

    sqrt(1-p) * omega(s / sqrt(1-p)) for p < 1, |s| for p = 1. The bump has
    support |s| <= sqrt(1-p), matching a fixed-point-free core of (1-p)n
    cells, and equals |s| outside, so the discrepancy against any profile of
    n cells vanishes far from the origin.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"fixed-point fraction p={p} outside [0, 1]")
    arr = np.asarray(s, dtype=np.float64)
    if p == 1.0:
        out = np.abs(arr)
        return float(out) if arr.ndim == 0 else out
    r = math.sqrt(1.0 - p)
    out = r * omega(arr / r)
    return float(out) if arr.ndim == 0 else out


# -- scaled sup distance against the limit curve ---------------------------


def scaled_sup_distance(d: YoungDiagram, n: int, m: int) -> float:
    """Sup-norm gap between the rescaled profile of d and the limit curve.

    Computes sup over s of |F_n(s) - limit_curve(s, m/n)| on the grid of all
    profile kinks (2 s sqrt(n) integer) inside [-W, W] with
    W = max(lambda_1, lambda'_1)/(2 sqrt(n)) + 1, plus segment midpoints.
    Outside the window both functions equal |s| exactly, so the scan is
    complete; the reported value is a lower bound on the true sup with
    additive error at most 1/(2 sqrt(n)).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if d.n != n:
        raise ValueError(f"size mismatch: diagram has {d.n} cells, n={n}")
    if not 0 <= m <= n:
        raise ValueError(f"fixed-point count m={m} outside [0, {n}]")
    sqn = math.sqrt(n)
    lam1 = d.part(1)
    T = max(lam1, d.num_rows) + math.ceil(2.0 * sqn)
    t = np.arange(-T, T + 1, dtype=np.int64)
    L = height_profile(d, t).astype(np.float64)
    s_kinks = t / (2.0 * sqn)
    f_kinks = L / (2.0 * sqn)
    s_mids = (t[:-1] + 0.5) / (2.0 * sqn)
    f_mids = (L[:-1] + L[1:]) * 0.5 / (2.0 * sqn)
    s = np.concatenate([s_kinks, s_mids])
    f = np.concatenate([f_kinks, f_mids])
    return float(np.max(np.abs(f - limit_curve(s, m / n))))


# -- pairwise profile distance and its partition bound ---------------------


def _max_profile_gap(a: YoungDiagram, b: YoungDiagram) -> int:
    """max over integer t of |L_a(t) - L_b(t)| (exact integer)."""
    T_neg = max(a.num_rows, b.num_rows)
    T_pos = max(a.part(1), b.part(1))
    t = np.arange(-T_neg, T_pos + 1, dtype=np.int64)
    gap = np.abs(height_profile(a, t) - height_profile(b, t))
    return int(gap.max()) if gap.size else 0


def sup_profile_distance(a: YoungDiagram, b: YoungDiagram) -> float:
    """Exact sup-norm between two profiles in unit-cell units.

    Both profiles are piecewise linear with kinks on the same integer grid,
    so the sup over the reals is attained at an integer; dividing the integer
    maximum by sqrt(2) lands in unit-cell units.
    """
    return _max_profile_gap(a, b) / SQRT2


def _tail_sum_maxima(a: YoungDiagram, b: YoungDiagram) -> np.ndarray:
    """K_l = max_{m >= l+1} |sum_{k=l+1..m} (a_k - b_k)| for l = 0..L."""
    L = max(a.num_rows, b.num_rows)
    diff = np.zeros(L + 1, dtype=np.int64)
    pa, pb = a.parts_array(), b.parts_array()
    diff[1 : 1 + pa.size] += pa
    diff[1 : 1 + pb.size] -= pb
    prefix = np.cumsum(diff)  # prefix[m] = sum_{k<=m}(a_k - b_k), prefix[0] = 0
    # suffix extrema of prefix over m >= l+1 (beyond L the sums are constant)
    suf_max = np.maximum.accumulate(prefix[::-1])[::-1]
    suf_min = np.minimum.accumulate(prefix[::-1])[::-1]
    ks = np.zeros(L + 1, dtype=np.int64)
    if L > 0:
        ks[:-1] = np.maximum(suf_max[1:] - prefix[:-1], prefix[:-1] - suf_min[1:])
    return ks


def profile_distance_bound(a: YoungDiagram, b: YoungDiagram) -> float:
    """min over l >= 0 of 2 sqrt(K_l) + sqrt(2) l, with K_l the largest
    absolute partial sum of part differences beyond the first l rows.

    Dominates sup_profile_distance for every pair of diagrams; trailing
    zero parts are included, and l beyond the longer diagram never helps.
    """
    ks = _tail_sum_maxima(a, b)
    ls = np.arange(ks.shape[0], dtype=np.float64)
    return float(np.min(2.0 * np.sqrt(ks.astype(np.float64)) + SQRT2 * ls))


def bound_dominates_distance(a: YoungDiagram, b: YoungDiagram) -> bool:
    """Exact (integer-arithmetic) check that the partition bound dominates
    the profile distance: for every l, M <= 2l or (M - 2l)^2 <= 8 K_l,
    where M is the integer profile gap maximum.

    Equivalent to profile_distance_bound >= sup_profile_distance with both
    sides squared and rationalized, so float ties cannot blur the verdict.
    """
    m_gap = _max_profile_gap(a, b)
    ks = _tail_sum_maxima(a, b)
    for l, k in enumerate(ks):
        r = m_gap - 2 * l
        if r > 0 and r * r > 8 * int(k):
            return False
    return True


# -- dump helpers for plotting / CLI ---------------------------------------


def profile_rows(d: YoungDiagram) -> Iterator[tuple[int, int]]:
    """(t, L(t)) rows over the support window, one integer t per row."""
    lo = -(d.num_rows + 1)
    hi = d.part(1) + 1
    t = np.arange(lo, hi + 1, dtype=np.int64)
    L = height_profile(d, t)
    for ti, li in zip(t.tolist(), L.tolist()):
        yield ti, li


def scaled_rows(d: YoungDiagram, n: int, m: int) -> Iterator[tuple[float, float, float]]:
    """(s, F_n(s), limit_curve(s, m/n)) rows on the kink grid."""
    sqn = math.sqrt(n)
    lo = -(d.num_rows + math.ceil(2 * sqn))
    hi = d.part(1) + math.ceil(2 * sqn)
    t = np.arange(lo, hi + 1, dtype=np.int64)
    L = height_profile(d, t).astype(np.float64)
    s = t / (2.0 * sqn)
    f = L / (2.0 * sqn)
    phi = limit_curve(s, m / n)
    for si, fi, pi in zip(s.tolist(), f.tolist(), phi.tolist()):
        yield si, fi, pi
