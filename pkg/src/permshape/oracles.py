"""Brute-force ground truth, independent of the fast paths it checks.

``greene_bruteforce`` recovers the partial sums of the Schensted shape from
first principles: it scans all position subsets and keeps, for each i, the
largest subset whose restricted word has no decreasing subsequence of length
i + 1. That characterization (a word decomposes into at most i increasing
subsequences iff its longest decreasing subsequence has length at most i) is
the oracle's single mathematical step and is itself validated against
``max_union_of_increasing``, an explicit backtracking enumeration of unions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .diagram import YoungDiagram
from .perm import Permutation, remove_fixed_points
from .rsk import schensted_shape
from .shape_geom import bound_dominates_distance, profile_distance_bound, sup_profile_distance

MAX_BRUTEFORCE_N = 16


@dataclass(frozen=True)
class GreeneReport:
    """Maximal sizes of unions of i increasing (resp. decreasing) subsequences."""

    sigma: Permutation
    increasing_invariants: tuple[int, ...]
    decreasing_invariants: tuple[int, ...]


def _restricted_lis(values: list[int]) -> int:
    tops: list[int] = []
    for x in values:
        j = bisect_left(tops, x)
        if j == len(tops):
            tops.append(x)
        else:
            tops[j] = x
    return len(tops)


def greene_report(p: Permutation) -> GreeneReport:
    """All Greene invariants of p by a single scan over position subsets."""
    n = p.n
    if n > MAX_BRUTEFORCE_N:
        raise ValueError(f"n={n} too large for the subset scan (max {MAX_BRUTEFORCE_N})")
    word = [int(v) for v in p.word]
    # best_inc[d] = largest subset size whose restricted LDS is exactly d
    best_inc = [0] * (n + 1)
    best_dec = [0] * (n + 1)
    for mask in range(1 << n):
        values = [word[i] for i in range(n) if mask >> i & 1]
        if not values:
            continue
        size = len(values)
        lds = _restricted_lis(values[::-1])
        if size > best_inc[lds]:
            best_inc[lds] = size
        lis_v = _restricted_lis(values)
        if size > best_dec[lis_v]:
            best_dec[lis_v] = size
    inc, dec = [], []
    run_inc = run_dec = 0
    for i in range(1, n + 1):
        run_inc = max(run_inc, best_inc[i])
        run_dec = max(run_dec, best_dec[i])
        inc.append(run_inc)
        dec.append(run_dec)
    return GreeneReport(p, tuple(inc), tuple(dec))


def greene_bruteforce(p: Permutation, i: int, decreasing: bool = False) -> int:
    """Largest union of i increasing (or decreasing) subsequences of p."""
    if i < 1:
        raise ValueError("family index i must be at least 1")
    if p.n == 0:
        return 0
    report = greene_report(p)
    family = report.decreasing_invariants if decreasing else report.increasing_invariants
    return family[min(i, p.n) - 1]


def max_union_of_increasing(p: Permutation, i: int) -> int:
    """Independent route: enumerate explicit unions of <= i increasing
    subsequences by backtracking pile assignment (no Dilworth step).

    Exponential; intended for cross-validating greene_bruteforce at n <= 8.
    """
    word = [int(v) for v in p.word]
    n = p.n

    def decomposable(values: list[int]) -> bool:
        piles: list[int] = []

        def place(idx: int) -> bool:
            if idx == len(values):
                return True
            x = values[idx]
            tried: set[int] = set()
            for j in range(len(piles)):
                if piles[j] < x and piles[j] not in tried:
                    tried.add(piles[j])
                    saved = piles[j]
                    piles[j] = x
                    if place(idx + 1):
                        return True
                    piles[j] = saved
            if len(piles) < i:
                piles.append(x)
                if place(idx + 1):
                    return True
                piles.pop()
            return False

        return place(0)

    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        values = [word[k] for k in range(n) if mask >> k & 1]
        if decomposable(values):
            best = size
    return best


# -- exact inequality checkers ----------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exact verification; witness pinpoints the first failure."""

    ok: bool
    witness: dict | None = None


def check_fixed_point_bounds(p: Permutation) -> CheckResult:
    """Check the shape inequalities relating p to its fixed-point-free part.

    With m fixed points, shape a = shape(p), shape b = shape(remainder):
      1. m <= a_1 <= m + b_1
      2. for i >= 2: m + sum(b_1..b_{i-1}) <= sum(a_1..a_i) <= m + sum(b_1..b_i)
      3. max over j >= 2 of |sum_{k=2..j} (a_k - b_k)| <= b_1
      4. rows(b) <= rows(a) <= rows(b) + 1
    Returns the first violated inequality with its indices, or pass.
    """
    split = remove_fixed_points(p)
    m = len(split.fixed_set)
    a = schensted_shape(p)
    b = schensted_shape(split.reduced)
    a1, b1 = a.part(1), b.part(1)

    def fail(name: str, **kw) -> CheckResult:
        data = {
            "inequality": name,
            "sigma": p.to_text(),
            "shape_sigma": a.to_text(),
            "shape_reduced": b.to_text(),
            "fixed_points": m,
        }
        data.update(kw)
        return CheckResult(False, data)

    if p.n > 0 and not (m <= a1 <= m + b1):
        return fail("first_row_bounds", lambda1=a1)
    upper = max(a.num_rows, b.num_rows) + 2
    sum_a = a1
    sum_b_prev = 0  # sum of first i-1 parts of b
    tail = 0  # running sum_{k=2..i} (a_k - b_k)
    max_abs_tail = 0
    for i in range(2, upper + 1):
        sum_a += a.part(i)
        sum_b_prev += b.part(i - 1)
        if not (m + sum_b_prev <= sum_a <= m + sum_b_prev + b.part(i)):
            return fail("partial_sum_bounds", index=i)
        tail += a.part(i) - b.part(i)
        max_abs_tail = max(max_abs_tail, abs(tail))
    if max_abs_tail > b1:
        return fail("tail_sum_bound", max_abs_tail=max_abs_tail)
    if not (b.num_rows <= a.num_rows <= b.num_rows + 1):
        return fail("row_count_bounds", rows_sigma=a.num_rows, rows_reduced=b.num_rows)
    return CheckResult(True)


def check_profile_distance_bound(a: YoungDiagram, b: YoungDiagram) -> CheckResult:
    """Exact check that the partition bound dominates the profile distance."""
    ok = bound_dominates_distance(a, b)
    if ok:
        return CheckResult(True, {"slack": profile_distance_bound(a, b) - sup_profile_distance(a, b)})
    return CheckResult(
        False,
        {
            "a": a.to_text(),
            "b": b.to_text(),
            "distance": sup_profile_distance(a, b),
            "bound": profile_distance_bound(a, b),
        },
    )
