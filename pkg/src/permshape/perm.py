"""Exact permutation arithmetic and cycle statistics.

Permutations live on {1, ..., n} in one-line notation: ``word[i]`` is the
image of ``i+1``. Internally everything is a 0-based int64 numpy array;
all public input and output is 1-based. Values are immutable after
construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._kernels import cycle_scan


class Permutation:
    """A permutation of {1..n} in one-line notation; n = 0 is the empty one."""

    __slots__ = ("_zero",)

    def __init__(self, word: Sequence[int] | np.ndarray):
        arr = np.asarray(word, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("one-line notation must be a flat sequence")
        n = arr.shape[0]
        if n > 0:
            counts = np.bincount(arr, minlength=n + 1)
            if counts[0] != 0 or counts.shape[0] != n + 1 or not (counts[1:] == 1).all():
                raise ValueError("word is not a bijection of {1..n}")
        zero = arr - 1
        zero.flags.writeable = False
        self._zero = zero

    @classmethod
    def from_zero_based(cls, arr: np.ndarray, validate: bool = False) -> "Permutation":
        """Wrap a 0-based image array. Skips validation unless asked."""
        if validate:
            return cls(np.asarray(arr, dtype=np.int64) + 1)
        p = cls.__new__(cls)
        zero = np.ascontiguousarray(arr, dtype=np.int64).copy()
        zero.flags.writeable = False
        p._zero = zero
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls.from_zero_based(np.arange(n, dtype=np.int64))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse whitespace-separated 1-based one-line notation, e.g. "5 3 2 1 4 6"."""
        stripped = text.strip()
        if not stripped:
            return cls.identity(0)
        return cls([int(tok) for tok in stripped.split()])

    def to_text(self) -> str:
        return " ".join(str(v) for v in self.word)

    @property
    def n(self) -> int:
        return self._zero.shape[0]

    @property
    def word(self) -> np.ndarray:
        """1-based one-line notation (fresh array)."""
        return self._zero + 1

    @property
    def zero_based(self) -> np.ndarray:
        """0-based image array (read-only view)."""
        return self._zero

    def __call__(self, i: int) -> int:
        """Image of 1-based i."""
        if not 1 <= i <= self.n:
            raise IndexError(f"argument {i} outside 1..{self.n}")
        return int(self._zero[i - 1]) + 1

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._zero, other._zero))

    def __hash__(self) -> int:
        return hash((self.n, self._zero.tobytes()))

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"Permutation([{', '.join(str(v) for v in self.word)}])"
        return f"Permutation(n={self.n})"

    def inverse(self) -> "Permutation":
        inv = np.empty(self.n, dtype=np.int64)
        inv[self._zero] = np.arange(self.n, dtype=np.int64)
        return Permutation.from_zero_based(inv)

    def is_involution(self) -> bool:
        return bool(np.array_equal(self._zero[self._zero], np.arange(self.n)))


@dataclass(frozen=True)
class CycleStats:
    """All cycle-derived scalars the limit statements condition on.

    fixed_points_of_square = fixed_points + 2 * two_cycles always, since the
    square fixes exactly the 1- and 2-cycles of the original.
    """

    n: int
    num_cycles: int
    fixed_points: int
    two_cycles: int
    fixed_points_of_square: int


@dataclass(frozen=True)
class FixedPointSplit:
    """A permutation written as (fixed-point set, fixed-point-free remainder)."""

    fixed_set: tuple[int, ...]
    reduced: Permutation


def cycle_stats(p: Permutation) -> CycleStats:
    """Count cycles, fixed points, 2-cycles, and fixed points of the square in O(n)."""
    num_cycles, fixed, two = cycle_scan(p.zero_based)
    return CycleStats(
        n=p.n,
        num_cycles=num_cycles,
        fixed_points=fixed,
        two_cycles=two,
        fixed_points_of_square=fixed + 2 * two,
    )


def square(p: Permutation) -> Permutation:
    """The composition of p with itself."""
    z = p.zero_based
    return Permutation.from_zero_based(z[z])


def conjugate(p: Permutation, r: Permutation) -> Permutation:
    """r p r^{-1}, using (r p r^{-1})(r(i)) = r(p(i))."""
    if p.n != r.n:
        raise ValueError(f"size mismatch: {p.n} vs {r.n}")
    pz, rz = p.zero_based, r.zero_based
    out = np.empty(p.n, dtype=np.int64)
    out[rz] = rz[pz]
    return Permutation.from_zero_based(out)


def remove_fixed_points(p: Permutation) -> FixedPointSplit:
    """Split p into its fixed-point set and the relabeled remainder.

    The remainder is the restriction of p to the non-fixed positions,
    relabeled to {1..k} by the unique order-preserving bijection; it has no
    fixed points. ``insert_fixed_points`` undoes the split exactly.
    """
    z = p.zero_based
    idx = np.arange(p.n, dtype=np.int64)
    fixed_mask = z == idx
    fixed = idx[fixed_mask]
    rest = idx[~fixed_mask]
    reduced = np.searchsorted(rest, z[rest])
    return FixedPointSplit(
        fixed_set=tuple(int(v) + 1 for v in fixed),
        reduced=Permutation.from_zero_based(reduced),
    )


def insert_fixed_points(split: FixedPointSplit) -> Permutation:
    """Reconstruct the original permutation from a FixedPointSplit."""
    fixed = np.asarray(split.fixed_set, dtype=np.int64) - 1
    k = split.reduced.n
    n = k + fixed.shape[0]
    if fixed.shape[0] and (fixed.min() < 0 or fixed.max() >= n):
        raise ValueError("fixed_set outside 1..n")
    mask = np.zeros(n, dtype=bool)
    mask[fixed] = True
    rest = np.arange(n, dtype=np.int64)[~mask]
    out = np.empty(n, dtype=np.int64)
    out[fixed] = fixed
    out[rest] = rest[split.reduced.zero_based]
    return Permutation.from_zero_based(out)
