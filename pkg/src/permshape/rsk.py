"""The shape map: Schensted row insertion, fast LIS/LDS.

Only row lengths of the insertion tableau are kept (the limit statements
need the shape, never the filling), which keeps memory linear and makes sizes of
1e5..1e6 practical. ``lis``/``lds`` are the cheap paths when an experiment
needs only the first row or the number of rows.
"""

from __future__ import annotations

from ._kernels import insertion_shape, lis_length, warm_up
from .diagram import YoungDiagram
from .perm import Permutation

__all__ = ["schensted_shape", "lis", "lds", "warm_up"]


def schensted_shape(p: Permutation) -> YoungDiagram:
    """Shape of the insertion tableau of the word p(1), ..., p(n)."""
    return YoungDiagram.from_parts(insertion_shape(p.word))


def lis(p: Permutation) -> int:
    """Length of the longest increasing subsequence (first part of the shape)."""
    return lis_length(p.word)


def lds(p: Permutation) -> int:
    """Length of the longest decreasing subsequence (number of rows of the shape)."""
    return lis_length(p.word[::-1])
