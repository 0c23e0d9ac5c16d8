"""Ladder and Cartan operators of su(N) acting on the pattern basis.

For each l in 1..N-1 the lowering operator connects a pattern M to the
patterns M - M^{k,l} (one entry of row l decremented), with a matrix
element that is the square root of a ratio of integer products of entry
differences; the raising operator is its exact transpose, and the
diagonal operator multiplies each state by its z-weight component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Literal

import numpy as np

from . import _kernels as _k
from . import patterns as _patterns
from . import weights as _weights
from .patterns import GTPattern, PatternTable
from .weights import IWeight

Direction = Literal["lowering", "raising", "diagonal"]


def lowering_element(pattern: GTPattern, k: int, l: int) -> float:
    """<M - M^{k,l}| J_-^{(l)} |M>; 0.0 when the shifted pattern is invalid."""
    n = pattern.n
    if not 1 <= k <= l <= n - 1:
        raise IndexError(f"need 1 <= k <= l <= {n - 1}, got (k={k}, l={l})")
    return float(_k.lowering_element_flat(pattern._flat, n, k, l))


def raising_element(pattern: GTPattern, k: int, l: int) -> float:
    """<M + M^{k,l}| J_+^{(l)} |M>; equals the lowering element of the target."""
    n = pattern.n
    if not 1 <= k <= l <= n - 1:
        raise IndexError(f"need 1 <= k <= l <= {n - 1}, got (k={k}, l={l})")
    return float(_k.raising_element_flat(pattern._flat, n, k, l))


def weight_shift(pw: Iterable[int], l: int, direction: Direction) -> tuple[int, ...] | None:
    """P-weight of the states reached by J_+/J_- at l; None if none exist.

    Raising moves one box from component l+1 to component l; lowering the
    reverse.  A negative component signals an empty weight level.
    """
    pw = tuple(int(w) for w in pw)
    if not 1 <= l <= len(pw) - 1:
        raise IndexError(f"need 1 <= l <= {len(pw) - 1}, got l={l}")
    if direction == "raising":
        delta = 1
    elif direction == "lowering":
        delta = -1
    else:
        raise ValueError(f"weight_shift needs 'raising' or 'lowering', got {direction!r}")
    shifted = list(pw)
    shifted[l - 1] += delta
    shifted[l] -= delta
    if shifted[l - 1] < 0 or shifted[l] < 0:
        return None
    return tuple(shifted)


@dataclass(frozen=True)
class OperatorMatrix:
    """One operator of one irrep as column-sorted sparse coordinates.

    Row/col indices are 0-based positions in the pattern enumeration
    (pattern index minus one).  Lowering and raising values are the
    nonnegative square roots from the pattern calculus; the diagonal
    variant stores the z-weight components (exact halves of integers).
    """

    irrep: IWeight
    l: int
    direction: Direction
    dim: int
    rows: np.ndarray = field(repr=False)
    cols: np.ndarray = field(repr=False)
    vals: np.ndarray = field(repr=False)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.dim, self.dim))
        out[self.rows, self.cols] = self.vals
        return out

    def column(self, q: int) -> tuple[np.ndarray, np.ndarray]:
        """(row indices, values) of column q (0-based), via bisect on cols."""
        lo = np.searchsorted(self.cols, q, side="left")
        hi = np.searchsorted(self.cols, q, side="right")
        return self.rows[lo:hi], self.vals[lo:hi]


def _freeze(*arrays: np.ndarray) -> None:
    for arr in arrays:
        arr.setflags(write=False)


@lru_cache(maxsize=None)
def _operator_matrix_cached(weight: IWeight, l: int, direction: Direction) -> OperatorMatrix:
    tab = _patterns.table(weight)
    if direction == "diagonal":
        idx = np.arange(tab.dim, dtype=np.int64)
        vals = tab.zweights2[:, l - 1].astype(np.float64) / 2.0
        _freeze(vals)
        return OperatorMatrix(weight, l, direction, tab.dim, idx, idx, vals)
    rows, cols, vals = _k.ladder_coo_flat(tab.flat, tab.n, l, direction == "lowering")
    _freeze(rows, cols, vals)
    return OperatorMatrix(weight, l, direction, tab.dim, rows, cols, vals)


def operator_matrix(weight: Iterable[int], l: int, direction: Direction) -> OperatorMatrix:
    """J_-^{(l)}, J_+^{(l)} or J_z^{(l)} over the full pattern basis of an irrep.

    Raising comes out as the exact transpose of lowering: both evaluate
    the same integer products.
    """
    weight = _weights.check(weight)
    if not 1 <= l <= len(weight) - 1:
        raise IndexError(f"need 1 <= l <= {len(weight) - 1}, got l={l}")
    if direction not in ("lowering", "raising", "diagonal"):
        raise ValueError(f"unknown direction {direction!r}")
    return _operator_matrix_cached(weight, l, direction)
