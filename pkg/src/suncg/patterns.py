"""Gelfand-Tsetlin patterns: triangular basis labels for su(N) irrep states.

A pattern is a triangular integer array whose top row is the i-weight of
the irrep and whose lower rows interleave (betweenness).  Patterns of one
irrep are totally ordered row by row from the top, enumerated by repeated
successor steps from the smallest pattern, and ranked 1..dim by position
in that order.  Each pattern also translates to a semistandard Young
tableau and back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import weights as _weights
from . import _kernels as _k
from .weights import IWeight

PWeight = tuple[int, ...]
ZWeight2 = tuple[int, ...]


class GTPattern:
    """One triangular pattern; immutable, shape-checked, not betweenness-checked.

    Rows are given top to bottom (the first row is the i-weight).
    Candidate patterns that violate betweenness can be constructed and
    probed with :func:`validate`.
    """

    __slots__ = ("n", "_flat", "_key")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = [tuple(int(m) for m in row) for row in rows]
        n = len(rows)
        if n == 0:
            raise ValueError("pattern needs at least one row")
        for i, row in enumerate(rows):
            if len(row) != n - i:
                raise ValueError(f"row {i + 1} of a rank-{n} pattern must have {n - i} entries")
        flat = np.fromiter((m for row in rows for m in row), np.int64, count=n * (n + 1) // 2)
        flat.setflags(write=False)
        self.n = n
        self._flat = flat
        self._key = tuple(flat.tolist())

    @classmethod
    def _from_flat(cls, n: int, flat: np.ndarray) -> "GTPattern":
        self = object.__new__(cls)
        flat = np.ascontiguousarray(flat, np.int64)
        flat.setflags(write=False)
        self.n = n
        self._flat = flat
        self._key = tuple(flat.tolist())
        return self

    @property
    def top_row(self) -> IWeight:
        return self._key[: self.n]

    def entry(self, k: int, l: int) -> int:
        """m[k, l] with 1 <= k <= l <= n (row n is the top row)."""
        if not 1 <= k <= l <= self.n:
            raise IndexError(f"entry ({k},{l}) outside rank-{self.n} triangle")
        return int(self._flat[_k._row_start(self.n, l) + k - 1])

    def row(self, l: int) -> tuple[int, ...]:
        """Row l (l entries; l == n is the top row)."""
        if not 1 <= l <= self.n:
            raise IndexError(f"row {l} outside rank-{self.n} triangle")
        start = _k._row_start(self.n, l)
        return self._key[start : start + l]

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(l) for l in range(self.n, 0, -1)]

    def to_text(self) -> str:
        return "; ".join(" ".join(str(m) for m in row) for row in self.rows())

    def __eq__(self, other) -> bool:
        return isinstance(other, GTPattern) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"GTPattern({self.rows()!r})"


def parse(text: str) -> GTPattern:
    """Parse the textual form "2 1 0; 2 1; 2" (rows top to bottom)."""
    rows = []
    for chunk in text.split(";"):
        parts = chunk.split()
        if not parts:
            raise ValueError(f"empty row in pattern text: {text!r}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise ValueError(f"malformed pattern text: {text!r}") from None
    return GTPattern(rows)


def validate(pattern: GTPattern | Iterable[Iterable[int]]) -> bool:
    """True iff all betweenness inequalities hold."""
    if not isinstance(pattern, GTPattern):
        pattern = GTPattern(pattern)
    return bool(_k.pattern_is_valid(pattern._flat, pattern.n))


def highest(weight: Iterable[int]) -> GTPattern:
    """The highest-weight pattern: every diagonal repeats its top-row entry."""
    weight = _weights.check(weight)
    n = len(weight)
    return GTPattern([weight[: n - i] for i in range(n)])


def lowest(weight: Iterable[int]) -> GTPattern:
    """The smallest pattern in index order (the lowest-weight state)."""
    weight = _weights.check(weight)
    n = len(weight)
    return GTPattern._from_flat(n, _k.lowest_flat(np.asarray(weight, np.int64)))


@dataclass(frozen=True)
class PatternTable:
    """The enumerated basis of one irrep, plus per-state weight data.

    ``flat`` holds all patterns in index order (Q = row + 1); lookups go
    through lexicographic binary search.  Arrays are read-only views
    shared by every consumer.
    """

    weight: IWeight
    n: int
    dim: int
    flat: np.ndarray        # (dim, n(n+1)/2) int64
    pweights: np.ndarray    # (dim, n) int64
    zweights2: np.ndarray   # (dim, n-1) int64

    def pattern(self, q: int) -> GTPattern:
        if not 1 <= q <= self.dim:
            raise IndexError(f"pattern index {q} outside 1..{self.dim}")
        return GTPattern._from_flat(self.n, self.flat[q - 1])

    def index_of(self, pattern: GTPattern) -> int:
        pos = _k.locate_flat(self.flat, pattern._flat)
        if pos < 0:
            raise ValueError(f"pattern {pattern!r} does not belong to irrep {self.weight}")
        return int(pos) + 1

    def levels(self) -> dict[PWeight, list[int]]:
        """Pattern indices Q grouped by p-weight, each group ascending."""
        groups: dict[PWeight, list[int]] = {}
        for i in range(self.dim):
            groups.setdefault(tuple(self.pweights[i].tolist()), []).append(i + 1)
        return groups


def table(weight: Iterable[int]) -> PatternTable:
    """Enumeration table of an irrep (cached per process)."""
    return _table_cached(_weights.check(weight))


@lru_cache(maxsize=None)
def _table_cached(weight: IWeight) -> PatternTable:
    n = len(weight)
    dim = _weights.dimension(weight)
    flat = _k.enumerate_flat(np.asarray(weight, np.int64), dim)
    pw = _k.pweights_flat(flat, n)
    zw2 = _k.zweights2_flat(flat, n)
    for arr in (flat, pw, zw2):
        arr.setflags(write=False)
    return PatternTable(weight=weight, n=n, dim=dim, flat=flat, pweights=pw, zweights2=zw2)


def enumerate_patterns(weight: Iterable[int]) -> list[GTPattern]:
    """All valid patterns with the given top row, in increasing index order."""
    tab = table(_weights.check(weight))
    return [GTPattern._from_flat(tab.n, tab.flat[i]) for i in range(tab.dim)]


def index(pattern: GTPattern) -> int:
    """Rank Q of a pattern within its irrep: 1 for the lowest, dim for the highest."""
    if not validate(pattern):
        raise ValueError(f"invalid pattern: {pattern!r}")
    return table(pattern.top_row).index_of(pattern)


def from_index(weight: Iterable[int], q: int) -> GTPattern:
    """The pattern with rank Q in the irrep; inverse of :func:`index`."""
    return table(_weights.check(weight)).pattern(q)


def pweight(pattern: GTPattern) -> PWeight:
    """Row-sum differences (w_1, ..., w_n); entries sum to the top-row total."""
    sums = [sum(pattern.row(l)) for l in range(1, pattern.n + 1)]
    prev = 0
    out = []
    for s in sums:
        out.append(s - prev)
        prev = s
    return tuple(out)


def zweight2(pattern: GTPattern) -> ZWeight2:
    """Doubled z-weight (2*lambda_1, ..., 2*lambda_{n-1}), kept integral.

    Satisfies 2*lambda_l == w_l - w_{l+1} for the p-weight of the same state.
    """
    sums = [0] + [sum(pattern.row(l)) for l in range(1, pattern.n + 1)]
    return tuple(2 * sums[l] - sums[l + 1] - sums[l - 1] for l in range(1, pattern.n))


class YoungTableau:
    """A semistandard Young tableau: rows weakly increase, columns strictly."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        for i, row in enumerate(rows):
            if not row:
                raise ValueError("empty tableau rows are not allowed")
            if i > 0 and len(row) > len(rows[i - 1]):
                raise ValueError("tableau row lengths must be nonincreasing")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError(f"tableau row {i + 1} must weakly increase")
            if any(x < 1 for x in row):
                raise ValueError("tableau entries must be >= 1")
            if i > 0 and any(rows[i - 1][j] >= row[j] for j in range(len(row))):
                raise ValueError(f"tableau column through row {i + 1} must strictly increase")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("YoungTableau is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, YoungTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"YoungTableau({[list(r) for r in self.rows]!r})"


def to_tableau(pattern: GTPattern) -> YoungTableau:
    """Tableau with m[k,l] - m[k,l-1] boxes labeled l in row k.

    Row k lists its labels in increasing order; the count of l-boxes over
    the whole tableau equals component w_l of the pattern weight.
    Entries must be nonnegative (use a normalized top row).
    """
    n = pattern.n
    if any(x < 0 for x in pattern._key):
        raise ValueError("tableau translation needs nonnegative pattern entries")
    rows = []
    for k in range(1, n + 1):
        row = []
        prev = 0
        for l in range(k, n + 1):
            m = pattern.entry(k, l)
            row.extend([l] * (m - prev))
            prev = m
        if row:
            rows.append(row)
    return YoungTableau(rows)


def from_tableau(tableau: YoungTableau, n: int) -> GTPattern:
    """Inverse of :func:`to_tableau` for rank n; raises on out-of-range labels."""
    if len(tableau.rows) > n:
        raise ValueError(f"tableau has more than {n} rows")
    rows_up = [[0] * l for l in range(1, n + 1)]  # rows_up[l-1] = pattern row l
    for k, row in enumerate(tableau.rows, start=1):
        if any(x > n for x in row):
            raise ValueError(f"tableau labels must be <= {n}")
        for l in range(k, n + 1):
            rows_up[l - 1][k - 1] = sum(1 for x in row if x <= l)
    pattern = GTPattern(list(reversed(rows_up)))
    if not validate(pattern):
        raise ValueError("tableau does not describe a valid pattern")
    return pattern
