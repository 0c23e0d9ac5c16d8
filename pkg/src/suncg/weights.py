"""Irrep labels for su(N): nonincreasing integer sequences ("i-weights").

An i-weight is handled as a plain tuple of ints.  Two weights differing
by a constant shift label the same irrep; the normalized form has its
last entry equal to zero.  Normalized weights are totally ordered
lexicographically and enumerated by a bijection onto the nonnegative
integers, computed in closed form from binomial counts.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

IWeight = tuple[int, ...]


def check(entries: Iterable[int]) -> IWeight:
    """Validate and canonicalize an i-weight into a tuple of ints.

    Raises ValueError if empty or not nonincreasing.
    """
    weight = tuple(int(m) for m in entries)
    if not weight:
        raise ValueError("i-weight must have at least one entry")
    for a, b in zip(weight, weight[1:]):
        if a < b:
            raise ValueError(f"i-weight entries must be nonincreasing: {weight}")
    return weight


def is_normalized(weight: Sequence[int]) -> bool:
    return weight[-1] == 0


def normalize(weight: Iterable[int]) -> IWeight:
    """Shift all entries so the last one is zero (same irrep, canonical label)."""
    weight = check(weight)
    shift = weight[-1]
    if shift == 0:
        return weight
    return tuple(m - shift for m in weight)


def compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Lexicographic order on equal-rank weights: -1, 0, or 1."""
    if len(a) != len(b):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(b)}")
    for x, y in zip(a, b):
        if x != y:
            return -1 if x < y else 1
    return 0


def dimension(weight: Iterable[int]) -> int:
    """Number of Gelfand-Tsetlin patterns with this top row.

    Exact integer product over entry pairs; invariant under normalize.
    """
    weight = check(weight)
    n = len(weight)
    num = 1
    den = 1
    for k in range(n - 1):
        for kp in range(k + 1, n):
            num *= (kp - k) + weight[k] - weight[kp]
            den *= kp - k
    assert num % den == 0
    return num // den


def index(weight: Iterable[int]) -> int:
    """Position of a normalized weight in the lexicographic enumeration.

    Counts the strictly smaller normalized weights via binomials:
    sum over k of C(N-k+m_k-1, N-k).
    """
    weight = check(weight)
    if not is_normalized(weight):
        raise ValueError(f"index is defined on normalized weights only: {weight}")
    n = len(weight)
    return sum(comb(n - k + weight[k - 1] - 1, n - k) for k in range(1, n))


def from_index(n: int, position: int) -> IWeight:
    """Inverse of :func:`index`: the normalized su(n) weight at a position.

    Greedy digit extraction: each entry takes the largest value whose
    binomial count does not exceed the remainder.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if position < 0:
        raise ValueError("index must be >= 0")
    remaining = position
    entries = []
    for k in range(1, n):
        nk = n - k
        m = 0
        while comb(nk + m, nk) <= remaining:
            m += 1
        remaining -= comb(nk + m - 1, nk)
        entries.append(m)
    entries.append(0)
    if remaining != 0:
        raise AssertionError(f"index inversion failed for ({n}, {position})")
    return check(entries)


def parse(text: str) -> IWeight:
    """Parse the textual form "(m1,m2,...)"; whitespace is ignored."""
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ValueError(f"i-weight must be parenthesized: {text!r}")
    body = stripped[1:-1].strip()
    if not body:
        raise ValueError(f"empty i-weight: {text!r}")
    try:
        entries = [int(part.strip()) for part in body.split(",")]
    except ValueError:
        raise ValueError(f"malformed i-weight: {text!r}") from None
    return check(entries)


def to_text(weight: Sequence[int]) -> str:
    return "(" + ",".join(str(m) for m in weight) + ")"
