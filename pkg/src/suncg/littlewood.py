"""Tensor product decomposition via the Littlewood-Richardson rule.

Every pattern of the smaller factor is traced against the other factor's
i-weight: walking the pattern diagonal by diagonal, each entry difference
adds boxes to one component of a running row-length vector, and a trace
is discarded the moment the vector stops being nonincreasing.  Surviving
final vectors are the product's irreps, counted with outer multiplicity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import patterns as _patterns
from . import weights as _weights
from .patterns import GTPattern
from .weights import IWeight


@dataclass(frozen=True)
class Decomposition:
    """Irrep content of left x right, sorted by weight order.

    ``terms`` holds (normalized weight, outer multiplicity) pairs;
    ``raw_weights`` maps each normalized weight back to the unshifted
    row-length vector the trace produced, whose total box count is the
    sum of both factors' box counts.
    """

    left: IWeight
    right: IWeight
    terms: tuple[tuple[IWeight, int], ...]
    raw_weights: Mapping[IWeight, IWeight]

    def multiplicity(self, weight: Iterable[int]) -> int:
        target = _weights.normalize(weight)
        for term, mult in self.terms:
            if term == target:
                return mult
        return 0

    def dimension_identity(self) -> tuple[int, list[int]]:
        """(product dimension, per-term dimensions repeated by multiplicity)."""
        total = _weights.dimension(self.left) * _weights.dimension(self.right)
        parts = [
            _weights.dimension(term)
            for term, mult in self.terms
            for _ in range(mult)
        ]
        return total, parts


def pattern_trace(pattern: GTPattern, start: Iterable[int]) -> tuple[list[tuple[int, ...]], bool]:
    """Trace one pattern against a starting vector.

    Returns the row-length vector after every visited entry (diagonals
    left to right, top to bottom within each) and whether the trace
    survived; a discarded trace stops at the failing step.
    """
    t = list(_weights.check(start))
    n = pattern.n
    if len(t) != n:
        raise ValueError(f"rank mismatch: pattern rank {n}, start length {len(t)}")
    steps: list[tuple[int, ...]] = []
    for k in range(1, n + 1):
        for l in range(n, k - 1, -1):
            below = pattern.entry(k, l - 1) if k <= l - 1 else 0
            t[l - 1] += pattern.entry(k, l) - below
            steps.append(tuple(t))
            if l > 1 and t[l - 2] < t[l - 1]:
                return steps, False
    return steps, True


def decompose(left: Iterable[int], right: Iterable[int]) -> Decomposition:
    """All irreps of left x right with outer multiplicities.

    The smaller-dimension factor is traced (ties go to the left one);
    the result is symmetric in the factors.
    """
    left = _weights.check(left)
    right = _weights.check(right)
    if len(left) != len(right):
        raise ValueError(f"rank mismatch: {len(left)} vs {len(right)}")
    if _weights.dimension(left) <= _weights.dimension(right):
        traced, start = left, right
    else:
        traced, start = right, left
    counts: Counter[IWeight] = Counter()
    for pattern in _patterns.enumerate_patterns(traced):
        steps, ok = pattern_trace(pattern, start)
        if ok:
            counts[steps[-1]] += 1
    raw_weights = {_weights.normalize(raw): raw for raw in counts}
    merged: Counter[IWeight] = Counter()
    for raw, mult in counts.items():
        merged[_weights.normalize(raw)] += mult
    terms = tuple(sorted(merged.items(), key=lambda item: item[0]))
    return Decomposition(left=left, right=right, terms=terms, raw_weights=raw_weights)


def multiplicity(decomposition: Decomposition, weight: Iterable[int]) -> int:
    """Outer multiplicity of a weight in a decomposition (0 if absent)."""
    return decomposition.multiplicity(weight)
