"""Clebsch-Gordan coefficients for su(N) tensor products.

For each target irrep the highest-weight coefficients solve the
homogeneous system demanded by annihilation under every raising
operator; the null space has one solution per outer multiplicity, made
canonical by reduced row echelon form followed by top-down Gram-Schmidt.
All lower states then follow level by level: for every p-weight, the
known coefficients of all parent states feed an overdetermined linear
system whose unknowns are the coefficients of the whole level at once.

Coefficients are real throughout; a coefficient can be nonzero only for
product pairs whose p-weights add up to the target state's p-weight
(box-count aligned), and only those slots are ever written.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from . import algebra as _algebra
from . import linalg as _linalg
from . import littlewood as _littlewood
from . import patterns as _patterns
from . import weights as _weights
from .littlewood import Decomposition
from .weights import IWeight

DEFAULT_TOL = 1e-8
ZERO_TOL = 1e-11


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (tolerance too tight or logic bug)."""


@dataclass(frozen=True)
class CGCTensor:
    """Coupling coefficients of one target irrep.

    ``values[alpha-1, Q''-1, Q-1, Q'-1]`` is the coefficient of the
    product state (Q, Q') in target state Q'' of multiplicity copy
    alpha.  The target weight is stored normalized.
    """

    factor1: IWeight
    factor2: IWeight
    target: IWeight
    alpha_count: int
    values: np.ndarray = field(repr=False)

    def coefficient(self, alpha: int, qpp: int, q: int, qp: int) -> float:
        """One coefficient, all indices 1-based."""
        return float(self.values[alpha - 1, qpp - 1, q - 1, qp - 1])

    def nonzeros(self) -> Iterator[tuple[int, int, int, int, float]]:
        """(alpha, Q'', Q, Q', value) over all stored nonzero entries."""
        for a, qpp, q, qp in zip(*np.nonzero(self.values)):
            yield (
                int(a) + 1,
                int(qpp) + 1,
                int(q) + 1,
                int(qp) + 1,
                float(self.values[a, qpp, q, qp]),
            )


def _aligned_target_pweight(
    left: IWeight, right: IWeight, target_pweight: tuple[int, ...]
) -> tuple[int, ...] | None:
    """Shift a target p-weight so total box counts match the factors.

    Returns None when no shift works (non-integral, or a component goes
    negative), meaning no product state can carry that weight.
    """
    n = len(left)
    diff = sum(left) + sum(right) - sum(target_pweight)
    if diff % n != 0:
        return None
    c = diff // n
    aligned = tuple(w + c for w in target_pweight)
    if any(w < 0 for w in aligned):
        return None
    return aligned


def candidate_pairs(
    left: Iterable[int], right: Iterable[int], target_pweight: Iterable[int]
) -> list[tuple[int, int]]:
    """Product pairs (Q, Q') whose p-weights add to the target p-weight.

    The target is box-count aligned first; pairs come back ascending,
    Q-major.  Only these slots can hold a nonzero coefficient for any
    target state of that weight.
    """
    left = _weights.check(left)
    right = _weights.check(right)
    target = tuple(int(w) for w in target_pweight)
    if len(target) != len(left):
        raise ValueError(f"rank mismatch: {len(target)} vs {len(left)}")
    aligned = _aligned_target_pweight(left, right, target)
    if aligned is None:
        return []
    ta = _patterns.table(left)
    tb = _patterns.table(right)
    by_pw: dict[tuple[int, ...], list[int]] = {}
    for qb in range(tb.dim):
        by_pw.setdefault(tuple(tb.pweights[qb].tolist()), []).append(qb)
    pairs = []
    for qa in range(ta.dim):
        need = tuple(aligned[i] - int(ta.pweights[qa, i]) for i in range(len(aligned)))
        for qb in by_pw.get(need, ()):
            pairs.append((qa + 1, qb + 1))
    return pairs


def _height(pw: tuple[int, ...]) -> int:
    # strictly decreases by 1 under every lowering shift, so parent
    # levels always precede child levels
    n = len(pw)
    return sum((n - l) * pw[l - 1] for l in range(1, n + 1))


class _TensorBuilder:
    """Stepwise construction of one tensor; levels are solved in height order."""

    def __init__(self, left: IWeight, right: IWeight, target: IWeight, alpha_count: int, tol: float):
        self.tol = tol
        self.alpha_count = alpha_count
        self.left_table = _patterns.table(left)
        self.right_table = _patterns.table(right)
        self.target_table = _patterns.table(target)
        self.n = self.left_table.n
        aligned_top = _aligned_target_pweight(left, right, target)
        if aligned_top is None:
            raise ConsistencyError(f"target {target} cannot be box-count aligned")
        self.shift = aligned_top[-1]  # target is normalized, so the shift is the last component
        # pattern indices (0-based) of the target grouped by aligned p-weight
        self.levels: dict[tuple[int, ...], list[int]] = {}
        for i in range(self.target_table.dim):
            key = tuple(int(w) + self.shift for w in self.target_table.pweights[i])
            self.levels.setdefault(key, []).append(i)
        self.top_pweight = aligned_top
        self.lower_left = [
            _algebra.operator_matrix(left, l, "lowering").to_dense() for l in range(1, self.n)
        ]
        self.lower_right = [
            _algebra.operator_matrix(right, l, "lowering").to_dense() for l in range(1, self.n)
        ]
        self.lower_target = [
            _algebra.operator_matrix(target, l, "lowering") for l in range(1, self.n)
        ]
        self.raise_left = [
            _algebra.operator_matrix(left, l, "raising") for l in range(1, self.n)
        ]
        self.raise_right = [
            _algebra.operator_matrix(right, l, "raising") for l in range(1, self.n)
        ]
        self.values = np.zeros(
            (alpha_count, self.target_table.dim, self.left_table.dim, self.right_table.dim)
        )

    def _pairs_at(self, aligned_pw: tuple[int, ...]) -> list[tuple[int, int]]:
        """0-based candidate pairs at an aligned level."""
        return [
            (q - 1, qp - 1)
            for q, qp in candidate_pairs(
                self.left_table.weight, self.right_table.weight, aligned_pw
            )
        ]

    def solve_highest(self) -> np.ndarray:
        """Null-space rows of the raising constraints, canonicalized.

        Returns (alpha_count, n_pairs) rows, orthonormal, each with a
        positive entry at its echelon pivot column.
        """
        pairs = self._pairs_at(self.top_pweight)
        n_pairs = len(pairs)
        rows: dict[tuple[int, int, int], np.ndarray] = {}
        for l in range(1, self.n):
            op_a = self.raise_left[l - 1]
            op_b = self.raise_right[l - 1]
            for j, (qa, qb) in enumerate(pairs):
                targets, vals = op_a.column(qa)
                for xa, v in zip(targets, vals):
                    key = (l, int(xa), qb)
                    if key not in rows:
                        rows[key] = np.zeros(n_pairs)
                    rows[key][j] += v
                targets, vals = op_b.column(qb)
                for xb, v in zip(targets, vals):
                    key = (l, qa, int(xb))
                    if key not in rows:
                        rows[key] = np.zeros(n_pairs)
                    rows[key][j] += v
        if rows:
            system = np.vstack([rows[key] for key in sorted(rows)])
        else:
            system = np.zeros((0, n_pairs))
        basis = _linalg.null_space(system)
        if basis.shape[0] != self.alpha_count:
            raise ConsistencyError(
                f"null space dimension {basis.shape[0]} != outer multiplicity {self.alpha_count}"
            )
        canonical = _linalg.orthonormalize_rows(_linalg.rref(basis))
        top_index = self.target_table.dim - 1
        for alpha in range(self.alpha_count):
            for j, (qa, qb) in enumerate(pairs):
                self.values[alpha, top_index, qa, qb] = canonical[alpha, j]
        return canonical

    def descend_level(self, aligned_pw: tuple[int, ...]) -> None:
        """Solve every state of one p-weight level from its parent states.

        Equations: for each l and each parent pattern one row block
        equates the in-irrep lowering expansion against the product
        lowering action on the parent's known coefficients.  All blocks
        are kept (the system is overdetermined) and solved by least
        squares; the residual must vanish to tolerance.
        """
        children = self.levels[aligned_pw]
        child_pos = {c: i for i, c in enumerate(children)}
        pairs = self._pairs_at(aligned_pw)
        if not pairs:
            raise ConsistencyError(f"no product states at level {aligned_pw}")
        pair_rows = np.fromiter((p[0] for p in pairs), np.int64, count=len(pairs))
        pair_cols = np.fromiter((p[1] for p in pairs), np.int64, count=len(pairs))
        b_rows: list[np.ndarray] = []
        rhs_rows: list[list[np.ndarray]] = [[] for _ in range(self.alpha_count)]
        for l in range(1, self.n):
            up = list(aligned_pw)
            up[l - 1] += 1
            up[l] -= 1
            if up[l] < 0:
                continue
            parents = self.levels.get(tuple(up), [])
            if not parents:
                continue
            op = self.lower_target[l - 1]
            la = self.lower_left[l - 1]
            lb = self.lower_right[l - 1]
            for p in parents:
                targets, vals = op.column(p)
                b = np.zeros(len(children))
                for t, v in zip(targets, vals):
                    b[child_pos[int(t)]] = v
                b_rows.append(b)
                for alpha in range(self.alpha_count):
                    slab = self.values[alpha, p]
                    lowered = la @ slab + slab @ lb.T
                    rhs_rows[alpha].append(lowered[pair_rows, pair_cols])
        if not b_rows:
            raise ConsistencyError(f"level {aligned_pw} has no parent equations")
        system = np.vstack(b_rows)
        for alpha in range(self.alpha_count):
            rhs = np.vstack(rhs_rows[alpha])
            solution, _ = _linalg.least_squares(system, rhs)
            residual = float(np.max(np.abs(system @ solution - rhs)))
            if residual > self.tol:
                raise ConsistencyError(
                    f"descent residual {residual:.3e} exceeds {self.tol:.3e} at level {aligned_pw}"
                )
            for i, child in enumerate(children):
                self.values[alpha, child, pair_rows, pair_cols] = solution[i]

    def run(self) -> np.ndarray:
        self.solve_highest()
        order = sorted(self.levels, key=_height, reverse=True)
        assert order[0] == self.top_pweight
        for aligned_pw in order[1:]:
            self.descend_level(aligned_pw)
        return self.values


def _prepare(
    left: Iterable[int],
    right: Iterable[int],
    target: Iterable[int],
    decomposition: Decomposition | None,
) -> tuple[IWeight, IWeight, IWeight, int]:
    left = _weights.check(left)
    right = _weights.check(right)
    target = _weights.normalize(target)
    if not len(left) == len(right) == len(target):
        raise ValueError(
            f"rank mismatch: {len(left)}, {len(right)}, {len(target)}"
        )
    if decomposition is None:
        decomposition = _littlewood.decompose(left, right)
    mult = decomposition.multiplicity(target)
    if mult == 0:
        raise ValueError(f"{_weights.to_text(target)} does not occur in the decomposition")
    return left, right, target, mult


def highest_weight_cgc(
    left: Iterable[int],
    right: Iterable[int],
    target: Iterable[int],
    *,
    tol: float = DEFAULT_TOL,
    decomposition: Decomposition | None = None,
) -> np.ndarray:
    """Highest-weight coefficient rows, one per multiplicity copy.

    Returns an (alpha_count, dim(left)*dim(right)) matrix over composite
    columns (Q-1)*dim(right) + (Q'-1); rows are orthonormal and
    sign-fixed by the echelon normal form.
    """
    left, right, target, mult = _prepare(left, right, target, decomposition)
    builder = _TensorBuilder(left, right, target, mult, tol)
    canonical = builder.solve_highest()
    pairs = builder._pairs_at(builder.top_pweight)
    dim_right = builder.right_table.dim
    out = np.zeros((mult, builder.left_table.dim * dim_right))
    for j, (qa, qb) in enumerate(pairs):
        out[:, qa * dim_right + qb] = canonical[:, j]
    return out


def compute_tensor(
    left: Iterable[int],
    right: Iterable[int],
    target: Iterable[int],
    *,
    tol: float = DEFAULT_TOL,
    zero_tol: float = ZERO_TOL,
    decomposition: Decomposition | None = None,
) -> CGCTensor:
    """All coefficients coupling left x right to one target irrep.

    Coefficients below ``zero_tol`` in magnitude are stored as exact
    zeros so emitted tables diff cleanly.
    """
    left, right, target, mult = _prepare(left, right, target, decomposition)
    builder = _TensorBuilder(left, right, target, mult, tol)
    values = builder.run()
    values[np.abs(values) < zero_tol] = 0.0
    values.setflags(write=False)
    return CGCTensor(
        factor1=left, factor2=right, target=target, alpha_count=mult, values=values
    )


def compute_all_tensors(
    left: Iterable[int],
    right: Iterable[int],
    *,
    tol: float = DEFAULT_TOL,
    zero_tol: float = ZERO_TOL,
) -> tuple[Decomposition, list[CGCTensor]]:
    """The decomposition and one tensor per term, in term order."""
    left = _weights.check(left)
    right = _weights.check(right)
    decomposition = _littlewood.decompose(left, right)
    tensors = [
        compute_tensor(
            left, right, term, tol=tol, zero_tol=zero_tol, decomposition=decomposition
        )
        for term, _ in decomposition.terms
    ]
    return decomposition, tensors
