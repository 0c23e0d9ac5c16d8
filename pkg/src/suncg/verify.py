"""Consistency checks over complete coefficient sets.

Given every tensor of one product decomposition these checks confirm
that the stacked coefficient matrix is unitary, that nonzero entries
respect z-weight additivity exactly, that conjugation by the matrix
block-diagonalizes all ladder and Cartan operators, and that carrier
dimensions add up.  Reports carry the worst deviation and where it
occurred, for debugging tolerance failures.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import algebra as _algebra
from . import patterns as _patterns
from . import weights as _weights
from .clebsch import CGCTensor
from .littlewood import Decomposition
from .weights import IWeight


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    deviation: float
    worst: tuple | None = None
    detail: str = ""

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} max_deviation={self.deviation:.3e}"
        if not self.passed and self.worst is not None:
            text += f" worst_at={self.worst}"
        if self.detail:
            text += f" ({self.detail})"
        return text


def _ordered_tensors(
    decomposition: Decomposition, tensors: Iterable[CGCTensor]
) -> list[CGCTensor]:
    by_target = {t.target: t for t in tensors}
    missing = [term for term, _ in decomposition.terms if term not in by_target]
    if missing:
        raise ValueError(f"tensors missing for {missing}")
    return [by_target[term] for term, _ in decomposition.terms]


def stack_coefficients(
    decomposition: Decomposition, tensors: Iterable[CGCTensor]
) -> np.ndarray:
    """The full change-of-basis matrix, rows grouped by (term, alpha, Q'').

    Columns are composite product indices (Q-1)*dim(right) + (Q'-1).
    Raises when the supplied tensors do not cover the decomposition.
    """
    ordered = _ordered_tensors(decomposition, tensors)
    dim_l = _weights.dimension(decomposition.left)
    dim_r = _weights.dimension(decomposition.right)
    blocks = []
    for tensor in ordered:
        dim_t = tensor.values.shape[1]
        blocks.append(tensor.values.reshape(tensor.alpha_count * dim_t, dim_l * dim_r))
    stacked = np.vstack(blocks)
    if stacked.shape[0] != dim_l * dim_r:
        raise ValueError(
            f"incomplete set: {stacked.shape[0]} rows for a {dim_l * dim_r}-dimensional product"
        )
    return stacked


def check_orthonormality(
    decomposition: Decomposition, tensors: Iterable[CGCTensor], tol: float = 1e-8
) -> CheckReport:
    """Max deviation of C C^T and C^T C from the identity."""
    c = stack_coefficients(decomposition, tensors)
    eye = np.eye(c.shape[0])
    dev_rows = np.abs(c @ c.T - eye)
    dev_cols = np.abs(c.T @ c - eye)
    deviation = float(max(dev_rows.max(), dev_cols.max()))
    if dev_rows.max() >= dev_cols.max():
        worst = np.unravel_index(np.argmax(dev_rows), dev_rows.shape)
    else:
        worst = np.unravel_index(np.argmax(dev_cols), dev_cols.shape)
    return CheckReport(
        name="orthonormality",
        passed=deviation < tol,
        deviation=deviation,
        worst=tuple(int(i) for i in worst),
    )


def check_selection_rule(tensor: CGCTensor) -> CheckReport:
    """Every nonzero entry must satisfy z-weight additivity exactly."""
    za = _patterns.table(tensor.factor1).zweights2
    zb = _patterns.table(tensor.factor2).zweights2
    zt = _patterns.table(tensor.target).zweights2
    violations = 0
    worst = None
    for alpha, qpp, q, qp, _ in tensor.nonzeros():
        if not np.array_equal(zt[qpp - 1], za[q - 1] + zb[qp - 1]):
            violations += 1
            if worst is None:
                worst = (alpha, qpp, q, qp)
    return CheckReport(
        name="selection-rule",
        passed=violations == 0,
        deviation=float(violations),
        worst=worst,
        detail=f"target {_weights.to_text(tensor.target)}",
    )


def check_block_diagonalization(
    left: Sequence[int],
    right: Sequence[int],
    decomposition: Decomposition,
    tensors: Iterable[CGCTensor],
    tol: float = 1e-8,
) -> CheckReport:
    """C (A x I + I x A) C^T must equal the direct sum of target operators.

    Checked for every l and for lowering, raising and diagonal
    operators; blocks follow term order with alpha ascending inside
    each term.
    """
    left = _weights.check(left)
    right = _weights.check(right)
    ordered = _ordered_tensors(decomposition, tensors)
    c = stack_coefficients(decomposition, ordered)
    n = len(left)
    eye_l = np.eye(_weights.dimension(left))
    eye_r = np.eye(_weights.dimension(right))
    deviation = 0.0
    worst = None
    for l in range(1, n):
        for direction in ("lowering", "raising", "diagonal"):
            op_l = _algebra.operator_matrix(left, l, direction).to_dense()
            op_r = _algebra.operator_matrix(right, l, direction).to_dense()
            product_op = np.kron(op_l, eye_r) + np.kron(eye_l, op_r)
            conjugated = c @ product_op @ c.T
            expected = np.zeros_like(conjugated)
            offset = 0
            for tensor in ordered:
                block = _algebra.operator_matrix(tensor.target, l, direction).to_dense()
                for _ in range(tensor.alpha_count):
                    size = block.shape[0]
                    expected[offset : offset + size, offset : offset + size] = block
                    offset += size
            dev = np.abs(conjugated - expected)
            local = float(dev.max())
            if local > deviation:
                deviation = local
                idx = np.unravel_index(np.argmax(dev), dev.shape)
                worst = (l, direction, int(idx[0]), int(idx[1]))
    return CheckReport(
        name="block-diagonalization",
        passed=deviation < tol,
        deviation=deviation,
        worst=worst,
    )


def check_dimension_sum(decomposition: Decomposition) -> CheckReport:
    """Exact integer identity: dim(left)*dim(right) == sum of term dimensions."""
    total, parts = decomposition.dimension_identity()
    deviation = abs(total - sum(parts))
    return CheckReport(
        name="dimension-sum",
        passed=deviation == 0,
        deviation=float(deviation),
        detail=f"{total} = {' + '.join(str(p) for p in parts)}",
    )


def run_all(
    left: Sequence[int],
    right: Sequence[int],
    tol: float = 1e-8,
) -> list[CheckReport]:
    """Full pipeline plus every check, for one product.

    ``tol`` governs the checks; the pipeline's internal residual guard
    never tightens below its default, so an unachievably small ``tol``
    shows up as failing reports instead of an aborted computation.
    """
    from .clebsch import DEFAULT_TOL, ConsistencyError, compute_all_tensors

    try:
        decomposition, tensors = compute_all_tensors(left, right, tol=max(tol, DEFAULT_TOL))
    except ConsistencyError as exc:
        return [
            CheckReport(
                name="pipeline",
                passed=False,
                deviation=float("inf"),
                detail=str(exc),
            )
        ]
    reports = [check_dimension_sum(decomposition)]
    violations = 0.0
    worst = None
    detail = ""
    for tensor in tensors:
        report = check_selection_rule(tensor)
        violations += report.deviation
        if not report.passed and worst is None:
            worst = report.worst
            detail = report.detail
    reports.append(
        CheckReport(
            name="selection-rule",
            passed=violations == 0,
            deviation=violations,
            worst=worst,
            detail=detail,
        )
    )
    reports.append(check_orthonormality(decomposition, tensors, tol))
    reports.append(check_block_diagonalization(left, right, decomposition, tensors, tol))
    return reports
