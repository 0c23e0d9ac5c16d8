"""Small dense kernels for the coefficient solver.

Null space and least squares sit on numpy.linalg (SVD / QR-based lstsq);
the reduced row echelon form and the row orthonormalization are written
out because their conventions matter downstream: pivots are scaled to +1,
zero rows sink to the bottom, and Gram-Schmidt runs strictly top to
bottom so earlier rows are preserved up to normalization.
"""

from __future__ import annotations

import numpy as np


def null_space(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Orthonormal rows spanning {x : a @ x = 0}.

    Rank is decided by singular values relative to the largest one; an
    empty or all-zero matrix yields the full space.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    n_cols = a.shape[1]
    if a.shape[0] == 0 or n_cols == 0:
        return np.eye(n_cols)
    _, sv, vh = np.linalg.svd(a)
    if sv.size == 0 or sv[0] == 0.0:
        rank = 0
    else:
        rank = int(np.sum(sv > tol * sv[0]))
    return vh[rank:].copy()


def rref(a: np.ndarray, tol: float = 1e-10) -> np.ndarray:
    """Reduced row echelon form with partial pivoting.

    Rows are pre-scaled to unit max-norm (a row-equivalent change), the
    pivot of each step is the largest remaining entry of the first
    usable column, pivots are scaled to +1, and zero rows end up last.
    The result is the shared normal form of all row-equivalent inputs.
    """
    out = np.array(a, dtype=float, copy=True)
    if out.ndim != 2:
        raise ValueError("rref needs a 2-d array")
    n_rows, n_cols = out.shape
    for i in range(n_rows):
        peak = np.max(np.abs(out[i]), initial=0.0)
        if peak > 0.0:
            out[i] /= peak
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row >= n_rows:
            break
        sub = np.abs(out[pivot_row:, col])
        best = int(np.argmax(sub))
        if sub[best] <= tol:
            out[pivot_row:, col] = 0.0
            continue
        if best != 0:
            out[[pivot_row, pivot_row + best]] = out[[pivot_row + best, pivot_row]]
        out[pivot_row] /= out[pivot_row, col]
        for r in range(n_rows):
            if r != pivot_row and out[r, col] != 0.0:
                out[r] -= out[r, col] * out[pivot_row]
        out[:pivot_row, col] = 0.0
        out[pivot_row + 1 :, col] = 0.0
        out[pivot_row, col] = 1.0
        pivot_row += 1
    out[np.abs(out) <= tol] = 0.0
    return out


def orthonormalize_rows(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Modified Gram-Schmidt, top to bottom; rows must be independent.

    Row i of the output lies in the span of input rows 1..i.  Raises
    ValueError when a row collapses under projection.
    """
    out = np.array(a, dtype=float, copy=True)
    if out.ndim != 2:
        raise ValueError("orthonormalize_rows needs a 2-d array")
    for i in range(out.shape[0]):
        original = np.linalg.norm(out[i])
        for j in range(i):
            out[i] -= np.dot(out[j], out[i]) * out[j]
        norm = np.linalg.norm(out[i])
        if norm <= tol * max(1.0, original):
            raise ValueError(f"row {i} is linearly dependent on earlier rows")
        out[i] /= norm
    return out


def least_squares(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, float]:
    """Minimize ||a @ x - b||_2; returns (x, residual norm).

    b may carry multiple right-hand sides as columns; the residual is
    then the Frobenius norm.  Raises on column rank deficiency.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape[0] < a.shape[1]:
        raise ValueError(f"system must have rows >= cols, got {a.shape}")
    x, _, rank, _ = np.linalg.lstsq(a, b, rcond=None)
    if rank < a.shape[1]:
        raise ValueError(f"rank-deficient system: rank {rank} < {a.shape[1]} columns")
    residual = float(np.linalg.norm(a @ x - b))
    return x, residual
