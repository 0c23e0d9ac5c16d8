"""Hot integer/array kernels for Gelfand-Tsetlin pattern arithmetic.

Patterns of rank ``n`` are stored as flat int64 arrays, rows from top to
bottom: entry m[k, l] (1 <= k <= l <= n, row n on top) lives at index
``n*(n+1)//2 - l*(l+1)//2 + (k - 1)``.  Within one irrep the top row is
fixed, so lexicographic order of the flat arrays coincides with the
row-by-row pattern order used for indexing, and ranking reduces to a
binary search over the enumeration table.

By default the kernels are compiled with numba's ``@njit`` (first call
pays a one-off JIT cost, cached on disk).  ``SUNCG_BACKEND=python``
selects the uncompiled fallback: the identical functions run as plain
Python over NumPy arrays, with integer products promoted to arbitrary
precision.  ``SUNCG_BACKEND=numba`` insists on numba and fails loudly if
it is not importable.
"""

from __future__ import annotations

import os

import numpy as np

ENV_FLAG = "SUNCG_BACKEND"


def _choose_backend() -> str:
    choice = os.environ.get(ENV_FLAG, "").strip().lower()
    if choice in ("python", "numpy"):
        return "python"
    if choice in ("", "numba"):
        try:
            import numba  # noqa: F401
        except ImportError:
            if choice == "numba":
                raise RuntimeError(
                    f"{ENV_FLAG}=numba requested but numba is not installed"
                ) from None
            return "python"
        return "numba"
    raise ValueError(f"unrecognized {ENV_FLAG}={choice!r}; use 'numba' or 'python'")


BACKEND = _choose_backend()

if BACKEND == "numba":
    from numba import njit

    def _jit(func):
        return njit(cache=True)(func)

else:

    def _jit(func):
        return func


@_jit
def _tri(n):
    return n * (n + 1) // 2


@_jit
def _row_start(n, l):
    # first flat index of row l (rows stored top to bottom)
    return _tri(n) - _tri(l)


@_jit
def pattern_is_valid(flat, n):
    """Betweenness check: m[k,l] >= m[k,l-1] >= m[k+1,l] for all rows."""
    for l in range(2, n + 1):
        up = _row_start(n, l)
        lo = _row_start(n, l - 1)
        for k in range(l - 1):
            if flat[up + k] < flat[lo + k] or flat[lo + k] < flat[up + k + 1]:
                return False
    return True


@_jit
def lowest_flat(top):
    """Smallest pattern of the irrep: every entry at its lower bound."""
    n = top.shape[0]
    out = np.empty(_tri(n), np.int64)
    for k in range(n):
        out[k] = top[k]
    for l in range(n - 1, 0, -1):
        base = _row_start(n, l)
        above = _row_start(n, l + 1)
        for k in range(l):
            out[base + k] = out[above + k + 1]
    return out


@_jit
def successor_inplace(flat, n):
    """Advance to the next pattern in index order; False at the largest.

    Finds the last position (row-by-row order) that can grow given the
    row above it, bumps it, and resets every later position to its
    minimum.
    """
    for l in range(1, n):
        base = _row_start(n, l)
        above = _row_start(n, l + 1)
        for k in range(l - 1, -1, -1):
            if flat[base + k] < flat[above + k]:
                flat[base + k] += 1
                for kk in range(k + 1, l):
                    flat[base + kk] = flat[above + kk + 1]
                for lp in range(l - 1, 0, -1):
                    b = _row_start(n, lp)
                    a = _row_start(n, lp + 1)
                    for kk in range(lp):
                        flat[b + kk] = flat[a + kk + 1]
                return True
    return False


@_jit
def enumerate_flat(top, dim):
    """All patterns with the given top row, ascending, as a (dim, size) table."""
    n = top.shape[0]
    out = np.empty((dim, _tri(n)), np.int64)
    cur = lowest_flat(top)
    out[0] = cur
    for i in range(1, dim):
        successor_inplace(cur, n)
        out[i] = cur
    return out


@_jit
def locate_flat(table, row):
    """Binary search for a flat pattern in an enumeration table; -1 if absent."""
    lo = 0
    hi = table.shape[0]
    width = row.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        cmp = 0
        for j in range(width):
            if table[mid, j] < row[j]:
                cmp = -1
                break
            if table[mid, j] > row[j]:
                cmp = 1
                break
        if cmp == 0:
            return mid
        if cmp < 0:
            lo = mid + 1
        else:
            hi = mid
    return -1


@_jit
def pweights_flat(table, n):
    """Pattern weights w_l = sigma_l - sigma_{l-1} for every table row."""
    dim = table.shape[0]
    out = np.empty((dim, n), np.int64)
    for i in range(dim):
        prev = 0
        for l in range(1, n + 1):
            base = _row_start(n, l)
            s = 0
            for k in range(l):
                s += table[i, base + k]
            out[i, l - 1] = s - prev
            prev = s
    return out


@_jit
def zweights2_flat(table, n):
    """Doubled z-weights 2*lambda_l = 2*sigma_l - sigma_{l+1} - sigma_{l-1}."""
    dim = table.shape[0]
    out = np.empty((dim, n - 1), np.int64)
    for i in range(dim):
        for l in range(1, n):
            s_mid = 0
            base = _row_start(n, l)
            for k in range(l):
                s_mid += table[i, base + k]
            s_up = 0
            base = _row_start(n, l + 1)
            for k in range(l + 1):
                s_up += table[i, base + k]
            s_dn = 0
            if l > 1:
                base = _row_start(n, l - 1)
                for k in range(l - 1):
                    s_dn += table[i, base + k]
            out[i, l - 1] = 2 * s_mid - s_up - s_dn
    return out


@_jit
def lowering_element_flat(flat, n, k, l):
    """<M - M^{k,l} | J_-^{(l)} | M> for 1 <= k <= l <= n-1; 0 if the shift is invalid.

    The radicand is a ratio of exact integer products of entry
    differences; only the final division and square root are floating
    point.  A denominator factor can vanish only when the shifted
    pattern is invalid, which the guard catches first.
    """
    base = _row_start(n, l)
    above = _row_start(n, l + 1)
    v = int(flat[base + k - 1])
    if v - 1 < flat[above + k]:
        return 0.0
    if k < l:
        below = _row_start(n, l - 1)
        if v - 1 < flat[below + k - 1]:
            return 0.0
    num = 1
    for kp in range(1, l + 2):
        num *= int(flat[above + kp - 1]) - v + k - kp + 1
    if l > 1:
        below = _row_start(n, l - 1)
        for kp in range(1, l):
            num *= int(flat[below + kp - 1]) - v + k - kp
    den = 1
    for kp in range(1, l + 1):
        if kp == k:
            continue
        d = int(flat[base + kp - 1]) - v
        den *= (d + k - kp + 1) * (d + k - kp)
    rad = -num / den
    if rad < 0.0:
        raise ValueError("negative radicand in lowering matrix element")
    return np.sqrt(rad)


@_jit
def raising_element_flat(flat, n, k, l):
    """<M + M^{k,l} | J_+^{(l)} | M>; 0 if the shift is invalid.

    Produces the exact same integer products as the lowering element of
    the shifted pattern, so transpose symmetry holds bit for bit.
    """
    base = _row_start(n, l)
    above = _row_start(n, l + 1)
    v = int(flat[base + k - 1])
    if v + 1 > flat[above + k - 1]:
        return 0.0
    if k > 1:
        below = _row_start(n, l - 1)
        if v + 1 > flat[below + k - 2]:
            return 0.0
    num = 1
    for kp in range(1, l + 2):
        num *= int(flat[above + kp - 1]) - v + k - kp
    if l > 1:
        below = _row_start(n, l - 1)
        for kp in range(1, l):
            num *= int(flat[below + kp - 1]) - v + k - kp - 1
    den = 1
    for kp in range(1, l + 1):
        if kp == k:
            continue
        d = int(flat[base + kp - 1]) - v
        den *= (d + k - kp) * (d + k - kp - 1)
    rad = -num / den
    if rad < 0.0:
        raise ValueError("negative radicand in raising matrix element")
    return np.sqrt(rad)


@_jit
def ladder_coo_flat(table, n, l, lowering):
    """COO triplets of J_-^{(l)} (or J_+^{(l)}) over an enumeration table.

    Entries come out sorted by column (source pattern index), which is
    the access order of the coefficient solver.
    """
    dim = table.shape[0]
    size = table.shape[1]
    cap = dim * l
    rows = np.empty(cap, np.int64)
    cols = np.empty(cap, np.int64)
    vals = np.empty(cap, np.float64)
    shifted = np.empty(size, np.int64)
    cnt = 0
    for q in range(dim):
        for k in range(1, l + 1):
            if lowering:
                val = lowering_element_flat(table[q], n, k, l)
            else:
                val = raising_element_flat(table[q], n, k, l)
            if val == 0.0:
                continue
            for j in range(size):
                shifted[j] = table[q, j]
            pos = _row_start(n, l) + k - 1
            if lowering:
                shifted[pos] -= 1
            else:
                shifted[pos] += 1
            target = locate_flat(table, shifted)
            rows[cnt] = target
            cols[cnt] = q
            vals[cnt] = val
            cnt += 1
    return rows[:cnt].copy(), cols[:cnt].copy(), vals[:cnt].copy()


def warmup() -> None:
    """Force JIT compilation of every kernel on tiny inputs (no-op fallback)."""
    for top in (np.array([1, 0], np.int64), np.array([1, 0, 0], np.int64)):
        n = top.shape[0]
        table = enumerate_flat(top, n)  # defining irrep has dim == n
        pattern_is_valid(table[0], n)
        pweights_flat(table, n)
        zweights2_flat(table, n)
        locate_flat(table, table[0])
        for l in range(1, n):
            ladder_coo_flat(table, n, l, True)
            ladder_coo_flat(table, n, l, False)
        flat = table[n - 1].copy()
        successor_inplace(flat, n)
