"""Exact integer linear algebra.

Determinants use fraction-free (Bareiss) elimination over Python ints, so
results are exact for any entry size. The naive cofactor expansion is kept
as an independent test oracle. Subdeterminant maxima are found by brute
enumeration over row and column subsets; an int64-vectorized path handles
large enumerations and is guarded against overflow, falling back to the
big-int loop otherwise.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, gcd
from typing import Sequence

import numpy as np

from . import _batch
from .intmatrix import DegenerateRankError, IntMatrix, ShapeError, SubmatrixWitness

# Above this many determinants the brute-force scans switch to the
# vectorized int64 path (when its overflow guard allows).
_BATCH_THRESHOLD = 4096
_BATCH_CHUNK = 1 << 16


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination; mutates ``rows``."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            rik = rows[i][k]
            ri = rows[i]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def det(m: IntMatrix) -> int:
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a {m.rows}x{m.cols} matrix")
    return _bareiss_det([list(r) for r in m.entries])


def det_cofactor(m: IntMatrix) -> int:
    """Cofactor-expansion determinant; independent oracle for small sizes."""
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a {m.rows}x{m.cols} matrix")

    rows = m.entries

    def rec(row_idx: tuple[int, ...], col_idx: tuple[int, ...]) -> int:
        if len(row_idx) == 1:
            return rows[row_idx[0]][col_idx[0]]
        i = row_idx[0]
        rest = row_idx[1:]
        total = 0
        for pos, j in enumerate(col_idx):
            a = rows[i][j]
            if a == 0:
                continue
            sub = col_idx[:pos] + col_idx[pos + 1:]
            term = a * rec(rest, sub)
            total += term if pos % 2 == 0 else -term
        return total

    n = m.rows
    return rec(tuple(range(n)), tuple(range(n)))


def rank(m: IntMatrix) -> int:
    """Exact rank over the rationals via fraction-free row echelon."""
    a = [list(r) for r in m.entries]
    n_rows, n_cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, n_rows):
            aic = a[i][c]
            for j in range(c + 1, n_cols):
                a[i][j] = (a[i][j] * pivot - aic * a[r][j]) // prev
            a[i][c] = 0
        prev = pivot
        r += 1
    return r


def _scan_subdets(m: IntMatrix, size: int, bound: int | None
                  ) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Max |det| over size x size submatrices, columns outer / rows inner.

    Returns the maximum and the first attaining (cols, rows) pair in
    enumeration order. With ``bound`` set, stops at the first subdeterminant
    whose absolute value exceeds it and returns that one instead.
    """
    col_sets = list(combinations(range(m.cols), size))
    row_sets = list(combinations(range(m.rows), size))
    total = len(col_sets) * len(row_sets)
    if total > _BATCH_THRESHOLD and _batch.fits_int64(size, m.max_abs_entry()):
        return _scan_subdets_batched(m, size, bound, col_sets, row_sets)
    best = -1
    best_at = (col_sets[0], row_sets[0])
    for cset in col_sets:
        width = [[m.entries[i][j] for j in cset] for i in range(m.rows)]
        for rset in row_sets:
            d = _bareiss_det([list(width[i]) for i in rset])
            if abs(d) > best:
                best = abs(d)
                best_at = (cset, rset)
                if bound is not None and best > bound:
                    return best, best_at[0], best_at[1]
    return best, best_at[0], best_at[1]


def _scan_subdets_batched(m: IntMatrix, size: int, bound: int | None,
                          col_sets: list, row_sets: list
                          ) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    arr = np.array(m.entries, dtype=np.int64)
    rows_np = np.array(row_sets, dtype=np.intp)
    cols_np = np.array(col_sets, dtype=np.intp)
    n_rows = len(row_sets)
    chunk = max(1, _BATCH_CHUNK // max(1, n_rows))
    best = -1
    best_flat = 0
    for c0 in range(0, len(col_sets), chunk):
        cpart = cols_np[c0:c0 + chunk]
        # (chunk, n_rows, k, k), flattened column-set-major to match pure order
        sub = arr[rows_np[None, :, :, None], cpart[:, None, None, :]]
        dets = np.abs(_batch.batched_det(sub))
        if bound is not None:
            viol = dets > bound
            if viol.any():
                flat = int(np.argmax(viol))
                best = int(dets.reshape(-1)[flat])
                best_flat = (c0 + flat // n_rows) * n_rows + flat % n_rows
                break
        local_max = int(dets.max())
        if local_max > best:
            flat = int(np.argmax(dets == local_max))
            best = local_max
            best_flat = (c0 + flat // n_rows) * n_rows + flat % n_rows
    cset = col_sets[best_flat // n_rows]
    rset = row_sets[best_flat % n_rows]
    return best, cset, rset


def max_abs_full_rank_subdet(m: IntMatrix) -> tuple[int, SubmatrixWitness]:
    """Brute-force maximum |det| over all rank x rank submatrices.

    The witness is the first maximizer in lexicographic order with column
    subsets in the outer loop, which pins the result for golden tests.
    """
    r = rank(m)
    if r == 0:
        raise DegenerateRankError("zero matrix has no full-rank submatrix")
    best, cset, rset = _scan_subdets(m, r, None)
    value = det(m.submatrix(rset, cset))
    assert abs(value) == best
    return best, SubmatrixWitness(tuple(rset), tuple(cset), value)


def is_parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u and v are linearly dependent (all 2x2 minors vanish).

    The zero vector is dependent with everything.
    """
    if len(u) != len(v):
        raise ShapeError("vectors of different lengths")
    pivot = next(((a, b) for a, b in zip(u, v) if a or b), None)
    if pivot is None:
        return True
    pa, pb = pivot
    return all(pa * b - pb * a == 0 for a, b in zip(u, v))


def primitive_part(v: Sequence[int]) -> tuple[int, ...]:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("primitive part of the zero vector is undefined")
    return tuple(x // g for x in v)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


def hermite_triangularize(m: IntMatrix, basis_cols: Sequence[int]
                          ) -> tuple[IntMatrix, IntMatrix]:
    """Left-multiply by a unimodular U so the basis block is upper-triangular.

    The block U*M[:, basis_cols] gets a positive diagonal with entries above
    each pivot reduced to [0, pivot); |det| of the block is preserved.
    Raises on a singular basis block.
    """
    basis = list(basis_cols)
    if len(basis) != m.rows or len(set(basis)) != len(basis):
        raise ShapeError("basis column set must index a square block")
    t = [list(r) for r in m.entries]
    n = m.rows
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(i1: int, i2: int, a: int, b: int, c: int, d: int) -> None:
        # rows (i1, i2) <- (a*i1 + b*i2, c*i1 + d*i2); ad - bc = +-1
        for mat in (t, u):
            r1, r2 = mat[i1], mat[i2]
            for j in range(len(r1)):
                r1[j], r2[j] = a * r1[j] + b * r2[j], c * r1[j] + d * r2[j]

    for k, c in enumerate(basis):
        for i in range(k + 1, n):
            a, b = t[k][c], t[i][c]
            if b == 0:
                continue
            if a == 0:
                t[k], t[i] = t[i], t[k]
                u[k], u[i] = u[i], u[k]
                continue
            g, x, y = _xgcd(a, b)
            combine(k, i, x, y, -(b // g), a // g)
        if t[k][c] == 0:
            raise DegenerateRankError("singular basis block")
        if t[k][c] < 0:
            t[k] = [-v for v in t[k]]
            u[k] = [-v for v in u[k]]
        for j in range(k):
            q = t[j][c] // t[k][c]
            if q:
                t[j] = [vj - q * vk for vj, vk in zip(t[j], t[k])]
                u[j] = [vj - q * vk for vj, vk in zip(u[j], u[k])]

    return IntMatrix.from_rows(t, m.labels), IntMatrix.from_rows(u)


def unimodular_inverse(u: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with det +-1, via the adjugate."""
    n = u.rows
    d = det(u)
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    if n == 1:
        return IntMatrix.from_rows([[d]])
    idx = tuple(range(n))
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = u.submatrix(tuple(x for x in idx if x != i),
                                tuple(x for x in idx if x != j))
            cof = det(minor) if n > 1 else 1
            adj[j][i] = cof if (i + j) % 2 == 0 else -cof
    return IntMatrix.from_rows([[v * d for v in row] for row in adj])


def subdet_count(rows: int, cols: int, size: int) -> int:
    return comb(rows, size) * comb(cols, size)
