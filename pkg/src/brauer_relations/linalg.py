"""Exact integer row reduction: left kernels and Hermite normal form.

Matrices are lists of integer rows.  Python integers do not overflow, so no
intermediate bound checks are needed.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Matrix = list[list[int]]


def _reduce(rows: Matrix, ncols: int) -> tuple[Matrix, list[int]]:
    """Row-echelon form by unimodular integer row operations.

    Only the first ``ncols`` columns are used for pivoting; any further
    columns ride along.  Returns the reduced rows and the pivot columns.
    """
    rows = [list(r) for r in rows]
    pivots = []
    t = 0
    for col in range(ncols):
        if t == len(rows):
            break
        while True:
            nz = [i for i in range(t, len(rows)) if rows[i][col]]
            if not nz:
                break
            i = min(nz, key=lambda i: abs(rows[i][col]))
            rows[t], rows[i] = rows[i], rows[t]
            prow = rows[t]
            pv = prow[col]
            done = True
            for j in range(t + 1, len(rows)):
                c = rows[j][col]
                if c:
                    q = c // pv
                    rows[j] = [a - q * b for a, b in zip(rows[j], prow)]
                    if rows[j][col]:
                        done = False
            if done:
                break
        if any(rows[i][col] for i in range(t, len(rows))):
            if rows[t][col] < 0:
                rows[t] = [-a for a in rows[t]]
            pivots.append(col)
            t += 1
    return rows, pivots


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row Hermite normal form with zero rows dropped.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = _reduce(rows, ncols)
    red = red[: len(pivots)]
    for i, col in enumerate(pivots):
        pv = red[i][col]
        for j in range(i):
            q = red[j][col] // pv
            if q:
                red[j] = [a - q * b for a, b in zip(red[j], red[i])]
    return red


def left_kernel(M: Sequence[Sequence[int]]) -> Matrix:
    """A Z-basis of ``{v : v M = 0}`` in Hermite normal form.

    Reduces ``[M | I]``; the identity half records a unimodular transform, so
    the rows whose M-half vanishes span the whole integer kernel.
    """
    nrows = len(M)
    if nrows == 0:
        return []
    ncols = len(M[0])
    aug = [list(M[i]) + [int(i == j) for j in range(nrows)] for i in range(nrows)]
    red, pivots = _reduce(aug, ncols)
    kernel = [r[ncols:] for r in red[len(pivots):]]
    return hermite_normal_form(kernel)


def rank(M: Sequence[Sequence[int]]) -> int:
    if not M:
        return 0
    return len(_reduce(M, len(M[0]))[1])


def vec_mat(v: Sequence[int], M: Sequence[Sequence[int]]) -> list[int]:
    if not M:
        return []
    out = [0] * len(M[0])
    for c, row in zip(v, M):
        if c:
            for j, a in enumerate(row):
                out[j] += c * a
    return out


def in_integer_span(hnf: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether ``v`` is an integer combination of the rows of an HNF basis."""
    v = list(v)
    for row in hnf:
        col = next(j for j, a in enumerate(row) if a)
        if any(v[:col]):
            return False
        q, r = divmod(v[col], row[col])
        if r:
            return False
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def xgcd_combination(values: Sequence[int]) -> tuple[int, list[int]]:
    """Return ``(d, coeffs)`` with ``d = gcd(values) >= 0`` and ``sum(c*x) == d``."""
    d, coeffs = 0, [0] * len(values)
    for i, x in enumerate(values):
        if x == 0:
            continue
        g, s, t = _xgcd(d, x)
        coeffs = [s * c for c in coeffs]
        coeffs[i] = t
        d = g
    assert d == 0 or d == gcd(*values)
    return d, coeffs


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0
