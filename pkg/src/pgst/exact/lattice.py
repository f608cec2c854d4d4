"""Integer kernels and Hermite normal forms over arbitrary-precision ints.

Matrices are lists of rows (lists of ints).  The integer kernel is computed
with unimodular row operations on ``[A^T | I]``, so the returned basis spans
the full lattice ``{v in Z^d : A v = 0}``.  That lattice is saturated by
construction, which matters because the transfer criterion is a mod-2 test.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``g = gcd(a, b) = a*x + b*y`` and ``g >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _echelon(rows: Matrix, ncols: int) -> int:
    """In-place integer row echelon form on the first ``ncols`` columns.

    Only unimodular operations are used.  Pivots end up positive and entries
    above each pivot are reduced into ``[0, pivot)``.  Returns the rank.
    """
    pivot_row = 0
    pivots = []
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        nonzero = [i for i in range(pivot_row, len(rows)) if rows[i][col] != 0]
        if not nonzero:
            continue
        first = nonzero[0]
        rows[pivot_row], rows[first] = rows[first], rows[pivot_row]
        for k in nonzero[1:]:
            piv = rows[pivot_row]
            other = rows[k]
            a, b = piv[col], other[col]
            if b == 0:
                continue
            g, x, y = xgcd(a, b)
            ag, bg = a // g, b // g
            rows[pivot_row] = [x * p + y * o for p, o in zip(piv, other)]
            rows[k] = [ag * o - bg * p for p, o in zip(piv, other)]
        if rows[pivot_row][col] < 0:
            rows[pivot_row] = [-v for v in rows[pivot_row]]
        p = rows[pivot_row][col]
        for i in range(pivot_row):
            q = rows[i][col] // p
            if q:
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return pivot_row


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> Matrix:
    """Row-style HNF, zero rows dropped.  Canonical for the row lattice."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return []
    rank = _echelon(rows, len(rows[0]))
    return rows[:rank]


def integer_kernel(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """HNF basis of ``{v in Z^ncols : A v = 0}``."""
    A = [list(map(int, r)) for r in A]
    if ncols is None:
        if not A:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(A[0])
    p = len(A)
    # row i of M: (column i of A) | (unit vector e_i)
    M = [[A[k][i] for k in range(p)] + [int(i == j) for j in range(ncols)] for i in range(ncols)]
    rank = _echelon(M, p)
    kernel = [row[p:] for row in M[rank:]]
    return hermite_normal_form(kernel)


def rational_kernel(A: Sequence[Sequence]) -> list[list[Fraction]]:
    """Kernel basis over Q by Gauss-Jordan elimination (one vector per free
    column, with a 1 in that column)."""
    rows = [[Fraction(x) for x in r] for r in A]
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [u - f * v for u, v in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def clear_denominators(v: Sequence[Fraction]) -> list[int]:
    """Smallest primitive integer multiple of a rational vector."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g > 1 else ints


def rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(A[0]) - len(rational_kernel(A))


def in_row_lattice(v: Sequence[int], basis_hnf: Matrix) -> bool:
    """Membership of an integer vector in the lattice spanned by an HNF basis."""
    v = list(v)
    for row in basis_hnf:
        col = next(i for i, x in enumerate(row) if x != 0)
        if v[col] % row[col]:
            return False
        q = v[col] // row[col]
        v = [a - q * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)
