"""Integer row-lattice primitives: Hermite normal form, left kernels, exact solving.

All routines work on lists of equal-length integer rows and use Python's
arbitrary precision integers, so nothing overflows.
"""

from __future__ import annotations

from typing import Sequence

Row = tuple[int, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_with_transform(rows: Sequence[Sequence[int]]):
    """Row-style Hermite normal form with the unimodular transform.

    Returns ``(H, U, rank)`` where ``U`` is an m x m unimodular matrix with
    ``U * A`` equal to ``H`` padded by zero rows.  ``H`` holds the ``rank``
    nonzero rows in echelon form: pivots positive, entries above each pivot
    reduced into ``[0, pivot)``.  Rows ``rank..m-1`` of ``U`` span the integer
    left kernel of ``A``.
    """
    m = len(rows)
    if m == 0:
        return [], [], 0
    n = len(rows[0])
    H = [list(r) for r in rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    pivots = []
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            b = H[i][col]
            if b == 0:
                continue
            a = H[r][col]
            g, s, t = xgcd(a, b)
            ag, bg = a // g, b // g
            for M in (H, U):
                top, low = M[r], M[i]
                M[r] = [s * x + t * y for x, y in zip(top, low)]
                M[i] = [-bg * x + ag * y for x, y in zip(top, low)]
        if H[r][col] == 0:
            continue
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        pivots.append(col)
        piv = H[r][col]
        for i in range(r):
            q = H[i][col] // piv
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return [tuple(row) for row in H[:r]], [tuple(row) for row in U], r


def hnf(rows: Sequence[Sequence[int]]) -> list[Row]:
    return hnf_with_transform(rows)[0]


def left_kernel(rows: Sequence[Sequence[int]]) -> list[Row]:
    """Basis of ``{u in Z^m : u * A = 0}``."""
    _, U, rank = hnf_with_transform(rows)
    return U[rank:]


def solve(rows: Sequence[Sequence[int]], target: Sequence[int]) -> Row | None:
    """Integer ``u`` with ``u * A == target``, or ``None`` when no solution exists."""
    H, U, rank = hnf_with_transform(rows)
    n = len(target)
    residual = list(target)
    coeffs = [0] * rank
    k = 0
    for col in range(n):
        if k < rank and H[k][col] != 0:
            piv = H[k][col]
            if residual[col] % piv:
                return None
            q = residual[col] // piv
            coeffs[k] = q
            residual = [x - q * y for x, y in zip(residual, H[k])]
            k += 1
        elif residual[col] != 0:
            return None
    m = len(U)
    padded = coeffs + [0] * (m - rank)
    return tuple(sum(padded[i] * U[i][j] for i in range(m)) for j in range(m))


def combine(coeffs: Sequence[int], rows: Sequence[Sequence[int]]) -> Row:
    n = len(rows[0])
    return tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(n))
