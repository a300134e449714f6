"""Exact Gaussian elimination over the rationals."""

from fractions import Fraction


def row_echelon(rows):
    """Reduced row echelon form of a list of rows; returns (rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(row_echelon(rows)[1])


def solve(a, b):
    """Unique solution x of a @ x = b, or None if singular or inconsistent."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = row_echelon(aug)
    if len(pivots) != n or pivots[-1] == n:
        return None
    return [m[i][n] for i in range(n)]
