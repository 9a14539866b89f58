"""Small exact linear algebra over the rationals (dense, Fraction entries)."""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> Matrix:
    """Reduced row echelon form; zero rows dropped.

    Two matrices span the same row space iff their rrefs are equal, which
    is how ideal images in finite-dimensional quotients get compared.
    """
    m = [row[:] for row in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_row = 0
    for col in range(ncols):
        pr = next((r for r in range(pivot_row, len(m)) if m[r][col] != 0), None)
        if pr is None:
            continue
        m[pivot_row], m[pr] = m[pr], m[pivot_row]
        pv = m[pivot_row][col]
        m[pivot_row] = [a / pv for a in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
        if pivot_row == len(m):
            break
    return [row for row in m[:pivot_row] if any(row)]


def solvable(columns: Matrix, target: list[Fraction]) -> bool:
    """Whether target lies in the column span of the given columns."""
    if not columns:
        return all(t == 0 for t in target)
    base = rref([list(c) for c in columns])
    extended = rref([list(c) for c in columns] + [list(target)])
    return len(extended) == len(base)
