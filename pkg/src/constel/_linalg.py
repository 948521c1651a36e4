"""Tiny exact linear algebra over Fraction, enough for cone checks."""

from __future__ import annotations

from fractions import Fraction


def rank(vectors) -> int:
    """Rank of a list of integer/rational vectors."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def solve_columns(columns, target) -> list[Fraction] | None:
    """Solve sum_j lam_j * columns[j] = target exactly.

    Returns the coefficient list when the columns are linearly independent
    and the system is consistent, else None (dependent columns are skipped
    by callers, which enumerate independent subsets)."""
    n = len(columns)
    d = len(target)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(d)]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((i for i in range(row, d) if aug[i][col] != 0), None)
        if pivot is None:
            return None  # dependent columns
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for i in range(d):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
    for i in range(row, d):
        if aug[i][n] != 0:
            return None  # inconsistent
    return [aug[i][n] for i in range(n)]
