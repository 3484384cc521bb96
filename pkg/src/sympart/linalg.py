"""Exact dense linear solve over the rationals."""

from fractions import Fraction


class SingularMatrixError(ArithmeticError):
    pass


def solve(A, b):
    """Solve ``A c = b`` for square ``A`` by Gauss-Jordan elimination on Fractions."""
    n = len(A)
    rows = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if rows[i][col]), None)
        if pivot is None:
            raise SingularMatrixError(f"no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        pr = [v / lead for v in rows[col]]
        rows[col] = pr
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * c for a, c in zip(rows[i], pr)]
    return [rows[i][n] for i in range(n)]
