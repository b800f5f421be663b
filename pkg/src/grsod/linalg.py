"""Exact integer/rational linear algebra on lists of lists."""

from __future__ import annotations

from fractions import Fraction


class SingularMatrix(ArithmeticError):
    pass


def det(matrix: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def solve(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Gauss-Jordan over the rationals; raises SingularMatrix."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrix(f"no pivot in column {col}")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n] for row in aug]


def is_upper_unitriangular(matrix: list[list[int]]) -> bool:
    n = len(matrix)
    return all(matrix[i][i] == 1 for i in range(n)) and all(
        matrix[i][j] == 0 for i in range(n) for j in range(i))


def solve_upper_unitriangular(matrix: list[list[int]], rhs: list[int]) -> list[int]:
    """Back substitution; exact over the integers since the diagonal is 1."""
    n = len(matrix)
    x = [0] * n
    for i in range(n - 1, -1, -1):
        x[i] = rhs[i] - sum(matrix[i][j] * x[j] for j in range(i + 1, n))
    return x


def transpose(matrix):
    return [list(col) for col in zip(*matrix)]


def same_lattice(a: list[list[int]], b: list[list[int]]) -> bool:
    """Do the rows of two square nonsingular integer matrices span the same Z-lattice?"""
    da, db = det(a), det(b)
    if da == 0 or db == 0:
        raise SingularMatrix("lattice comparison needs full-rank row sets")
    if abs(da) != abs(db):
        return False
    # every row of b must be an integer combination of rows of a
    at = transpose(a)
    for row in b:
        coeffs = solve(at, row)
        if any(c.denominator != 1 for c in coeffs):
            return False
    return True
