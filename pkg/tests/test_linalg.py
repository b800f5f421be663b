from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from grsod.linalg import SingularMatrix, det, is_upper_unitriangular, same_lattice, solve, solve_upper_unitriangular

square = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=200)
@given(square)
def test_det_matches_sympy(m):
    assert det(m) == sympy.Matrix(m).det()


def test_det_edge_cases():
    assert det([]) == 1
    assert det([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        det([[1, 2]])


def test_solve():
    assert solve([[2, 0], [0, 4]], [1, 1]) == [Fraction(1, 2), Fraction(1, 4)]
    with pytest.raises(SingularMatrix):
        solve([[1, 2], [2, 4]], [1, 1])


def test_unitriangular():
    m = [[1, 2, 3], [0, 1, 4], [0, 0, 1]]
    assert is_upper_unitriangular(m)
    x = solve_upper_unitriangular(m, [1, 2, 3])
    assert [sum(a * b for a, b in zip(row, x)) for row in m] == [1, 2, 3]


def test_same_lattice():
    a = [[1, 0], [0, 1]]
    assert same_lattice(a, [[1, 1], [0, 1]])
    assert not same_lattice(a, [[2, 0], [0, 1]])
    assert not same_lattice([[2, 0], [0, 1]], [[1, 0], [0, 2]])
    with pytest.raises(SingularMatrix):
        same_lattice(a, [[1, 1], [1, 1]])
