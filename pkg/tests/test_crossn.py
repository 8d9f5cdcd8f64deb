import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pastrev import GF, QQ, Matrix, Vector, cross3, cross_reversal_sign, generalized_cross, minor_drop_col
from pastrev.crossn import generalized_cross_matrix
from pastrev.errors import DimensionMismatch, IndexOutOfRange
from pastrev.matrices import reverse_rows
from pastrev.vectors import palindromic_basis, reverse_vector

from conftest import matrices

M23 = Matrix(QQ, [[1, 2, 3], [4, 5, 6]])


def sympy_cross(m):
    """Cofactor expansion of det([e; M]) along the symbolic first row."""
    n = m.cols
    e = sympy.symbols(f"e0:{n}")
    full = sympy.Matrix([list(e)] + [[sympy.Rational(x) for x in r] for r in m.row_tuples()])
    d = sympy.expand(full.det())
    return [d.coeff(s) for s in e]


def test_minor_examples():
    assert minor_drop_col(M23, 1) == Matrix(QQ, [[2, 3], [5, 6]])
    assert minor_drop_col(M23, 3) == Matrix(QQ, [[1, 2], [4, 5]])
    assert minor_drop_col(reverse_rows(M23), 1) == reverse_rows(minor_drop_col(M23, 3))
    assert minor_drop_col(reverse_rows(M23), 1) == Matrix(QQ, [[2, 1], [5, 4]])
    with pytest.raises(IndexOutOfRange):
        minor_drop_col(M23, 4)


def test_cross_examples():
    e1, e2 = Vector(QQ, [1, 0, 0]), Vector(QQ, [0, 1, 0])
    assert generalized_cross([e1, e2]) == Vector(QQ, [0, 0, 1])
    assert generalized_cross([Vector(QQ, [3, 7])]) == Vector(QQ, [7, -3])


def test_sign_examples():
    assert [cross_reversal_sign(n) for n in range(2, 8)] == [-1, -1, 1, 1, -1, -1]
    with pytest.raises(ValueError):
        cross_reversal_sign(1)


@pytest.mark.parametrize("n", range(2, 7))
def test_sign_is_ceiling_not_floor(n):
    ceil_sign = (-1) ** (-(-3 * n // 2))
    assert cross_reversal_sign(n) == ceil_sign
    floor_sign = (-1) ** (3 * n // 2)
    assert (ceil_sign == floor_sign) == (n % 2 == 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_matches_symbolic_oracle(n):
    rows = [[(i * 7 + j * j * 3 + 1) % 11 - 5 for j in range(n)] for i in range(n - 1)]
    m = Matrix(QQ, rows)
    assert list(generalized_cross_matrix(m).values) == sympy_cross(m)


def test_agrees_with_cross3_gf7():
    f = GF(7)
    for xs in itertools.islice(itertools.product(range(7), repeat=6), 0, None, 1171):
        v, w = Vector(f, xs[:3]), Vector(f, xs[3:])
        assert generalized_cross([v, w]) == cross3(v, w)


@given(st.integers(2, 5).flatmap(lambda n: matrices(n - 1, n)))
def test_reversal_identities(m):
    n = m.cols
    for k in range(1, n + 1):
        assert minor_drop_col(reverse_rows(m), k) == reverse_rows(minor_drop_col(m, n - k + 1))
    lhs = generalized_cross_matrix(reverse_rows(m))
    assert lhs == reverse_vector(generalized_cross_matrix(m)).scale(cross_reversal_sign(n))


@given(st.integers(2, 5).flatmap(lambda n: matrices(n - 1, n)))
def test_orthogonal_to_rows(m):
    c = generalized_cross_matrix(m)
    for i in range(m.rows):
        assert sum(x * y for x, y in zip(c.values, m.row(i).values)) == 0


def test_vanishes_on_palindromic_rows_n4():
    basis = palindromic_basis(4, QQ)
    rows = [basis[0], basis[1], basis[0].scale(3) + basis[1]]
    assert generalized_cross(rows).is_zero()


@given(matrices(3, 4), st.fractions(-5, 5, max_denominator=4))
def test_multilinear_alternating(m, a):
    rows = [m.row(i) for i in range(3)]
    w = Vector(QQ, [1, -1, 2, 0])
    lhs = generalized_cross([rows[0].scale(a) + w] + rows[1:])
    assert lhs == generalized_cross(rows).scale(a) + generalized_cross([w] + rows[1:])
    assert generalized_cross([rows[1], rows[0], rows[2]]) == -generalized_cross(rows)
    assert generalized_cross([rows[0], rows[0], rows[2]]).is_zero()


def test_input_validation():
    with pytest.raises(DimensionMismatch):
        generalized_cross([Vector(QQ, [1, 2, 3])])
    with pytest.raises(DimensionMismatch):
        generalized_cross([])
    with pytest.raises(DimensionMismatch):
        generalized_cross_matrix(Matrix(QQ, [[1]]))
