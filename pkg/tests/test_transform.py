import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pastrev import (
    GF,
    QQ,
    Matrix,
    Permutation,
    Poly,
    Vector,
    apply_permutation,
    det,
    eigenspace_basis,
    exchange_matrix,
    permutation_matrix,
    reverse_vector,
    reversing_char_poly,
    reversing_min_poly,
)
from pastrev.errors import CharacteristicTwo, ParseError
from pastrev.matrices import family_rank, matmul
from pastrev.transform import (
    apply_matrix,
    characteristic_polynomial,
    divides,
    evaluate_at_matrix,
    projector_matrices,
)

from conftest import matrices, vectors

lam = sympy.Symbol("lam")


def sympy_charpoly(n):
    """Independent oracle: expand det(lam I - J_n) symbolically."""
    J = sympy.Matrix(n, n, lambda i, j: 1 if i + j == n - 1 else 0)
    p = sympy.Poly((lam * sympy.eye(n) - J).det(), lam)
    return [sympy.Rational(c) for c in reversed(p.all_coeffs())]


@pytest.mark.parametrize("n", range(1, 9))
def test_char_poly_matches_symbolic_determinant(n):
    assert list(reversing_char_poly(n).coeffs.values) == sympy_charpoly(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_char_poly_matches_cofactor_expansion(n):
    assert characteristic_polynomial(exchange_matrix(n)) == reversing_char_poly(n)


def test_char_poly_examples():
    assert reversing_char_poly(1) == Poly(QQ, [-1, 1])
    assert reversing_char_poly(2) == Poly(QQ, [-1, 0, 1])
    assert reversing_char_poly(3) == Poly(QQ, [1, -1, -1, 1])


@pytest.mark.parametrize("n", range(1, 9))
def test_min_poly(n):
    j = exchange_matrix(n)
    q = reversing_min_poly(n)
    assert evaluate_at_matrix(q, j).is_zero()
    assert evaluate_at_matrix(reversing_char_poly(n), j).is_zero()
    assert divides(q, reversing_char_poly(n))
    assert q.degree == (1 if n == 1 else 2)


def test_min_poly_examples():
    assert reversing_min_poly(5) == Poly(QQ, [-1, 0, 1])
    assert reversing_min_poly(1) == Poly(QQ, [-1, 1])
    assert evaluate_at_matrix(reversing_min_poly(3), exchange_matrix(3)) == Matrix.zeros(QQ, 3, 3)


@given(matrices(3, 3))
def test_cofactor_charpoly_matches_sympy(a):
    ours = characteristic_polynomial(a)
    theirs = sympy.Matrix(3, 3, list(a.data)).charpoly(lam)
    assert list(ours.coeffs.values) == [sympy.Rational(c) for c in reversed(theirs.all_coeffs())]


def test_exchange_examples():
    assert exchange_matrix(2) == Matrix(QQ, [[0, 1], [1, 0]])
    assert exchange_matrix(1) == Matrix(QQ, [[1]])
    assert det(exchange_matrix(4)).value == 1
    assert [det(exchange_matrix(n)).value for n in range(1, 7)] == [1, -1, -1, 1, 1, -1]


@pytest.mark.parametrize("n", range(0, 9))
def test_exchange_involution(n):
    j = exchange_matrix(n)
    assert matmul(j, j) == Matrix.identity(QQ, n)


@given(st.integers(1, 7).flatmap(vectors))
def test_exchange_reverses(v):
    assert apply_matrix(exchange_matrix(len(v)), v) == reverse_vector(v)


def test_permutation_examples():
    v = Vector(QQ, [1, 2, 3])
    assert apply_permutation(Permutation.reversal(3), v) == Vector(QQ, [3, 2, 1])
    assert apply_permutation(Permutation.identity(3), v) == v
    assert apply_permutation(Permutation((2, 3, 1)), Vector(QQ, [7, 8, 9])) == Vector(QQ, [8, 9, 7])
    assert permutation_matrix(Permutation.reversal(4)) == exchange_matrix(4)


@pytest.mark.parametrize("n", range(1, 5))
def test_permutation_matrix_matches_apply(n):
    v = Vector(QQ, range(10, 10 + n))
    for images in itertools.permutations(range(1, n + 1)):
        s = Permutation(images)
        assert apply_matrix(permutation_matrix(s), v) == apply_permutation(s, v)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ParseError):
        Permutation.from_json({"x": 1})
    assert Permutation.from_json([2, 1]).to_json() == [2, 1]
    assert Permutation.reversal(5).is_involution
    assert not Permutation((2, 3, 1)).is_involution


def test_eigenspace_examples():
    assert len(eigenspace_basis(4, 1)) == 2
    assert len(eigenspace_basis(4, -1)) == 2
    assert eigenspace_basis(3, -1) == [Vector(QQ, [1, 0, -1])]
    with pytest.raises(CharacteristicTwo):
        eigenspace_basis(3, -1, GF(2))
    with pytest.raises(ValueError):
        eigenspace_basis(3, 0)


@pytest.mark.parametrize("field", [QQ, GF(3), GF(5)], ids=["q", "gf3", "gf5"])
@pytest.mark.parametrize("n", range(1, 9))
def test_eigenspaces_fill_the_space(n, field):
    plus, minus = eigenspace_basis(n, 1, field), eigenspace_basis(n, -1, field)
    j = exchange_matrix(n, field)
    assert family_rank(plus + minus, field) == n
    assert all(apply_matrix(j, b) == b for b in plus)
    assert all(apply_matrix(j, b) == -b for b in minus)


@pytest.mark.parametrize("n", range(1, 7))
def test_projector_identities(n):
    fp, fa = projector_matrices(n)
    eye = Matrix.identity(QQ, n)
    assert fp + fa == eye
    assert matmul(fp, fp) == fp and matmul(fa, fa) == fa
    assert matmul(fp, fa).is_zero() and matmul(fa, fp).is_zero()
    assert family_rank([fp.row(i) for i in range(n)], QQ) == (n + 1) // 2
    assert family_rank([fa.row(i) for i in range(n)], QQ) == n // 2


def test_projector_kills_antipalindromic():
    fp, _ = projector_matrices(2, GF(3))
    assert apply_matrix(fp, Vector(GF(3), [1, 2])).is_zero()
