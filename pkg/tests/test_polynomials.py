from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pastrev import GF, QQ, Poly, Scalar, Vector, decompose_poly, paste_poly, reverse_poly
from pastrev.errors import CharacteristicTwo, DimensionMismatch, ParseError
from pastrev.matrices import family_rank
from pastrev.polynomials import (
    antipalindromic_poly_basis,
    evaluate,
    is_antipalindromic_poly,
    is_palindromic_poly,
    palindromic_poly_basis,
    poly_divmod,
    poly_mul,
)

from conftest import small_fracs

x = sympy.Symbol("x")


def polys(ambient):
    return st.lists(small_fracs, min_size=ambient + 1, max_size=ambient + 1).map(lambda c: Poly(QQ, c, ambient))


any_poly = st.integers(0, 5).flatmap(polys)


def as_sympy(p):
    return sum(sympy.Rational(c) * x ** k for k, c in enumerate(p.coeffs.values))


def test_reverse_examples():
    assert reverse_poly(Poly(QQ, [1, 2], 1)) == Poly(QQ, [2, 1], 1)
    assert reverse_poly(Poly(QQ, [1, 2, 0], 2)) == Poly(QQ, [0, 2, 1], 2)
    assert reverse_poly(Poly(QQ, [1, 2, 1])) == Poly(QQ, [1, 2, 1])


def test_paste_examples():
    p, q = Poly(QQ, [1, 2], 1), Poly(QQ, [3], 0)
    r = paste_poly(p, q)
    assert r == Poly(QQ, [1, 2, 3]) and r.ambient == 2
    assert reverse_poly(r) == paste_poly(reverse_poly(q), reverse_poly(p))


def test_ambient_matters():
    q = Poly(QQ, [5], 0)
    assert paste_poly(Poly(QQ, [1, 2], 1), q) != paste_poly(Poly(QQ, [1, 2], 2), q)
    with pytest.raises(DimensionMismatch):
        Poly(QQ, [1, 2, 3], 1)


def test_decompose_examples():
    pal, anti = decompose_poly(Poly(QQ, [1, 2, 3]))
    assert pal == Poly(QQ, [2, 2, 2]) and anti == Poly(QQ, [-1, 0, 1])
    p = Poly(QQ, [1, 2, 1])
    assert decompose_poly(p) == (p, Poly(QQ, [0, 0, 0]))
    with pytest.raises(CharacteristicTwo):
        decompose_poly(Poly(GF(2), [1, 0]))


@pytest.mark.parametrize("n", range(0, 8))
def test_basis_dimensions(n):
    bp = palindromic_poly_basis(n, QQ)
    ba = antipalindromic_poly_basis(n, QQ)
    rank = lambda ps: sympy.Matrix([list(p.coeffs.values) for p in ps]).rank() if ps else 0
    assert rank(bp) == (n + 2) // 2 and rank(ba) == (n + 1) // 2
    assert all(is_palindromic_poly(p) and p.ambient == n for p in bp)
    assert all(is_antipalindromic_poly(p) for p in ba)
    assert family_rank([p.coeffs for p in bp], QQ) == rank(bp)


def test_dim_example():
    assert len(palindromic_poly_basis(4, QQ)) == 3


@given(any_poly)
def test_reverse_is_x_power_times_reciprocal(p):
    # x^n P(1/x), computed by sympy
    expect = sympy.expand(x ** p.ambient * as_sympy(p).subs(x, 1 / x))
    assert sympy.expand(as_sympy(reverse_poly(p)) - expect) == 0


@given(any_poly, any_poly, small_fracs)
def test_paste_evaluation_identity(p, q, x0):
    r = paste_poly(p, q)
    assert r.ambient == p.ambient + q.ambient + 1
    lhs = evaluate(r, x0)
    rhs = evaluate(p, x0) + Scalar(QQ, x0) ** (p.ambient + 1) * evaluate(q, x0)
    assert lhs == rhs
    assert lhs.value == as_sympy(r).subs(x, sympy.Rational(x0))


@given(any_poly, any_poly, any_poly)
def test_paste_laws(p, q, r):
    assert paste_poly(paste_poly(p, q), r) == paste_poly(p, paste_poly(q, r))
    assert reverse_poly(paste_poly(p, q)) == paste_poly(reverse_poly(q), reverse_poly(p))


@given(any_poly)
def test_decompose_round_trip(p):
    pal, anti = decompose_poly(p)
    assert pal + anti == p
    assert is_palindromic_poly(pal) and is_antipalindromic_poly(anti)
    assert reverse_poly(reverse_poly(p)) == p


@given(st.integers(0, 4).flatmap(lambda n: st.tuples(small_fracs, small_fracs, polys(n), polys(n))))
def test_linearity(args):
    a, b, p, q = args
    a, b = Scalar(QQ, a), Scalar(QQ, b)
    assert reverse_poly(a * p + b * q) == a * reverse_poly(p) + b * reverse_poly(q)


@given(any_poly, any_poly)
def test_ring_helpers_match_sympy(p, q):
    prod = poly_mul(p, q)
    assert sympy.expand(as_sympy(prod) - as_sympy(p) * as_sympy(q)) == 0
    if q.degree >= 0:
        quo, rem = poly_divmod(p, q)
        assert sympy.expand(as_sympy(quo) * as_sympy(q) + as_sympy(rem) - as_sympy(p)) == 0
        assert rem.degree < q.degree


def test_degree_and_pretty():
    assert Poly(QQ, [0, 0, 0], 2).degree == -1
    assert Poly(QQ, [1, 0, 3], 4).degree == 2
    assert Poly(QQ, [1, -1, 0, 2]).pretty() == "1 - x + 2*x^3"


def test_json_round_trip():
    p = Poly(QQ, [1, Fraction(-1, 2)], 3)
    assert Poly.from_json(p.to_json(), QQ) == p
    with pytest.raises(ParseError):
        Poly.from_json({"ambient": 2, "coeffs": ["1"]}, QQ)


def test_vector_embedding():
    v = Vector(GF(5), [1, 2, 3])
    assert Poly.from_vector(v).coeffs == v
