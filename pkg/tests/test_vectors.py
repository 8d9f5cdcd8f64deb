import itertools

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pastrev import (
    GF,
    QQ,
    Scalar,
    Vector,
    antipalindromic_basis,
    antipalindromic_part,
    cross3,
    decompose,
    dot,
    is_antipalindromic,
    is_palindromic,
    palindromic_basis,
    palindromic_part,
    paste_vectors,
    reverse_vector,
)
from pastrev.errors import CharacteristicTwo, DimensionMismatch, IncompatibleField

from conftest import any_vector, small_fracs, vectors


def V(*xs, field=QQ):
    return Vector(field, xs)


def test_reverse_examples():
    assert reverse_vector(V(1, 2, 3)) == V(3, 2, 1)
    assert reverse_vector(V()) == V()
    assert reverse_vector(V(5)) == V(5)


def test_paste_examples():
    assert paste_vectors(V(1, 2), V(3)) == V(1, 2, 3)
    assert paste_vectors(V(1, 2), V()) == V(1, 2)
    assert paste_vectors(V(), V(1, 2)) == V(1, 2)
    assert reverse_vector(paste_vectors(V(1, 2), V(3, 4))) == V(4, 3, 2, 1)


def test_dot_examples():
    assert dot(V(1, 2, 3), V(4, 5, 6)) == Scalar(QQ, 32)
    assert dot(V(3, 2, 1), V(6, 5, 4)) == Scalar(QQ, 32)
    assert dot(V(), V()) == Scalar(QQ, 0)


def test_cross_examples():
    assert cross3(V(1, 0, 0), V(0, 1, 0)) == V(0, 0, 1)
    out = cross3(V(1, 2, 1), V(3, 4, 3))
    assert out == V(2, 0, -2) and is_antipalindromic(out)
    assert cross3(V(-1, 0, 1), V(-2, 0, 2)) == V(0, 0, 0)


@given(vectors(3), vectors(3))
def test_cross_matches_sympy(v, w):
    expect = sympy.Matrix(list(v.values)).cross(sympy.Matrix(list(w.values)))
    assert list(cross3(v, w).values) == [sympy.Rational(x) for x in expect]


def test_predicates():
    assert is_palindromic(V(1, 2, 1))
    assert is_antipalindromic(V(1, 0, -1))
    z = V(0, 0, 0, 0)
    assert is_palindromic(z) and is_antipalindromic(z)
    assert is_palindromic(V()) and is_antipalindromic(V())


def test_parts_examples():
    assert palindromic_part(V(1, 2, 3)) == V(2, 2, 2)
    assert antipalindromic_part(V(1, 2, 3)) == V(-1, 0, 1)
    assert palindromic_part(V(1, 2, 1)) == V(1, 2, 1)
    assert antipalindromic_part(V(1, 2, 1)).is_zero()
    assert decompose(V(0, 0)) == (V(0, 0), V(0, 0))


def test_decompose_gf3_example():
    f = GF(3)
    pal, anti = decompose(Vector(f, [1, 2]))
    assert pal == Vector(f, [0, 0]) and anti == Vector(f, [1, 2])


def test_characteristic_two_refuses():
    v = Vector(GF(2), [1, 0])
    for fn in (palindromic_part, antipalindromic_part, decompose):
        with pytest.raises(CharacteristicTwo, match="characteristic 2"):
            fn(v)
    # predicates still work, and coincide
    for xs in itertools.product(range(2), repeat=3):
        w = Vector(GF(2), xs)
        assert is_palindromic(w) == is_antipalindromic(w)


def test_basis_examples():
    assert palindromic_basis(4, QQ) == [V(1, 0, 0, 1), V(0, 1, 1, 0)]
    assert len(palindromic_basis(5, QQ)) == 3
    assert antipalindromic_basis(5, QQ) == [V(1, 0, 0, 0, -1), V(0, 1, 0, -1, 0)]


@pytest.mark.parametrize("field", [QQ, GF(3)], ids=["q", "gf3"])
@pytest.mark.parametrize("n", range(0, 9))
def test_basis_ranks(n, field):
    # rank taken by sympy over Q, and by the library's own rank over GF(3)
    bp, ba = palindromic_basis(n, field), antipalindromic_basis(n, field)
    if field is QQ:
        rank = lambda vs: sympy.Matrix([list(v.values) for v in vs]).rank() if vs else 0
        assert rank(bp) == (n + 1) // 2 and rank(ba) == n // 2
        assert rank(bp + ba) == n
    assert len(bp) == (n + 1) // 2 and len(ba) == n // 2
    assert all(is_palindromic(b) for b in bp) and all(is_antipalindromic(b) for b in ba)


@given(any_vector())
def test_involution(v):
    assert reverse_vector(reverse_vector(v)) == v


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(small_fracs, small_fracs, vectors(n), vectors(n))))
def test_linearity(args):
    a, b, v, w = args
    a, b = Scalar(QQ, a), Scalar(QQ, b)
    assert reverse_vector(a * v + b * w) == a * reverse_vector(v) + b * reverse_vector(w)


@given(st.integers(0, 6).flatmap(lambda n: st.tuples(vectors(n), vectors(n))))
def test_dot_invariance(vw):
    v, w = vw
    assert dot(v, w) == dot(reverse_vector(v), reverse_vector(w))


@given(vectors(3), vectors(3))
def test_cross_antihomomorphism(v, w):
    assert reverse_vector(cross3(v, w)) == cross3(reverse_vector(w), reverse_vector(v))


@given(any_vector(4), any_vector(4), any_vector(4))
def test_paste_laws(u, v, w):
    assert paste_vectors(paste_vectors(u, v), w) == paste_vectors(u, paste_vectors(v, w))
    assert reverse_vector(paste_vectors(v, w)) == paste_vectors(reverse_vector(w), reverse_vector(v))


@given(any_vector())
def test_decompose_round_trip(v):
    pal, anti = decompose(v)
    assert pal + anti == v
    assert is_palindromic(pal) and is_antipalindromic(anti)


@pytest.mark.parametrize("p", [3, 5])
def test_cross_symmetry_transfer_exhaustive(p):
    f = GF(p)
    cube = [Vector(f, xs) for xs in itertools.product(range(p), repeat=3)]
    pals = [v for v in cube if is_palindromic(v)]
    antis = [v for v in cube if is_antipalindromic(v)]
    assert len(pals) == p ** 2 and len(antis) == p
    for v, w in itertools.product(pals, pals):
        assert is_antipalindromic(cross3(v, w))
    for v, w in itertools.product(antis, antis):
        assert cross3(v, w).is_zero()
    for v, w in itertools.product(pals, antis):
        assert is_palindromic(cross3(v, w))


@pytest.mark.parametrize("n", range(1, 6))
def test_decomposition_unique_gf3(n):
    f = GF(3)
    for xs in itertools.product(range(3), repeat=n):
        v = Vector(f, xs)
        if is_palindromic(v) and is_antipalindromic(v):
            assert v.is_zero()


def test_shape_and_field_errors():
    with pytest.raises(DimensionMismatch):
        dot(V(1, 2), V(1))
    with pytest.raises(DimensionMismatch):
        cross3(V(1, 2), V(1, 2))
    with pytest.raises(IncompatibleField):
        paste_vectors(V(1), Vector(GF(3), [1]))
    with pytest.raises(IncompatibleField):
        V(1) + Vector(GF(3), [1])


def test_json_round_trip():
    v = V(1, -2, "3/4")
    assert Vector.from_json(v.to_json(), QQ) == v
    assert Vector.parse("1,-2,3/4", QQ) == v


def test_immutable():
    v = V(1, 2)
    with pytest.raises(AttributeError):
        v.values = ()
