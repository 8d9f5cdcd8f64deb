"""Reversing as a linear map: the exchange matrix and its spectral data.

Vectors are columns and maps act on the left, so ``exchange_matrix(n) @ v``
is ``reverse_vector(v)``.  Since the exchange matrix is symmetric the
row-vector convention gives the same matrix.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import CharacteristicTwo, DimensionMismatch, ParseError
from .matrices import Matrix, matmul
from .polynomials import Poly, divmod_coeffs, mul_coeffs
from .scalar import QQ, FieldTag
from .vectors import Vector, antipalindromic_basis, palindromic_basis


def exchange_matrix(n: int, field: FieldTag = QQ) -> Matrix:
    """Ones on the anti-diagonal, zeros elsewhere."""
    if n < 0:
        raise ValueError("n must be non-negative")
    z, o = field.zero, field.one
    return Matrix._raw(field, n, n, (o if i + j == n - 1 else z for i in range(n) for j in range(n)))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n} given by its 1-based images."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_json(cls, data) -> "Permutation":
        if not isinstance(data, list):
            raise ParseError("a permutation must be a JSON array of 1-based images")
        try:
            return cls(tuple(data))
        except (TypeError, ValueError) as exc:
            raise ParseError(str(exc)) from None

    def to_json(self) -> list[int]:
        return list(self.images)

    def __len__(self):
        return len(self.images)

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other`` as maps on indices."""
        if len(other) != len(self):
            raise DimensionMismatch("permutations of different sizes")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    @property
    def is_involution(self) -> bool:
        return self.compose(self) == Permutation.identity(len(self))


def apply_permutation(sigma: Permutation, v: Vector) -> Vector:
    """``(v[sigma(1)], ..., v[sigma(n)])``."""
    if len(v) != len(sigma):
        raise DimensionMismatch(f"permutation of {len(sigma)} applied to length {len(v)}")
    vals = v.values
    return Vector._raw(v.field, (vals[i - 1] for i in sigma.images))


def permutation_matrix(sigma: Permutation, field: FieldTag = QQ) -> Matrix:
    """The matrix ``A`` with ``A @ v == apply_permutation(sigma, v)``."""
    n = len(sigma)
    z, o = field.zero, field.one
    return Matrix._raw(field, n, n, (o if j == sigma.images[i] - 1 else z for i in range(n) for j in range(n)))


def apply_matrix(a: Matrix, v: Vector) -> Vector:
    """``a @ v`` with ``v`` as a column."""
    col = Matrix._raw(v.field, len(v), 1, v.values)
    return Vector._raw(v.field, matmul(a, col).data)


# -- polynomials of the Reversing map ----------------------------------------

def _linear_power(field: FieldTag, root: int, k: int) -> list:
    """Coefficients of ``(x - root)^k``."""
    out = [field.one]
    factor = [field.from_int(-root), field.one]
    for _ in range(k):
        out = mul_coeffs(field, out, factor)
    return out


def reversing_char_poly(n: int, field: FieldTag = QQ) -> Poly:
    """Monic ``det(x I - J_n) = (x - 1)^ceil(n/2) (x + 1)^floor(n/2)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = mul_coeffs(field, _linear_power(field, 1, (n + 1) // 2), _linear_power(field, -1, n // 2))
    return Poly(field, c, n)


def reversing_min_poly(n: int, field: FieldTag = QQ) -> Poly:
    """``x^2 - 1`` for n >= 2, ``x - 1`` for n = 1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n == 1:
        return Poly(field, [-1, 1])
    return Poly(field, [-1, 0, 1])


def characteristic_polynomial(a: Matrix) -> Poly:
    """Monic ``det(x I - a)`` by cofactor expansion with polynomial entries.

    The expansion runs down the rows and memoises on the set of columns
    still available, so it costs O(2^n n) polynomial products and is exact
    in any field.  Used as the independent check on the closed forms above.
    """
    if not a.is_square:
        raise DimensionMismatch("characteristic polynomial of a non-square matrix")
    f = a.field
    n = a.rows
    neg = f.neg
    entries = [
        [[neg(a.data[i * n + j]), f.one] if i == j else ([neg(a.data[i * n + j])] if not f.is_zero(a.data[i * n + j]) else [])
         for j in range(n)]
        for i in range(n)
    ]

    @lru_cache(maxsize=None)
    def minor(row: int, mask: int) -> tuple:
        if row == n:
            return (f.one,)
        total: list = []
        sign = 1
        for j in range(n):
            if not mask >> j & 1:
                continue
            e = entries[row][j]
            if e:
                sub = minor(row + 1, mask & ~(1 << j))
                term = mul_coeffs(f, e, list(sub))
                if sign < 0:
                    term = [neg(t) for t in term]
                total = _add_coeffs(f, total, term)
            sign = -sign
        return tuple(total)

    coeffs = list(minor(0, (1 << n) - 1))
    return Poly(f, coeffs or [f.zero], n)


def _add_coeffs(field: FieldTag, a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, y in enumerate(b):
        out[k] = field.add(out[k], y)
    return out


def evaluate_at_matrix(p: Poly, a: Matrix) -> Matrix:
    """``p(a)`` by Horner's rule."""
    if not a.is_square:
        raise DimensionMismatch("polynomial of a non-square matrix")
    f = a.field
    n = a.rows
    eye = Matrix.identity(f, n)
    acc = Matrix.zeros(f, n, n)
    for c in reversed(p.coeffs.values):
        acc = matmul(acc, a) + eye.scale(c)
    return acc


def divides(q: Poly, p: Poly) -> bool:
    _, rem = divmod_coeffs(p.field, p.coeffs.values, q.coeffs.values)
    return not rem


def eigenspace_basis(n: int, sign: int, field: FieldTag = QQ) -> list[Vector]:
    """Basis of ``ker(R - sign * id)``: palindromic for +1, antipalindromic for -1."""
    if sign == 1:
        return palindromic_basis(n, field)
    if sign == -1:
        if field.characteristic == 2:
            raise CharacteristicTwo("antipalindromic eigenspace")
        return antipalindromic_basis(n, field)
    raise ValueError("sign must be +1 or -1")


def projector_matrices(n: int, field: FieldTag = QQ) -> tuple[Matrix, Matrix]:
    """Matrices of ``v -> (v + Rv)/2`` and ``v -> (v - Rv)/2``."""
    if field.characteristic == 2:
        raise CharacteristicTwo("projection")
    h = field.inv(field.from_int(2))
    eye, ex = Matrix.identity(field, n), exchange_matrix(n, field)
    return (eye + ex).scale(h), (eye - ex).scale(h)
