"""Reversing and Pasting on K^n.

A :class:`Vector` is an immutable tuple of raw field values tagged with its
field.  Reversing flips the order of the components, Pasting concatenates,
and the palindromic / antipalindromic subspaces are the +1 / -1 fixed
spaces of Reversing.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import CharacteristicTwo, DimensionMismatch, IncompatibleField, ParseError
from .scalar import FieldTag, Scalar


class Vector:
    __slots__ = ("field", "values")

    def __init__(self, field: FieldTag, entries: Iterable = ()):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "values", tuple(field.coerce(x) for x in entries))

    @classmethod
    def _raw(cls, field: FieldTag, values) -> "Vector":
        v = cls.__new__(cls)
        object.__setattr__(v, "field", field)
        object.__setattr__(v, "values", tuple(values))
        return v

    @classmethod
    def zeros(cls, field: FieldTag, n: int) -> "Vector":
        return cls._raw(field, (field.zero,) * n)

    @classmethod
    def unit(cls, field: FieldTag, n: int, i: int) -> "Vector":
        """The i-th canonical basis vector, 0-indexed."""
        vals = [field.zero] * n
        vals[i] = field.one
        return cls._raw(field, vals)

    @classmethod
    def parse(cls, text: str, field: FieldTag) -> "Vector":
        """Comma-separated scalar strings; an empty string is the empty vector."""
        text = text.strip()
        if text in ("", "()", "[]"):
            return cls._raw(field, ())
        return cls._raw(field, (field.parse(t) for t in text.split(",")))

    @classmethod
    def from_json(cls, data, field: FieldTag) -> "Vector":
        if not isinstance(data, list):
            raise ParseError("a vector must be a JSON array")
        return cls._raw(field, (field.parse(str(x)) for x in data))

    def to_json(self) -> list[str]:
        fmt = self.field.format
        return [fmt(x) for x in self.values]

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Vector._raw(self.field, self.values[i])
        return Scalar(self.field, self.values[i])

    def __iter__(self):
        f = self.field
        return (Scalar(f, x) for x in self.values)

    def _same(self, other: "Vector") -> None:
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.field != self.field:
            raise IncompatibleField(f"{self.field} vs {other.field}")
        if len(other.values) != len(self.values):
            raise DimensionMismatch(f"lengths {len(self)} and {len(other)}")

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        if other.field != self.field or len(other) != len(self):
            return False
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.values, other.values))

    def __hash__(self):
        if not self.field.exact:
            return hash((self.field, len(self)))
        return hash((self.field, self.values))

    def __add__(self, other):
        self._same(other)
        add = self.field.add
        return Vector._raw(self.field, map(add, self.values, other.values))

    def __sub__(self, other):
        self._same(other)
        sub = self.field.sub
        return Vector._raw(self.field, map(sub, self.values, other.values))

    def __neg__(self):
        neg = self.field.neg
        return Vector._raw(self.field, map(neg, self.values))

    def scale(self, a) -> "Vector":
        f = self.field
        c = f.coerce(a)
        return Vector._raw(f, (f.mul(c, x) for x in self.values))

    def __rmul__(self, a):
        if isinstance(a, (Scalar, int)) and not isinstance(a, bool):
            return self.scale(a)
        return NotImplemented

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(x) for x in self.values)

    def __repr__(self):
        return f"Vector({self.field.selector}, [{', '.join(self.to_json())}])"


class PalAntiPair(NamedTuple):
    pal: Vector
    anti: Vector


def reverse_vector(v: Vector) -> Vector:
    return Vector._raw(v.field, v.values[::-1])


def paste_vectors(v: Vector, w: Vector) -> Vector:
    if v.field != w.field:
        raise IncompatibleField(f"{v.field} vs {w.field}")
    return Vector._raw(v.field, v.values + w.values)


def dot(v: Vector, w: Vector) -> Scalar:
    v._same(w)
    f = v.field
    s = f.zero
    for a, b in zip(v.values, w.values):
        s = f.add(s, f.mul(a, b))
    return Scalar(f, s)


def cross3(v: Vector, w: Vector) -> Vector:
    """Classical vector product in K^3 by cofactor expansion."""
    v._same(w)
    if len(v) != 3:
        raise DimensionMismatch(f"cross3 needs length 3, got {len(v)}")
    f = v.field
    (a1, a2, a3), (b1, b2, b3) = v.values, w.values
    mul, sub = f.mul, f.sub
    return Vector._raw(
        f,
        (
            sub(mul(a2, b3), mul(a3, b2)),
            sub(mul(a3, b1), mul(a1, b3)),
            sub(mul(a1, b2), mul(a2, b1)),
        ),
    )


def is_palindromic(v: Vector) -> bool:
    vals, eq = v.values, v.field.eq
    n = len(vals)
    return all(eq(vals[i], vals[n - 1 - i]) for i in range(n // 2))


def is_antipalindromic(v: Vector) -> bool:
    f = v.field
    vals, eq, neg = v.values, f.eq, f.neg
    n = len(vals)
    return all(eq(vals[i], neg(vals[n - 1 - i])) for i in range((n + 1) // 2))


def _half(field: FieldTag, what: str):
    if field.characteristic == 2:
        raise CharacteristicTwo(what)
    return field.inv(field.from_int(2))


def palindromic_part(v: Vector) -> Vector:
    """(v + reverse(v)) / 2."""
    f = v.field
    h = _half(f, "palindromic projection")
    vals = v.values
    return Vector._raw(f, (f.mul(h, f.add(a, b)) for a, b in zip(vals, vals[::-1])))


def antipalindromic_part(v: Vector) -> Vector:
    """(v - reverse(v)) / 2."""
    f = v.field
    h = _half(f, "antipalindromic projection")
    vals = v.values
    return Vector._raw(f, (f.mul(h, f.sub(a, b)) for a, b in zip(vals, vals[::-1])))


def decompose(v: Vector) -> PalAntiPair:
    if v.field.characteristic == 2:
        raise CharacteristicTwo()
    return PalAntiPair(palindromic_part(v), antipalindromic_part(v))


def palindromic_basis(n: int, field: FieldTag) -> list[Vector]:
    """e_i + e_{n+1-i} for i = 1..ceil(n/2); the middle unit vector when n is odd."""
    out = []
    for i in range((n + 1) // 2):
        vals = [field.zero] * n
        vals[i] = field.one
        vals[n - 1 - i] = field.one
        out.append(Vector._raw(field, vals))
    return out


def antipalindromic_basis(n: int, field: FieldTag) -> list[Vector]:
    """e_i - e_{n+1-i} for i = 1..floor(n/2)."""
    if field.characteristic == 2:
        raise CharacteristicTwo("antipalindromic basis")
    minus_one = field.neg(field.one)
    out = []
    for i in range(n // 2):
        vals = [field.zero] * n
        vals[i] = field.one
        vals[n - 1 - i] = minus_one
        out.append(Vector._raw(field, vals))
    return out


def linear_combination(coeffs: Sequence, vectors: Sequence[Vector], field: FieldTag, n: int) -> Vector:
    """sum(c_i * v_i) with raw coefficients; the zero vector of length n if empty."""
    acc = [field.zero] * n
    add, mul = field.add, field.mul
    for c, v in zip(coeffs, vectors):
        for k, x in enumerate(v.values):
            acc[k] = add(acc[k], mul(c, x))
    return Vector._raw(field, acc)
