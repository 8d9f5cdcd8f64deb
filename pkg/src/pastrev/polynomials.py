"""K_n[x] as the coefficient space K^(n+1).

A :class:`Poly` keeps its ambient degree bound explicitly: ``1 + 2x`` at
ambient 1 and at ambient 2 are different vectors ``(1, 2)`` and
``(1, 2, 0)``, and they reverse and paste differently.  Coefficients are
stored in ascending powers.

Ring operations (``poly_mul``, ``poly_divmod``, ``evaluate``) exist for
testing and for the characteristic-polynomial code in
:mod:`pastrev.transform`; they are not part of the Reversing calculus.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from .errors import CharacteristicTwo, DimensionMismatch, DivisionByZero, IncompatibleField, ParseError
from .scalar import FieldTag, Scalar
from .vectors import (
    Vector,
    antipalindromic_basis,
    decompose,
    is_antipalindromic,
    is_palindromic,
    palindromic_basis,
    paste_vectors,
    reverse_vector,
)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, field: FieldTag, coeffs: Iterable = (), ambient: int | None = None):
        vals = [field.coerce(c) for c in coeffs]
        if ambient is None:
            ambient = max(len(vals) - 1, 0)
        if ambient < 0:
            raise ValueError("ambient degree must be non-negative")
        if len(vals) > ambient + 1:
            if any(not field.is_zero(c) for c in vals[ambient + 1:]):
                raise DimensionMismatch(f"degree exceeds ambient bound {ambient}")
            vals = vals[:ambient + 1]
        vals += [field.zero] * (ambient + 1 - len(vals))
        object.__setattr__(self, "coeffs", Vector._raw(field, vals))

    @classmethod
    def from_vector(cls, v: Vector) -> "Poly":
        if len(v) == 0:
            raise DimensionMismatch("a polynomial needs at least one coefficient")
        p = cls.__new__(cls)
        object.__setattr__(p, "coeffs", v)
        return p

    @classmethod
    def parse(cls, text: str, field: FieldTag, ambient: int | None = None) -> "Poly":
        v = Vector.parse(text, field)
        return cls(field, v.values, ambient)

    @classmethod
    def from_json(cls, data, field: FieldTag) -> "Poly":
        try:
            ambient, coeffs = int(data["ambient"]), data["coeffs"]
        except (KeyError, TypeError, ValueError):
            raise ParseError('a polynomial needs "ambient" and "coeffs"') from None
        if len(coeffs) != ambient + 1:
            raise ParseError("coeffs length must be ambient + 1")
        return cls.from_vector(Vector.from_json(coeffs, field))

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "coeffs": self.coeffs.to_json()}

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def field(self) -> FieldTag:
        return self.coeffs.field

    @property
    def ambient(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree(self) -> int:
        """Actual degree; -1 for the zero polynomial."""
        z = self.field.is_zero
        vals = self.coeffs.values
        for k in range(len(vals) - 1, -1, -1):
            if not z(vals[k]):
                return k
        return -1

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("poly", self.coeffs))

    def _same(self, other: "Poly"):
        if other.field != self.field:
            raise IncompatibleField(f"{self.field} vs {other.field}")
        if other.ambient != self.ambient:
            raise DimensionMismatch(f"ambients {self.ambient} and {other.ambient}")

    def __add__(self, other):
        self._same(other)
        return Poly.from_vector(self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._same(other)
        return Poly.from_vector(self.coeffs - other.coeffs)

    def __neg__(self):
        return Poly.from_vector(-self.coeffs)

    def scale(self, a) -> "Poly":
        return Poly.from_vector(self.coeffs.scale(a))

    def __rmul__(self, a):
        if isinstance(a, (Scalar, int)) and not isinstance(a, bool):
            return self.scale(a)
        return NotImplemented

    def __call__(self, x) -> Scalar:
        return evaluate(self, x)

    def __repr__(self):
        return f"Poly({self.field.selector}, ambient={self.ambient}, [{', '.join(self.coeffs.to_json())}])"

    def pretty(self, var: str = "x") -> str:
        f = self.field
        terms = []
        for k, c in enumerate(self.coeffs.values):
            if f.is_zero(c):
                continue
            s = f.format(c)
            if k == 0:
                terms.append(s)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if s == "1" else f"-{mono}" if s == "-1" else f"{s}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def reverse_poly(p: Poly) -> Poly:
    """Coefficient reversal at the same ambient: ``x^n P(1/x)``."""
    return Poly.from_vector(reverse_vector(p.coeffs))


def paste_poly(p: Poly, q: Poly) -> Poly:
    """``P(x) + x^(n+1) Q(x)``, ambient ``n + m + 1``."""
    return Poly.from_vector(paste_vectors(p.coeffs, q.coeffs))


def is_palindromic_poly(p: Poly) -> bool:
    return is_palindromic(p.coeffs)


def is_antipalindromic_poly(p: Poly) -> bool:
    return is_antipalindromic(p.coeffs)


def decompose_poly(p: Poly) -> tuple[Poly, Poly]:
    if p.field.characteristic == 2:
        raise CharacteristicTwo()
    pal, anti = decompose(p.coeffs)
    return Poly.from_vector(pal), Poly.from_vector(anti)


def palindromic_poly_basis(n: int, field: FieldTag) -> list[Poly]:
    return [Poly.from_vector(v) for v in palindromic_basis(n + 1, field)]


def antipalindromic_poly_basis(n: int, field: FieldTag) -> list[Poly]:
    return [Poly.from_vector(v) for v in antipalindromic_basis(n + 1, field)]


# -- ring helpers on raw ascending coefficient lists --------------------------

def _trim(field: FieldTag, c: list) -> list:
    c = list(c)
    while c and field.is_zero(c[-1]):
        c.pop()
    return c


def mul_coeffs(field: FieldTag, a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    add, mul = field.add, field.mul
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = add(out[i + j], mul(x, y))
    return out


def divmod_coeffs(field: FieldTag, a: Sequence, b: Sequence) -> tuple[list, list]:
    b = _trim(field, b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = _trim(field, a)
    quot = [field.zero] * max(len(rem) - len(b) + 1, 0)
    lead_inv = field.inv(b[-1])
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        c = field.mul(rem[-1], lead_inv)
        quot[shift] = c
        for k, y in enumerate(b):
            rem[shift + k] = field.sub(rem[shift + k], field.mul(c, y))
        rem = _trim(field, rem[:-1])
    return quot, rem


def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.field != q.field:
        raise IncompatibleField(f"{p.field} vs {q.field}")
    return Poly(p.field, mul_coeffs(p.field, p.coeffs.values, q.coeffs.values), p.ambient + q.ambient)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder, both returned at their actual degree."""
    if p.field != q.field:
        raise IncompatibleField(f"{p.field} vs {q.field}")
    quot, rem = divmod_coeffs(p.field, p.coeffs.values, q.coeffs.values)
    return Poly(p.field, quot or [p.field.zero]), Poly(p.field, rem or [p.field.zero])


def evaluate(p: Poly, x) -> Scalar:
    f = p.field
    x = f.coerce(x)
    acc = f.zero
    for c in reversed(p.coeffs.values):
        acc = f.add(f.mul(acc, x), c)
    return Scalar(f, acc)
