"""Input slots: how a law's arguments are enumerated, sampled and serialised."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..matrices import Matrix
from ..polynomials import Poly
from ..scalar import FieldTag, Scalar
from ..vectors import Vector, antipalindromic_basis, linear_combination, palindromic_basis
from .rng import CounterRNG


@dataclass(frozen=True)
class Slot:
    """One named argument of a law.

    ``kind`` is one of ``scalar``, ``vector``, ``pal-vector``, ``anti-vector``,
    ``poly`` or ``matrix``; ``shape`` is ``(n,)`` for vectors, ``(ambient,)``
    for polynomials and ``(rows, cols)`` for matrices.
    """

    name: str
    kind: str
    shape: tuple[int, ...] = ()

    @property
    def free_dim(self) -> int:
        """Number of free field coordinates that determine one value."""
        if self.kind == "scalar":
            return 1
        if self.kind == "vector":
            return self.shape[0]
        if self.kind == "pal-vector":
            return (self.shape[0] + 1) // 2
        if self.kind == "anti-vector":
            return self.shape[0] // 2
        if self.kind == "poly":
            return self.shape[0] + 1
        if self.kind == "matrix":
            return self.shape[0] * self.shape[1]
        raise ValueError(f"unknown slot kind {self.kind!r}")

    def build(self, field: FieldTag, coords):
        """Turn a tuple of raw coordinates into the slot's value."""
        k = self.kind
        if k == "scalar":
            return Scalar(field, coords[0])
        if k == "vector":
            return Vector._raw(field, coords)
        if k == "pal-vector":
            return linear_combination(coords, palindromic_basis(self.shape[0], field), field, self.shape[0])
        if k == "anti-vector":
            return linear_combination(coords, antipalindromic_basis(self.shape[0], field), field, self.shape[0])
        if k == "poly":
            return Poly.from_vector(Vector._raw(field, coords))
        return Matrix._raw(field, self.shape[0], self.shape[1], coords)

    def enumerate(self, field: FieldTag) -> list:
        """All values in lexicographic coordinate order (residues ascending)."""
        elems = list(field.elements())
        return [self.build(field, c) for c in itertools.product(elems, repeat=self.free_dim)]

    def sample(self, field: FieldTag, rng: CounterRNG):
        return self.build(field, tuple(rng.element(field) for _ in range(self.free_dim)))

    def to_json(self, value):
        if self.kind == "scalar":
            return str(value)
        return value.to_json()

    def from_json(self, data, field: FieldTag):
        if self.kind == "scalar":
            return Scalar(field, field.parse(str(data)))
        if self.kind in ("vector", "pal-vector", "anti-vector"):
            return Vector.from_json(data, field)
        if self.kind == "poly":
            return Poly.from_json(data, field)
        return Matrix.from_json(data, field)


def S(name: str) -> Slot:
    return Slot(name, "scalar")


def V(name: str, n: int) -> Slot:
    return Slot(name, "vector", (n,))


def PV(name: str, n: int) -> Slot:
    return Slot(name, "pal-vector", (n,))


def AV(name: str, n: int) -> Slot:
    return Slot(name, "anti-vector", (n,))


def P(name: str, ambient: int) -> Slot:
    return Slot(name, "poly", (ambient,))


def M(name: str, rows: int, cols: int) -> Slot:
    return Slot(name, "matrix", (rows, cols))
