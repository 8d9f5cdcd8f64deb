"""Fields and scalars.

Three fields share one interface: exact rationals (``QQ``), prime fields
``GF(p)`` and machine floats (``F64``).  A field object carries the
arithmetic on *raw* values (``Fraction``, ``int`` residue, ``float``); the
containers in :mod:`pastrev.vectors` and :mod:`pastrev.matrices` store raw
values and call the field directly, while :class:`Scalar` wraps a single
value for public use.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterator

from .errors import DivisionByZero, IncompatibleField, ParseError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_INT_RE = re.compile(r"^\s*[+-]?\d+\s*$")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldTag:
    """Common base; concrete fields are the three subclasses below."""

    kind = "abstract"

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def exact(self) -> bool:
        return True

    @property
    def selector(self) -> str:
        raise NotImplementedError

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def __call__(self, value) -> "Scalar":
        """``GF(7)(3)`` builds a :class:`Scalar`."""
        return Scalar(self, self.coerce(value))

    def __str__(self) -> str:
        return self.selector


@dataclass(frozen=True)
class RationalField(FieldTag):
    kind = "rational"

    @property
    def tolerance(self) -> float:
        return 0.0

    @property
    def modulus(self) -> int:
        return 0

    @property
    def selector(self) -> str:
        return "q"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x: Any) -> Fraction:
        if isinstance(x, Scalar):
            self.check(x.field)
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot make a rational from {x!r}")

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ParseError(f"not a rational: {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(num, den)

    def format(self, a: Fraction) -> str:
        return str(a)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / a

    def check(self, other: FieldTag) -> None:
        if other != self:
            raise IncompatibleField(f"{self} vs {other}")


@dataclass(frozen=True)
class PrimeField(FieldTag):
    modulus: int

    kind = "prime"

    def __post_init__(self):
        if not isinstance(self.modulus, int) or not is_prime(self.modulus):
            raise ValueError(f"modulus must be prime, got {self.modulus!r}")

    @property
    def tolerance(self) -> float:
        return 0.0

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def selector(self) -> str:
        return f"gf:{self.modulus}"

    def from_int(self, n: int) -> int:
        return n % self.modulus

    def coerce(self, x: Any) -> int:
        p = self.modulus
        if isinstance(x, Scalar):
            self.check(x.field)
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise DivisionByZero(f"denominator of {x} vanishes mod {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot make a GF({p}) element from {x!r}")

    def parse(self, text: str) -> int:
        if not _INT_RE.match(text):
            raise ParseError(f"not a GF({self.modulus}) residue: {text!r}")
        return int(text) % self.modulus

    def format(self, a: int) -> str:
        return str(a)

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def inv(self, a):
        if a % self.modulus == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, -1, self.modulus)

    def elements(self) -> Iterator[int]:
        """Residues in ascending order; the exhaustive enumeration order."""
        return iter(range(self.modulus))

    def check(self, other: FieldTag) -> None:
        if other != self:
            raise IncompatibleField(f"{self} vs {other}")


@dataclass(frozen=True)
class FloatField(FieldTag):
    tolerance: float = 1e-9

    kind = "float"

    def __post_init__(self):
        if not self.tolerance >= 0:
            raise ValueError("tolerance must be non-negative")

    @property
    def modulus(self) -> int:
        return 0

    @property
    def exact(self) -> bool:
        return False

    @property
    def selector(self) -> str:
        return "f64" if self.tolerance == 1e-9 else f"f64:{self.tolerance!r}"

    def from_int(self, n: int) -> float:
        return float(n)

    def coerce(self, x: Any) -> float:
        if isinstance(x, Scalar):
            self.check(x.field)
            return x.value
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, (int, float, Fraction)):
            return float(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot make a float from {x!r}")

    def parse(self, text: str) -> float:
        try:
            if "/" in text:
                return float(RATIONALS.parse(text))
            value = float(text)
        except ValueError:
            raise ParseError(f"not a decimal literal: {text!r}") from None
        if not math.isfinite(value):
            raise ParseError(f"non-finite literal: {text!r}")
        return value

    def format(self, a: float) -> str:
        return repr(a)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1.0 / a

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tolerance

    def check(self, other: FieldTag) -> None:
        if other != self:
            raise IncompatibleField(f"{self} vs {other}")


RATIONALS = QQ = RationalField()
F64 = FloatField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(selector: str) -> FieldTag:
    """Map ``"q"``, ``"gf:p"`` or ``"f64"`` (optionally ``"f64:tol"``) to a field."""
    s = selector.strip().lower()
    if s in ("q", "rational"):
        return QQ
    if s.startswith("gf:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ParseError(f"bad prime in {selector!r}") from None
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if s == "f64":
        return F64
    if s.startswith("f64:"):
        try:
            return FloatField(float(s[4:]))
        except ValueError:
            raise ParseError(f"bad tolerance in {selector!r}") from None
    raise ParseError(f"unknown field selector {selector!r} (use q, gf:p or f64)")


class Scalar:
    """An immutable field element.

    Arithmetic with another Scalar requires the same field; plain Python
    integers are accepted and mapped into the field.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldTag, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", field.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise IncompatibleField(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, self.field.div(b, self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        f = self.field
        base = self.value if k >= 0 else f.inv(self.value)
        out = f.one
        for _ in range(abs(k)):
            out = f.mul(out, base)
        return Scalar(f, out)

    def __eq__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self.field.eq(self.value, b)

    def __hash__(self):
        if not self.field.exact:
            return hash(self.field)
        return hash((self.field, self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def inverse(self) -> "Scalar":
        return Scalar(self.field, self.field.inv(self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"Scalar({self.field.selector}, {self})"


def scalar_inv(x: Scalar) -> Scalar:
    return x.inverse()


def characteristic(tag: FieldTag) -> int:
    return tag.characteristic


def parse_scalar(text: str, field: FieldTag) -> Scalar:
    return Scalar(field, field.parse(text))
