"""Dense matrices with row, column and full Reversing and three Pasting modes.

Conventions: ``reverse_rows(A) = A @ J_m`` reverses every row,
``reverse_cols(A) = J_n @ A`` reverses every column and ``reverse_full``
reverses the row-major entry sequence (both at once).  ``J_k`` is the
exchange matrix from :mod:`pastrev.transform`.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import kernels
from .errors import CharacteristicTwo, DimensionMismatch, IncompatibleField, ParseError, Singular
from .scalar import FieldTag, Scalar
from .vectors import Vector, antipalindromic_basis, palindromic_basis


class Matrix:
    """Immutable ``rows x cols`` matrix stored as a flat row-major tuple."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldTag, entries: Iterable[Iterable] = (), cols: int | None = None):
        rows = [tuple(field.coerce(x) for x in r) for r in entries]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", tuple(x for r in rows for x in r))

    @classmethod
    def _raw(cls, field: FieldTag, rows: int, cols: int, data) -> "Matrix":
        a = cls.__new__(cls)
        object.__setattr__(a, "field", field)
        object.__setattr__(a, "rows", rows)
        object.__setattr__(a, "cols", cols)
        object.__setattr__(a, "data", tuple(data))
        return a

    @classmethod
    def zeros(cls, field: FieldTag, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, rows, cols, (field.zero,) * (rows * cols))

    @classmethod
    def identity(cls, field: FieldTag, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, n, n, (o if i == j else z for i in range(n) for j in range(n)))

    @classmethod
    def from_rows(cls, field: FieldTag, vectors: Sequence[Vector], cols: int | None = None) -> "Matrix":
        if cols is None:
            cols = len(vectors[0]) if vectors else 0
        for v in vectors:
            if v.field != field:
                raise IncompatibleField(f"{v.field} vs {field}")
            if len(v) != cols:
                raise DimensionMismatch("rows of unequal length")
        return cls._raw(field, len(vectors), cols, (x for v in vectors for x in v.values))

    @classmethod
    def parse(cls, text: str, field: FieldTag) -> "Matrix":
        """Inline syntax: rows separated by ``;``, entries by ``,``."""
        text = text.strip()
        if not text:
            return cls._raw(field, 0, 0, ())
        rows = [[field.parse(t) for t in r.split(",")] for r in text.split(";")]
        return cls(field, rows)

    @classmethod
    def from_json(cls, data, field: FieldTag) -> "Matrix":
        try:
            rows, cols, entries = int(data["rows"]), int(data["cols"]), data["entries"]
        except (KeyError, TypeError, ValueError):
            raise ParseError('a matrix needs "rows", "cols" and "entries"') from None
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ParseError("entries do not match the declared shape")
        return cls._raw(field, rows, cols, (field.parse(str(x)) for r in entries for x in r))

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[fmt(x) for x in r] for r in self.row_tuples()],
        }

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row_tuples(self) -> list[tuple]:
        m, d = self.cols, self.data
        return [d[i * m:(i + 1) * m] for i in range(self.rows)]

    def row(self, i: int) -> Vector:
        m = self.cols
        return Vector._raw(self.field, self.data[i * m:(i + 1) * m])

    def col(self, j: int) -> Vector:
        return Vector._raw(self.field, self.data[j::self.cols] if self.cols else ())

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return Scalar(self.field, self.data[i * self.cols + j])

    def flatten(self) -> Vector:
        return Vector._raw(self.field, self.data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.field != self.field or other.shape != self.shape:
            return False
        if self.field.exact:
            return self.data == other.data
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.data, other.data))

    def __hash__(self):
        if not self.field.exact:
            return hash((self.field, self.shape))
        return hash((self.field, self.shape, self.data))

    def _same(self, other: "Matrix") -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other.field != self.field:
            raise IncompatibleField(f"{self.field} vs {other.field}")
        if other.shape != self.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape}")

    def __add__(self, other):
        self._same(other)
        return Matrix._raw(self.field, self.rows, self.cols, map(self.field.add, self.data, other.data))

    def __sub__(self, other):
        self._same(other)
        return Matrix._raw(self.field, self.rows, self.cols, map(self.field.sub, self.data, other.data))

    def __neg__(self):
        return Matrix._raw(self.field, self.rows, self.cols, map(self.field.neg, self.data))

    def scale(self, a) -> "Matrix":
        f = self.field
        c = f.coerce(a)
        return Matrix._raw(f, self.rows, self.cols, (f.mul(c, x) for x in self.data))

    def __rmul__(self, a):
        if isinstance(a, (Scalar, int)) and not isinstance(a, bool):
            return self.scale(a)
        return NotImplemented

    def __matmul__(self, other):
        return matmul(self, other)

    def is_zero(self) -> bool:
        z = self.field.is_zero
        return all(z(x) for x in self.data)

    def __repr__(self):
        body = "; ".join(", ".join(self.field.format(x) for x in r) for r in self.row_tuples())
        return f"Matrix({self.field.selector}, {self.rows}x{self.cols}, [{body}])"


class QuadDecomposition(NamedTuple):
    """Row/column symmetry components; first letter is the row type."""

    pp: Matrix
    pa: Matrix
    ap: Matrix
    aa: Matrix


# -- Reversing and Pasting ---------------------------------------------------

def reverse_rows(a: Matrix) -> Matrix:
    return Matrix._raw(a.field, a.rows, a.cols, (x for r in a.row_tuples() for x in r[::-1]))


def reverse_cols(a: Matrix) -> Matrix:
    return Matrix._raw(a.field, a.rows, a.cols, (x for r in a.row_tuples()[::-1] for x in r))


def reverse_full(a: Matrix) -> Matrix:
    return Matrix._raw(a.field, a.rows, a.cols, a.data[::-1])


def _check_field(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise IncompatibleField(f"{a.field} vs {b.field}")


def paste_rows(a: Matrix, c: Matrix) -> Matrix:
    """Horizontal Pasting: row i of the result is row_i(a) followed by row_i(c)."""
    _check_field(a, c)
    if a.rows != c.rows:
        raise DimensionMismatch(f"paste_rows needs equal row counts, got {a.rows} and {c.rows}")
    data = (x for r, s in zip(a.row_tuples(), c.row_tuples()) for x in r + s)
    return Matrix._raw(a.field, a.rows, a.cols + c.cols, data)


def paste_cols(a: Matrix, b: Matrix) -> Matrix:
    """Vertical Pasting: a on top of b."""
    _check_field(a, b)
    if a.cols != b.cols:
        raise DimensionMismatch(f"paste_cols needs equal column counts, got {a.cols} and {b.cols}")
    return Matrix._raw(a.field, a.rows + b.rows, a.cols, a.data + b.data)


def paste_blocks(a: Matrix, b: Matrix) -> Matrix:
    """Block-diagonal Pasting ``[[a, 0], [0, b]]``."""
    _check_field(a, b)
    z = a.field.zero
    left_pad, right_pad = (z,) * a.cols, (z,) * b.cols
    data = [x for r in a.row_tuples() for x in r + right_pad]
    data += [x for r in b.row_tuples() for x in left_pad + r]
    return Matrix._raw(a.field, a.rows + b.rows, a.cols + b.cols, data)


# -- classical operations ----------------------------------------------------

def transpose(a: Matrix) -> Matrix:
    n, m, d = a.rows, a.cols, a.data
    return Matrix._raw(a.field, m, n, (d[i * m + j] for j in range(m) for i in range(n)))


def trace(a: Matrix) -> Scalar:
    if not a.is_square:
        raise DimensionMismatch(f"trace of a {a.rows}x{a.cols} matrix")
    f = a.field
    s = f.zero
    for i in range(a.rows):
        s = f.add(s, a.data[i * a.cols + i])
    return Scalar(f, s)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    _check_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    f = a.field
    n, k, m = a.rows, a.cols, b.cols
    if f.kind == "prime":
        return Matrix._raw(f, n, m, kernels.matmul_mod_p(a.data, b.data, n, k, m, f.modulus))
    add, mul, zero = f.add, f.mul, f.zero
    x, y = a.data, b.data
    out = []
    for i in range(n):
        for j in range(m):
            s = zero
            for t in range(k):
                s = add(s, mul(x[i * k + t], y[t * m + j]))
            out.append(s)
    return Matrix._raw(f, n, m, out)


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix."""
    n = len(rows)
    m = [r[:] for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1] if n else 1


def _rational_det(a: Matrix) -> Fraction:
    scale = 1
    rows = []
    for r in a.row_tuples():
        lcm = math.lcm(*(x.denominator for x in r)) if r else 1
        scale *= lcm
        rows.append([int(x * lcm) for x in r])
    return Fraction(_bareiss_det(rows), scale)


def _float_det(a: Matrix) -> float:
    n, tol = a.rows, a.field.tolerance
    m = [list(r) for r in a.row_tuples()]
    det = 1.0
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(m[r][k]))
        if abs(m[piv][k]) <= tol:
            return 0.0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det *= m[k][k]
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return det


def det(a: Matrix) -> Scalar:
    if not a.is_square:
        raise DimensionMismatch(f"determinant of a {a.rows}x{a.cols} matrix")
    f = a.field
    if f.kind == "prime":
        value = kernels.det_mod_p(a.data, a.rows, f.modulus)
    elif f.kind == "rational":
        value = _rational_det(a)
    else:
        value = _float_det(a)
    return Scalar(f, value)


def _gauss_jordan(a: Matrix) -> Matrix | None:
    """Inverse over an exact or float field; ``None`` if singular."""
    f = a.field
    n = a.rows
    floating = not f.exact
    m = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(a.row_tuples())]
    for k in range(n):
        if floating:
            piv = max(range(k, n), key=lambda r: abs(m[r][k]))
            if abs(m[piv][k]) <= f.tolerance:
                return None
        else:
            piv = next((r for r in range(k, n) if m[r][k] != 0), None)
            if piv is None:
                return None
        m[k], m[piv] = m[piv], m[k]
        inv = f.inv(m[k][k])
        m[k] = [f.mul(inv, x) for x in m[k]]
        for r in range(n):
            if r != k:
                c = m[r][k]
                if c != 0:
                    m[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r], m[k])]
    return Matrix._raw(f, n, n, (x for r in m for x in r[n:]))


def inverse(a: Matrix) -> Matrix:
    if not a.is_square:
        raise DimensionMismatch(f"inverse of a {a.rows}x{a.cols} matrix")
    f = a.field
    if f.kind == "prime":
        data = kernels.inverse_mod_p(a.data, a.rows, f.modulus)
        out = None if data is None else Matrix._raw(f, a.rows, a.rows, data)
    else:
        out = _gauss_jordan(a)
    if out is None:
        raise Singular("matrix is singular")
    return out


def rank(a: Matrix) -> int:
    f = a.field
    n, m = a.rows, a.cols
    if f.kind == "prime":
        return kernels.rank_mod_p(a.data, n, m, f.modulus)
    rows = [list(r) for r in a.row_tuples()]
    r = 0
    for col in range(m):
        if r == n:
            break
        if f.exact:
            piv = next((i for i in range(r, n) if rows[i][col] != 0), None)
        else:
            best = max(range(r, n), key=lambda i: abs(rows[i][col]))
            piv = best if abs(rows[best][col]) > f.tolerance else None
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = f.inv(rows[r][col])
        for i in range(r + 1, n):
            c = f.mul(rows[i][col], inv)
            rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def family_rank(items: Sequence, field: FieldTag) -> int:
    """Rank of a family of vectors or matrices, each flattened to one row."""
    flat = [x.values if isinstance(x, Vector) else x.data for x in items]
    width = len(flat[0]) if flat else 0
    return rank(Matrix._raw(field, len(flat), width, (v for r in flat for v in r)))


# -- symmetry predicates -----------------------------------------------------

def _all_pal(seqs, eq) -> bool:
    for s in seqs:
        n = len(s)
        for i in range(n // 2):
            if not eq(s[i], s[n - 1 - i]):
                return False
    return True


def _all_anti(seqs, eq, neg) -> bool:
    for s in seqs:
        n = len(s)
        for i in range((n + 1) // 2):
            if not eq(s[i], neg(s[n - 1 - i])):
                return False
    return True


def _columns(a: Matrix) -> list[tuple]:
    return [a.data[j::a.cols] for j in range(a.cols)] if a.rows else []


def is_row_palindromic(a: Matrix) -> bool:
    return _all_pal(a.row_tuples(), a.field.eq)


def is_row_antipalindromic(a: Matrix) -> bool:
    return _all_anti(a.row_tuples(), a.field.eq, a.field.neg)


def is_col_palindromic(a: Matrix) -> bool:
    return _all_pal(_columns(a), a.field.eq)


def is_col_antipalindromic(a: Matrix) -> bool:
    return _all_anti(_columns(a), a.field.eq, a.field.neg)


def is_full_palindromic(a: Matrix) -> bool:
    return _all_pal([a.data], a.field.eq)


def is_full_antipalindromic(a: Matrix) -> bool:
    return _all_anti([a.data], a.field.eq, a.field.neg)


SYMMETRY_MODES = (
    "row-pal", "row-anti", "col-pal", "col-anti",
    "pp", "pa", "ap", "aa",
    "full-pal", "full-anti",
)

_ROW_TEST = {"p": is_row_palindromic, "a": is_row_antipalindromic}
_COL_TEST = {"p": is_col_palindromic, "a": is_col_antipalindromic}


def has_symmetry(a: Matrix, mode: str) -> bool:
    """Membership test for a symmetry subspace named as in :data:`SYMMETRY_MODES`."""
    if mode == "row-pal":
        return is_row_palindromic(a)
    if mode == "row-anti":
        return is_row_antipalindromic(a)
    if mode == "col-pal":
        return is_col_palindromic(a)
    if mode == "col-anti":
        return is_col_antipalindromic(a)
    if mode == "full-pal":
        return is_full_palindromic(a)
    if mode == "full-anti":
        return is_full_antipalindromic(a)
    if mode in ("pp", "pa", "ap", "aa"):
        return _ROW_TEST[mode[0]](a) and _COL_TEST[mode[1]](a)
    raise ValueError(f"unknown symmetry mode {mode!r}")


def expected_dimension(n: int, m: int, mode: str) -> int:
    """Closed-form dimension of a symmetry subspace of n x m matrices."""
    up = lambda k: (k + 1) // 2  # noqa: E731
    down = lambda k: k // 2  # noqa: E731
    return {
        "row-pal": n * up(m),
        "row-anti": n * down(m),
        "col-pal": m * up(n),
        "col-anti": m * down(n),
        "pp": up(n) * up(m),
        "pa": down(n) * up(m),
        "ap": up(n) * down(m),
        "aa": down(n) * down(m),
        "full-pal": up(n * m),
        "full-anti": down(n * m),
    }[mode]


def _outer(u: Vector, v: Vector) -> Matrix:
    f = u.field
    return Matrix._raw(f, len(u), len(v), (f.mul(a, b) for a in u.values for b in v.values))


def _vec_basis(kind: str, n: int, field: FieldTag) -> list[Vector]:
    return palindromic_basis(n, field) if kind == "p" else antipalindromic_basis(n, field)


def symmetry_basis(n: int, m: int, mode: str, field: FieldTag) -> list[Matrix]:
    """A basis of the n x m symmetry subspace named by ``mode``.

    Row modes place a vector basis element in one row at a time, column
    modes in one column; the double modes are outer products (column type
    from the first letter's partner, see :class:`QuadDecomposition`); full
    modes reshape a basis of K^(nm).
    """
    if mode not in SYMMETRY_MODES:
        raise ValueError(f"unknown symmetry mode {mode!r}")
    anti = mode.endswith("anti") or mode in ("pa", "ap", "aa")
    if anti and field.characteristic == 2:
        raise CharacteristicTwo(f"{mode} basis")
    if mode.startswith("row-"):
        out = []
        for i in range(n):
            for b in _vec_basis(mode[4], m, field):
                data = [field.zero] * (n * m)
                data[i * m:(i + 1) * m] = b.values
                out.append(Matrix._raw(field, n, m, data))
        return out
    if mode.startswith("col-"):
        out = []
        for j in range(m):
            for b in _vec_basis(mode[4], n, field):
                data = [field.zero] * (n * m)
                data[j::m] = b.values
                out.append(Matrix._raw(field, n, m, data))
        return out
    if mode.startswith("full-"):
        return [Matrix._raw(field, n, m, b.values) for b in _vec_basis(mode[5], n * m, field)]
    row_kind, col_kind = mode[0], mode[1]
    return [_outer(u, v) for u in _vec_basis(col_kind, n, field) for v in _vec_basis(row_kind, m, field)]


# -- decompositions ----------------------------------------------------------

def _inv_of(field: FieldTag, k: int, what: str):
    if field.characteristic == 2:
        raise CharacteristicTwo(what)
    return field.inv(field.from_int(k))


def _combine(a: Matrix, scale, parts: Sequence[tuple[int, Matrix]]) -> Matrix:
    f = a.field
    add, sub, mul = f.add, f.sub, f.mul
    acc = [f.zero] * len(a.data)
    for sign, b in parts:
        op = add if sign > 0 else sub
        acc = [op(x, y) for x, y in zip(acc, b.data)]
    return Matrix._raw(f, a.rows, a.cols, (mul(scale, x) for x in acc))


def decompose_rows(a: Matrix) -> tuple[Matrix, Matrix]:
    """Row-palindromic and row-antipalindromic parts."""
    h = _inv_of(a.field, 2, "row decomposition")
    r = reverse_rows(a)
    return _combine(a, h, [(1, a), (1, r)]), _combine(a, h, [(1, a), (-1, r)])


def decompose_cols(a: Matrix) -> tuple[Matrix, Matrix]:
    """Column-palindromic and column-antipalindromic parts."""
    h = _inv_of(a.field, 2, "column decomposition")
    c = reverse_cols(a)
    return _combine(a, h, [(1, a), (1, c)]), _combine(a, h, [(1, a), (-1, c)])


def decompose_rc(a: Matrix) -> QuadDecomposition:
    """Split ``a`` into the four row/column symmetry components.

    Each component is ``(A +- A J +- J A +- J A J) / 4`` where the sign of the
    ``A J`` term selects the row type and the sign of ``J A`` the column type.
    """
    q = _inv_of(a.field, 4, "decomposition")
    r, c = reverse_rows(a), reverse_cols(a)
    rc = reverse_full(a)
    parts = {}
    for name, sr, sc in (("pp", 1, 1), ("pa", 1, -1), ("ap", -1, 1), ("aa", -1, -1)):
        parts[name] = _combine(a, q, [(1, a), (sr, r), (sc, c), (sr * sc, rc)])
    return QuadDecomposition(**parts)


def decompose_full(a: Matrix) -> tuple[Matrix, Matrix]:
    """(A + R(A))/2 and (A - R(A))/2 for the full Reversing R."""
    h = _inv_of(a.field, 2, "decomposition")
    r = reverse_full(a)
    return _combine(a, h, [(1, a), (1, r)]), _combine(a, h, [(1, a), (-1, r)])
