"""The (n-1)-ary vector product on K^n and its behaviour under Reversing."""
from __future__ import annotations

from typing import Sequence

from .errors import DimensionMismatch, IncompatibleField, IndexOutOfRange
from .matrices import Matrix, det
from .vectors import Vector


def minor_drop_col(m: Matrix, k: int) -> Matrix:
    """Delete column ``k`` (1-based) of an (n-1) x n matrix."""
    n = m.cols
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"column {k} outside 1..{n}")
    keep = [j for j in range(n) if j != k - 1]
    return Matrix._raw(m.field, m.rows, n - 1, (r[j] for r in m.row_tuples() for j in keep))


def cross_input(rows: Sequence[Vector]) -> Matrix:
    """Stack n-1 vectors of length n into a matrix, validating the shape."""
    if not rows:
        raise DimensionMismatch("need at least one row (n >= 2)")
    field = rows[0].field
    n = len(rows[0])
    if n < 2 or len(rows) != n - 1:
        raise DimensionMismatch(f"need n-1 rows of length n, got {len(rows)} rows of length {n}")
    for v in rows:
        if v.field != field:
            raise IncompatibleField(f"{v.field} vs {field}")
        if len(v) != n:
            raise DimensionMismatch("rows of unequal length")
    return Matrix.from_rows(field, rows, n)


def generalized_cross_matrix(m: Matrix) -> Vector:
    """Entry k is ``(-1)^(1+k) det(minor_drop_col(m, k))``."""
    n = m.cols
    if n < 2 or m.rows != n - 1:
        raise DimensionMismatch(f"expected an (n-1) x n matrix, got {m.rows}x{m.cols}")
    f = m.field
    out = []
    for k in range(1, n + 1):
        d = det(minor_drop_col(m, k)).value
        out.append(d if k % 2 == 1 else f.neg(d))
    return Vector._raw(f, out)


def generalized_cross(rows: Sequence[Vector]) -> Vector:
    return generalized_cross_matrix(cross_input(rows))


def cross_reversal_sign(n: int) -> int:
    """``(-1)^ceil(3n/2)``: the sign relating the product of reversed rows to the reversed product."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return -1 if (3 * n + 1) // 2 % 2 else 1
