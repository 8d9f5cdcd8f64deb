"""The law catalog.

Each law is a predicate over named inputs (see :mod:`.domain`).  A law's
``status`` says how the suite should read its verdict:

* ``proved``: must hold on every case;
* ``conditional``: holds once an extra hypothesis is added (it is part of
  the predicate) and must hold on every case;
* ``refuted``: the statement as usually claimed is false; the suite expects
  an exhaustive search to produce a witness.

Shape parameters ``n``, ``m``, ``p`` are interpreted per law; the slot
lists below say how.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, NamedTuple

from ..crossn import cross_reversal_sign, generalized_cross, generalized_cross_matrix, minor_drop_col
from ..errors import UnknownLaw
from ..matrices import (
    Matrix,
    decompose_cols,
    decompose_full,
    decompose_rc,
    decompose_rows,
    det,
    expected_dimension,
    family_rank,
    has_symmetry,
    inverse,
    is_col_antipalindromic,
    is_col_palindromic,
    is_full_antipalindromic,
    is_full_palindromic,
    is_row_antipalindromic,
    is_row_palindromic,
    matmul,
    paste_blocks,
    paste_cols,
    paste_rows,
    rank,
    reverse_cols,
    reverse_full,
    reverse_rows,
    symmetry_basis,
    trace,
    transpose,
)
from ..polynomials import (
    Poly,
    antipalindromic_poly_basis,
    decompose_poly,
    evaluate,
    is_antipalindromic_poly,
    is_palindromic_poly,
    palindromic_poly_basis,
    paste_poly,
    reverse_poly,
)
from ..scalar import FieldTag, Scalar
from ..transform import (
    Permutation,
    apply_matrix,
    apply_permutation,
    characteristic_polynomial,
    divides,
    eigenspace_basis,
    evaluate_at_matrix,
    exchange_matrix,
    permutation_matrix,
    projector_matrices,
    reversing_char_poly,
    reversing_min_poly,
)
from ..vectors import (
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
from .domain import AV, PV, M, P, S, Slot, V


class Ctx(NamedTuple):
    field: FieldTag
    n: int
    m: int
    p: int


@dataclass(frozen=True)
class Law:
    id: str
    alias: str
    statement: str
    status: str
    slots: Callable[[int, int, int], list[Slot]]
    predicate: Callable[..., bool]
    defaults: tuple[int, int, int]
    odd_char: bool = False
    requires: Callable[[int, int, int], str | None] | None = None

    @property
    def expected(self) -> str:
        return "fail" if self.status == "refuted" else "pass"

    @property
    def searchable(self) -> bool:
        return bool(self.slots(*self.defaults))


CATALOG: dict[str, Law] = {}
_ALIASES: dict[str, str] = {}


def law(id, alias, statement, *, slots, defaults=(0, 0, 0), status="proved", odd_char=False, requires=None):
    def register(fn):
        CATALOG[id] = Law(id, alias, statement, status, slots, fn, defaults, odd_char, requires)
        _ALIASES[alias.lower()] = id
        return fn

    return register


def get_law(name: str) -> Law:
    key = name.strip()
    if key.upper() in CATALOG:
        return CATALOG[key.upper()]
    if key.lower() in _ALIASES:
        return CATALOG[_ALIASES[key.lower()]]
    raise UnknownLaw(name)


# -- helpers -----------------------------------------------------------------

def _sign(f: FieldTag, k: int):
    return f.one if k % 2 == 0 else f.neg(f.one)


@lru_cache(maxsize=None)
def _sym_basis(n, m, mode, field):
    return tuple(symmetry_basis(n, m, mode, field))


@lru_cache(maxsize=None)
def _vec_bases(n, field):
    return tuple(palindromic_basis(n, field)), tuple(antipalindromic_basis(n, field))


@lru_cache(maxsize=None)
def _basis_rank(items, field):
    return family_rank(list(items), field)


def _in_span(basis, x, field) -> bool:
    return family_rank(list(basis) + [x], field) == _basis_rank(basis, field)


def _implies(a: bool, b: bool) -> bool:
    return b or not a


def _at_least(k: int, what: str = "n"):
    def check(n, m, p):
        value = {"n": n, "m": m, "p": p}[what]
        return None if value >= k else f"needs {what} >= {k}"

    return check


def _square_rows(r: int):
    return lambda n, m, p: None if n <= r else f"needs n <= {r}"


# -- vectors -----------------------------------------------------------------

@law("V1", "V-involution", "reverse(reverse(v)) = v",
     slots=lambda n, m, p: [V("v", n)], defaults=(5, 0, 0))
def _v1(c, v):
    return reverse_vector(reverse_vector(v)) == v


@law("V2", "V-linearity", "reverse(a v + b w) = a reverse(v) + b reverse(w)",
     slots=lambda n, m, p: [S("a"), S("b"), V("v", n), V("w", n)], defaults=(3, 0, 0))
def _v2(c, a, b, v, w):
    return reverse_vector(a * v + b * w) == a * reverse_vector(v) + b * reverse_vector(w)


@law("V3", "V-dot", "v . w = reverse(v) . reverse(w)",
     slots=lambda n, m, p: [V("v", n), V("w", n)], defaults=(4, 0, 0))
def _v3(c, v, w):
    return dot(v, w) == dot(reverse_vector(v), reverse_vector(w))


@law("V4", "V-cross", "reverse(v x w) = reverse(w) x reverse(v) in K^3",
     slots=lambda n, m, p: [V("v", 3), V("w", 3)], defaults=(3, 0, 0))
def _v4(c, v, w):
    return reverse_vector(cross3(v, w)) == cross3(reverse_vector(w), reverse_vector(v))


@law("V5", "V-paste-reverse", "reverse(v <> w) = reverse(w) <> reverse(v)",
     slots=lambda n, m, p: [V("v", n), V("w", m)], defaults=(3, 2, 0))
def _v5(c, v, w):
    return reverse_vector(paste_vectors(v, w)) == paste_vectors(reverse_vector(w), reverse_vector(v))


@law("V6", "V-paste-assoc", "(u <> v) <> w = u <> (v <> w); length n + m + p",
     slots=lambda n, m, p: [V("u", n), V("v", m), V("w", p)], defaults=(2, 1, 2))
def _v6(c, u, v, w):
    left = paste_vectors(paste_vectors(u, v), w)
    return left == paste_vectors(u, paste_vectors(v, w)) and len(left) == c.n + c.m + c.p


@law("V7", "V-closure",
     "palindromic and antipalindromic vectors are closed under linear combination",
     slots=lambda n, m, p: [S("a"), S("b"), PV("v", n), PV("w", n), AV("x", n), AV("y", n)],
     defaults=(3, 0, 0), odd_char=True)
def _v7(c, a, b, v, w, x, y):
    return (is_palindromic(v) and is_palindromic(w) and is_palindromic(a * v + b * w)
            and is_antipalindromic(x) and is_antipalindromic(y) and is_antipalindromic(a * x + b * y))


@law("V8", "V-dimension",
     "dim W_p = ceil(n/2), dim W_a = floor(n/2); the bases span exactly the symmetric vectors",
     slots=lambda n, m, p: [V("v", n)], defaults=(4, 0, 0), odd_char=True)
def _v8(c, v):
    f, n = c.field, c.n
    bp, ba = _vec_bases(n, f)
    return (
        _basis_rank(bp, f) == (n + 1) // 2
        and _basis_rank(ba, f) == n // 2
        and all(is_palindromic(b) for b in bp)
        and all(is_antipalindromic(b) for b in ba)
        and is_palindromic(v) == _in_span(bp, v, f)
        and is_antipalindromic(v) == _in_span(ba, v, f)
    )


@law("V9", "V-cross-symmetry",
     "pal x pal is antipalindromic, anti x anti = 0, pal x anti is palindromic (K^3)",
     slots=lambda n, m, p: [PV("v", 3), PV("w", 3), AV("x", 3), AV("y", 3)],
     defaults=(3, 0, 0), odd_char=True)
def _v9(c, v, w, x, y):
    return (
        is_antipalindromic(cross3(v, w))
        and cross3(x, y).is_zero()
        and is_palindromic(cross3(v, x))
        and is_palindromic(cross3(x, v))
    )


@law("V10", "V-decompose",
     "V = W_p (+) W_a: v = (v + reverse v)/2 + (v - reverse v)/2 uniquely",
     slots=lambda n, m, p: [V("v", n)], defaults=(5, 0, 0), odd_char=True)
def _v10(c, v):
    pal, anti = decompose(v)
    return (
        pal + anti == v
        and is_palindromic(pal)
        and is_antipalindromic(anti)
        and _implies(is_palindromic(v) and is_antipalindromic(v), v.is_zero())
    )


# -- Reversing as a linear map -------------------------------------------------

@law("T1", "T-exchange", "J_n v = reverse(v), J_n^2 = I, J_n symmetric, det J_n = (-1)^floor(n/2)",
     slots=lambda n, m, p: [V("v", n)], defaults=(4, 0, 0))
def _t1(c, v):
    f, n = c.field, c.n
    j = exchange_matrix(n, f)
    return (
        apply_matrix(j, v) == reverse_vector(v)
        and matmul(j, j) == Matrix.identity(f, n)
        and transpose(j) == j
        and det(j).value == _sign(f, n // 2)
    )


@law("T2", "T-minpoly",
     "x^2 - 1 (x - 1 when n = 1) annihilates J_k, no monic linear polynomial does for k >= 2, "
     "and it divides the characteristic polynomial; k = 1..n",
     slots=lambda n, m, p: [], defaults=(8, 0, 0))
def _t2(c):
    f = c.field
    for k in range(1, c.n + 1):
        j = exchange_matrix(k, f)
        q = reversing_min_poly(k, f)
        if not evaluate_at_matrix(q, j).is_zero():
            return False
        if not divides(q, reversing_char_poly(k, f)):
            return False
        eye = Matrix.identity(f, k)
        if k >= 2 and ((j - eye).is_zero() or (j + eye).is_zero()):
            return False
    return True


@law("T3", "T-charpoly",
     "det(x I - J_k) = (x - 1)^ceil(k/2) (x + 1)^floor(k/2) and it annihilates J_k; k = 1..n",
     slots=lambda n, m, p: [], defaults=(8, 0, 0))
def _t3(c):
    f = c.field
    for k in range(1, c.n + 1):
        j = exchange_matrix(k, f)
        closed = reversing_char_poly(k, f)
        if characteristic_polynomial(j) != closed:
            return False
        if not evaluate_at_matrix(closed, j).is_zero():
            return False
    return True


@law("T4", "T-eigenspaces",
     "K^n = ker(R - id) (+) ker(R + id) with dimensions ceil(n/2), floor(n/2)",
     slots=lambda n, m, p: [V("v", n)], defaults=(4, 0, 0), odd_char=True)
def _t4(c, v):
    f, n = c.field, c.n
    j = exchange_matrix(n, f)
    plus, minus = eigenspace_basis(n, 1, f), eigenspace_basis(n, -1, f)
    if family_rank(plus, f) != (n + 1) // 2 or family_rank(minus, f) != n // 2:
        return False
    if family_rank(plus + minus, f) != n:
        return False
    if not all(apply_matrix(j, b) == b for b in plus):
        return False
    if not all(apply_matrix(j, b) == -b for b in minus):
        return False
    pal, anti = decompose(v)
    return apply_matrix(j, pal) == pal and apply_matrix(j, anti) == -anti and pal + anti == v


@law("T5", "T-projectors",
     "F_p = (id + R)/2 and F_a = (id - R)/2 are complementary projections onto ker(R -+ id)",
     slots=lambda n, m, p: [V("v", n)], defaults=(4, 0, 0), odd_char=True)
def _t5(c, v):
    f, n = c.field, c.n
    fp, fa = projector_matrices(n, f)
    eye, zero = Matrix.identity(f, n), Matrix.zeros(f, n, n)
    algebra = (
        fp + fa == eye
        and matmul(fp, fp) == fp
        and matmul(fa, fa) == fa
        and matmul(fp, fa) == zero
        and matmul(fa, fp) == zero
    )
    pv, av = apply_matrix(fp, v), apply_matrix(fa, v)
    return (
        algebra
        and pv == palindromic_part(v)
        and av == antipalindromic_part(v)
        and is_palindromic(pv)
        and is_antipalindromic(av)
        and _implies(is_palindromic(v), pv == v)
        and _implies(is_antipalindromic(v), av == v)
    )


@law("T6", "T-Fp-injective", "F_p(v) = 0 implies v = 0 (claimed injectivity of F_p)",
     slots=lambda n, m, p: [V("v", n)], defaults=(2, 0, 0), status="refuted", odd_char=True)
def _t6(c, v):
    return _implies(palindromic_part(v).is_zero(), v.is_zero())


@law("T7", "T-permutation",
     "A_sigma v = (v_sigma(1), ..., v_sigma(n)) for every sigma; the reversal gives J_n",
     slots=lambda n, m, p: [V("v", n)], defaults=(3, 0, 0), requires=_square_rows(6))
def _t7(c, v):
    f, n = c.field, c.n
    for images in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(images)
        if apply_matrix(permutation_matrix(sigma, f), v) != apply_permutation(sigma, v):
            return False
    rev = Permutation.reversal(n)
    return apply_permutation(rev, v) == reverse_vector(v) and permutation_matrix(rev, f) == exchange_matrix(n, f)


# -- polynomials -------------------------------------------------------------

@law("P1", "P-involution", "reverse(reverse(P)) = P in K_n[x]",
     slots=lambda n, m, p: [P("P", n)], defaults=(4, 0, 0))
def _p1(c, P):
    return reverse_poly(reverse_poly(P)) == P


@law("P2", "P-paste-reverse", "reverse(P <> Q) = reverse(Q) <> reverse(P)",
     slots=lambda n, m, p: [P("P", n), P("Q", m)], defaults=(2, 1, 0))
def _p2(c, P, Q):
    return reverse_poly(paste_poly(P, Q)) == paste_poly(reverse_poly(Q), reverse_poly(P))


@law("P3", "P-paste-assoc", "(P <> Q) <> R = P <> (Q <> R)",
     slots=lambda n, m, p: [P("P", n), P("Q", m), P("R", p)], defaults=(1, 0, 1))
def _p3(c, P, Q, R):
    return paste_poly(paste_poly(P, Q), R) == paste_poly(P, paste_poly(Q, R))


@law("P4", "P-linearity", "reverse(a P + b Q) = a reverse(P) + b reverse(Q)",
     slots=lambda n, m, p: [S("a"), S("b"), P("P", n), P("Q", n)], defaults=(2, 0, 0))
def _p4(c, a, b, P, Q):
    return reverse_poly(a * P + b * Q) == a * reverse_poly(P) + b * reverse_poly(Q)


@law("P5", "P-closure",
     "palindromic and antipalindromic polynomials of K_n[x] are closed under linear combination",
     slots=lambda n, m, p: [S("a"), S("b"), PV("v", n + 1), PV("w", n + 1), AV("x", n + 1), AV("y", n + 1)],
     defaults=(2, 0, 0), odd_char=True)
def _p5(c, a, b, v, w, x, y):
    P1, P2, A1, A2 = (Poly.from_vector(t) for t in (v, w, x, y))
    return (is_palindromic_poly(P1) and is_palindromic_poly(P2)
            and is_palindromic_poly(a * P1 + b * P2)
            and is_antipalindromic_poly(A1) and is_antipalindromic_poly(A2)
            and is_antipalindromic_poly(a * A1 + b * A2))


@law("P6", "P-paste-eval",
     "P <> Q lies in K_(n+m+1)[x] and equals P(x) + x^(n+1) Q(x)",
     slots=lambda n, m, p: [P("P", n), P("Q", m), S("x")], defaults=(1, 1, 0))
def _p6(c, P, Q, x):
    r = paste_poly(P, Q)
    shift = x ** (P.ambient + 1)
    return r.ambient == P.ambient + Q.ambient + 1 and evaluate(r, x) == evaluate(P, x) + shift * evaluate(Q, x)


@law("P7", "P-decompose",
     "K_n[x] = W_p (+) W_a with dimensions ceil((n+1)/2), floor((n+1)/2)",
     slots=lambda n, m, p: [P("P", n)], defaults=(4, 0, 0), odd_char=True)
def _p7(c, P):
    f, n = c.field, c.n
    bp = [q.coeffs for q in palindromic_poly_basis(n, f)]
    ba = [q.coeffs for q in antipalindromic_poly_basis(n, f)]
    pal, anti = decompose_poly(P)
    return (
        family_rank(bp, f) == (n + 2) // 2
        and family_rank(ba, f) == (n + 1) // 2
        and pal + anti == P
        and is_palindromic_poly(pal)
        and is_antipalindromic_poly(anti)
        and is_palindromic_poly(P) == _in_span(tuple(bp), P.coeffs, f)
        and _implies(is_palindromic_poly(P) and is_antipalindromic_poly(P), P.coeffs.is_zero())
    )


# -- matrices: row and column operators --------------------------------------

@law("M1", "M-involution",
     "R_r^2 A = A, R_c^2 A = A, R_r A = A J_m, R_c A = J_n A",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0))
def _m1(c, A):
    f = c.field
    return (
        reverse_rows(reverse_rows(A)) == A
        and reverse_cols(reverse_cols(A)) == A
        and reverse_rows(A) == matmul(A, exchange_matrix(A.cols, f))
        and reverse_cols(A) == matmul(exchange_matrix(A.rows, f), A)
    )


@law("M2", "M-paste-reverse",
     "R_r(A <>_r B) = R_r B <>_r R_r A and R_c(A <>_c C) = R_c C <>_c R_c A",
     slots=lambda n, m, p: [M("A", n, m), M("B", n, p), M("C", p, m)], defaults=(2, 2, 1))
def _m2(c, A, B, C):
    return (
        reverse_rows(paste_rows(A, B)) == paste_rows(reverse_rows(B), reverse_rows(A))
        and reverse_cols(paste_cols(A, C)) == paste_cols(reverse_cols(C), reverse_cols(A))
    )


@law("M3", "M-paste-assoc", "<>_r and <>_c are associative",
     slots=lambda n, m, p: [M("A", n, m), M("B", n, p), M("C", n, m)], defaults=(1, 2, 1))
def _m3(c, A, B, C):
    At, Bt, Ct = transpose(A), transpose(B), transpose(C)
    return (
        paste_rows(paste_rows(A, B), C) == paste_rows(A, paste_rows(B, C))
        and paste_cols(paste_cols(At, Bt), Ct) == paste_cols(At, paste_cols(Bt, Ct))
    )


@law("M4", "M-linearity", "R_r and R_c are linear",
     slots=lambda n, m, p: [S("a"), S("b"), M("A", n, m), M("B", n, m)], defaults=(2, 2, 0))
def _m4(c, a, b, A, B):
    combo = a * A + b * B
    return (
        reverse_rows(combo) == a * reverse_rows(A) + b * reverse_rows(B)
        and reverse_cols(combo) == a * reverse_cols(A) + b * reverse_cols(B)
    )


@law("M5", "M-paste-shape",
     "M(n x m) <>_r M(n x p) = M(n x (m+p)) and M(n x m) <>_c M(p x m) = M((n+p) x m), blocks recoverable",
     slots=lambda n, m, p: [M("A", n, m), M("B", n, p), M("C", p, m)], defaults=(2, 1, 1))
def _m5(c, A, B, C):
    r, v = paste_rows(A, B), paste_cols(A, C)
    if r.shape != (c.n, c.m + c.p) or v.shape != (c.n + c.p, c.m):
        return False
    left = Matrix._raw(c.field, c.n, c.m, (x for row in r.row_tuples() for x in row[:c.m]))
    right = Matrix._raw(c.field, c.n, c.p, (x for row in r.row_tuples() for x in row[c.m:]))
    top = Matrix._raw(c.field, c.n, c.m, v.data[:c.n * c.m])
    bottom = Matrix._raw(c.field, c.p, c.m, v.data[c.n * c.m:])
    return left == A and right == B and top == A and bottom == C


@law("M6", "M-rc-dimension",
     "dim W^r_p = n ceil(m/2), dim W^r_a = n floor(m/2), dim W^c_p = m ceil(n/2), dim W^c_a = m floor(n/2)",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0), odd_char=True)
def _m6(c, A):
    f, n, m = c.field, c.n, c.m
    for mode in ("row-pal", "row-anti", "col-pal", "col-anti"):
        basis = _sym_basis(n, m, mode, f)
        if _basis_rank(basis, f) != expected_dimension(n, m, mode):
            return False
        if not all(has_symmetry(b, mode) for b in basis):
            return False
        if has_symmetry(A, mode) != _in_span(basis, A, f):
            return False
    return True


@law("M7", "M-rc-closure",
     "row/column palindromic and antipalindromic matrices are closed under linear combination",
     slots=lambda n, m, p: [S("a"), S("b"), M("A", n, m), M("B", n, m)], defaults=(2, 2, 0), odd_char=True)
def _m7(c, a, b, A, B):
    (arp, ara), (brp, bra) = decompose_rows(A), decompose_rows(B)
    (acp, aca), (bcp, bca) = decompose_cols(A), decompose_cols(B)
    return (
        is_row_palindromic(a * arp + b * brp)
        and is_row_antipalindromic(a * ara + b * bra)
        and is_col_palindromic(a * acp + b * bcp)
        and is_col_antipalindromic(a * aca + b * bca)
    )


@law("M8", "M-rc-decompose",
     "M(n x m) = W^r_p (+) W^r_a = W^c_p (+) W^c_a",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0), odd_char=True)
def _m8(c, A):
    rp, ra = decompose_rows(A)
    cp, ca = decompose_cols(A)
    return (
        rp + ra == A
        and cp + ca == A
        and is_row_palindromic(rp)
        and is_row_antipalindromic(ra)
        and is_col_palindromic(cp)
        and is_col_antipalindromic(ca)
        and _implies(is_row_palindromic(A) and is_row_antipalindromic(A), A.is_zero())
        and _implies(is_col_palindromic(A) and is_col_antipalindromic(A), A.is_zero())
    )


@law("M9", "M-transpose", "(R_r A)^T = R_c(A^T) and (R_c A)^T = R_r(A^T)",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0))
def _m9(c, A):
    return (
        transpose(reverse_rows(A)) == reverse_cols(transpose(A))
        and transpose(reverse_cols(A)) == reverse_rows(transpose(A))
    )


@law("M10", "M-paste-transpose", "(A <>_c B)^T = A^T <>_r B^T and (A <>_r C)^T = A^T <>_c C^T",
     slots=lambda n, m, p: [M("A", n, m), M("B", p, m), M("C", n, p)], defaults=(2, 2, 1))
def _m10(c, A, B, C):
    return (
        transpose(paste_cols(A, B)) == paste_rows(transpose(A), transpose(B))
        and transpose(paste_rows(A, C)) == paste_cols(transpose(A), transpose(C))
    )


@law("M11", "M-product", "R_r(AB) = A R_r(B) and R_c(AB) = R_c(A) B",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(2, 2, 2))
def _m11(c, A, B):
    ab = matmul(A, B)
    return reverse_rows(ab) == matmul(A, reverse_rows(B)) and reverse_cols(ab) == matmul(reverse_cols(A), B)


@law("M12", "M-det-sign", "det(R_r A) = det(R_c A) = (-1)^floor(n/2) det A",
     slots=lambda n, m, p: [M("A", n, n)], defaults=(3, 0, 0))
def _m12(c, A):
    f = c.field
    target = f.mul(_sign(f, c.n // 2), det(A).value)
    return f.eq(det(reverse_rows(A)).value, target) and f.eq(det(reverse_cols(A)).value, target)


@law("M13", "M-inverse", "(R_c A)^-1 = R_r(A^-1) and (R_r A)^-1 = R_c(A^-1) for invertible A",
     slots=lambda n, m, p: [M("A", n, n)], defaults=(3, 0, 0))
def _m13(c, A):
    if det(A).value == c.field.zero:
        return True
    inv = inverse(A)
    return inverse(reverse_cols(A)) == reverse_rows(inv) and inverse(reverse_rows(A)) == reverse_cols(inv)


@law("M14", "M-product-symmetry",
     "B row-(anti)palindromic => AB row-(anti)palindromic; A column-(anti)palindromic => AB likewise",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(2, 2, 2))
def _m14(c, A, B):
    ab = matmul(A, B)
    return (
        _implies(is_row_palindromic(B), is_row_palindromic(ab))
        and _implies(is_row_antipalindromic(B), is_row_antipalindromic(ab))
        and _implies(is_col_palindromic(A), is_col_palindromic(ab))
        and _implies(is_col_antipalindromic(A), is_col_antipalindromic(ab))
    )


@law("M15", "M-product-converse-rank",
     "AB row-(anti)palindromic and A of full column rank => B row-(anti)palindromic; "
     "AB column-(anti)palindromic and B of full row rank => A column-(anti)palindromic",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(2, 2, 2), status="conditional")
def _m15(c, A, B):
    ab = matmul(A, B)
    a_full = rank(A) == A.cols
    b_full = rank(B) == B.rows
    return (
        _implies(a_full and is_row_palindromic(ab), is_row_palindromic(B))
        and _implies(a_full and is_row_antipalindromic(ab), is_row_antipalindromic(B))
        and _implies(b_full and is_col_palindromic(ab), is_col_palindromic(A))
        and _implies(b_full and is_col_antipalindromic(ab), is_col_antipalindromic(A))
    )


@law("M16", "M-pal-product-converse",
     "AB != 0 row-palindromic => B row-palindromic; AB != 0 column-palindromic => A column-palindromic",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(1, 2, 2), status="refuted")
def _m16(c, A, B):
    ab = matmul(A, B)
    if ab.is_zero():
        return True
    return _implies(is_row_palindromic(ab), is_row_palindromic(B)) and _implies(
        is_col_palindromic(ab), is_col_palindromic(A))


@law("M17", "M-anti-product-converse",
     "AB != 0 row-antipalindromic => B row-antipalindromic; "
     "AB != 0 column-antipalindromic => A column-antipalindromic",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(1, 2, 2), status="refuted")
def _m17(c, A, B):
    ab = matmul(A, B)
    if ab.is_zero():
        return True
    return _implies(is_row_antipalindromic(ab), is_row_antipalindromic(B)) and _implies(
        is_col_antipalindromic(ab), is_col_antipalindromic(A))


@law("M18", "M-quad",
     "M(n x m) = W_pp (+) W_pa (+) W_ap (+) W_aa with dimensions products of ceil/floor of n/2 and m/2",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0), odd_char=True)
def _m18(c, A):
    f, n, m = c.field, c.n, c.m
    q = decompose_rc(A)
    if q.pp + q.pa + q.ap + q.aa != A:
        return False
    total = 0
    inside = []
    for mode in ("pp", "pa", "ap", "aa"):
        if not has_symmetry(getattr(q, mode), mode):
            return False
        basis = _sym_basis(n, m, mode, f)
        dim = _basis_rank(basis, f)
        if dim != expected_dimension(n, m, mode) or not all(has_symmetry(b, mode) for b in basis):
            return False
        total += dim
        member = has_symmetry(A, mode)
        if member != _in_span(basis, A, f):
            return False
        inside.append(member)
    return total == n * m and _implies(sum(inside) > 1, A.is_zero())


# -- matrices: full Reversing ------------------------------------------------

@law("M19", "M-full-structure",
     "R A reverses the row order and each row; R^2 = id; R = R_c R_r = R_r R_c; R is linear",
     slots=lambda n, m, p: [S("a"), M("A", n, m), M("B", n, m)], defaults=(2, 2, 0))
def _m19(c, a, A, B):
    r = reverse_full(A)
    rows_ok = all(r.row(i) == reverse_vector(A.row(A.rows - 1 - i)) for i in range(A.rows))
    return (
        rows_ok
        and reverse_full(r) == A
        and r == reverse_cols(reverse_rows(A))
        and r == reverse_rows(reverse_cols(A))
        and reverse_full(a * A + B) == a * r + reverse_full(B)
    )


@law("M20", "M-full-paste", "R(A <>_r B) = R(B) <>_r R(A) and R(A <>_c C) = R(C) <>_c R(A)",
     slots=lambda n, m, p: [M("A", n, m), M("B", n, p), M("C", p, m)], defaults=(2, 2, 1))
def _m20(c, A, B, C):
    return (
        reverse_full(paste_rows(A, B)) == paste_rows(reverse_full(B), reverse_full(A))
        and reverse_full(paste_cols(A, C)) == paste_cols(reverse_full(C), reverse_full(A))
    )


@law("M21", "M-full-decompose",
     "M(n x m) = W_p (+) W_a for full Reversing, dim W_p = ceil(nm/2), dim W_a = floor(nm/2)",
     slots=lambda n, m, p: [M("A", n, m)], defaults=(2, 3, 0), odd_char=True)
def _m21(c, A):
    f, n, m = c.field, c.n, c.m
    pal, anti = decompose_full(A)
    if not (pal + anti == A and is_full_palindromic(pal) and is_full_antipalindromic(anti)):
        return False
    for mode in ("full-pal", "full-anti"):
        basis = _sym_basis(n, m, mode, f)
        if _basis_rank(basis, f) != expected_dimension(n, m, mode):
            return False
        if has_symmetry(A, mode) != _in_span(basis, A, f):
            return False
    return _implies(is_full_palindromic(A) and is_full_antipalindromic(A), A.is_zero())


@law("M22", "M-full-product", "R(I) = I, R(AB) = R(A) R(B), R(A^T) = R(A)^T",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(2, 2, 2))
def _m22(c, A, B):
    eye = Matrix.identity(c.field, c.n)
    return (
        reverse_full(eye) == eye
        and reverse_full(matmul(A, B)) == matmul(reverse_full(A), reverse_full(B))
        and reverse_full(transpose(A)) == transpose(reverse_full(A))
    )


@law("M23", "M-full-invariants", "det R(A) = det A, Tr R(A) = Tr A, R(A)^-1 = R(A^-1)",
     slots=lambda n, m, p: [M("A", n, n)], defaults=(3, 0, 0))
def _m23(c, A):
    r = reverse_full(A)
    if det(r) != det(A) or trace(r) != trace(A):
        return False
    if det(A).value == c.field.zero:
        return True
    return inverse(r) == reverse_full(inverse(A))


@law("M24", "M-full-product-symmetry",
     "pal . pal = pal, anti . anti = pal, pal . anti = anti . pal = anti (full Reversing)",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(2, 2, 2), odd_char=True)
def _m24(c, A, B):
    ap, aa = decompose_full(A)
    bp, ba = decompose_full(B)
    return (
        is_full_palindromic(matmul(ap, bp))
        and is_full_palindromic(matmul(aa, ba))
        and is_full_antipalindromic(matmul(ap, ba))
        and is_full_antipalindromic(matmul(aa, bp))
    )


# -- generalized vector product ------------------------------------------------

@law("X1", "X-cross3", "the (n-1)-ary product at n = 3 is the classical vector product",
     slots=lambda n, m, p: [V("v", 3), V("w", 3)], defaults=(3, 0, 0))
def _x1(c, v, w):
    return generalized_cross([v, w]) == cross3(v, w)


@law("X2", "X-minor-reversal",
     "minor_k(R_r M) = R_r(minor_(n-k+1)(M)) for k = 1..n",
     slots=lambda n, m, p: [M("M", n - 1, n)], defaults=(3, 0, 0), requires=_at_least(2))
def _x2(c, M):
    rm = reverse_rows(M)
    n = c.n
    return all(minor_drop_col(rm, k) == reverse_rows(minor_drop_col(M, n - k + 1)) for k in range(1, n + 1))


@law("X3", "X-sign",
     "x(R_r M_1, ..., R_r M_(n-1)) = (-1)^ceil(3n/2) R_r(x(M_1, ..., M_(n-1)))",
     slots=lambda n, m, p: [M("M", n - 1, n)], defaults=(3, 0, 0), requires=_at_least(2))
def _x3(c, M):
    lhs = generalized_cross_matrix(reverse_rows(M))
    rhs = reverse_vector(generalized_cross_matrix(M))
    return lhs == rhs.scale(cross_reversal_sign(c.n))


def _pal_rows(n, m, p):
    return [PV(f"M{i + 1}", n) for i in range(n - 1)]


def _anti_rows(n, m, p):
    return [AV(f"M{i + 1}", n) for i in range(n - 1)]


@law("X4", "X-vanish-pal", "n >= 4 and all rows palindromic => the product is 0",
     slots=_pal_rows, defaults=(4, 0, 0), requires=_at_least(4))
def _x4(c, **rows):
    return generalized_cross([rows[f"M{i + 1}"] for i in range(c.n - 1)]).is_zero()


@law("X5", "X-vanish-anti", "n >= 4 and all rows antipalindromic => the product is 0",
     slots=_anti_rows, defaults=(4, 0, 0), odd_char=True, requires=_at_least(4))
def _x5(c, **rows):
    return generalized_cross([rows[f"M{i + 1}"] for i in range(c.n - 1)]).is_zero()


@law("X6", "X-multilinear",
     "the product is linear in its first row and alternating in its rows",
     slots=lambda n, m, p: [S("a"), V("u", n), V("w", n), M("rest", n - 2, n)],
     defaults=(3, 0, 0), requires=_at_least(3))
def _x6(c, a, u, w, rest):
    others = [rest.row(i) for i in range(rest.rows)]
    lin = generalized_cross([a * u + w] + others) == a * generalized_cross([u] + others) + generalized_cross(
        [w] + others)
    swapped = generalized_cross([others[0], u] + others[1:]) == -generalized_cross([u] + others)
    repeated = generalized_cross([u, u] + others[1:]).is_zero()
    return lin and swapped and repeated


# -- Pasting by blocks -------------------------------------------------------

@law("B1", "B-reverse", "R(A <>_b B) = R(B) <>_b R(A)",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(1, 2, 2))
def _b1(c, A, B):
    return reverse_full(paste_blocks(A, B)) == paste_blocks(reverse_full(B), reverse_full(A))


@law("B2", "B-assoc", "(A <>_b B) <>_b C = A <>_b (B <>_b C)",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p), M("C", p, n)], defaults=(1, 2, 1))
def _b2(c, A, B, C):
    return paste_blocks(paste_blocks(A, B), C) == paste_blocks(A, paste_blocks(B, C))


@law("B3", "B-transpose",
     "(A <>_b B)^T = A^T <>_b B^T; A <>_b B has shape (n+r) x (m+s) with A, B as diagonal blocks",
     slots=lambda n, m, p: [M("A", n, m), M("B", m, p)], defaults=(1, 2, 2))
def _b3(c, A, B):
    blk = paste_blocks(A, B)
    if blk.shape != (A.rows + B.rows, A.cols + B.cols):
        return False
    rows = blk.row_tuples()
    a_part = Matrix._raw(c.field, A.rows, A.cols, (x for r in rows[:A.rows] for x in r[:A.cols]))
    b_part = Matrix._raw(c.field, B.rows, B.cols, (x for r in rows[A.rows:] for x in r[A.cols:]))
    off = [x for r in rows[:A.rows] for x in r[A.cols:]] + [x for r in rows[A.rows:] for x in r[:A.cols]]
    return (
        transpose(blk) == paste_blocks(transpose(A), transpose(B))
        and a_part == A
        and b_part == B
        and all(c.field.is_zero(x) for x in off)
    )


@law("B4", "B-det", "det(A <>_b B) = det A det B",
     slots=lambda n, m, p: [M("A", n, n), M("B", m, m)], defaults=(2, 2, 0))
def _b4(c, A, B):
    return det(paste_blocks(A, B)) == det(A) * det(B)


@law("B5", "B-trace", "Tr(A <>_b B) = Tr A + Tr B",
     slots=lambda n, m, p: [M("A", n, n), M("B", m, m)], defaults=(2, 2, 0))
def _b5(c, A, B):
    return trace(paste_blocks(A, B)) == trace(A) + trace(B)


@law("B6", "B-inverse", "(A <>_b B)^-1 = A^-1 <>_b B^-1 when A and B are invertible",
     slots=lambda n, m, p: [M("A", n, n), M("B", m, m)], defaults=(2, 2, 0))
def _b6(c, A, B):
    z = c.field.zero
    blk = paste_blocks(A, B)
    if det(A).value == z or det(B).value == z:
        return det(blk).value == z
    return inverse(blk) == paste_blocks(inverse(A), inverse(B))
