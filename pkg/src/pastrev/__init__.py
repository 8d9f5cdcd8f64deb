"""Reversing and Pasting over vectors, polynomials and matrices."""
from .errors import (
    BudgetExceeded,
    CharacteristicTwo,
    DimensionMismatch,
    DivisionByZero,
    IncompatibleField,
    IndexOutOfRange,
    ParseError,
    PastRevError,
    Singular,
    UnknownLaw,
)
from .scalar import F64, GF, QQ, FieldTag, Scalar, characteristic, parse_field, parse_scalar, scalar_inv
from .vectors import (
    PalAntiPair,
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
from .matrices import (
    Matrix,
    QuadDecomposition,
    decompose_full,
    decompose_rc,
    det,
    inverse,
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
from .polynomials import Poly, decompose_poly, paste_poly, reverse_poly
from .transform import (
    Permutation,
    apply_permutation,
    eigenspace_basis,
    exchange_matrix,
    permutation_matrix,
    reversing_char_poly,
    reversing_min_poly,
)
from .crossn import cross_reversal_sign, generalized_cross, minor_drop_col

__version__ = "0.1.0"
