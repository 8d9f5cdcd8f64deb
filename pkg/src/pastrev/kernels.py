"""Backend selection for the prime-field kernels.

The compiled extension is used when it imports and the modulus fits in 31
bits; ``PASTREV_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _kernels_py as py

_LIMIT = 1 << 31

try:
    if os.environ.get("PASTREV_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as _c
except ImportError:
    _c = None

BACKEND = "cython" if _c is not None else "python"


def _pick(p):
    return _c if _c is not None and p < _LIMIT else py


def det_mod_p(a, n, p):
    return _pick(p).det_mod_p(a, n, p)


def rank_mod_p(a, rows, cols, p):
    return _pick(p).rank_mod_p(a, rows, cols, p)


def matmul_mod_p(a, b, n, k, m, p):
    return _pick(p).matmul_mod_p(a, b, n, k, m, p)


def inverse_mod_p(a, n, p):
    return _pick(p).inverse_mod_p(a, n, p)
