# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field kernels; mirror of ``_kernels_py``.

Residues are held in C ``long long``; callers must keep ``p < 2**31`` so
products of two residues cannot overflow.
"""
from libc.stdlib cimport malloc, free


cdef inline long long _mod(long long x, long long p) nogil:
    x %= p
    return x + p if x < 0 else x


cdef long long _inv(long long a, long long p) nogil:
    cdef long long t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    return _mod(t, p)


cdef long long* _load(object a, Py_ssize_t size, long long p) except NULL:
    cdef long long* m = <long long*> malloc(max(size, 1) * sizeof(long long))
    cdef Py_ssize_t i
    if m == NULL:
        raise MemoryError()
    for i in range(size):
        m[i] = _mod(a[i], p)
    return m


def det_mod_p(a, Py_ssize_t n, long long p):
    cdef long long* m = _load(a, n * n, p)
    cdef long long det = 1, pv, inv, f, tmp
    cdef Py_ssize_t col, r, c, piv
    try:
        for col in range(n):
            piv = -1
            for r in range(col, n):
                if m[r * n + col] != 0:
                    piv = r
                    break
            if piv < 0:
                return 0
            if piv != col:
                for c in range(n):
                    tmp = m[col * n + c]
                    m[col * n + c] = m[piv * n + c]
                    m[piv * n + c] = tmp
                det = p - det
            pv = m[col * n + col]
            det = det * pv % p
            inv = _inv(pv, p)
            for r in range(col + 1, n):
                f = m[r * n + col] * inv % p
                if f != 0:
                    for c in range(col, n):
                        m[r * n + c] = _mod(m[r * n + c] - f * m[col * n + c], p)
        return det % p
    finally:
        free(m)


def rank_mod_p(a, Py_ssize_t rows, Py_ssize_t cols, long long p):
    cdef long long* m = _load(a, rows * cols, p)
    cdef long long inv, f, tmp
    cdef Py_ssize_t rank = 0, col, r, c, piv
    try:
        for col in range(cols):
            if rank == rows:
                break
            piv = -1
            for r in range(rank, rows):
                if m[r * cols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for c in range(cols):
                    tmp = m[rank * cols + c]
                    m[rank * cols + c] = m[piv * cols + c]
                    m[piv * cols + c] = tmp
            inv = _inv(m[rank * cols + col], p)
            for r in range(rank + 1, rows):
                f = m[r * cols + col] * inv % p
                if f != 0:
                    for c in range(col, cols):
                        m[r * cols + c] = _mod(m[r * cols + c] - f * m[rank * cols + c], p)
            rank += 1
        return rank
    finally:
        free(m)


def matmul_mod_p(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m, long long p):
    cdef long long* x = _load(a, n * k, p)
    cdef long long* y
    cdef long long s
    cdef Py_ssize_t i, j, t
    try:
        y = _load(b, k * m, p)
    except BaseException:
        free(x)
        raise
    out = [0] * (n * m)
    try:
        for i in range(n):
            for j in range(m):
                s = 0
                for t in range(k):
                    s = (s + x[i * k + t] * y[t * m + j]) % p
                out[i * m + j] = s
        return out
    finally:
        free(x)
        free(y)


def inverse_mod_p(a, Py_ssize_t n, long long p):
    cdef Py_ssize_t w = 2 * n, i, j, col, r, c, piv
    cdef long long inv, f, tmp
    cdef long long* m = <long long*> malloc(max(n * w, 1) * sizeof(long long))
    if m == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(n):
                m[i * w + j] = _mod(a[i * n + j], p)
                m[i * w + n + j] = 1 if i == j else 0
        for col in range(n):
            piv = -1
            for r in range(col, n):
                if m[r * w + col] != 0:
                    piv = r
                    break
            if piv < 0:
                return None
            if piv != col:
                for c in range(w):
                    tmp = m[col * w + c]
                    m[col * w + c] = m[piv * w + c]
                    m[piv * w + c] = tmp
            inv = _inv(m[col * w + col], p)
            for c in range(w):
                m[col * w + c] = m[col * w + c] * inv % p
            for r in range(n):
                if r != col:
                    f = m[r * w + col]
                    if f != 0:
                        for c in range(w):
                            m[r * w + c] = _mod(m[r * w + c] - f * m[col * w + c], p)
        return [m[i * w + n + j] for i in range(n) for j in range(n)]
    finally:
        free(m)
