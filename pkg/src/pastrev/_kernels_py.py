"""Pure-Python prime-field kernels.

Same signatures as the compiled ``_ckernels`` module.  Matrices are flat
row-major lists of residues in ``[0, p)``.
"""


def det_mod_p(a, n, p):
    m = list(a)
    det = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if m[r * n + col]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != col:
            for c in range(n):
                i, j = col * n + c, piv * n + c
                m[i], m[j] = m[j], m[i]
            det = -det
        pv = m[col * n + col]
        det = det * pv % p
        inv = pow(pv, -1, p)
        for r in range(col + 1, n):
            f = m[r * n + col] * inv % p
            if f:
                for c in range(col, n):
                    m[r * n + c] = (m[r * n + c] - f * m[col * n + c]) % p
    return det % p


def rank_mod_p(a, rows, cols, p):
    m = list(a)
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if m[r * cols + col]:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for c in range(cols):
                i, j = rank * cols + c, piv * cols + c
                m[i], m[j] = m[j], m[i]
        inv = pow(m[rank * cols + col], -1, p)
        for r in range(rank + 1, rows):
            f = m[r * cols + col] * inv % p
            if f:
                for c in range(col, cols):
                    m[r * cols + c] = (m[r * cols + c] - f * m[rank * cols + c]) % p
        rank += 1
    return rank


def matmul_mod_p(a, b, n, k, m, p):
    out = [0] * (n * m)
    for i in range(n):
        for j in range(m):
            s = 0
            for t in range(k):
                s += a[i * k + t] * b[t * m + j]
            out[i * m + j] = s % p
    return out


def inverse_mod_p(a, n, p):
    """Gauss-Jordan inverse; ``None`` when singular."""
    w = 2 * n
    m = [0] * (n * w)
    for i in range(n):
        for j in range(n):
            m[i * w + j] = a[i * n + j] % p
        m[i * w + n + i] = 1
    for col in range(n):
        piv = -1
        for r in range(col, n):
            if m[r * w + col]:
                piv = r
                break
        if piv < 0:
            return None
        if piv != col:
            for c in range(w):
                i, j = col * w + c, piv * w + c
                m[i], m[j] = m[j], m[i]
        inv = pow(m[col * w + col], -1, p)
        for c in range(w):
            m[col * w + c] = m[col * w + c] * inv % p
        for r in range(n):
            if r != col:
                f = m[r * w + col]
                if f:
                    for c in range(w):
                        m[r * w + c] = (m[r * w + c] - f * m[col * w + c]) % p
    return [m[i * w + n + j] for i in range(n) for j in range(n)]
