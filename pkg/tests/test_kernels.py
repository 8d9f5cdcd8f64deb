import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from pastrev import _kernels_py as py
from pastrev import kernels

cy = pytest.importorskip("pastrev._ckernels")

PRIMES = [2, 3, 5, 7, 101, 65_537, 2_147_483_647]


def mats(n, p):
    return st.lists(st.integers(0, p - 1), min_size=n * n, max_size=n * n)


@pytest.mark.parametrize("p", PRIMES)
@given(data=st.data())
def test_backends_agree(p, data):
    n = data.draw(st.integers(0, 5))
    a = data.draw(mats(n, p))
    b = data.draw(mats(n, p))
    assert py.det_mod_p(a, n, p) == cy.det_mod_p(a, n, p)
    assert py.rank_mod_p(a, n, n, p) == cy.rank_mod_p(a, n, n, p)
    assert py.matmul_mod_p(a, b, n, n, n, p) == cy.matmul_mod_p(a, b, n, n, n, p)
    assert py.inverse_mod_p(a, n, p) == cy.inverse_mod_p(a, n, p)


@pytest.mark.parametrize("p", [3, 101, 2_147_483_647])
def test_det_rank_against_sympy(p):
    rng = random.Random(p)
    for n in range(1, 6):
        a = [rng.randrange(p) for _ in range(n * n)]
        s = sympy.Matrix(n, n, a)
        assert kernels.det_mod_p(a, n, p) == s.det() % p
        rect = a[: (n - 1) * n] if n > 1 else a
        rows = n - 1 if n > 1 else 1
        gf = sympy.polys.matrices.DomainMatrix.from_list_sympy(rows, n, sympy.Matrix(rows, n, rect).tolist())
        assert kernels.rank_mod_p(rect, rows, n, p) == gf.convert_to(sympy.GF(p)).rank()


@pytest.mark.parametrize("p", [5, 101])
def test_inverse_round_trip(p):
    rng = random.Random(0)
    for n in range(1, 6):
        a = [rng.randrange(p) for _ in range(n * n)]
        inv = kernels.inverse_mod_p(a, n, p)
        if kernels.det_mod_p(a, n, p) == 0:
            assert inv is None
            continue
        eye = [1 if i == j else 0 for i in range(n) for j in range(n)]
        assert kernels.matmul_mod_p(a, inv, n, n, n, p) == eye


def test_rectangular_rank():
    assert kernels.rank_mod_p([1, 2, 3, 2, 4, 6], 2, 3, 7) == 1
    assert kernels.rank_mod_p([], 0, 3, 7) == 0


def test_huge_modulus_uses_python():
    p = (1 << 61) - 1
    assert kernels._pick(p) is py
    assert kernels.det_mod_p([2, 0, 0, 3], 2, p) == 6


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_pure_python_switch():
    import subprocess
    import sys

    out = subprocess.run(
        [sys.executable, "-c", "from pastrev import kernels, det, Matrix, GF;"
         "print(kernels.BACKEND, det(Matrix(GF(7), [[1, 2], [3, 4]])).value)"],
        env={"PASTREV_PURE_PYTHON": "1", "PATH": ""}, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["python", "5"]
