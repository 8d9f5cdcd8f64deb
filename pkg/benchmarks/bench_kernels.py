"""Compare the compiled GF(p) kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--sizes 3 8 24] [--repeat 5]

Also times the law suite over GF(3) under each backend, since that is the
workload the kernels exist for.
"""
import argparse
import random
import timeit

from pastrev import _kernels_py as py

try:
    from pastrev import _ckernels as cy
except ImportError:
    cy = None

P = 1_000_003


def _matrix(rng, n):
    return [rng.randrange(P) for _ in range(n * n)]


def _cases(n, rng):
    a, b = _matrix(rng, n), _matrix(rng, n)
    return {
        "det": lambda k: k.det_mod_p(a, n, P),
        "rank": lambda k: k.rank_mod_p(a, n, n, P),
        "matmul": lambda k: k.matmul_mod_p(a, b, n, n, n, P),
        "inverse": lambda k: k.inverse_mod_p(a, n, P),
    }


def _best(fn, repeat):
    timer = timeit.Timer(fn)
    loops, _ = timer.autorange()
    return min(timer.repeat(repeat, loops)) / loops


def _suite_time():
    from pastrev import kernels
    from pastrev.scalar import GF
    from pastrev.verifier import DomainSpec, run_suite

    out = {}
    for name, mod in (("python", py), ("cython", cy)):
        if mod is None:
            continue
        saved = kernels._c
        kernels._c = mod if name == "cython" else None
        try:
            start = timeit.default_timer()
            run_suite(DomainSpec(field=GF(3), strategy="exhaustive"), laws=["M4", "M12", "M13", "M23", "B4", "B6"])
            out[name] = timeit.default_timer() - start
        finally:
            kernels._c = saved
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[3, 8, 24])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--no-suite", action="store_true")
    args = ap.parse_args()

    if cy is None:
        print("compiled kernels not built; only the Python backend is available")
    rng = random.Random(0)
    print(f"{'op':<8} {'n':>3} {'python (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    for n in args.sizes:
        for op, fn in _cases(n, rng).items():
            t_py = _best(lambda: fn(py), args.repeat) * 1e6
            if cy is None:
                print(f"{op:<8} {n:>3} {t_py:12.1f} {'-':>12} {'-':>8}")
                continue
            assert fn(py) == fn(cy), f"backends disagree on {op} at n={n}"
            t_cy = _best(lambda: fn(cy), args.repeat) * 1e6
            print(f"{op:<8} {n:>3} {t_py:12.1f} {t_cy:12.1f} {t_py / t_cy:7.1f}x")
    if not args.no_suite:
        times = _suite_time()
        print("matrix-heavy laws over GF(3): " + ", ".join(f"{k} {v:.2f}s" for k, v in times.items()))


if __name__ == "__main__":
    main()
