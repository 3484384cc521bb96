"""Time the numba kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Compilation is excluded: every jit kernel is called once before timing. The
last section times the end-to-end evaluators with whichever backend is
active (set SYMPART_NO_JIT=1 to compare).
"""

import argparse
from fractions import Fraction
import time

import numpy as np

from sympart import kernels
from sympart.pcore import eval_P
from sympart.trec import compute_T_poly, eval_T_direct


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    rng = np.random.default_rng(0)
    y20 = rng.integers(-1000, 1000, size=20).astype(np.int64)
    d = np.array([3, 5, 7, 11], dtype=np.int64)
    return [
        ("subset sums, m=20", "signed_subset_sums", (y20,)),
        ("compositions 18 into 9", "compositions", (18, 9)),
        ("compositions 20 into 8", "compositions", (20, 8)),
        ("denumerant, d=(3,5,7,11), s<=200000", "denumerant_table", (d, 200_000)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    print(f"{'kernel':42s} {'numpy [ms]':>11s} {'numba [ms]':>11s} {'speedup':>8s}")
    for label, name, call_args in cases():
        np_fn = getattr(kernels.numpy_impl, name)

        def run_numpy():
            # the numpy path memoises compositions; time a cold build
            kernels.numpy_impl._compositions_cached.cache_clear()
            return np_fn(*call_args)

        t_np = best_of(run_numpy, args.repeat)
        if kernels.jit_impl is not None:
            jit_fn = getattr(kernels.jit_impl, name)
            jit_fn(*call_args)
            t_jit = best_of(lambda: jit_fn(*call_args), args.repeat)
            print(f"{label:42s} {t_np * 1e3:11.2f} {t_jit * 1e3:11.2f} {t_np / t_jit:7.1f}x")
        else:
            print(f"{label:42s} {t_np * 1e3:11.2f} {'n/a':>11s}")

    x = [Fraction(v, 3) for v in range(1, 19)]
    print()
    print(f"eval_P(n=25, m=18):          {best_of(lambda: eval_P(25, x), 3) * 1e3:9.1f} ms")
    eval_T_direct(6, x[:8])
    print(f"eval_T_direct(r=7, m=8):     "
          f"{best_of(lambda: eval_T_direct(7, x[:8]), 3) * 1e3:9.1f} ms")
    compute_T_poly.cache_clear()
    t0 = time.perf_counter()
    compute_T_poly(9)
    print(f"compute_T_poly(9), cold:     {(time.perf_counter() - t0) * 1e3:9.1f} ms")


if __name__ == "__main__":
    main()
