"""Benchmark the two builds of the Jacobi Hermitian eigensolver.

Runs the numba-compiled kernel (if available) and the pure-numpy/python
fallback on random Hermitian matrices of increasing size, and reports
wall-clock times plus the maximum deviation from numpy.linalg.eigvalsh.

Usage:  python3 benchmarks/bench_eigen.py [--sizes 16,32,64,128] [--repeat 3]
"""

from __future__ import annotations

import argparse
import importlib
import os
import time

import numpy as np


def random_hermitian(n: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (a + a.conj().T) / 2.0


def load_eigen(no_numba: bool):
    os.environ["WICKALG_NO_NUMBA"] = "1" if no_numba else ""
    import wickalg.eigen as eigen

    return importlib.reload(eigen)


def bench(eigen_mod, mats: list, repeat: int) -> tuple:
    # warm-up (includes JIT compilation for the numba build)
    eigen_mod.eigvalsh(mats[0])
    best = float("inf")
    err = 0.0
    for _ in range(repeat):
        t0 = time.perf_counter()
        for m in mats:
            ev = eigen_mod.eigvalsh(m)
        best = min(best, time.perf_counter() - t0)
    for m in mats:
        err = max(err, float(np.max(np.abs(
            eigen_mod.eigvalsh(m) - np.linalg.eigvalsh(m)))))
    return best, err


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="16,32,64,128")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(7)

    print(f"{'n':>6} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>8} "
          f"{'max |err|':>12}")
    for n in sizes:
        mats = [random_hermitian(n, rng) for _ in range(3)]
        fast = load_eigen(no_numba=False)
        have_numba = fast.USING_NUMBA
        t_fast, e_fast = bench(fast, mats, args.repeat)
        slow = load_eigen(no_numba=True)
        assert not slow.USING_NUMBA
        t_slow, e_slow = bench(slow, mats, args.repeat)
        label = f"{t_fast:12.4f}" if have_numba else "   (no numba)"
        speed = f"{t_slow / t_fast:8.1f}" if have_numba else "       -"
        print(f"{n:>6} {label} {t_slow:12.4f} {speed} "
              f"{max(e_fast, e_slow):12.2e}")


if __name__ == "__main__":
    main()
