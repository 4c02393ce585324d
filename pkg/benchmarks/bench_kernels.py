"""Timing comparison: compiled kernels vs the pure-Python reference.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats N]

Times the dense kernels at the two sizes that matter here (16x16, the
Liouvillian of a two-qubit pair, and 64x64, the supported cap) plus one
full steady-state pipeline evaluation per backend.
"""

import argparse
import time

import numpy as np

from qbatt import _kernels
from qbatt._kernels import pyref

try:
    from qbatt._kernels import _native as native
except ImportError:
    native = None


def _timeit(fn, repeats):
    fn()  # warmup
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = min(best, dt)
    return best


def _cases(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    h = a + a.conj().T
    b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return [
        (f"eig {n}x{n}", lambda mod: (lambda: mod.eig(a))),
        (f"eig_hermitian {n}x{n}", lambda mod: (lambda: mod.eig_hermitian(h))),
        (f"cpqr {n}x{n}", lambda mod: (lambda: mod.cpqr(a))),
        (f"solve {n}x{n}", lambda mod: (lambda: mod.solve(a, b))),
        (f"expm {n}x{n}", lambda mod: (lambda: mod.expm(a))),
    ]


def _pipeline_case():
    from qbatt import sweep

    cfg = sweep.parse_config(
        "equation = redfield\nstatistics = boson\ninitial = eg\n"
        "axis1 = delta:-2:2:3\nT_bar = 1\ndT = 0.5\n")

    def run():
        for overrides in sweep.grid_points(cfg):
            sweep.run_point(cfg, overrides)

    return "steady-state pipeline (3 points)", run


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=7)
    args = ap.parse_args()

    if native is None:
        print("compiled backend not built; timing the reference only")
    print(f"selected backend: {_kernels.BACKEND}")
    print()
    header = f"{'kernel':28s} {'python':>12s} {'native':>12s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))

    rng = np.random.default_rng(2024)
    rows = []
    for n in (16, 64):
        rows.extend(_cases(rng, n))

    for label, make in rows:
        tp = _timeit(make(pyref), args.repeats)
        if native is not None:
            tn = _timeit(make(native), args.repeats)
            print(f"{label:28s} {tp * 1e3:10.3f}ms {tn * 1e3:10.3f}ms "
                  f"{tp / tn:8.1f}x")
        else:
            print(f"{label:28s} {tp * 1e3:10.3f}ms {'-':>12s} {'-':>9s}")

    # whole pipeline through the selected backend, then the reference
    label, run = _pipeline_case()
    t_sel = _timeit(run, max(2, args.repeats // 3))
    saved = {k: getattr(_kernels, k) for k in
             ("schur", "eig", "eig_hermitian", "cpqr", "solve", "expm")}
    try:
        for k in saved:
            setattr(_kernels, k, getattr(pyref, k))
        t_ref = _timeit(run, max(2, args.repeats // 3))
    finally:
        for k, fn in saved.items():
            setattr(_kernels, k, fn)
    print("-" * len(header))
    if _kernels.BACKEND == "native":
        print(f"{label:28s} {t_ref * 1e3:10.3f}ms {t_sel * 1e3:10.3f}ms "
              f"{t_ref / t_sel:8.1f}x")
    else:
        print(f"{label:28s} {t_sel * 1e3:10.3f}ms {'-':>12s} {'-':>9s}")


if __name__ == "__main__":
    main()
