"""Timing comparison of the compiled and pure-Python kernel backends.

Run from a checkout with the extension built::

    python3 benchmarks/bench_kernels.py

The script imports both backends directly (ignoring the import-time
selection) so one process can time them side by side.  Reported numbers
are best-of-repeats wall times.
"""

from __future__ import annotations

import time

import numpy as np

from effecttopo import _kernels_py

try:
    from effecttopo import _kernels_cy
except ImportError:
    _kernels_cy = None

from effecttopo.kernels import MAX_SWEEPS, OFF_DIAGONAL_RTOL


def _best_of(fn, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return ((a + a.conj().T) / 2).astype(np.complex128)


def bench_eigensolver() -> None:
    rng = np.random.default_rng(42)
    print(f"{'dim':>4} {'calls':>6} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for dim, calls in ((2, 2000), (4, 1000), (8, 400), (16, 100)):
        mats = [_hermitian(dim, rng) for _ in range(calls)]
        target = [OFF_DIAGONAL_RTOL * float(np.linalg.norm(m)) for m in mats]

        def run_pure():
            for m, t in zip(mats, target):
                a = [[complex(m[i, j]) for j in range(dim)] for i in range(dim)]
                v = [[complex(i == j) for j in range(dim)] for i in range(dim)]
                _kernels_py.jacobi_sweeps(a, v, t, MAX_SWEEPS)

        t_pure = _best_of(run_pure)

        if _kernels_cy is None:
            print(f"{dim:>4} {calls:>6} {t_pure:>10.4f} {'n/a':>11} {'n/a':>8}")
            continue

        def run_cy():
            for m, t in zip(mats, target):
                a = m.copy()
                v = np.eye(dim, dtype=np.complex128)
                _kernels_cy.jacobi_sweeps(a, v, t, MAX_SWEEPS)

        t_cy = _best_of(run_cy)
        print(f"{dim:>4} {calls:>6} {t_pure:>10.4f} {t_cy:>11.4f} {t_pure / t_cy:>7.1f}x")


def bench_closures() -> None:
    rng = np.random.default_rng(7)
    print(f"\n{'bits':>4} {'gens':>5} {'pure (s)':>10} {'cython (s)':>11} {'speedup':>8}")
    for n_bits, gens in ((10, 24), (14, 40), (16, 48)):
        masks = sorted({int(rng.integers(1, 1 << n_bits)) for _ in range(gens)})

        t_pure = _best_of(lambda: _kernels_py.bitset_closure(masks, n_bits, False), 3)
        if _kernels_cy is None:
            print(f"{n_bits:>4} {len(masks):>5} {t_pure:>10.4f} {'n/a':>11} {'n/a':>8}")
            continue
        t_cy = _best_of(lambda: _kernels_cy.bitset_closure(masks, n_bits, False), 3)
        print(
            f"{n_bits:>4} {len(masks):>5} {t_pure:>10.4f} {t_cy:>11.4f} "
            f"{t_pure / t_cy:>7.1f}x"
        )


if __name__ == "__main__":
    if _kernels_cy is None:
        print("compiled extension not available; timing the pure backend only\n")
    print("complex Hermitian eigensolver (cyclic Jacobi)")
    bench_eigensolver()
    print("\nbitmask family closure (union)")
    bench_closures()
