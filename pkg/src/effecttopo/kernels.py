"""Backend selection and the public kernel API.

The compiled extension is preferred when importable; otherwise the pure
Python twin takes over.  ``EFFECTTOPO_PURE_KERNELS=1`` forces the fallback,
which is handy for benchmarking and for debugging the extension itself.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ConvergenceError

if os.environ.get("EFFECTTOPO_PURE_KERNELS", "") not in ("", "0"):
    from . import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"

# Stopping rule for the eigensolver: off-diagonal Frobenius norm relative to
# the Frobenius norm of the input, with a hard sweep budget.
OFF_DIAGONAL_RTOL = 1e-12
MAX_SWEEPS = 100


def eig_herm(a: np.ndarray, *, vectors: bool = True) -> tuple[np.ndarray, np.ndarray | None]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with eigenvalues ``w`` ascending and, when requested,
    the matching orthonormal eigenvector columns.  The caller is responsible
    for Hermiticity; this routine only runs the iteration.
    """
    a = np.array(a, dtype=np.complex128, order="C", copy=True)
    n = a.shape[0]
    norm = float(np.linalg.norm(a))
    off_target = OFF_DIAGONAL_RTOL * norm
    v = np.eye(n, dtype=np.complex128)
    if norm > 0.0:
        if BACKEND == "cython":
            sweeps = _impl.jacobi_sweeps(a, v, off_target, MAX_SWEEPS)
        else:
            al = [list(row) for row in a]
            vl = [list(row) for row in v]
            sweeps = _impl.jacobi_sweeps(al, vl, off_target, MAX_SWEEPS)
            a = np.array(al, dtype=np.complex128)
            v = np.array(vl, dtype=np.complex128)
        if sweeps < 0:
            raise ConvergenceError(
                f"Jacobi iteration did not reach its target in {MAX_SWEEPS} sweeps (n={n})"
            )
    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    if not vectors:
        return w, None
    return w, v[:, order]


def union_closure(masks, n_bits: int) -> list[int]:
    """Smallest superset of ``masks`` closed under pairwise union."""
    return [int(m) for m in _impl.bitset_closure(masks, n_bits, False)]


def intersection_closure(masks, n_bits: int) -> list[int]:
    """Smallest superset of ``masks`` closed under pairwise intersection."""
    return [int(m) for m in _impl.bitset_closure(masks, n_bits, True)]
