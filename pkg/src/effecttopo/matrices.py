"""Hermitian matrices, the Loewner order, and effect-algebra operations.

A quantum effect is a Hermitian matrix ``A`` with ``0 <= A <= I`` in the
Loewner order; projections are the idempotent effects.  The partial sum is
ordinary matrix addition defined exactly when ``A + B <= I``, the
orthosupplement is ``I - A``.  All spectral questions (positivity, square
roots, norms) go through the Jacobi kernel in :mod:`effecttopo.kernels`.

Partiality is a value here, not an exception: ``oplus`` returns ``None``
when the sum leaves the effect interval, and ``sharp_witness`` returns
``None`` when no witness exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, NonHermitianError, NotPsdError


@dataclass(frozen=True)
class Tolerances:
    """Numeric gates used throughout the matrix layer.

    ``herm``/``idem`` are absolute Frobenius-norm gates; ``psd`` is relative,
    scaled by ``max(1, ||A||_F)``; ``conv`` bounds residual sequences in the
    convergence checks.
    """

    herm: float = 1e-10
    psd: float = 1e-10
    idem: float = 1e-10
    conv: float = 1e-8


DEFAULT_TOL = Tolerances()


def frobenius(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DimensionMismatchError("empty matrix")
    return m


def is_hermitian(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    m = as_matrix(a)
    return frobenius(m - m.conj().T) <= tol.herm * max(1.0, frobenius(m))


def require_hermitian(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    m = as_matrix(a)
    drift = frobenius(m - m.conj().T)
    if drift > tol.herm * max(1.0, frobenius(m)):
        raise NonHermitianError(f"matrix deviates from self-adjointness by {drift:.3e}")
    return m


def _same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"dimension mismatch: {a.shape} vs {b.shape}")


def eig_sym(a, tol: Tolerances = DEFAULT_TOL, *, vectors: bool = True):
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Parameters
    ----------
    a : array_like
        Square Hermitian matrix; Hermiticity is enforced up to ``tol.herm``.
    vectors : bool
        Skip the eigenvector accumulation when only the spectrum is needed.
    """
    m = require_hermitian(a, tol)
    # exact symmetrization removes the sub-tolerance drift before iterating
    m = (m + m.conj().T) / 2.0
    return kernels.eig_herm(m, vectors=vectors)


def min_eigenvalue(a, tol: Tolerances = DEFAULT_TOL) -> float:
    w, _ = eig_sym(a, tol, vectors=False)
    return float(w[0])


def is_psd(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    m = require_hermitian(a, tol)
    gate = tol.psd * max(1.0, frobenius(m))
    return min_eigenvalue(m, tol) >= -gate


def loewner_leq(a, b, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Loewner comparison ``a <= b``, decided by the spectrum of ``b - a``."""
    ma = require_hermitian(a, tol)
    mb = require_hermitian(b, tol)
    _same_dim(ma, mb)
    return is_psd(mb - ma, tol)


def is_effect(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``0 <= a <= I`` in the Loewner order."""
    m = require_hermitian(a, tol)
    if not is_psd(m, tol):
        return False
    eye = np.eye(m.shape[0], dtype=np.complex128)
    return is_psd(eye - m, tol)


def is_projection(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """True iff ``a`` is Hermitian and idempotent within ``tol.idem``."""
    m = require_hermitian(a, tol)
    if frobenius(m @ m - m) > tol.idem * max(1.0, frobenius(m)):
        return False
    w, _ = eig_sym(m, tol, vectors=False)
    return all(min(abs(x), abs(x - 1.0)) <= 100 * tol.idem for x in w)


def oplus(a, b, tol: Tolerances = DEFAULT_TOL) -> np.ndarray | None:
    """Partial effect sum: ``a + b`` when that stays below the identity.

    Returns ``None`` when the sum is undefined, mirroring the partiality of
    the abstract operation.
    """
    ma = require_hermitian(a, tol)
    mb = require_hermitian(b, tol)
    _same_dim(ma, mb)
    total = ma + mb
    eye = np.eye(ma.shape[0], dtype=np.complex128)
    if is_psd(eye - total, tol):
        return total
    return None


def orthosupplement(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    m = require_hermitian(a, tol)
    return np.eye(m.shape[0], dtype=np.complex128) - m


def sqrt_psd(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Principal square root of a positive semidefinite matrix.

    Parameters
    ----------
    a : array_like
        Hermitian PSD input; eigenvalues inside the negative tolerance band
        are clipped to zero, anything worse raises :class:`NotPsdError`.
    """
    m = require_hermitian(a, tol)
    gate = tol.psd * max(1.0, frobenius(m))
    w, v = eig_sym(m, tol)
    if w[0] < -gate:
        raise NotPsdError(f"matrix has eigenvalue {w[0]:.3e}; not PSD within tolerance")
    w = np.clip(w, 0.0, None)
    root = (v * np.sqrt(w)) @ v.conj().T
    return (root + root.conj().T) / 2.0


def interval_membership(t, lo, hi, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Is ``t`` inside the Loewner interval ``[lo, hi]``?"""
    return loewner_leq(lo, t, tol) and loewner_leq(t, hi, tol)


def sharp_witness(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray | None:
    """A nonzero effect below both ``a`` and ``I - a``, if one exists.

    Any eigenpair ``(lam, v)`` of ``a`` with ``lam`` strictly inside ``(0, 1)``
    yields the witness ``min(lam, 1 - lam) * v v*``; for projections every
    eigenvalue sits at the ends, no witness exists, and ``None`` comes back.
    That witness is exactly what "unsharp" means: the element and its
    orthosupplement share a nonzero lower bound.
    """
    m = require_hermitian(a, tol)
    gate = tol.psd * max(1.0, frobenius(m))
    w, v = eig_sym(m, tol)
    best = None
    best_margin = gate
    for i, lam in enumerate(w):
        margin = min(float(lam), 1.0 - float(lam))
        if margin > best_margin:
            best_margin = margin
            best = i
    if best is None:
        return None
    vec = v[:, best : best + 1]
    return best_margin * (vec @ vec.conj().T)


def wot_sot_identity_residual(p, q, x) -> float:
    """Residual of the projection identity tying strong to weak convergence.

    For projections ``P`` and ``Q``, ``||(P - Q)x||^2`` equals
    ``(Px, x) - (Px, Qx) - (Qx, Px) + (Qx, x)``; the identity is what lets a
    weak limit of projections upgrade to a strong one.  Returns the absolute
    difference of the two sides, which is floating-point noise for genuine
    projections.
    """
    mp = as_matrix(p)
    mq = as_matrix(q)
    _same_dim(mp, mq)
    vx = np.asarray(x, dtype=np.complex128).reshape(-1)
    if vx.shape[0] != mp.shape[0]:
        raise DimensionMismatchError("vector length does not match matrix dimension")
    px = mp @ vx
    qx = mq @ vx
    lhs = float(np.linalg.norm(px - qx) ** 2)
    # inner product linear in the first slot: (u, v) = v* u
    inner = lambda u, w: complex(np.vdot(w, u))
    rhs = inner(px, vx) - inner(px, qx) - inner(qx, px) + inner(qx, vx)
    return abs(lhs - rhs.real) + abs(rhs.imag)


# -- seeded generators ----------------------------------------------------


def random_hermitian(dim: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (g + g.conj().T) / 2.0


def haar_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def random_effect(dim: int, rng: np.random.Generator) -> np.ndarray:
    u = haar_unitary(dim, rng)
    spectrum = rng.uniform(0.0, 1.0, size=dim)
    return (u * spectrum) @ u.conj().T


def random_projection(dim: int, rng: np.random.Generator, rank: int | None = None) -> np.ndarray:
    if rank is None:
        rank = int(rng.integers(0, dim + 1))
    u = haar_unitary(dim, rng)
    cols = u[:, :rank]
    return cols @ cols.conj().T


def random_unit_vector(dim: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return v / np.linalg.norm(v)
