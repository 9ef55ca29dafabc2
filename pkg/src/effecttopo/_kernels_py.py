"""Pure-Python reference implementations of the hot kernels.

Same algorithms as ``_kernels_cy``; this module is the import-time fallback
when the compiled extension is unavailable (and the baseline for the
benchmark).  Matrices arrive as nested structures already copied by the
dispatcher in :mod:`effecttopo.kernels`, so everything here may mutate its
arguments freely.
"""

from __future__ import annotations

from math import sqrt


def jacobi_sweeps(a, v, off_target, max_sweeps):
    """Cyclic Jacobi diagonalization of a Hermitian matrix, in place.

    ``a`` and ``v`` are square nested lists of Python complex numbers.  Each
    sweep zeroes every off-diagonal pair once with a unitary plane rotation;
    sweeps repeat until the off-diagonal Frobenius norm is at most
    ``off_target``.  Returns the number of sweeps used, or -1 if the target
    was not reached within ``max_sweeps``.
    """
    n = len(a)
    if n < 2:
        return 0

    def off_norm() -> float:
        off2 = 0.0
        for i in range(n - 1):
            row = a[i]
            for j in range(i + 1, n):
                x = row[j]
                off2 += x.real * x.real + x.imag * x.imag
        return sqrt(2.0 * off2)

    for sweep in range(max_sweeps + 1):
        if off_norm() <= off_target:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                absapq = abs(apq)
                if absapq == 0.0:
                    continue
                app = a[p][p].real
                aqq = a[q][q].real
                tau = (aqq - app) / (2.0 * absapq)
                # smaller-magnitude root of s^2 - 2*tau*s - 1 = 0
                if tau >= 0.0:
                    sigma = -1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    sigma = 1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + sigma * sigma)
                phase = apq / absapq
                s = sigma * c * phase.conjugate()
                sbar = s.conjugate()
                # right-multiply columns p, q by the rotation
                for i in range(n):
                    aip = a[i][p]
                    aiq = a[i][q]
                    a[i][p] = aip * c + aiq * s
                    a[i][q] = -aip * sbar + aiq * c
                # left-multiply rows p, q by its adjoint
                rp = a[p]
                rq = a[q]
                for j in range(n):
                    apj = rp[j]
                    aqj = rq[j]
                    rp[j] = c * apj + sbar * aqj
                    rq[j] = -s * apj + c * aqj
                rp[q] = 0.0
                rq[p] = 0.0
                rp[p] = complex(rp[p].real, 0.0)
                rq[q] = complex(rq[q].real, 0.0)
                for i in range(n):
                    vi = v[i]
                    vip = vi[p]
                    viq = vi[q]
                    vi[p] = vip * c + viq * s
                    vi[q] = -vip * sbar + viq * c
    return -1


def bitset_closure(masks, n_bits, use_and):
    """Close a family of bitmask sets under pairwise union (or intersection).

    Generator-union closure: any finite fold of pairwise member operations
    is a fold of member-with-generator operations, so probing each reached
    mask against the original generators is exhaustive.  Visited masks are
    tracked in a dense table; once every subset of the ``n_bits``-element
    ground set has been reached the family can no longer grow and the scan
    stops early.  Returns a sorted list.
    """
    if n_bits < 0 or n_bits > 26:
        raise ValueError(f"n_bits must lie in [0, 26], got {n_bits}")
    size = 1 << n_bits
    gens = sorted({int(m) for m in masks})
    for g in gens:
        if not 0 <= g < size:
            raise ValueError(f"mask {g} out of range for {n_bits} bits")
    visited = bytearray(size)
    queue: list[int] = []
    for g in gens:
        if not visited[g]:
            visited[g] = 1
            queue.append(g)
    head = 0
    while head < len(queue) and len(queue) < size:
        m = queue[head]
        head += 1
        if use_and:
            for g in gens:
                nm = m & g
                if not visited[nm]:
                    visited[nm] = 1
                    queue.append(nm)
        else:
            for g in gens:
                nm = m | g
                if not visited[nm]:
                    visited[nm] = 1
                    queue.append(nm)
    return sorted(queue)
