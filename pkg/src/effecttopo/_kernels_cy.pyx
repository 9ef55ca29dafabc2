# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: cyclic Jacobi diagonalization and bitmask closure.

Mirrors ``_kernels_py`` exactly; the dispatcher in ``effecttopo.kernels``
picks whichever import succeeds.
"""

from libc.math cimport sqrt
from libc.stdlib cimport calloc, free, malloc


cdef double _off_norm(double complex[:, :] a, Py_ssize_t n) noexcept:
    cdef Py_ssize_t i, j
    cdef double off2 = 0.0
    cdef double complex x
    for i in range(n - 1):
        for j in range(i + 1, n):
            x = a[i, j]
            off2 += x.real * x.real + x.imag * x.imag
    return sqrt(2.0 * off2)


def jacobi_sweeps(double complex[:, :] a, double complex[:, :] v,
                  double off_target, int max_sweeps):
    """Cyclic Jacobi on a Hermitian matrix held in ``a``, in place.

    Accumulates the rotations into ``v``.  Returns the number of sweeps
    used (0 for already-converged input), or -1 if the off-diagonal
    Frobenius norm did not reach ``off_target`` within ``max_sweeps``.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i, j
    cdef int sweep
    cdef double app, aqq, absapq, tau, sigma, c
    cdef double complex apq, phase, s, sbar, aip, aiq, apj, aqj, vip, viq

    if n < 2:
        return 0
    for sweep in range(max_sweeps + 1):
        if _off_norm(a, n) <= off_target:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                absapq = abs(apq)
                if absapq == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * absapq)
                if tau >= 0.0:
                    sigma = -1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    sigma = 1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + sigma * sigma)
                phase = apq / absapq
                s = sigma * c * phase.conjugate()
                sbar = s.conjugate()
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = aip * c + aiq * s
                    a[i, q] = -aip * sbar + aiq * c
                for j in range(n):
                    apj = a[p, j]
                    aqj = a[q, j]
                    a[p, j] = c * apj + sbar * aqj
                    a[q, j] = -s * apj + c * aqj
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = vip * c + viq * s
                    v[i, q] = -vip * sbar + viq * c
    return -1


def bitset_closure(masks, int n_bits, bint use_and):
    """Close bitmask sets under pairwise union/intersection; sorted list out.

    Same generator-probing worklist as the pure version, with a dense
    visited table and an early stop once the whole power set is reached.
    """
    if n_bits < 0 or n_bits > 26:
        raise ValueError(f"n_bits must lie in [0, 26], got {n_bits}")
    cdef unsigned int size = 1u << n_bits
    # validation happens on Python objects: a cdef loop variable would
    # overflow on negative or oversized masks before the check could fire
    gens_list = sorted({int(mask_obj) for mask_obj in masks})
    for mask_obj in gens_list:
        if mask_obj < 0 or mask_obj >= size:
            raise ValueError(f"mask {mask_obj} out of range for {n_bits} bits")

    cdef Py_ssize_t ngens = len(gens_list)
    cdef Py_ssize_t gi, head = 0, tail = 0
    cdef unsigned int m, nm, g

    cdef unsigned char* visited = <unsigned char*>calloc(size, 1)
    cdef unsigned int* queue = <unsigned int*>malloc(size * sizeof(unsigned int))
    cdef unsigned int* gens = <unsigned int*>malloc((ngens if ngens else 1) * sizeof(unsigned int))
    if visited == NULL or queue == NULL or gens == NULL:
        free(visited); free(queue); free(gens)
        raise MemoryError()
    try:
        for gi in range(ngens):
            gens[gi] = <unsigned int>gens_list[gi]
        for gi in range(ngens):
            g = gens[gi]
            if not visited[g]:
                visited[g] = 1
                queue[tail] = g
                tail += 1
        while head < tail and tail < <Py_ssize_t>size:
            m = queue[head]
            head += 1
            if use_and:
                for gi in range(ngens):
                    nm = m & gens[gi]
                    if not visited[nm]:
                        visited[nm] = 1
                        queue[tail] = nm
                        tail += 1
            else:
                for gi in range(ngens):
                    nm = m | gens[gi]
                    if not visited[nm]:
                        visited[nm] = 1
                        queue[tail] = nm
                        tail += 1
        out = [queue[gi] for gi in range(tail)]
    finally:
        free(visited)
        free(queue)
        free(gens)
    out.sort()
    return out
