# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; drop-in replacement for ``_kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, M_PI

cnp.import_array()

BACKEND = "cython"


cdef inline long md(long x, long d) nogil:
    cdef long r = x % d
    return r + d if r < 0 else r


cdef inline long c_encode(long a, long b, long g, long n, long d) nogil:
    return ((md(n, 2) * d + md(a, d)) * d + md(b, d)) * d + md(g, d)


cdef inline long c_mul(long x, long y, long d) nogil:
    cdef long g1 = x % d, g2 = y % d
    x //= d
    y //= d
    cdef long b1 = x % d, b2 = y % d
    x //= d
    y //= d
    cdef long a1 = x % d, a2 = y % d
    cdef long n1 = x // d, n2 = y // d
    cdef long s = -1 if n1 else 1
    cdef long h = (d + 1) // 2
    cdef long area = md(a1 * b2 - a2 * b1, d)
    return c_encode(a1 + s * a2, b1 + s * b2, g1 + g2 + s * md(h * area, d), n1 + n2, d)


cdef inline long c_inv(long x, long d) nogil:
    cdef long g = x % d
    x //= d
    cdef long b = x % d
    x //= d
    cdef long a = x % d
    cdef long n = x // d
    cdef long s = 1 if n else -1
    return c_encode(s * a, s * b, -g, n, d)


def encode(alpha, beta, gamma, nu, d):
    return c_encode(alpha, beta, gamma, nu, d)


def decode(code, d):
    code, g = divmod(int(code), d)
    code, b = divmod(code, d)
    nu, a = divmod(code, d)
    return a, b, g, nu


def mul(long x, long y, long d):
    return c_mul(x, y, d)


def inv(long x, long d):
    return c_inv(x, d)


def commutator(long x, long y, long d):
    return c_mul(c_mul(c_mul(x, y, d), c_inv(x, d), d), c_inv(y, d), d)


def commutator_set(left, right, long d):
    cdef long[:] L = np.ascontiguousarray(left, dtype=np.int64)
    cdef long[:] R = np.ascontiguousarray(right, dtype=np.int64)
    cdef long n = 2 * d * d * d
    seen_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] seen = seen_arr
    cdef Py_ssize_t i, j
    cdef long x, xi, y, c
    with nogil:
        for i in range(L.shape[0]):
            x = L[i]
            xi = c_inv(x, d)
            for j in range(R.shape[0]):
                y = R[j]
                c = c_mul(c_mul(c_mul(x, y, d), xi, d), c_inv(y, d), d)
                seen[c] = 1
    return np.flatnonzero(seen_arr).astype(np.int64)


def closure(generators, long d):
    cdef long n = 2 * d * d * d
    member_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] member = member_arr
    elems_arr = np.empty(n, dtype=np.int64)
    cdef long[:] elems = elems_arr
    basis_arr = np.empty(n, dtype=np.int64)
    cdef long[:] basis = basis_arr
    cdef long size = 1, nbasis = 0, start, stop, i, k, y, g
    member[0] = 1
    elems[0] = 0
    for g in np.asarray(generators, dtype=np.int64):
        if member[g]:
            continue
        basis[nbasis] = g
        nbasis += 1
        start = 0
        stop = size
        while start < stop:
            for i in range(start, stop):
                for k in range(nbasis):
                    y = c_mul(elems[i], basis[k], d)
                    if not member[y]:
                        member[y] = 1
                        elems[size] = y
                        size += 1
            start = stop
            stop = size
    return np.flatnonzero(member_arr).astype(np.int64)


cdef cnp.ndarray _omega(long d):
    cdef cnp.ndarray w = np.empty(d, dtype=np.complex128)
    cdef long k, c
    for k in range(d):
        c = k - d if k > (d - 1) // 2 else k
        w[k] = cos(2 * M_PI * c / d) + 1j * sin(2 * M_PI * c / d)
    return w


def ww_fourier(table, long sign, long d):
    cdef double complex[:, :] T = np.ascontiguousarray(table, dtype=np.complex128)
    cdef double complex[:] w = _omega(d)
    out_arr = np.zeros((d, d), dtype=np.complex128)
    cdef double complex[:, :] out = out_arr
    cdef long h = (d + 1) // 2
    cdef long s = -1 if sign < 0 else 1
    cdef long a, b, g, e
    cdef double complex acc
    for g in range(d):
        for e in range(d):
            acc = 0
            for a in range(d):
                for b in range(d):
                    acc = acc + T[a, b] * w[md(s * h * (b * g - a * e), d)]
            out[g, e] = acc / d
    return out_arr


def weyl_convolution(t1, t2, long d):
    cdef double complex[:, :] T1 = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef double complex[:, :] T2 = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef double complex[:] w = _omega(d)
    out_arr = np.zeros((d, d), dtype=np.complex128)
    cdef double complex[:, :] out = out_arr
    cdef long h = (d + 1) // 2
    cdef long a, b, a2, b2
    cdef double complex acc
    for a in range(d):
        for b in range(d):
            acc = 0
            for a2 in range(d):
                for b2 in range(d):
                    acc = acc + (w[md(h * (a * b2 - a2 * b), d)]
                                 * T1[md(a2 - a, d), md(b2 - b, d)]
                                 * T2[md(-a2, d), md(-b2, d)])
            out[md(-a, d), md(-b, d)] = acc / d
    return out_arr


def moyal_star(w1, w2, long d):
    cdef double complex[:, :] W1 = np.ascontiguousarray(w1, dtype=np.complex128)
    cdef double complex[:, :] W2 = np.ascontiguousarray(w2, dtype=np.complex128)
    cdef double complex[:] w = _omega(d)
    out_arr = np.zeros((d, d), dtype=np.complex128)
    cdef double complex[:, :] out = out_arr
    cdef long a, b, a1, b1, a2, b2
    cdef double complex acc, inner
    for a in range(d):
        for b in range(d):
            acc = 0
            for a1 in range(d):
                for b1 in range(d):
                    inner = 0
                    for a2 in range(d):
                        for b2 in range(d):
                            inner = inner + (w[md(2 * a2 * b1 - 2 * a1 * b2, d)]
                                             * W2[(a + a2) % d, (b + b2) % d])
                    acc = acc + W1[(a + a1) % d, (b + b1) % d] * inner
            out[a, b] = acc / (d * d)
    return out_arr


def unified_convolution(c1, c2, long d):
    cdef double complex[:, :, :] C1 = np.ascontiguousarray(c1, dtype=np.complex128)
    cdef double complex[:, :, :] C2 = np.ascontiguousarray(c2, dtype=np.complex128)
    cdef double complex[:] w = _omega(d)
    out_arr = np.zeros((2, d, d), dtype=np.complex128)
    cdef double complex[:, :, :] out = out_arr
    cdef long h = (d + 1) // 2
    cdef long nu, n1, n2, s1, a, b, a2, b2
    cdef double complex acc
    for nu in range(2):
        for a in range(d):
            for b in range(d):
                acc = 0
                for n2 in range(2):
                    n1 = (nu + n2) % 2
                    s1 = -1 if n1 else 1
                    for a2 in range(d):
                        for b2 in range(d):
                            acc = acc + (C1[n1, md(a - s1 * a2, d), md(b - s1 * b2, d)]
                                         * C2[n2, a2, b2]
                                         * w[md(h * s1 * (a * b2 - a2 * b), d)])
                out[nu, a, b] = acc / (2 * d)
    return out_arr
