# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled pivot-box scan; mirrors modinv.scan.scan_box_python exactly."""
import numpy as np
from libc.math cimport fabs, floor


def scan_box(double[:, ::1] K, long long[::1] lo, long long[::1] hi,
             double[::1] bound, long long[::1] level_end, bint scale_first,
             double tol):
    cdef Py_ssize_t m = K.shape[0]
    cdef Py_ssize_t E = K.shape[1]
    cdef double[:, ::1] partial = np.zeros((m + 1, E))
    cdef long long[::1] z = np.zeros(m, dtype=np.int64)
    cdef Py_ssize_t t, e, start, stop
    cdef double v, r, scale
    cdef bint ok
    found = []
    if m == 0:
        return np.zeros((0, 0), dtype=np.int64)
    t = 0
    z[0] = lo[0]
    while t >= 0:
        if z[t] > hi[t]:
            t -= 1
            if t >= 0:
                z[t] += 1
            continue
        start = 0 if t == 0 else level_end[t - 1]
        stop = level_end[t]
        for e in range(start, E):
            partial[t + 1, e] = partial[t, e] + z[t] * K[t, e]
        scale = <double> z[0] if scale_first else 1.0
        ok = True
        for e in range(start, stop):
            v = partial[t + 1, e]
            r = floor(v + 0.5)
            if fabs(v - r) > tol or v < -tol or v > bound[e] * scale + tol:
                ok = False
                break
        if ok and t == m - 1:
            found.append(tuple(z))
            z[t] += 1
        elif ok:
            t += 1
            z[t] = lo[t]
        else:
            z[t] += 1
    if not found:
        return np.zeros((0, m), dtype=np.int64)
    return np.array(found, dtype=np.int64)
