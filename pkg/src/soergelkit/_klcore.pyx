# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled KL table kernel.

Same recursion as ``_klcore_py``, on a dense int64 cube ``H[x, y, e]`` (the
coefficient of v^e in h_{y,x}).  Rows of one length stratum only read rows of
shorter strata, so a stratum is filled in parallel; every row is written by a
single thread, which keeps the result independent of the thread count.
Arithmetic is overflow-checked; on overflow :class:`OverflowError` is raised
and the caller falls back to the arbitrary-precision kernel.
"""

import numpy as np
from cython.parallel cimport prange

cdef extern from *:
    """
    static inline int klc_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    static inline int klc_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    """
    int klc_add(long long a, long long b, long long *r) noexcept nogil
    int klc_mul(long long a, long long b, long long *r) noexcept nogil


cdef int _row(long long[:, :, ::1] H, const int[:, ::1] rm, const int[::1] length,
              const int[::1] last, int x, int n, int width) noexcept nogil:
    cdef int s = last[x]
    cdef int w = rm[x, s]
    cdef int y, ys, z, e
    cdef long long c, mu, t
    cdef int bad = 0
    for y in range(n):
        if length[y] > length[w]:
            break
        ys = rm[y, s]
        for e in range(width):
            c = H[w, y, e]
            if c == 0:
                continue
            bad |= klc_add(H[x, ys, e], c, &H[x, ys, e])
            if length[ys] > length[y]:
                if e + 1 >= width:
                    return 2
                bad |= klc_add(H[x, y, e + 1], c, &H[x, y, e + 1])
            else:
                if e == 0:
                    return 2
                bad |= klc_add(H[x, y, e - 1], c, &H[x, y, e - 1])
    if width > 1:
        for z in range(n):
            if length[z] >= length[w]:
                break
            mu = H[w, z, 1]
            if mu == 0 or length[rm[z, s]] > length[z]:
                continue
            for y in range(n):
                if length[y] > length[z]:
                    break
                for e in range(width):
                    c = H[z, y, e]
                    if c == 0:
                        continue
                    bad |= klc_mul(mu, c, &t)
                    bad |= klc_add(H[x, y, e], -t, &H[x, y, e])
    return bad


def kl_cube(right_mult, lengths, last_letter, strata, int width, int threads=1):
    """Return the int64 array ``H`` of shape (n, n, width)."""
    cdef const int[:, ::1] rm = np.ascontiguousarray(right_mult, dtype=np.int32)
    cdef const int[::1] length = np.ascontiguousarray(lengths, dtype=np.int32)
    cdef const int[::1] last = np.ascontiguousarray(last_letter, dtype=np.int32)
    cdef int n = length.shape[0]
    out = np.zeros((n, n, width), dtype=np.int64)
    cdef long long[:, :, ::1] H = out
    cdef int x, lo, hi
    cdef int err = 0
    H[0, 0, 0] = 1
    for stratum in strata[1:]:
        lo = stratum.start
        hi = stratum.stop
        if threads > 1:
            for x in prange(lo, hi, nogil=True, num_threads=threads, schedule="static"):
                err |= _row(H, rm, length, last, x, n, width)
        else:
            with nogil:
                for x in range(lo, hi):
                    err |= _row(H, rm, length, last, x, n, width)
        if err & 2:
            raise ArithmeticError("KL degree bound violated in compiled kernel")
        if err:
            raise OverflowError("int64 overflow in compiled KL kernel")
    return out
