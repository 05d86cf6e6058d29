# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled segment composition kernel.

Mirrors ``_pykernel.compose_segments`` exactly on every input it accepts.
Infinite bounds are encoded as +/-2^62 sentinels; finite values must stay
below 2^59 in magnitude (tail offsets drift sentinels by at most one offset
per arithmetic step, so the sentinel zone beyond 2^61 never collides with
the finite zone).  Anything outside that range raises OverflowError and the
caller falls back to the pure kernel.
"""

from libc.stdint cimport int64_t

import math

cdef int64_t SENT = (<int64_t>1) << 62
cdef int64_t ZONE = (<int64_t>1) << 61

_GUARD = 1 << 59
_PINF = math.inf
_NINF = -math.inf

cdef int _load(seq, Py_ssize_t n, int64_t *lo, int64_t *hi, int64_t *off) except -1:
    cdef Py_ssize_t i
    for i in range(n):
        s = seq[i]
        v = s[0]
        if isinstance(v, float):
            if v == _NINF:
                lo[i] = -SENT
            elif v == _PINF:
                lo[i] = SENT
            else:
                raise OverflowError("non-integer bound")
        else:
            if v >= _GUARD or v <= -_GUARD:
                raise OverflowError("bound too large for compiled kernel")
            lo[i] = v
        v = s[1]
        if isinstance(v, float):
            if v == _NINF:
                hi[i] = -SENT
            elif v == _PINF:
                hi[i] = SENT
            else:
                raise OverflowError("non-integer bound")
        else:
            if v >= _GUARD or v <= -_GUARD:
                raise OverflowError("bound too large for compiled kernel")
            hi[i] = v
        v = s[2]
        if v >= _GUARD or v <= -_GUARD:
            raise OverflowError("offset too large for compiled kernel")
        off[i] = v
    return 0


cdef inline object _decode(int64_t v):
    if v <= -ZONE:
        return _NINF
    if v >= ZONE:
        return _PINF
    return v


def compose_segments(a, b):
    """Segments of the composite map 'a then b', merged into canonical form."""
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t m = len(b)
    if n > 60 or m > 60:
        raise OverflowError("segment list too long for compiled kernel")
    cdef int64_t alo[60]
    cdef int64_t ahi[60]
    cdef int64_t aof[60]
    cdef int64_t blo[60]
    cdef int64_t bhi[60]
    cdef int64_t bof[60]
    _load(a, n, alo, ahi, aof)
    _load(b, m, blo, bhi, bof)

    cdef int64_t olo[124]
    cdef int64_t ohi[124]
    cdef int64_t oof[124]
    cdef Py_ssize_t nout = 0

    cdef Py_ssize_t i, j = 0, k
    cdef int64_t ilo, ihi, s_lo, s_hi, noff
    for i in range(n):
        ilo = alo[i] + aof[i]
        ihi = ahi[i] + aof[i]
        while j < m and bhi[j] < ilo:
            j += 1
        k = j
        while k < m and blo[k] <= ihi:
            s_lo = ilo if ilo > blo[k] else blo[k]
            s_hi = ihi if ihi < bhi[k] else bhi[k]
            if s_lo <= s_hi:
                noff = aof[i] + bof[k]
                s_lo -= aof[i]
                s_hi -= aof[i]
                if nout > 0 and oof[nout - 1] == noff and ohi[nout - 1] + 1 == s_lo:
                    ohi[nout - 1] = s_hi
                else:
                    olo[nout] = s_lo
                    ohi[nout] = s_hi
                    oof[nout] = noff
                    nout += 1
            k += 1

    out = []
    for i in range(nout):
        out.append((_decode(olo[i]), _decode(ohi[i]), oof[i]))
    return out
