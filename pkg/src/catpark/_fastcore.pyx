# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure-Python enumeration kernels in _purecore.

Same three entry points, same output, same ordering; only the inner loops
run on C integers.  Statistics are recomputed per emitted leaf, which is
branch-free enough that incremental bookkeeping is not worth the code.
"""

from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef long *_alloc(Py_ssize_t n) except NULL:
    cdef long *buf = <long *> malloc(n * sizeof(long))
    if buf == NULL:
        raise MemoryError()
    return buf


def iter_bounded(bounds):
    """Yield every nondecreasing tuple p with 1 <= p[i] <= bounds[i],
    in strictly increasing lexicographic order."""
    cdef Py_ssize_t n = len(bounds)
    if n == 0:
        yield ()
        return
    cdef long *b = _alloc(n)
    cdef long *p = _alloc(n)
    cdef Py_ssize_t i, j
    cdef long v
    cdef bint empty = 0
    cdef list cur
    try:
        for i in range(n):
            b[i] = bounds[i]
            p[i] = 1
            if b[i] < 1:
                empty = 1
        if empty:
            return
        cur = [1] * n
        while True:
            yield tuple(cur)
            j = n - 1
            while j >= 0 and p[j] >= b[j]:
                j -= 1
            if j < 0:
                return
            v = p[j] + 1
            for i in range(j, n):
                p[i] = v
                cur[i] = v
    finally:
        free(b)
        free(p)


def luck_histogram(m, n):
    """Histogram of the luck statistic over all length-n sequences bounded
    by (1, m+1, 2m+1, ...); hist[k] = sequences with k positions at their
    bound."""
    cdef long cm = m
    cdef Py_ssize_t cn = n
    cdef list hist = [0] * (cn + 1)
    if cn == 0:
        hist[0] = 1
        return hist
    cdef long *p = _alloc(cn)
    cdef long long *counts = <long long *> malloc((cn + 1) * sizeof(long long))
    if counts == NULL:
        free(p)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef long v, luck
    try:
        for i in range(cn):
            p[i] = 1
        for i in range(cn + 1):
            counts[i] = 0
        while True:
            luck = 0
            for i in range(cn):
                if p[i] == cm * i + 1:
                    luck += 1
            counts[luck] += 1
            j = cn - 1
            while j >= 0 and p[j] >= cm * j + 1:
                j -= 1
            if j < 0:
                break
            v = p[j] + 1
            for i in range(j, cn):
                p[i] = v
        for i in range(cn + 1):
            hist[i] = counts[i]
        return hist
    finally:
        free(p)
        free(counts)


def stat_quad_histogram(m, n):
    """Joint histogram of (luck, freq of 1, first window hit, first top hit)
    over the same bounded sequences; missing hits encode as n+1."""
    cdef long cm = m
    cdef Py_ssize_t cn = n
    cdef dict out = {}
    if cn == 0:
        return out
    cdef long *p = _alloc(cn)
    cdef Py_ssize_t i, j
    cdef long v, hi, luck, ones, first_win, first_top, absent = cn + 1
    cdef tuple key
    try:
        for i in range(cn):
            p[i] = 1
        while True:
            luck = 0
            ones = 0
            first_win = 0
            first_top = 0
            for i in range(cn):
                v = p[i]
                hi = cm * i + 1
                if v == hi:
                    luck += 1
                if v == 1:
                    ones += 1
                if i >= 1:
                    if first_win == 0 and v >= cm * (i - 1) + 2:
                        first_win = i + 1
                    if first_top == 0 and v == hi:
                        first_top = i + 1
            key = (luck, ones, first_win if first_win else absent,
                   first_top if first_top else absent)
            if key in out:
                out[key] += 1
            else:
                out[key] = 1
            j = cn - 1
            while j >= 0 and p[j] >= cm * j + 1:
                j -= 1
            if j < 0:
                return out
            v = p[j] + 1
            for i in range(j, cn):
                p[i] = v
    finally:
        free(p)
