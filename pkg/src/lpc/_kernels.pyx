# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scans for the exhaustive duality check.

Terms are a constructor over child indices into a table of smaller terms.  Each
scan visits every term and counts those whose double dual is not itself or whose
dual has children of the wrong mode.
"""


def scan_unary(const int[:] pool, const int[:] dual, const signed char[:] mode, int kid_mode):
    cdef Py_ssize_t i
    cdef int a, da
    cdef long long bad = 0
    cdef long first = -1
    for i in range(pool.shape[0]):
        a = pool[i]
        da = dual[a]
        if dual[da] != a or mode[da] != kid_mode:
            bad += 1
            if first < 0:
                first = i
    return bad, first


def scan_binary(const int[:] left, const int[:] right, const int[:] dual, const signed char[:] mode,
                int left_mode, int right_mode):
    cdef Py_ssize_t i, j, n = left.shape[0], k = right.shape[0]
    cdef int a, b, da, db
    cdef long long bad = 0
    cdef long long first = -1
    for i in range(n):
        a = left[i]
        da = dual[a]
        for j in range(k):
            b = right[j]
            db = dual[b]
            if dual[da] != a or dual[db] != b or mode[da] != left_mode or mode[db] != right_mode:
                bad += 1
                if first < 0:
                    first = i * k + j
    return bad, first
