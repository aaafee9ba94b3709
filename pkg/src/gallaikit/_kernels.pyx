# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops. Must stay behaviourally identical to _kernels_py."""
from libc.math cimport sqrt, fabs
from libc.stdlib cimport malloc, free

import numpy as np


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(i + 1, n):
            s += a[i, j] * a[i, j]
    return sqrt(2.0 * s)


cdef int _jacobi(double[:, ::1] a, double tol, int max_sweeps) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, k
    cdef int sweep
    cdef double apq, theta, t, c, s, akp, akq
    for sweep in range(max_sweeps + 1):
        if _off_norm(a, n) < tol:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[p, k] = a[k, p]
                    a[k, q] = s * akp + c * akq
                    a[q, k] = a[k, q]
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
    return -1


def jacobi_sweeps(double[:, ::1] a, double tol, int max_sweeps):
    """Cyclic Jacobi rotations on symmetric ``a`` in place.

    Returns the number of completed sweeps once the off-diagonal Frobenius
    norm drops below ``tol``, or -1 after ``max_sweeps`` sweeps.
    """
    cdef int r
    with nogil:
        r = _jacobi(a, tol, max_sweeps)
    return r


cdef struct Search:
    const unsigned char* adj
    Py_ssize_t n
    int length
    int start
    int* path
    int* pos
    const long long* req
    int nreq
    const long long* req_e
    int nreq_e


cdef bint _closes(Search* st) noexcept nogil:
    cdef int i, px, py, d
    for i in range(st.nreq):
        if st.pos[st.req[i]] < 0:
            return False
    for i in range(st.nreq_e):
        px = st.pos[st.req_e[2 * i]]
        py = st.pos[st.req_e[2 * i + 1]]
        if px < 0 or py < 0:
            return False
        d = px - py if px > py else py - px
        if d != 1 and d != st.length - 1:
            return False
    return True


cdef bint _extend(Search* st, int depth) noexcept nogil:
    cdef int last = st.path[depth - 1]
    cdef int missing = 0
    cdef int i, y
    if depth == st.length:
        return st.adj[last * st.n + st.start] != 0 and _closes(st)
    for i in range(st.nreq):
        if st.pos[st.req[i]] < 0:
            missing += 1
    if missing > st.length - depth:
        return False
    for y in range(st.n):
        if st.adj[last * st.n + y] == 0 or st.pos[y] >= 0:
            continue
        st.path[depth] = y
        st.pos[y] = depth
        if _extend(st, depth + 1):
            st.pos[y] = -1
            return True
        st.pos[y] = -1
    return False


def cycle_exists(const unsigned char[:, ::1] adj, int length, int start, int first,
                 const long long[::1] required, const long long[::1] required_edges):
    """Is there a simple cycle on ``length`` vertices through ``start``?

    ``first`` (or -1) forces the second vertex. Every vertex in ``required``
    must lie on the cycle, and each consecutive pair in the flattened
    ``required_edges`` must be consecutive on it.
    """
    cdef Py_ssize_t n = adj.shape[0]
    cdef Search st
    cdef int depth = 1
    cdef bint found
    cdef int i
    if length < 3 or length > n:
        return False
    if first >= 0 and adj[start, first] == 0:
        return False
    st.path = <int*> malloc(length * sizeof(int))
    st.pos = <int*> malloc(n * sizeof(int))
    if st.path == NULL or st.pos == NULL:
        free(st.path)
        free(st.pos)
        raise MemoryError()
    for i in range(n):
        st.pos[i] = -1
    st.adj = &adj[0, 0]
    st.n = n
    st.length = length
    st.start = start
    st.req = &required[0] if required.shape[0] else NULL
    st.nreq = required.shape[0]
    st.req_e = &required_edges[0] if required_edges.shape[0] else NULL
    st.nreq_e = required_edges.shape[0] // 2
    st.path[0] = start
    st.pos[start] = 0
    if first >= 0:
        st.path[1] = first
        st.pos[first] = 1
        depth = 2
    with nogil:
        found = _extend(&st, depth)
    free(st.path)
    free(st.pos)
    return bool(found)
