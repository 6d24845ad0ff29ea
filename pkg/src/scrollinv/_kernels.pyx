# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled twins of the kernels in ``_kernels_py``.

Coefficient arithmetic runs in checked 64-bit; ``sqfree_mul`` raises
OverflowError when any coefficient leaves that range so the caller can
retry with Python integers.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from cython.operator cimport dereference as deref, preincrement as inc

cnp.import_array()

cdef extern from *:
    """
    static inline int sq_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int sq_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int sq_mul_ovf(long long a, long long b, long long *r) nogil
    int sq_add_ovf(long long a, long long b, long long *r) nogil

BACKEND = "cython"


def sqfree_mul(dict a, dict b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef vector[uint64_t] ka, kb
    cdef vector[long long] ca, cb
    ka.reserve(na); ca.reserve(na); kb.reserve(nb); cb.reserve(nb)
    for k, c in a.items():
        ka.push_back(k); ca.push_back(c)
    for k, c in b.items():
        kb.push_back(k); cb.push_back(c)

    cdef unordered_map[uint64_t, long long] acc
    cdef uint64_t key
    cdef long long prod, total
    cdef int bad = 0
    with nogil:
        acc.reserve(<size_t>(na * nb if na * nb < 4194304 else 4194304))
        for i in range(na):
            for j in range(nb):
                if ka[i] & kb[j]:
                    continue
                if sq_mul_ovf(ca[i], cb[j], &prod):
                    bad = 1
                    break
                key = ka[i] | kb[j]
                if sq_add_ovf(acc[key], prod, &total):
                    bad = 1
                    break
                acc[key] = total
            if bad:
                break
    if bad:
        raise OverflowError("coefficient left the signed 64-bit range")

    out = {}
    cdef unordered_map[uint64_t, long long].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


def transversal_keys(int g):
    cdef Py_ssize_t n = (<Py_ssize_t>1) << g, w
    cdef int i
    cdef uint64_t key
    out = [None] * n
    for w in range(n):
        key = 0
        for i in range(1, g + 1):
            key |= (<uint64_t>1) << (2 * (i - 1) + ((w >> (g - i)) & 1))
        out[w] = key
    return out


def first_non_transversal(keys, int g):
    cdef Py_ssize_t idx = 0
    cdef uint64_t key, pair
    cdef int i
    for k in keys:
        if k < 0 or k >> (2 * g):
            return idx
        key = k
        for i in range(g):
            pair = (key >> (2 * i)) & 3
            if pair != 1 and pair != 2:
                return idx
        idx += 1
    return -1


def hypercube_edges(int g):
    cdef Py_ssize_t n = (<Py_ssize_t>1) << g
    cdef Py_ssize_t e = g * (n >> 1), w, pos = 0
    cdef int b
    out = np.empty((e, 2), dtype=np.int64)
    cdef int64_t[:, ::1] ev = out
    with nogil:
        for w in range(n):
            for b in range(g):
                if not (w >> b) & 1:
                    ev[pos, 0] = w
                    ev[pos, 1] = w | ((<Py_ssize_t>1) << b)
                    pos += 1
    return out


def limit_graph_edges(int g):
    cdef Py_ssize_t n_xi = (<Py_ssize_t>1) << g
    cdef Py_ssize_t half = n_xi >> 1
    cdef Py_ssize_t e = 3 * g * half, w, p, pos = 0
    cdef int b, l
    out = np.empty((e, 2), dtype=np.int64)
    cdef int64_t[:, ::1] ev = out
    with nogil:
        for w in range(n_xi):
            for b in range(g):
                if not (w >> b) & 1:
                    ev[pos, 0] = w
                    ev[pos, 1] = w | ((<Py_ssize_t>1) << b)
                    pos += 1
            for l in range(1, g + 1):
                b = g - l
                p = ((w >> (b + 1)) << b) | (w & (((<Py_ssize_t>1) << b) - 1))
                ev[pos, 0] = w
                ev[pos, 1] = n_xi + (l - 1) * half + p
                pos += 1
    return out


cdef inline Py_ssize_t _find(Py_ssize_t[::1] parent, Py_ssize_t x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def count_components(Py_ssize_t n, edges):
    arr = np.ascontiguousarray(np.asarray(edges, dtype=np.int64).reshape(-1, 2))
    cdef int64_t[:, ::1] ev = arr
    cdef Py_ssize_t m = ev.shape[0], i, ru, rv
    for i in range(m):
        if ev[i, 0] < 0 or ev[i, 0] >= n or ev[i, 1] < 0 or ev[i, 1] >= n:
            raise IndexError("edge endpoint out of range")
    parent_arr = np.arange(n, dtype=np.intp)
    cdef Py_ssize_t[::1] parent = parent_arr
    cdef Py_ssize_t comps = n
    with nogil:
        for i in range(m):
            ru = _find(parent, ev[i, 0])
            rv = _find(parent, ev[i, 1])
            if ru != rv:
                parent[ru] = rv
                comps -= 1
    return comps
