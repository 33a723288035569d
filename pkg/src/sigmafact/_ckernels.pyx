# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled inner loops over a Cayley table (see kernels.py for the contract)."""
import numpy as np


def prepare(table):
    return np.ascontiguousarray(table, dtype=np.int32)


def closure(const int[:, ::1] tab, object seed, object gens, Py_ssize_t start):
    cdef Py_ssize_t n = tab.shape[0]
    cdef Py_ssize_t nbytes = (n + 7) // 8
    cdef bytearray out = bytearray(seed.to_bytes(nbytes, "little"))
    cdef unsigned char[::1] m = out
    cdef int[::1] g = np.asarray(gens, dtype=np.int32).reshape(-1)
    cdef Py_ssize_t ng = g.shape[0]
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = 0, seeded, i, k
    cdef int x, y
    for i in range(n):
        if m[i >> 3] & (1 << (i & 7)):
            queue[tail] = <int>i
            tail += 1
    seeded = tail
    while head < tail:
        x = queue[head]
        k = start if head < seeded else 0
        while k < ng:
            y = tab[x, g[k]]
            if not (m[y >> 3] & (1 << (y & 7))):
                m[y >> 3] |= <unsigned char>(1 << (y & 7))
                queue[tail] = y
                tail += 1
            k += 1
        head += 1
    return int.from_bytes(out, "little")


def set_product(const int[:, ::1] tab, object left, object right):
    cdef Py_ssize_t n = tab.shape[0]
    cdef bytearray out = bytearray((n + 7) // 8)
    cdef unsigned char[::1] m = out
    cdef int[::1] a = np.asarray(left, dtype=np.int32).reshape(-1)
    cdef int[::1] b = np.asarray(right, dtype=np.int32).reshape(-1)
    cdef Py_ssize_t i, j
    cdef int y
    for i in range(a.shape[0]):
        for j in range(b.shape[0]):
            y = tab[a[i], b[j]]
            m[y >> 3] |= <unsigned char>(1 << (y & 7))
    return int.from_bytes(out, "little")
