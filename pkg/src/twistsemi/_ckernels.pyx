# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels; see ``_pykernels`` for semantics."""
import numpy as np

BACKEND = "cython"


def assoc_violation(const int[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a, b], c] != t[a, t[b, c]]:
                    return (a, b, c)
    return None


def commut_violation(const int[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0], a, b
    for a in range(n):
        for b in range(n):
            if t[a, b] != t[b, a]:
                return (a, b)
    return None


def distrib_violation(const int[:, ::1] add, const int[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return ("left", a, b, c)
                if mul[add[a, b], c] != add[mul[a, c], mul[b, c]]:
                    return ("right", a, b, c)
    return None


def hom_violation(const int[:, ::1] src, const int[:, ::1] tgt, const int[::1] f):
    cdef Py_ssize_t n = src.shape[0], a, b
    for a in range(n):
        for b in range(n):
            if f[src[a, b]] != tgt[f[a], f[b]]:
                return (a, b)
    return None


def prepare(ops):
    return np.ascontiguousarray(ops, dtype=np.int32)


def close_map(const int[:, :, ::1] src, const int[:, :, ::1] tgt, int[::1] fmap,
              int[::1] order, Py_ssize_t processed, Py_ssize_t count, used):
    cdef Py_ssize_t nops = src.shape[0], i, j, k, p, npairs
    cdef int a, b, x, y, c, img, cur
    cdef bint inj = used is not None
    cdef int[::1] us
    if inj:
        us = used
    i = processed
    while i < count:
        a = order[i]
        for j in range(i + 1):
            b = order[j]
            npairs = 1 if j == i else 2
            for k in range(nops):
                for p in range(npairs):
                    if p == 0:
                        x = a; y = b
                    else:
                        x = b; y = a
                    c = src[k, x, y]
                    img = tgt[k, fmap[x], fmap[y]]
                    cur = fmap[c]
                    if cur == -1:
                        if inj:
                            if us[img] != -1:
                                return count, (k, x, y, c, -1, img)
                            us[img] = c
                        fmap[c] = img
                        order[count] = c
                        count += 1
                    elif cur != img:
                        return count, (k, x, y, c, cur, img)
        i += 1
    return count, None
