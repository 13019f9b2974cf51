# distutils: language = c++
"""Compiled hot loops: Pauli commutator closure and batch symplectic products."""
from libc.stdint cimport uint64_t, uint8_t
from libcpp.vector cimport vector
from libcpp.unordered_set cimport unordered_set

import numpy as np

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BITMAP_MAX_QUBITS = 14


cdef inline int _anti(uint64_t a, uint64_t b, uint64_t mask, int n) nogil:
    return __builtin_popcountll(((a & mask) & (b >> n)) ^ ((a >> n) & (b & mask))) & 1


def closure(object generators, int n, Py_ssize_t member_cap):
    """Commutator closure of phaseless Pauli keys.

    The generated Lie algebra is spanned by right-nested brackets
    ``[g1, [g2, ... [g_{m-1}, g_m]]]``, so it suffices to close under
    ``ad_g`` for generators ``g`` only.  Returns ``(members, complete)``;
    ``complete`` is False if the member count exceeded ``member_cap``.
    """
    cdef uint64_t mask = (<uint64_t>1 << n) - 1
    cdef uint64_t full = (<uint64_t>1 << (2 * n)) - 1
    cdef vector[uint64_t] members
    cdef vector[uint64_t] gens
    cdef vector[uint8_t] bitmap
    cdef unordered_set[uint64_t] table
    cdef bint use_bitmap = n <= BITMAP_MAX_QUBITS
    cdef uint64_t g, a, c
    cdef Py_ssize_t i, j, size, ng
    cdef bint complete = True

    if use_bitmap:
        bitmap.resize((<size_t>1 << (2 * n)) // 8 + 1, 0)
    for py_g in generators:
        g = <uint64_t>py_g
        if g == 0:
            continue
        if use_bitmap:
            if bitmap[g >> 3] & (1 << (g & 7)):
                continue
            bitmap[g >> 3] |= (1 << (g & 7))
        else:
            if table.count(g):
                continue
            table.insert(g)
        members.push_back(g)
        gens.push_back(g)
    ng = gens.size()

    with nogil:
        i = 0
        while i < <Py_ssize_t>members.size():
            if <uint64_t>members.size() == full:
                break
            a = members[i]
            for j in range(ng):
                g = gens[j]
                if _anti(a, g, mask, n):
                    c = a ^ g
                    if use_bitmap:
                        if bitmap[c >> 3] & (1 << (c & 7)):
                            continue
                        bitmap[c >> 3] |= (1 << (c & 7))
                    else:
                        if table.count(c):
                            continue
                        table.insert(c)
                    members.push_back(c)
            if <Py_ssize_t>members.size() > member_cap:
                complete = False
                break
            i += 1

    size = members.size()
    out = np.empty(size, dtype=np.uint64)
    cdef uint64_t[::1] view = out
    for i in range(size):
        view[i] = members[i]
    return out, complete


def anticommuting(uint64_t key, uint64_t[::1] keys, int n):
    """Boolean mask of ``keys`` that anticommute with ``key``."""
    cdef uint64_t mask = (<uint64_t>1 << n) - 1
    cdef Py_ssize_t i, m = keys.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    cdef uint8_t[::1] o = out.view(np.uint8)
    with nogil:
        for i in range(m):
            o[i] = _anti(key, keys[i], mask, n)
    return out
