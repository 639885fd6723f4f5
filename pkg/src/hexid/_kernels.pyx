# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``_kernels_py``."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t, uint8_t

cnp.import_array()


cdef inline uint64_t _splitmix64(uint64_t z) nogil:
    z = z + <uint64_t>0x9E3779B97F4A7C15
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EB
    return z ^ (z >> 31)


def splitmix64(z):
    return _splitmix64(<uint64_t>z)


def _stack(offsets_even, offsets_odd):
    even = np.asarray(offsets_even, dtype=np.int32).reshape(-1, 2)
    odd = np.asarray(offsets_odd, dtype=np.int32).reshape(-1, 2)
    # the two parity classes are vertical mirrors, hence equally sized
    if even.shape != odd.shape:
        raise ValueError("offset tables for the two parities differ in size")
    return np.ascontiguousarray(np.stack([even, odd]))


def signatures(const uint8_t[:, :] mask, int parity0, offsets_even, offsets_odd, int lo):
    cdef Py_ssize_t H = mask.shape[0], W = mask.shape[1]
    cdef int32_t[:, :, ::1] offs = _stack(offsets_even, offsets_odd)
    cdef Py_ssize_t n_off = offs.shape[1]
    count_arr = np.zeros((H, W), dtype=np.int32)
    sig_arr = np.zeros((H, W), dtype=np.uint64)
    cdef int32_t[:, :] count = count_arr
    cdef uint64_t[:, :] sig = sig_arr
    cdef Py_ssize_t i, j, k, ii, jj
    cdef int n, par
    cdef uint64_t h
    with nogil:
        for i in range(lo, H - lo):
            for j in range(lo, W - lo):
                par = (parity0 + i + j) & 1
                n = 0
                h = 0
                for k in range(n_off):
                    ii = i + offs[par, k, 1]
                    jj = j + offs[par, k, 0]
                    if mask[ii, jj]:
                        n += 1
                        h ^= _splitmix64(<uint64_t>(ii * W + jj))
                count[i, j] = n
                sig[i, j] = h
    return count_arr, sig_arr


def scan_pairs(const int32_t[:, :] count, const uint64_t[:, :] sig, int parity0,
               offsets_even, offsets_odd, dom, rows):
    cdef int32_t[:, :, ::1] offs = _stack(offsets_even, offsets_odd)
    cdef Py_ssize_t n_off = offs.shape[1]
    cdef Py_ssize_t i0 = dom[0], i1 = dom[1], j0 = dom[2], j1 = dom[3]
    cdef Py_ssize_t ra = rows[0], rb = rows[1]
    cdef Py_ssize_t i, j, k, vi, vj
    cdef int par
    cdef long long pairs = 0
    cdef int32_t c
    cdef uint64_t s
    candidates = []
    for i in range(ra, rb):
        for j in range(j0, j1):
            c = count[i, j]
            s = sig[i, j]
            par = (parity0 + i + j) & 1
            for k in range(n_off):
                vi = i + offs[par, k, 1]
                vj = j + offs[par, k, 0]
                if i0 <= vi < i1 and j0 <= vj < j1 and (vi < i or (vi == i and vj < j)):
                    continue
                pairs += 1
                if count[vi, vj] == c and sig[vi, vj] == s:
                    candidates.append((i, j, vi, vj))
    return pairs, candidates
