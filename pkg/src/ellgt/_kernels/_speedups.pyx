# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: truncated q-products and transfer-matrix contraction.

Same API as ``_ref``; selected automatically at import when available.
"""
import numpy as np

BACKEND = "cython"


def qp1(double complex x, double complex q, int nmax, double eps):
    cdef double complex prod = 1.0
    cdef double complex y = x
    cdef double e2 = eps * eps
    cdef int i
    for i in range(nmax):
        if y.real * y.real + y.imag * y.imag < e2:
            break
        prod = prod * (1.0 - y)
        y = y * q
    return prod


def qp2(double complex x, double complex q1, double complex q2, int nmax,
        double eps):
    cdef double complex prod = 1.0
    cdef double complex y1 = x
    cdef double complex y
    cdef double e2 = eps * eps
    cdef int i, j
    for i in range(nmax):
        if y1.real * y1.real + y1.imag * y1.imag < e2:
            break
        y = y1
        for j in range(nmax):
            if y.real * y.real + y.imag * y.imag < e2:
                break
            prod = prod * (1.0 - y)
            y = y * q2
        y1 = y1 * q1
    return prod


cdef void _dfs(int N, int n, int k0, int j, int aux, long code, long row,
               int col, double complex amp,
               const unsigned char[:, ::1] digits,
               const double complex[:, :, :, :, ::1] table,
               const int[:, ::1] idx_map,
               const long[::1] radix_pows,
               double complex[:, ::1] out) noexcept:
    cdef int s_in, slot, a_out, s_out, t
    cdef double complex entry
    if j == n:
        if aux == k0:
            out[row, col] = out[row, col] + amp
        return
    s_in = digits[col, j]
    slot = idx_map[j, code]
    for t in range(2):
        if t == 0:
            a_out = aux
            s_out = s_in
        else:
            if aux == s_in:
                break
            a_out = s_in
            s_out = aux
        entry = table[slot, a_out, s_out, aux, s_in]
        if entry.real != 0.0 or entry.imag != 0.0:
            _dfs(N, n, k0, j + 1, a_out, code + radix_pows[s_out],
                 row * N + s_out, col, amp * entry,
                 digits, table, idx_map, radix_pows, out)


def build_t_matrix(int N, int n, int k0, int l0,
                   const unsigned char[:, ::1] digits,
                   const double complex[:, :, :, :, ::1] table,
                   const int[:, ::1] idx_map,
                   const long[::1] radix_pows):
    cdef int dim = digits.shape[0]
    out_arr = np.zeros((dim, dim), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef int col
    for col in range(dim):
        _dfs(N, n, k0, 0, l0, 0, 0, col, 1.0, digits, table, idx_map,
             radix_pows, out)
    return out_arr
