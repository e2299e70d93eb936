"""Pure-Python reference implementations of the hot kernels.

Mirrors the API of the compiled module ``_speedups``; used as the import-time
fallback and as the correctness oracle in tests and benchmarks.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"


def qp1(x: complex, q: complex, nmax: int, eps: float) -> complex:
    """Truncated single-base q-infinite product prod_{n<nmax} (1 - x q^n).

    Terms with |x q^n| < eps are dropped (they differ from 1 by less
    than eps).
    """
    prod = 1.0 + 0.0j
    y = complex(x)
    for _ in range(nmax):
        if abs(y) < eps:
            break
        prod *= 1.0 - y
        y *= q
    return prod


def qp2(x: complex, q1: complex, q2: complex, nmax: int, eps: float) -> complex:
    """Truncated double-base product prod_{n1,n2<nmax} (1 - x q1^n1 q2^n2)."""
    prod = 1.0 + 0.0j
    y1 = complex(x)
    for _ in range(nmax):
        if abs(y1) < eps:
            break
        y = y1
        for _ in range(nmax):
            if abs(y) < eps:
                break
            prod *= 1.0 - y
            y *= q2
        y1 *= q1
    return prod


def build_t_matrix(N, n, k0, l0, digits, table, idx_map, radix_pows):
    """Dense matrix of one L-operator entry on the n-fold tensor product.

    Contracts the auxiliary line through the n sites.  For the input basis
    state ``mu`` (row-major digits in ``digits``), the amplitude of an
    auxiliary path is the product over sites j of the R-matrix entry
    ``table[slot, a_out, s_out, a_in, s_in]`` where ``slot`` resolves the
    dynamical shift accumulated from the output labels of sites < j:
    ``slot = idx_map[j, sum_a c_a * radix**a]``.

    Parameters are 0-based; ``k0``/``l0`` are the outgoing/incoming
    auxiliary indices.  Returns a (dim, dim) complex array with columns
    indexed by input states.
    """
    dim = digits.shape[0]
    out = np.zeros((dim, dim), dtype=np.complex128)

    def dfs(j, aux, code, row, amp, col):
        if j == n:
            if aux == k0:
                out[row, col] += amp
            return
        s_in = digits[col, j]
        slot = idx_map[j, code]
        # ice rule: (a_out, s_out) is a permutation of (aux, s_in)
        candidates = ((aux, s_in),) if aux == s_in else ((aux, s_in), (s_in, aux))
        for a_out, s_out in candidates:
            entry = table[slot, a_out, s_out, aux, s_in]
            if entry != 0.0:
                dfs(j + 1, a_out, code + radix_pows[s_out], row * N + s_out,
                    amp * entry, col)

    for col in range(dim):
        dfs(0, l0, 0, 0, 1.0 + 0.0j, col)
    return out
