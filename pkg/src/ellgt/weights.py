"""Elliptic weight functions and the change-of-basis machinery.

The unsymmetrized product U~_I runs over the nested index sets
I^(l) = I_1 u ... u I_l with one triangular variable per element; the
weight function W~_I symmetrizes each level's variable group.  Their
specializations t = w_I give the (lower-triangular) transition matrix
from the standard basis to the exchange-operator basis, and, scaled by
the normalization factor N(w), the partition-function identity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .basis import PartitionI, TensorVector, all_words, word_to_index
from .errors import DegenerateParametersError, DomainError, PoleError
from .gt import normalization_n, xtilde_word_data
from .rmatrix import DynExponents
from .special import EllipticParams
from .tensor import get_lattice


@dataclass(frozen=True)
class TriangularVars:
    """Variables t^(l)_a for l = 1..N-1 plus the top row t^(N) = w."""

    t: tuple  # tuple of tuples, level l-1 holds lambda^(l) values
    w: tuple

    @classmethod
    def specialize(cls, I: PartitionI, w) -> "TriangularVars":
        """t = w_I: level-l variable a is w at the a-th element of I^(l)."""
        w = tuple(complex(x) for x in w)
        levels = []
        for l in range(1, I.N):
            levels.append(tuple(w[i - 1] for i in I.prefix_union(l)))
        return cls(tuple(levels), w)

    def level(self, l: int) -> tuple:
        """Variables of level l, 1-based; level N returns w."""
        if l == len(self.t) + 1:
            return self.w
        return self.t[l - 1]


def u_tilde(I: PartitionI, vars: TriangularVars, dyn: DynExponents,
            params: EllipticParams) -> complex:
    """Unsymmetrized weight-function product for the partition I."""
    q, th = params.q, params.theta
    mu = I.to_word()
    N, n = I.N, I.n
    lam_eff = dyn.effective()

    def thd(x):
        val = th(x)
        if abs(val) < 1e-14:
            raise PoleError(f"theta({x!r}) ~ 0 in a weight-function denominator")
        return val

    val = 1.0 + 0.0j
    for l in range(1, N):
        cur = vars.level(l)
        nxt = vars.level(l + 1)
        elems_cur = I.prefix_union(l)
        elems_nxt = I.prefix_union(l + 1) if l + 1 < N else tuple(range(1, n + 1))
        for a, s in enumerate(elems_cur, start=1):
            ta = cur[a - 1]
            color = mu[s - 1]
            b_eq = elems_nxt.index(s) + 1
            tb = nxt[b_eq - 1]
            cexp = sum((1 if mu[j - 1] == color else 0)
                       - (1 if mu[j - 1] == l + 1 else 0)
                       for j in range(s + 1, n + 1))
            pi = q ** (2 * (lam_eff[color - 1] - lam_eff[l]))
            arg = q ** (-2 * cexp) * pi
            val *= th(arg * tb / ta) * th(q ** 2) / (thd(q ** 2 * tb / ta) * thd(arg))
            for b, sb in enumerate(elems_nxt, start=1):
                if sb > s:
                    val *= th(nxt[b - 1] / ta) / thd(q ** 2 * nxt[b - 1] / ta)
            for b in range(a + 1, len(elems_cur) + 1):
                val *= th(q ** (-2) * ta / cur[b - 1]) / thd(ta / cur[b - 1])
    return val


def w_tilde(I: PartitionI, vars: TriangularVars, dyn: DynExponents,
            params: EllipticParams) -> complex:
    """Symmetrization of u_tilde over each level's variable group.

    Individual terms may hit theta zeros in denominators even though the
    sum is finite; such evaluations fall back to a perturb-and-extrapolate
    pass (Richardson in the perturbation size).
    """
    try:
        return _w_tilde_raw(I, vars, dyn, params)
    except (PoleError, DegenerateParametersError):
        return _w_tilde_extrapolated(I, vars, dyn, params)


def _w_tilde_raw(I, vars, dyn, params) -> complex:
    levels = [vars.level(l) for l in range(1, I.N)]
    total = 0.0 + 0.0j
    for perm_combo in itertools.product(
            *(itertools.permutations(range(len(lv))) for lv in levels)):
        permuted = tuple(tuple(lv[p] for p in perm)
                         for lv, perm in zip(levels, perm_combo))
        total += u_tilde(I, TriangularVars(permuted, vars.w), dyn, params)
    return total


def _w_tilde_extrapolated(I, vars, dyn, params, eps: float = 1e-6) -> complex:
    def perturbed(scale):
        lv = tuple(tuple(t * (1 + scale * (a + 1)) for a, t in enumerate(level))
                   for level in vars.t)
        return _w_tilde_raw(I, TriangularVars(lv, vars.w), dyn, params)

    f1 = perturbed(eps)
    f2 = perturbed(eps / 2)
    return 2.0 * f2 - f1


# -- change of basis ----------------------------------------------------------


def partitions_of_content(content) -> list:
    """All partitions with the given block sizes, extremal first.

    Ordered by a linear extension of the dominance-style partial order
    (sum of all prefix-union elements, descending), so triangularity shows
    up as lower-triangularity of the matrix.
    """
    N = len(content)
    n = sum(content)
    out = [PartitionI.from_word(mu, N) for mu in all_words(N, n)
           if PartitionI.from_word(mu, N).content() == tuple(content)]
    out.sort(key=lambda I: sum(sum(I.prefix_union(l)) for l in range(1, N)),
             reverse=True)
    return out


def partial_order_leq(I: PartitionI, J: PartitionI) -> bool:
    """I <= J elementwise on the sorted prefix unions."""
    if I.content() != J.content():
        return False
    for l in range(1, I.N):
        for a, b in zip(I.prefix_union(l), J.prefix_union(l)):
            if a > b:
                return False
    return True


def change_of_basis(lambda_content, dyn: DynExponents, w,
                    params: EllipticParams):
    """Matrix X[r][c] = W~_{J_c}(w_{I_r}, w, Pi* q^{2 content}) on one weight block.

    Returns (matrix, ordered partitions).  Rows index the specialization
    partition, columns the weight-function label; the row order is a
    linear extension descending from the extremal partition.
    """
    parts = partitions_of_content(lambda_content)
    shifted = dyn.shifted(tuple(lambda_content))
    mat = np.zeros((len(parts), len(parts)), dtype=np.complex128)
    for r, I in enumerate(parts):
        vars = TriangularVars.specialize(I, w)
        for c, J in enumerate(parts):
            mat[r, c] = w_tilde(J, vars, shifted, params)
    return mat, parts


def xi_prime_expansion_residual(I: PartitionI, xi_prime_vec: TensorVector,
                                dyn: DynExponents, w,
                                params: EllipticParams) -> float:
    """Relative residual of xi'_I = sum_J W~_J(w_I, shifted Pi*) v_J."""
    content = I.content()
    shifted = dyn.shifted(content)
    vars = TriangularVars.specialize(I, w)
    expected = TensorVector.zero(I.N, I.n)
    for J in partitions_of_content(content):
        coeff = w_tilde(J, vars, shifted, params)
        expected.coeffs[word_to_index(J.to_word(), I.N)] = coeff
    num = float(np.linalg.norm(expected.coeffs - xi_prime_vec.coeffs))
    return num / max(xi_prime_vec.norm(), 1e-30)


def verify_partition_identity(I: PartitionI, mu, dyn: DynExponents, w,
                              params: EllipticParams) -> float:
    """Relative residual of Z_{K mu}^{L (1^n)} = N(w) W~_{J_mu}(w_I, shifted Pi*)."""
    if PartitionI.from_word(mu, I.N).content() != I.content():
        raise DomainError("mu must lie in the weight block of I")
    lat = get_lattice(dyn, w, params)
    K, L, zidx = xtilde_word_data(I)
    zs = tuple(lat.w[j - 1] for j in zidx)
    z_val = lat.partition_z(K, L, zs, (1,) * I.n, tuple(mu), dyn.shift)
    J = PartitionI.from_word(mu, I.N)
    rhs = (normalization_n(I, w, params)
           * w_tilde(J, TriangularVars.specialize(I, w),
                     dyn.shifted(I.content()), params))
    scale = max(abs(z_val), abs(rhs), 1e-30)
    return abs(z_val - rhs) / scale
