"""Gelfand-Tsetlin bases on tensor products of vector representations.

Three constructions of the simultaneous eigenbasis of the commuting
minors A_l(z):

* ``build_xi_tilde``  -- ordered words of simple L-entries applied to the
  highest vector,
* ``build_xi_minor``  -- words of B-type quantum minors,
* ``build_xi_prime``  -- exchange-operator recursion from the extremal
  standard vector,

together with the closed-form eigenvalues, diagonal matrix elements, the
normalization factors relating the three, and the rank-2 evaluation
suite.

Applying an operator to one of these vectors is not a plain matrix-vector
product: the operator word's columns shift the exponents that the
vector's own defining word sees.  ``apply_operator`` rebuilds the vector
at the shifted exponents first; this is the composition rule every
eigenvalue check below relies on.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import PartitionI, TensorVector
from .errors import DomainError
from .minors import (a_operator, b_operator, c_operator,
                     operator_column_content)
from .rmatrix import DynExponents, pi_exponent_value, stilde_apply
from .special import EllipticParams, elliptic_gamma, theta_big
from .tensor import LWord, Lattice, compose_sums, get_lattice


@dataclass(frozen=True)
class DynWeight:
    """Non-starred dynamical parameter on a weight-homogeneous vector."""

    dyn: DynExponents
    content: tuple

    def pi(self, a: int, b: int, q: complex) -> complex:
        return pi_exponent_value(self.dyn.effective(), self.content, a, b, q)


@dataclass(frozen=True)
class GTPattern:
    """Rank-2 pattern for products of two-dimensional factors.

    gamma_i counts the lowering steps applied at factor i and must satisfy
    beta_i <= gamma_i <= alpha_i (vector representation: alpha=1, beta=0).
    """

    gamma: tuple
    alpha: tuple = None
    beta: tuple = None

    def __post_init__(self):
        n = len(self.gamma)
        object.__setattr__(self, "gamma", tuple(self.gamma))
        if self.alpha is None:
            object.__setattr__(self, "alpha", (1,) * n)
        if self.beta is None:
            object.__setattr__(self, "beta", (0,) * n)
        for a, g, b in zip(self.alpha, self.gamma, self.beta):
            if not (a - g >= 0 and g - b >= 0):
                raise DomainError("pattern must satisfy beta <= gamma <= alpha")


def apply_operator(terms, builder, dyn: DynExponents, w,
                   params: EllipticParams) -> TensorVector:
    """Apply a sum of L-words to a vector given by a rebuildable recipe.

    ``builder(dyn')`` must return the vector evaluated at exponents
    ``dyn'``; it is called at the exponents shifted by the operator's
    column content, then the word acts at the ambient exponents.
    """
    lat = get_lattice(dyn, w, params)
    cc = operator_column_content(terms, lat.N)
    v = builder(dyn.shifted(cc))
    return lat.apply_sum(terms, v, dyn.shift)


# -- word builders -----------------------------------------------------------


def xi_tilde_word(I: PartitionI):
    """(row, col, point index) triples of the xi~_I word, leftmost first."""
    factors = []
    for r in range(I.N - 1, 0, -1):
        for j in sorted(I.union_from(r + 1), reverse=True):
            factors.append((r, r + 1, j))
    return factors


def build_xi_tilde(I: PartitionI, dyn: DynExponents, w,
                   params: EllipticParams) -> TensorVector:
    """xi~_I = L_{N-1,N}(w_{I_N}) ... L_{12}(w_{I_2 u...u I_N}) . zeta."""
    lat = get_lattice(dyn, w, params)
    factors = tuple((r, rp1, lat.w[j - 1]) for (r, rp1, j) in xi_tilde_word(I))
    return lat.apply_word(LWord(factors), lat.zeta(), dyn.shift)


def xi_minor_terms(I: PartitionI, w, params: EllipticParams):
    """Sum-of-words for xi_I: the layered word of B-type minors."""
    N = I.N
    w = tuple(complex(x) for x in w)
    terms = [LWord(())]
    for j_level in range(1, N):
        m = N + 1 - j_level  # level-j operator is B_{N+1-j}
        for j in sorted(I.union_from(N - j_level + 1), reverse=True):
            terms = compose_sums(terms, b_operator(m, w[j - 1], N, params))
    return terms


def build_xi_minor(I: PartitionI, dyn: DynExponents, w,
                   params: EllipticParams) -> TensorVector:
    lat = get_lattice(dyn, w, params)
    return lat.apply_sum(xi_minor_terms(I, lat.w, params), lat.zeta(),
                         dyn.shift)


def _is_weakly_decreasing(mu) -> bool:
    return all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1))


def build_xi_prime(I: PartitionI, dyn: DynExponents, w,
                   params: EllipticParams, ascent: str = "first") -> TensorVector:
    """xi'_I by exchange operators along a reduced path from the extremal word.

    ``ascent`` picks which adjacent rise to resolve at each step; the
    result is path independent (braid relation plus involutivity).
    """
    if ascent not in ("first", "last"):
        raise DomainError("ascent must be 'first' or 'last'")

    def rec(mu, points):
        if _is_weakly_decreasing(mu):
            return TensorVector.basis(mu, I.N)
        rises = [i for i in range(1, len(mu)) if mu[i - 1] < mu[i]]
        i = rises[0] if ascent == "first" else rises[-1]
        swapped_mu = mu[:i - 1] + (mu[i], mu[i - 1]) + mu[i + 1:]
        swapped_pts = points[:i - 1] + (points[i], points[i - 1]) + points[i + 1:]
        sub = rec(swapped_mu, swapped_pts)
        out, back = stilde_apply(i, sub, dyn, swapped_pts, params)
        assert back == points
        return out

    return rec(I.to_word(), tuple(complex(x) for x in w))


# -- closed-form spectra ------------------------------------------------------


def eigenvalue_a(l: int, z: complex, I: PartitionI, w,
                 params: EllipticParams) -> complex:
    """Eigenvalue of A_l(z) on xi~_I (and xi_I, xi'_I):

    prod_m theta(q^{2 [m in I_l u ... u I_N]} z / w_m)
    * prod_{k=2}^{N-l+1} prod_m theta(q^{-2k+2} z / w_m).
    """
    q, th = params.q, params.theta
    w = tuple(w)
    marked = set(I.union_from(l))
    val = 1.0 + 0.0j
    for m, wm in enumerate(w, start=1):
        val *= th((q ** 2 if m in marked else 1) * z / wm)
    for k in range(2, I.N - l + 2):
        x = q ** (-2 * k + 2) * z
        for wm in w:
            val *= th(x / wm)
    return val


def k_plus_eigenvalue(j: int, z: complex, I: PartitionI, w,
                      params: EllipticParams) -> complex:
    """Diagonal action of the Gauss component K+_j(z) on xi'_I."""
    q, th = params.q, params.theta
    val = 1.0 + 0.0j
    for wm in w:
        val *= th(q ** 2 * z / wm)
    for kcol in range(1, j):
        for a in I.sets[kcol - 1]:
            val *= th(z / w[a - 1]) / th(q ** 2 * z / w[a - 1])
    for lcol in range(j + 1, I.N + 1):
        for b in I.sets[lcol - 1]:
            val *= th(z / (q ** 2 * w[b - 1])) / th(z / w[b - 1])
    return val


def relation_factor(I: PartitionI, w, params: EllipticParams) -> complex:
    """Scalar with xi_I = relation_factor(I, w) * xi~_I."""
    q, th = params.q, params.theta
    val = 1.0 + 0.0j
    for j in range(1, I.n + 1):
        for l in range(1, I.N):
            block = I.union_from(l + 1)
            for a in range(1, I.N - l):
                for k in block:
                    val *= th(q ** (-2 * a) * w[k - 1] / w[j - 1])
    return val


def wtilde_diagonal_closed(I: PartitionI, w, params: EllipticParams) -> complex:
    """Diagonal weight-function value W~_I(w_I, w, Pi*).

    Product over color pairs k < l up to N (the variant restricting to
    l < N fails already for two colors) of
    theta(w_b/w_a)/theta(q^2 w_b/w_a), a in I_k, b in I_l, a < b.
    """
    q, th, thd = params.q, params.theta, params.theta_denom
    val = 1.0 + 0.0j
    for k in range(1, I.N + 1):
        for l in range(k + 1, I.N + 1):
            for a in I.sets[k - 1]:
                for b in I.sets[l - 1]:
                    if a < b:
                        val *= th(w[b - 1] / w[a - 1]) / thd(q ** 2 * w[b - 1] / w[a - 1])
    return val


def xtilde_diagonal(I: PartitionI, w, params: EllipticParams) -> complex:
    """Closed form of the diagonal change-of-basis element X~_II."""
    q, th = params.q, params.theta
    N = I.N
    val = th(q ** 2) ** sum((k - 1) * len(I.sets[k - 1]) for k in range(2, N + 1))
    for l in range(1, N):
        upper = I.union_from(N - l + 1)
        lower_small = I.prefix_union(N - l - 1) if N - l - 1 >= 1 else ()
        mid = I.union_from(N - l)
        for j in upper:
            for k in lower_small:
                val *= th(w[j - 1] / w[k - 1])
            for k in mid:
                if j < k:
                    val *= th(q ** 2 * w[j - 1] / w[k - 1])
            for k in upper:
                if j > k:
                    val *= th(q ** 2 * w[j - 1] / w[k - 1])
            for k in I.sets[N - l - 1]:
                if j > k:
                    val *= th(w[j - 1] / w[k - 1])
    return val


def column_factor(I: PartitionI, k: int, w, params: EllipticParams) -> complex:
    """Single-column factor W_k in the recursion Z_k = W_k Z_{k+1}."""
    q, th = params.q, params.theta
    N = I.N
    mu = I.to_word()
    l = mu[k - 1]
    wk = w[k - 1]
    val = 1.0 + 0.0j
    for c in range(N, l + 1, -1):  # W^1: chains I_N; ...; I_{l+2} u ... u I_N
        for j in I.union_from(c):
            val *= th(w[j - 1] / wk)
    for j in I.union_from(l + 1):  # W^2
        val *= th(w[j - 1] / wk) if j > k else th(q ** 2 * w[j - 1] / wk)
    for c in range(l, 1, -1):  # W^3: braces I_l u ... ; ...; I_2 u ...
        for j in I.union_from(c):
            val *= th(q ** 2 * w[j - 1] / wk)
    return val


def normalization_n(I: PartitionI, w, params: EllipticParams) -> complex:
    """N(w) with xi~_I = N(w) xi'_I; equals X~_II / X_II."""
    return xtilde_diagonal(I, w, params) / wtilde_diagonal_closed(I, w, params)


# -- the change-of-basis word and the column recursion ----------------------


def xtilde_word_data(I: PartitionI):
    """Rows K, columns L and spectral index list of the xi~_I word.

    Returned in application order (first factor first), matching the
    partition-function argument convention.
    """
    K, L, zidx = [], [], []
    for r in range(1, I.N):
        for j in I.union_from(r + 1):
            K.append(r)
            L.append(r + 1)
            zidx.append(j)
    return tuple(K), tuple(L), tuple(zidx)


def zk_partition(I: PartitionI, k: int, dyn: DynExponents, w,
                 params: EllipticParams) -> complex:
    """k-th column-stripped partition function Z_k (Z_1 = X~_II, Z_{n+1} = 1).

    The word keeps all factors and spectral points; the column labels are
    rewritten according to how many strands have already turned in the
    first k-1 columns, the lattice shrinks to sites k..n, and the
    exponents are shifted by the content of mu_1..mu_{k-1}.
    """
    n, N = I.n, I.N
    if k == n + 1:
        return 1.0 + 0.0j
    mu = I.to_word()
    K, _, zidx = xtilde_word_data(I)
    zs = tuple(w[j - 1] for j in zidx)
    counts = [0] * (N + 1)
    for m in mu[:k - 1]:
        counts[m] += 1
    turned = sum(counts[2:])
    new_cols = [1] * turned
    for c in range(2, N + 1):
        new_cols.extend([c] * (len(I.union_from(c)) - counts[c]))
    shift = list(dyn.shift)
    for m in mu[:k - 1]:
        shift[m - 1] += 1
    sub = Lattice(params, N, n + 1 - k, w[k - 1:], dyn.lam)
    return sub.partition_z(K, tuple(new_cols), zs, (1,) * (n + 1 - k),
                           mu[k - 1:], ext_shift=tuple(shift))


# -- proportionality helper ---------------------------------------------------


def proportionality(v: TensorVector, ref: TensorVector):
    """(ratio, relative residual) of v against a reference direction.

    The ratio is read off at the largest-magnitude reference coefficient,
    then the full residual ||v - ratio ref|| / max(||v||, eps) is formed.
    """
    i = int(np.argmax(np.abs(ref.coeffs)))
    if ref.coeffs[i] == 0:
        raise DomainError("reference vector is zero")
    ratio = v.coeffs[i] / ref.coeffs[i]
    scale = max(v.norm(), 1e-30)
    resid = float(np.linalg.norm(v.coeffs - ratio * ref.coeffs) / scale)
    return complex(ratio), resid


# -- rank-2 evaluation formulas ----------------------------------------------


def gl2_evaluation_weights(l: int, a: complex, m: int, z: complex,
                           params: EllipticParams):
    """Eigenvalues of the two diagonal Gauss components on the weight-m
    vector of the (l+1)-dimensional evaluation module (exponents l and 0).
    """
    if not 0 <= m <= l:
        raise DomainError("need 0 <= m <= l")
    q, p = params.q, params.p
    u = z / a
    base = q ** 4

    def gam(x):
        return elliptic_gamma(x, base, p, params)

    def tb(x):
        return theta_big(x, p, params)

    k1 = (q ** (-l + m) * tb(q ** l * u) / tb(q ** (-l + 2 * m) * u)
          * gam(q ** l * u) * gam(q ** (2 - l) * u)
          / (gam(q ** (l + 2) * u) * gam(q ** (-l) * u)))
    k2 = (q ** (-m) * tb(q ** (-l + 2 * m + 2) * u) / tb(q ** (l + 2) * u)
          * gam(q ** (l + 4) * u) * gam(q ** (2 - l) * u)
          / (gam(q ** (l + 2) * u) * gam(q ** (4 - l) * u)))
    return k1, k2


def drinfeld_theta(l: int, a: complex, z: complex,
                   params: EllipticParams) -> complex:
    """Order-l theta function P_{l,a}(z) classifying the evaluation module."""
    val = 1.0 + 0.0j
    for k in range(1, l + 1):
        val *= theta_big(params.q ** (-l + 2 * k - 1) * z / a, params.p, params)
    return val


# -- rank-2 basis suite -------------------------------------------------------


def _gl2_xi_terms(gamma, w, params: EllipticParams):
    """Word sum of lowering minors for the rank-2 basis vector xi_gamma."""
    terms = [LWord(())]
    for i in sorted(range(1, len(gamma) + 1), reverse=True):
        if gamma[i - 1] == 1:
            terms = compose_sums(terms, b_operator(2, w[i - 1], 2, params))
    return terms


def gl2_suite(n: int, gamma: GTPattern, dyn: DynExponents, w,
              params: EllipticParams, z_samples=(0.74, 1.53)) -> dict:
    """Action checks for the rank-2 basis vector labeled by ``gamma``.

    All operator applications are word compositions applied to the
    highest vector, so the exponent threading is exact.  Returns named
    residuals plus the measured dynamical scalars that the closed
    formulas leave undetermined (comultiplied theta ratios).
    """
    if dyn.N != 2:
        raise DomainError("the rank-2 suite needs two colors")
    lat = get_lattice(dyn, w, params)
    q, th = params.q, params.theta
    g = gamma.gamma
    al, be = gamma.alpha, gamma.beta
    w = lat.w
    report: dict = {"gamma": g, "residuals": {}, "measured": {}}

    def xi_terms(gm):
        return _gl2_xi_terms(gm, w, params)

    def value(terms):
        return lat.apply_sum(terms, lat.zeta(), dyn.shift)

    xi_g = value(xi_terms(g))
    report["xi_norm"] = xi_g.norm()

    res_a1 = res_a2 = 0.0
    for z in z_samples:
        ev1 = 1.0 + 0.0j
        ev2 = 1.0 + 0.0j
        for i in range(n):
            ev1 *= th(q ** (2 * al[i]) * z / w[i]) * th(q ** (2 * (be[i] - 1)) * z / w[i])
            ev2 *= th(q ** (2 * g[i]) * z / w[i])
        got1 = value(compose_sums(a_operator(1, z, 2, params), xi_terms(g)))
        got2 = value(compose_sums(a_operator(2, z, 2, params), xi_terms(g)))
        scale1 = max(np.linalg.norm(got1.coeffs),
                     abs(ev1) * xi_g.norm(), 1e-30)
        scale2 = max(np.linalg.norm(got2.coeffs),
                     abs(ev2) * xi_g.norm(), 1e-30)
        res_a1 = max(res_a1, float(
            np.linalg.norm(got1.coeffs - ev1 * xi_g.coeffs) / scale1))
        res_a2 = max(res_a2, float(
            np.linalg.norm(got2.coeffs - ev2 * xi_g.coeffs) / scale2))
    report["residuals"]["A1_action"] = res_a1
    report["residuals"]["A2_action"] = res_a2

    # B raising, and annihilation at the top of each column
    res_b = 0.0
    res_bann = 0.0
    for j in range(1, n + 1):
        zb = q ** (-2 * g[j - 1]) * w[j - 1]
        got = value(compose_sums(b_operator(2, zb, 2, params), xi_terms(g)))
        if g[j - 1] == 0:
            target = value(xi_terms(g[:j - 1] + (1,) + g[j:]))
            res_b = max(res_b, float(np.linalg.norm(got.coeffs - target.coeffs)
                                     / max(target.norm(), 1e-30)))
        else:
            res_bann = max(res_bann, got.norm() / max(xi_g.norm(), 1e-30))
    report["residuals"]["B_raising"] = res_b
    report["residuals"]["B_annihilation"] = res_bann

    # C lowering: proportionality plus the non-dynamical theta factor
    res_cann = 0.0
    res_clow = 0.0
    for j in range(1, n + 1):
        zc = q ** (-2 * g[j - 1]) * w[j - 1]
        got = value(compose_sums(c_operator(2, zc, 2, params), xi_terms(g)))
        if g[j - 1] == 0:
            res_cann = max(res_cann, got.norm() / max(xi_g.norm(), 1e-30))
        else:
            target = value(xi_terms(g[:j - 1] + (0,) + g[j:]))
            ratio, resid = proportionality(got, target)
            res_clow = max(res_clow, resid)
            plain = 1.0 + 0.0j
            for i in range(n):
                plain *= th(q ** (2 * (al[i] - g[j - 1] + 1))) \
                    * th(q ** (2 * (be[i] - g[j - 1])))
            report["measured"][f"C_dynamical_scalar_{j}"] = ratio / (-plain)
    report["residuals"]["C_annihilation"] = res_cann
    report["residuals"]["C_lowering_proportionality"] = res_clow

    # full descent back to the highest vector
    steps = sum(g)
    if steps:
        terms = xi_terms(g)
        for i in sorted(range(1, n + 1), reverse=True):
            if g[i - 1] == 1:
                terms = compose_sums(
                    c_operator(2, q ** (-2) * w[i - 1], 2, params), terms)
        got = value(terms)
        ratio, resid = proportionality(got, lat.zeta())
        plain = 1.0 + 0.0j
        for i in range(n):
            for j in range(n):
                if g[j] == 1:
                    plain *= th(q ** (2 * (al[i] - g[j] + 1))) \
                        * th(q ** (2 * (be[i] - g[j])))
        report["residuals"]["C_descent_proportionality"] = resid
        report["measured"]["C_descent_dynamical_scalar"] = \
            ratio / (((-1) ** steps) * plain)
    return report
