"""Quantum minor determinants and the A_l, B_m, C_m operators.

A minor with ascending row sequence I and column sequence J expands as the
sum over permutations sigma of

    sgn*_J(sigma, Pi*) L_{i_1 j_sigma(1)}(z) L_{i_2 j_sigma(2)}(z q^-2)
                        ... L_{i_k j_sigma(k)}(z q^{-2(k-1)}),

with the dynamical sign a product of theta ratios over the inversions of
sigma; at level 0 the normalization constants are 1.  The sign scalar sits
leftmost in each word and sees the ambient exponents.

An equivalent reversed-order expansion carries row signs built from the
non-starred dynamical parameter (read off the weight of the vector the
scalar multiplies).  That form is manifestly covariant under permutations
of the column sequence, so it is the one used to realize minors with
out-of-order columns; permuting columns multiplies the minor by a single
theta-ratio factor (``sgn_star_exchange``).

Numerics fixed two transcription choices here: the non-starred sign
factors and the column-expansion prefactors enter with their index pairs
reversed relative to the starred sign, and the exchange factor likewise;
all four variants were discriminated against the quantum-determinant
centrality, the closed-form spectra and the cross-expansion residuals.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .basis import TensorVector
from .errors import DomainError
from .rmatrix import DynExponents, pi_exponent_value
from .special import EllipticParams
from .tensor import LWord, WordScalar, compose_words, get_lattice


@dataclass(frozen=True)
class MinorSpec:
    """Row sequence, column sequence and spectral point of one minor."""

    rows: tuple
    cols: tuple
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols):
            raise DomainError("minor needs equally many rows and columns")


def _sgn_star_value(cols, sigma, lam_eff, params: EllipticParams) -> complex:
    """Column sign: prod over inversions of theta(q^2 Pi*_{x,y}) / theta(Pi*_{y,x})
    with (x, y) = (j_sigma(a), j_sigma(b))."""
    q, th, thd = params.q, params.theta, params.theta_denom
    k = len(cols)
    val = 1.0 + 0.0j
    for a in range(k):
        for b in range(a + 1, k):
            if sigma[a] > sigma[b]:
                x, y = cols[sigma[a]], cols[sigma[b]]
                num = q ** (2 * (lam_eff[x - 1] - lam_eff[y - 1]))
                den = q ** (2 * (lam_eff[y - 1] - lam_eff[x - 1]))
                val *= th(q ** 2 * num) / thd(den)
    return val


def _sgn_plain_value(rows, sigma, lam_eff, content,
                     params: EllipticParams) -> complex:
    """Row sign of the reversed-order expansion; the non-starred parameter
    is read off the weight of the acted-on vector."""
    if content is None:
        raise DomainError("plain sgn factor requires a weight-homogeneous vector")
    q, th, thd = params.q, params.theta, params.theta_denom
    k = len(rows)
    val = 1.0 + 0.0j
    for a in range(k):
        for b in range(a + 1, k):
            if sigma[a] > sigma[b]:
                x, y = rows[sigma[b]], rows[sigma[a]]
                num = pi_exponent_value(lam_eff, content, x, y, q)
                den = pi_exponent_value(lam_eff, content, y, x, q)
                val *= th(q ** 2 * num) / thd(den)
    return val


def sgn_star(J, sigma, dyn: DynExponents, params: EllipticParams) -> complex:
    """Dynamical column sign sgn*_J(sigma, Pi*) at the given exponents."""
    return _sgn_star_value(tuple(J), tuple(sigma), dyn.effective(), params)


def sgn_star_exchange(J, tau, dyn: DynExponents,
                      params: EllipticParams) -> complex:
    """Factor relating the tau-permuted-column minor to the ordered one.

    Same inversion product as ``sgn_star`` with the index pair of each
    theta argument reversed; satisfies
    minor(rows, tau(J)) = sgn_star_exchange(J, tau) * minor(rows, J)
    for the order-covariant (reversed) expansion.
    """
    q, th, thd = params.q, params.theta, params.theta_denom
    lam_eff = dyn.effective()
    J, tau = tuple(J), tuple(tau)
    k = len(J)
    val = 1.0 + 0.0j
    for a in range(k):
        for b in range(a + 1, k):
            if tau[a] > tau[b]:
                x, y = J[tau[b]], J[tau[a]]
                num = q ** (2 * (lam_eff[x - 1] - lam_eff[y - 1]))
                den = q ** (2 * (lam_eff[y - 1] - lam_eff[x - 1]))
                val *= th(q ** 2 * num) / thd(den)
    return val


def minor_words(rows, cols, z: complex, params: EllipticParams,
                variant: str = "expansion"):
    """Sum-of-words expansion of the quantum minor l+(z)_rows^cols.

    ``expansion``   -- column signs (starred), requires ascending columns;
    ``alternative`` -- reversed factor order with row signs (non-starred),
                       valid for any column sequence.
    """
    rows, cols = tuple(rows), tuple(cols)
    if len(rows) != len(cols):
        raise DomainError("minor needs equally many rows and columns")
    if list(rows) != sorted(rows):
        raise DomainError("row sequence must be ascending")
    k = len(rows)
    q = params.q
    words = []
    for sigma in itertools.permutations(range(k)):
        if variant == "expansion":
            if list(cols) != sorted(cols):
                raise DomainError(
                    "column-sign expansion needs ascending columns; use the "
                    "'alternative' variant for permuted columns")
            factors = tuple((rows[t], cols[sigma[t]], z * q ** (-2 * t))
                            for t in range(k))
            fn = (lambda lam_eff, _c, s=sigma:
                  _sgn_star_value(cols, s, lam_eff, params))
            scal = WordScalar(0, fn, needs_content=False)
        elif variant == "alternative":
            factors = tuple((rows[sigma[k - 1 - t]], cols[k - 1 - t],
                             z * q ** (-2 * (k - 1 - t)))
                            for t in range(k))
            fn = (lambda lam_eff, c, s=sigma:
                  _sgn_plain_value(rows, s, lam_eff, c, params))
            scal = WordScalar(0, fn, needs_content=True)
        else:
            raise DomainError(f"unknown variant {variant!r}")
        words.append(LWord(factors, (scal,)))
    return words


def column_expansion_words(rows, cols, z: complex, params: EllipticParams):
    """Expansion along the first column into one-smaller minors,

    l+(z)_I^J = sum_l [prod_{a<l} theta ratio in Pi_{i_a, i_l}]
                * l+(z q^-2)_{I \\ i_l}^{J \\ j_1} L_{i_l j_1}(z).
    """
    rows, cols = tuple(rows), tuple(cols)
    k = len(rows)
    q, th, thd = params.q, params.theta, params.theta_denom
    words = []
    for li in range(k):
        i_l = rows[li]

        def prefactor(lam_eff, content, _il=i_l, _li=li):
            if content is None:
                raise DomainError("column expansion needs a weight vector")
            val = 1.0 + 0.0j
            for a in range(_li):
                num = pi_exponent_value(lam_eff, content, rows[a], _il, q)
                den = pi_exponent_value(lam_eff, content, _il, rows[a], q)
                val *= th(q ** 2 * num) / thd(den)
            return val

        sub = minor_words(rows[:li] + rows[li + 1:], cols[1:], z * q ** (-2),
                          params)
        tail = LWord(((i_l, cols[0], z),))
        for wrd in sub:
            full = compose_words(wrd, tail)
            words.append(LWord(full.factors,
                               full.scalars + (WordScalar(0, prefactor, True),)))
    return words


def a_operator(l: int, z: complex, N: int, params: EllipticParams):
    """Gelfand-Tsetlin generator A_l(z) = minor on rows = cols = [l, N]."""
    rng = tuple(range(l, N + 1))
    return minor_words(rng, rng, z, params)


def b_operator(m: int, z: complex, N: int, params: EllipticParams):
    """B_m(z): rows {m-1} u [m+1, N], columns [m, N]."""
    if not 2 <= m <= N:
        raise DomainError("B_m needs 2 <= m <= N")
    rows = (m - 1,) + tuple(range(m + 1, N + 1))
    cols = tuple(range(m, N + 1))
    return minor_words(rows, cols, z, params)


def c_operator(m: int, z: complex, N: int, params: EllipticParams):
    """C_m(z): rows [m, N], columns {m-1} u [m+1, N]."""
    if not 2 <= m <= N:
        raise DomainError("C_m needs 2 <= m <= N")
    rows = tuple(range(m, N + 1))
    cols = (m - 1,) + tuple(range(m + 1, N + 1))
    return minor_words(rows, cols, z, params)


def operator_column_content(terms, N: int) -> tuple:
    """Common column-content vector of a sum of words.

    Every word of a minor-type operator absorbs the same multiset of
    colors; this is the exponent shift its argument must be rebuilt at
    when the operator is applied to a basis vector of the commuting
    family (see gt.apply_operator).
    """
    ref = None
    for t in terms:
        c = [0] * N
        for (_k, l, _z) in t.factors:
            c[l - 1] += 1
        if ref is None:
            ref = c
        elif ref != c:
            raise DomainError("terms do not share a column content")
    return tuple(ref or [0] * N)


# -- functional application helpers ------------------------------------------

def apply_minor(rows, cols, z: complex, v: TensorVector, dyn: DynExponents,
                w, params: EllipticParams,
                variant: str = "expansion") -> TensorVector:
    """Apply the quantum minor to a vector (columns may be permuted).

    Out-of-order column sequences are routed through the order-covariant
    reversed expansion regardless of the requested variant.
    """
    lat = get_lattice(dyn, w, params)
    if variant == "column":
        words = column_expansion_words(rows, cols, z, params)
    else:
        if list(cols) != sorted(cols) and variant == "expansion":
            variant = "alternative"
        words = minor_words(rows, cols, z, params, variant)
    return lat.apply_sum(words, v, dyn.shift)


def apply_A(l: int, z: complex, v: TensorVector, dyn: DynExponents, w,
            params: EllipticParams) -> TensorVector:
    lat = get_lattice(dyn, w, params)
    return lat.apply_sum(a_operator(l, z, v.N, params), v, dyn.shift)


def apply_B(m: int, z: complex, v: TensorVector, dyn: DynExponents, w,
            params: EllipticParams) -> TensorVector:
    lat = get_lattice(dyn, w, params)
    return lat.apply_sum(b_operator(m, z, v.N, params), v, dyn.shift)


def apply_C(m: int, z: complex, v: TensorVector, dyn: DynExponents, w,
            params: EllipticParams) -> TensorVector:
    lat = get_lattice(dyn, w, params)
    return lat.apply_sum(c_operator(m, z, v.N, params), v, dyn.shift)
