"""Elliptic special functions: q-infinite products, odd theta, elliptic Gamma.

Everything downstream evaluates theta functions through an
:class:`EllipticParams` instance, which fixes the nome ``p``, the quantum
parameter ``q``, the product truncation order and the comparison tolerance,
and memoizes theta values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from . import _kernels
from .errors import DegenerateParametersError, DomainError, PoleError

#: absolute threshold below which a theta value in a denominator is treated
#: as zero and the computation aborted (callers resample parameters)
THETA_DENOM_FLOOR = 1e-14


def _auto_truncation(tol: float, *bases: complex) -> int:
    worst = max(abs(b) for b in bases)
    return math.ceil(math.log(tol) / math.log(worst)) + 8


@dataclass
class EllipticParams:
    """Numeric parameters shared by every module.

    q, p        generic complex numbers, |p| < 1; the defaults give the
                positive-real branch-safe regime.
    truncation_order
                number of retained terms per base in infinite products;
                0 means "derive from tol and |p|, |q|".
    tol         comparison tolerance; products drop factors closer to 1
                than tol/10.
    """

    q: complex = 0.3
    p: complex = 0.1
    truncation_order: int = 0
    tol: float = 1e-11
    _theta_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        if abs(self.p) >= 1:
            raise DomainError("|p| must be < 1")
        if self.q == 0:
            raise DomainError("q must be nonzero")
        if self.tol <= 0:
            raise DomainError("tol must be positive")
        if self.truncation_order == 0:
            self.truncation_order = _auto_truncation(self.tol, self.p, self.q)
        floor = math.ceil(math.log(self.tol) / math.log(abs(self.p))) + 8
        if self.truncation_order < floor:
            raise DomainError(
                f"truncation_order {self.truncation_order} below required {floor}")
        # guard the theta pinch points q^{2k} = p^m in the working range
        for k in range(1, 9):
            for m in range(0, 5):
                if abs(self.q ** (2 * k) - self.p ** m) < 1e-6:
                    raise DegenerateParametersError(
                        f"q^{2 * k} collides with p^{m}")

    # -- memoized theta access used by the other modules ------------------

    def theta(self, z: complex) -> complex:
        """Memoized odd theta function theta(z)."""
        val = self._theta_cache.get(z)
        if val is None:
            val = theta_small(z, self)
            self._theta_cache[z] = val
        return val

    def theta_denom(self, z: complex) -> complex:
        """theta(z) with the degenerate-parameters guard for denominators."""
        val = self.theta(z)
        if abs(val) < THETA_DENOM_FLOOR:
            raise DegenerateParametersError(
                f"theta({z!r}) ~ 0 in a denominator")
        return val


def q_pochhammer(x: complex, bases, params: EllipticParams) -> complex:
    """Multi-base q-infinite product (x; q_1, ..., q_k)_infinity.

    Truncated so that every omitted factor differs from 1 by less than
    params.tol / 10.
    """
    bases = tuple(bases)
    for b in bases:
        if abs(b) >= 1:
            raise DomainError(f"product base {b!r} has modulus >= 1")
    eps = params.tol / 10.0
    nmax = params.truncation_order
    if len(bases) == 1:
        return _kernels.qp1(complex(x), complex(bases[0]), nmax, eps)
    if len(bases) == 2:
        return _kernels.qp2(complex(x), complex(bases[0]), complex(bases[1]),
                            nmax, eps)
    if not bases:
        raise DomainError("at least one base is required")
    # generic k-base case, recursive over the first base
    prod = 1.0 + 0.0j
    y = complex(x)
    for _ in range(nmax):
        if abs(y) < eps:
            break
        prod *= q_pochhammer(y, bases[1:], params)
        y *= bases[0]
    return prod


def theta_big(z: complex, p: complex, params: EllipticParams) -> complex:
    """Jacobi odd theta Theta_p(z) = (z;p) (p/z;p) (p;p)."""
    if z == 0:
        raise DomainError("Theta_p(0) is undefined")
    return (q_pochhammer(z, (p,), params)
            * q_pochhammer(p / z, (p,), params)
            * q_pochhammer(p, (p,), params))


def theta_small(z: complex, params: EllipticParams) -> complex:
    """theta(z) = -z^{-1/2} Theta_p(z), principal square root."""
    if z == 0:
        raise DomainError("theta(0) is undefined")
    return -cmath.exp(-0.5 * cmath.log(z)) * theta_big(z, params.p, params)


def elliptic_gamma(z: complex, p: complex, q: complex,
                   params: EllipticParams) -> complex:
    """Elliptic Gamma function (pq/z; p, q) / (z; p, q)."""
    if z == 0:
        raise DomainError("Gamma(0; p, q) is undefined")
    den = q_pochhammer(z, (p, q), params)
    if abs(den) < 1e-12:
        raise PoleError(f"z = {z!r} is within tolerance of a Gamma pole")
    num = q_pochhammer(p * q / z, (p, q), params)
    return num / den


def rho_plus(z: complex, N: int, params: EllipticParams) -> complex:
    """Scalar prefactor of the fully normalized R-matrix.

    rho^+(z) = q^{-(N-1)/N} G(z) G(q^{2N} z) / (G(q^2 z) G(q^{2N-2} z))
    with G(x) = Gamma(x; q^{2N}, p).
    """
    q, p = params.q, params.p
    base = q ** (2 * N)
    if abs(base) >= 1:
        raise DomainError("|q^{2N}| must be < 1 for rho_plus")

    def gam(x):
        return elliptic_gamma(x, base, p, params)

    pref = cmath.exp(-(N - 1) / N * cmath.log(q))
    return pref * gam(z) * gam(q ** (2 * N) * z) / (
        gam(q ** 2 * z) * gam(q ** (2 * N - 2) * z))
