"""Generic parameter sampling with degeneracy rejection.

Evaluation points and exponents are resampled until all the theta
arguments that can land in denominators stay away from the zero lattice
q^{2Z} p^Z (band half-width in log space below; residual amplification
scales inversely with the distance to the lattice).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateParametersError

_BAND = 1e-2


def _near_lattice(x: float, lq: float, lp: float, arange=6, brange=3) -> bool:
    """Is exp(x) within the rejection band of q^{2a} p^b?"""
    for a in range(-arange, arange + 1):
        for b in range(-brange, brange + 1):
            if abs(x - 2 * a * lq - b * lp) < _BAND:
                return True
    return False


def default_lambda(N: int) -> tuple:
    """Branch-safe generic real exponents, e.g. (0.37, 0.11, 0) for three colors."""
    base = (0.37, 0.11, 0.0, 0.61, 0.23, 0.47)
    if N <= 3:
        return tuple(base[3 - N:3])
    return tuple(base[:N])


def sample_w(rng: np.random.Generator, n: int, q: float, p: float,
             lo: float = 0.2, hi: float = 3.0, max_tries: int = 200) -> tuple:
    """Pairwise-generic evaluation points, uniform on [lo, hi]."""
    lq, lp = math.log(abs(q)), math.log(abs(p))
    for _ in range(max_tries):
        w = rng.uniform(lo, hi, size=n)
        ok = True
        for i in range(n):
            for j in range(i + 1, n):
                if _near_lattice(math.log(w[i] / w[j]), lq, lp):
                    ok = False
        if ok:
            return tuple(float(x) for x in w)
    raise DegenerateParametersError("could not sample generic points")


def sample_lambda(rng: np.random.Generator, N: int, q: float, p: float,
                  max_tries: int = 200) -> tuple:
    """Generic real exponents in [0, 1] with pairwise-shift rejection."""
    lq, lp = math.log(abs(q)), math.log(abs(p))
    for _ in range(max_tries):
        lam = rng.uniform(0.0, 1.0, size=N)
        ok = True
        for i in range(N):
            for j in range(N):
                if i == j:
                    continue
                # Pi* arguments appear with integer shifts of the exponents
                for k in range(-6, 7):
                    if _near_lattice(2 * (lam[i] - lam[j] + k) * lq, lq, lp):
                        ok = False
        if ok:
            return tuple(float(x) for x in lam)
    raise DegenerateParametersError("could not sample generic exponents")
