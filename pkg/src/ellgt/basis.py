"""Standard basis bookkeeping for the n-fold tensor product of C^N.

Basis states are words mu = (mu_1, ..., mu_n) with entries in 1..N.  The
linear index is row-major: index = sum_i (mu_i - 1) N^(n-i).  A partition
I = (I_1, ..., I_N) of {1..n} is the same data with I_l = {i : mu_i = l}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def word_to_index(mu, N: int) -> int:
    idx = 0
    for m in mu:
        if not 1 <= m <= N:
            raise DomainError(f"basis letter {m} outside 1..{N}")
        idx = idx * N + (m - 1)
    return idx


def index_to_word(idx: int, N: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        out.append(idx % N + 1)
        idx //= N
    return tuple(reversed(out))


def all_words(N: int, n: int):
    """All basis words in index order."""
    return [index_to_word(i, N, n) for i in range(N ** n)]


def content_of_word(mu, N: int) -> tuple:
    c = [0] * N
    for m in mu:
        c[m - 1] += 1
    return tuple(c)


@dataclass(frozen=True)
class PartitionI:
    """Ordered tuple of disjoint index sets covering {1..n}."""

    sets: tuple

    def __post_init__(self):
        seen = set()
        for s in self.sets:
            if list(s) != sorted(s):
                raise DomainError("partition blocks must be increasing")
            seen.update(s)
        n = self.n
        if seen != set(range(1, n + 1)) or sum(len(s) for s in self.sets) != n:
            raise DomainError("blocks must disjointly cover {1..n}")

    @property
    def N(self) -> int:
        return len(self.sets)

    @property
    def n(self) -> int:
        return sum(len(s) for s in self.sets)

    @classmethod
    def from_word(cls, mu, N: int) -> "PartitionI":
        sets = [[] for _ in range(N)]
        for pos, m in enumerate(mu, start=1):
            if not 1 <= m <= N:
                raise DomainError(f"word letter {m} outside 1..{N}")
            sets[m - 1].append(pos)
        return cls(tuple(tuple(s) for s in sets))

    def to_word(self) -> tuple:
        mu = [0] * self.n
        for l, block in enumerate(self.sets, start=1):
            for pos in block:
                mu[pos - 1] = l
        return tuple(mu)

    def content(self) -> tuple:
        return tuple(len(s) for s in self.sets)

    def union_from(self, l: int) -> tuple:
        """Sorted union I_l cup ... cup I_N (1-based l)."""
        out = []
        for s in self.sets[l - 1:]:
            out.extend(s)
        return tuple(sorted(out))

    def prefix_union(self, l: int) -> tuple:
        """Sorted union I_1 cup ... cup I_l (1-based l)."""
        out = []
        for s in self.sets[:l]:
            out.extend(s)
        return tuple(sorted(out))


def all_partitions(N: int, n: int):
    """All N^n partitions of {1..n}, in basis-index order of their words."""
    return [PartitionI.from_word(mu, N) for mu in all_words(N, n)]


@dataclass
class TensorVector:
    """Complex coefficient vector over the standard basis, with content tag."""

    coeffs: np.ndarray
    N: int
    n: int

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        if self.coeffs.shape != (self.N ** self.n,):
            raise DomainError("coefficient array has wrong length")

    @classmethod
    def zero(cls, N: int, n: int) -> "TensorVector":
        return cls(np.zeros(N ** n, dtype=np.complex128), N, n)

    @classmethod
    def basis(cls, mu, N: int) -> "TensorVector":
        v = cls.zero(N, len(mu))
        v.coeffs[word_to_index(mu, N)] = 1.0
        return v

    @classmethod
    def highest(cls, N: int, n: int) -> "TensorVector":
        """zeta = v_(1^n)."""
        return cls.basis((1,) * n, N)

    def copy(self) -> "TensorVector":
        return TensorVector(self.coeffs.copy(), self.N, self.n)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def content(self):
        """Common content of the support, or None if mixed / zero."""
        support = np.nonzero(np.abs(self.coeffs) > 0)[0]
        if len(support) == 0:
            return None
        contents = {content_of_word(index_to_word(int(i), self.N, self.n), self.N)
                    for i in support}
        if len(contents) == 1:
            return contents.pop()
        return "mixed"

    def content_blocks(self):
        """Split into weight-homogeneous components: dict content -> vector."""
        blocks: dict = {}
        for i in np.nonzero(np.abs(self.coeffs) > 0)[0]:
            c = content_of_word(index_to_word(int(i), self.N, self.n), self.N)
            if c not in blocks:
                blocks[c] = TensorVector.zero(self.N, self.n)
            blocks[c].coeffs[i] = self.coeffs[i]
        return blocks

    def __add__(self, other: "TensorVector") -> "TensorVector":
        return TensorVector(self.coeffs + other.coeffs, self.N, self.n)

    def __sub__(self, other: "TensorVector") -> "TensorVector":
        return TensorVector(self.coeffs - other.coeffs, self.N, self.n)

    def __mul__(self, scalar) -> "TensorVector":
        return TensorVector(self.coeffs * scalar, self.N, self.n)

    __rmul__ = __mul__
