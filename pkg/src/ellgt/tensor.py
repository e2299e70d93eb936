"""L-operator action on tensor products of vector representations.

The action of a single L-operator entry L_kl(z) on the n-fold tensor
product is the (k,l) auxiliary-space component of the ordered product of
statistical-weight R-matrices over the sites,

    Rtilde^(0n)(z/w_n, Pi* q^{2 h^(1..n-1)}) ... Rtilde^(01)(z/w_1, Pi*),

where the dynamical argument of the site-j factor is shifted by the
contents of slots 1..j-1 at the time that factor acts.  Ordered products
of such entries ("words") thread an additional shift: the factor at
position j from the left, and any scalar sitting at position j, see the
exponents shifted by +e_{l_i} for every factor i strictly to the left.

Words evaluate right-to-left; scalars are positioned callables so that
dynamical sign factors of quantum minors can ride along at the correct
shift.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import _kernels
from .basis import TensorVector, index_to_word, word_to_index
from .errors import DomainError, EnumerationLimitError
from .rmatrix import DynExponents
from .special import EllipticParams

#: state-count cap for the configuration-sum oracle
ENUMERATION_CAP = 10 ** 7


@dataclass(frozen=True)
class WordScalar:
    """Dynamical scalar positioned inside an L-word.

    ``fn(lam_eff, content)`` receives the exponent tuple effective at the
    scalar's position and, when ``needs_content`` is set, the content of
    the vector the scalar multiplies at that stage.
    """

    pos: int
    fn: Callable[[tuple, Optional[tuple]], complex]
    needs_content: bool = False


@dataclass(frozen=True)
class LWord:
    """Ordered product of elementary L-operator factors with scalars.

    ``factors`` are (row k, column l, spectral point z) triples in written
    order, leftmost first; the rightmost factor acts first.
    """

    factors: tuple
    scalars: tuple = ()

    def __len__(self):
        return len(self.factors)


def compose_words(a: LWord, b: LWord) -> LWord:
    """Concatenate words: a to the left of b."""
    off = len(a.factors)
    moved = tuple(WordScalar(s.pos + off, s.fn, s.needs_content)
                  for s in b.scalars)
    return LWord(a.factors + b.factors, a.scalars + moved)


def compose_sums(A, B):
    """Distributive product of two sums of words."""
    return [compose_words(a, b) for a in A for b in B]


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative ints summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class Lattice:
    """Evaluation context: N, n, evaluation points w and base exponents.

    Owns the per-site weight tables and the cache of L-entry matrices, so
    repeated word evaluations at the same spectral data are cheap.  All
    operations are pure in their arguments; the memoization dictionaries
    are the only mutable state (write-on-miss, so concurrent readers
    should pre-warm or hold their own instance).
    """

    def __init__(self, params: EllipticParams, N: int, n: int, w, lam):
        self.params = params
        self.N = int(N)
        self.n = int(n)
        self.w = tuple(complex(x) for x in w)
        self.lam = tuple(complex(x) for x in lam)
        if len(self.w) != self.n:
            raise DomainError("need one evaluation point per tensor factor")
        if len(self.lam) != self.N:
            raise DomainError("need one exponent per color")
        self.dim = self.N ** self.n
        self._digits = np.zeros((self.dim, self.n), dtype=np.uint8)
        for idx in range(self.dim):
            self._digits[idx] = [m - 1 for m in index_to_word(idx, self.N, self.n)]
        # composition slots shared by every site table
        radix = self.n + 1
        self._radix_pows = np.array([radix ** a for a in range(self.N)],
                                    dtype=np.int64)
        self._idx_map = np.full((self.n, radix ** self.N), -1, dtype=np.int32)
        self._slot_comps = []
        for j in range(self.n):
            for comp in _compositions(j, self.N):
                code = int(sum(c * radix ** a for a, c in enumerate(comp)))
                self._idx_map[j, code] = len(self._slot_comps)
                self._slot_comps.append((j, comp))
        self._tables: dict = {}
        self._tmats: dict = {}

    # -- dynamical parameter helpers --------------------------------------

    def lam_eff(self, shift) -> tuple:
        return tuple(l + s for l, s in zip(self.lam, shift))

    def pistar(self, a: int, b: int, shift) -> complex:
        eff = self.lam_eff(shift)
        return self.params.q ** (2 * (eff[a - 1] - eff[b - 1]))

    def zeta(self) -> TensorVector:
        return TensorVector.highest(self.N, self.n)

    # -- statistical-weight tables -----------------------------------------

    def _site_table(self, z: complex, shift: tuple) -> np.ndarray:
        key = (z, shift)
        table = self._tables.get(key)
        if table is not None:
            return table
        N, q, th = self.N, self.params.q, self.params.theta
        thd = self.params.theta_denom
        table = np.zeros((len(self._slot_comps), N, N, N, N),
                         dtype=np.complex128)
        for slot, (j, comp) in enumerate(self._slot_comps):
            u = z / self.w[j]
            au = th(q ** 2 * u)
            for a in range(N):
                table[slot, a, a, a, a] = au
            eff = [l + s + c for l, s, c in zip(self.lam, shift, comp)]
            for j1 in range(N):
                for j2 in range(j1 + 1, N):
                    pi = q ** (2 * (eff[j1] - eff[j2]))
                    tp = thd(pi)
                    tpi = thd(1 / pi)
                    # theta(q^2 z) cancels against the normalization in all
                    # off-diagonal entries
                    table[slot, j1, j2, j1, j2] = \
                        th(q ** 2 * pi) * th(pi / q ** 2) * th(u) / tp ** 2
                    table[slot, j2, j1, j2, j1] = th(u)
                    table[slot, j1, j2, j2, j1] = th(q ** 2) * th(u * pi) / tp
                    table[slot, j2, j1, j1, j2] = th(q ** 2) * th(u / pi) / tpi
        self._tables[key] = table
        return table

    def t_matrix(self, k: int, l: int, z: complex, shift=None) -> np.ndarray:
        """Dense matrix of L_kl(z) on the module; k, l are 1-based."""
        if shift is None:
            shift = (0,) * self.N
        shift = tuple(shift)
        key = (k, l, z, shift)
        mat = self._tmats.get(key)
        if mat is None:
            table = self._site_table(z, shift)
            mat = _kernels.build_t_matrix(
                self.N, self.n, k - 1, l - 1, self._digits, table,
                self._idx_map, self._radix_pows)
            self._tmats[key] = mat
        return mat

    # -- word evaluation ----------------------------------------------------

    def apply_word(self, word: LWord, v: TensorVector,
                   ext_shift=None) -> TensorVector:
        """Evaluate an L-word right-to-left with shift threading."""
        if ext_shift is None:
            ext_shift = (0,) * self.N
        m = len(word.factors)
        cols = [f[1] for f in word.factors]
        prefix = [list(ext_shift)]
        for l in cols:
            nxt = prefix[-1].copy()
            nxt[l - 1] += 1
            prefix.append(nxt)
        # prefix[j] = ext_shift + sum of e_{l_i} for i < j
        by_pos: dict = {}
        for s in word.scalars:
            if not 0 <= s.pos <= m:
                raise DomainError("scalar position outside the word")
            by_pos.setdefault(s.pos, []).append(s)
        needs_content = any(s.needs_content for s in word.scalars)
        blocks = (v.content_blocks() if needs_content
                  else {None: v})
        out = TensorVector.zero(self.N, self.n)
        for block_content, bv in blocks.items():
            cur = bv.coeffs.copy()
            content = list(block_content) if block_content else None
            scale = 1.0 + 0.0j
            for s in by_pos.get(m, ()):
                scale *= s.fn(self.lam_eff(prefix[m]),
                              tuple(content) if content else None)
            for j in range(m - 1, -1, -1):
                k, l, z = word.factors[j]
                cur = self.t_matrix(k, l, z, tuple(prefix[j])) @ cur
                if content is not None:
                    # the auxiliary line absorbs color l and emits color k
                    content[l - 1] += 1
                    content[k - 1] -= 1
                for s in by_pos.get(j, ()):
                    scale *= s.fn(self.lam_eff(prefix[j]),
                                  tuple(content) if content else None)
            out.coeffs += scale * cur
        return out

    def apply_sum(self, terms, v: TensorVector, ext_shift=None) -> TensorVector:
        out = TensorVector.zero(self.N, self.n)
        for t in terms:
            out = out + self.apply_word(t, v, ext_shift)
        return out

    # -- partition functions -------------------------------------------------

    def partition_z(self, K, L, zs, alpha, beta, ext_shift=None,
                    mode: str = "sequential") -> complex:
        """Coefficient of v_beta in L_{k_m l_m}(z_m) ... L_{k_1 l_1}(z_1) v_alpha.

        K, L, zs are given in application order (index 1 acts first).
        ``mode`` selects sequential matrix evaluation or the independent
        configuration-sum oracle.
        """
        K, L, zs = tuple(K), tuple(L), tuple(zs)
        if not len(K) == len(L) == len(zs):
            raise DomainError("K, L, zs must have equal length")
        if mode == "sequential":
            factors = tuple((K[i], L[i], zs[i])
                            for i in range(len(K) - 1, -1, -1))
            vec = self.apply_word(LWord(factors), TensorVector.basis(alpha, self.N),
                                  ext_shift)
            return complex(vec.coeffs[word_to_index(beta, self.N)])
        if mode == "enumerate":
            return self._partition_enumerate(K, L, zs, alpha, beta, ext_shift)
        raise DomainError(f"unknown mode {mode!r}")

    def _partition_enumerate(self, K, L, zs, alpha, beta, ext_shift) -> complex:
        """Direct sum over all internal lattice configurations."""
        m, n, N = len(K), self.n, self.N
        if N ** ((m + 1) * (n + 1)) > ENUMERATION_CAP:
            raise EnumerationLimitError(
                "configuration enumeration exceeds the state cap")
        if ext_shift is None:
            ext_shift = (0,) * N
        q, th = self.params.q, self.params.theta
        thd = self.params.theta_denom

        def entry(a_out, s_out, a_in, s_in, u, eff):
            # single Rtilde element, a(u)-normalized, indices 1-based
            if {a_out, s_out} != {a_in, s_in}:
                return 0.0
            if a_out == s_out == a_in == s_in:
                return th(q ** 2 * u)
            j1, j2 = min(a_in, s_in), max(a_in, s_in)
            pi = q ** (2 * (eff[j1 - 1] - eff[j2 - 1]))
            if (a_out, s_out) == (a_in, s_in):
                if a_in == j1:  # b entry
                    return th(q ** 2 * pi) * th(pi / q ** 2) * th(u) / thd(pi) ** 2
                return th(u)  # bbar entry
            if a_in == j2:  # c entry: (j2, j1) -> (j1, j2)
                return th(q ** 2) * th(u * pi) / thd(pi)
            return th(q ** 2) * th(u / pi) / thd(1 / pi)  # cbar

        # word-level shift for factor i (0-based, applied i-th):
        word_shift = []
        for i in range(m):
            sh = list(ext_shift)
            for i2 in range(i + 1, m):
                sh[L[i2] - 1] += 1
            word_shift.append(sh)

        total = 0.0 + 0.0j

        def run_factor(i, state, amp):
            nonlocal total
            if i == m:
                if state == tuple(beta):
                    total += amp
                return
            base_shift = word_shift[i]
            z = zs[i]

            def site(j, aux, new_state, content, a):
                if j == n:
                    if aux == K[i]:
                        run_factor(i + 1, tuple(new_state), amp * a)
                    return
                s_in = state[j]
                u = z / self.w[j]
                eff = [l + s + c for l, s, c in
                       zip(self.lam, base_shift, content)]
                cands = [(aux, s_in)] if aux == s_in else [(aux, s_in), (s_in, aux)]
                for a_out, s_out in cands:
                    e = entry(a_out, s_out, aux, s_in, u, eff)
                    if e != 0.0:
                        new_state.append(s_out)
                        c2 = list(content)
                        c2[s_out - 1] += 1
                        site(j + 1, a_out, new_state, c2, a * e)
                        new_state.pop()

            site(0, L[i], [], [0] * N, 1.0 + 0.0j)

        run_factor(0, tuple(alpha), 1.0 + 0.0j)
        return complex(total)


# -- functional module interface --------------------------------------------

_LATTICES: dict = {}


def get_lattice(dyn: DynExponents, w, params: EllipticParams) -> Lattice:
    """Shared lattice for the given parameters (base exponents only)."""
    key = (params.q, params.p, params.truncation_order, params.tol,
           dyn.lam, tuple(complex(x) for x in w))
    lat = _LATTICES.get(key)
    if lat is None:
        lat = Lattice(params, dyn.N, len(tuple(w)), w, dyn.lam)
        _LATTICES[key] = lat
    return lat


def l_entry_matrix(k: int, l: int, z: complex, dyn: DynExponents, w,
                   params: EllipticParams) -> np.ndarray:
    """Matrix of the (k,l) L-operator entry on V^(x)n at points w."""
    lat = get_lattice(dyn, w, params)
    return lat.t_matrix(k, l, z, dyn.shift)


def apply_lword(word: LWord, v: TensorVector, dyn: DynExponents, w,
                params: EllipticParams) -> TensorVector:
    lat = get_lattice(dyn, w, params)
    return lat.apply_word(word, v, dyn.shift)


def partition_z(K, L, zs, alpha, beta, dyn: DynExponents, w,
                params: EllipticParams, mode: str = "sequential") -> complex:
    lat = get_lattice(dyn, w, params)
    return lat.partition_z(K, L, zs, alpha, beta, dyn.shift, mode)
