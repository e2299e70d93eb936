"""Elliptic weight functions, change of basis, partition-function identity."""
import itertools

import numpy as np
import pytest

from conftest import LAM2, LAM3, W3
from ellgt.basis import PartitionI, all_words
from ellgt.errors import DomainError
from ellgt.gt import build_xi_prime, normalization_n, wtilde_diagonal_closed
from ellgt.rmatrix import DynExponents
from ellgt.weights import (TriangularVars, change_of_basis, partial_order_leq,
                           partitions_of_content, u_tilde,
                           verify_partition_identity, w_tilde,
                           xi_prime_expansion_residual)


@pytest.fixture(scope="module")
def dyn2():
    return DynExponents(LAM2)


@pytest.fixture(scope="module")
def dyn3():
    return DynExponents(LAM3)


def u_tilde_reference(I, vars_, dyn, params):
    """Independent term-by-term re-implementation of the product.

    Walks elements instead of levels and multiplies the three factor
    groups in a different order from the library routine.
    """
    q, th = params.q, params.theta
    mu = I.to_word()
    n, N = I.n, I.N
    lam = dyn.effective()
    total = 1.0 + 0.0j
    for l in range(1, N):
        elems = I.prefix_union(l)
        nxt_elems = I.prefix_union(l + 1)
        cur = vars_.level(l)
        nxt = vars_.level(l + 1)
        for a, s in enumerate(elems, start=1):
            # same-element factor
            b = nxt_elems.index(s) + 1
            c_exp = 0
            for j in range(s + 1, n + 1):
                if mu[j - 1] == mu[s - 1]:
                    c_exp += 1
                if mu[j - 1] == l + 1:
                    c_exp -= 1
            arg = q ** (-2 * c_exp) * q ** (2 * (lam[mu[s - 1] - 1] - lam[l]))
            total *= (th(arg * nxt[b - 1] / cur[a - 1]) * th(q ** 2)
                      / (th(q ** 2 * nxt[b - 1] / cur[a - 1]) * th(arg)))
        for a, s in enumerate(elems, start=1):
            for b, sb in enumerate(nxt_elems, start=1):
                if sb > s:
                    total *= (th(nxt[b - 1] / cur[a - 1])
                              / th(q ** 2 * nxt[b - 1] / cur[a - 1]))
        for a in range(1, len(elems) + 1):
            for b in range(a + 1, len(elems) + 1):
                total *= (th(q ** (-2) * cur[a - 1] / cur[b - 1])
                          / th(cur[a - 1] / cur[b - 1]))
    return total


def test_u_tilde_against_reference(params, dyn3):
    rng = np.random.default_rng(9)
    for mu in ((1, 2, 3), (2, 1, 2), (3, 1, 1), (1, 3, 2)):
        I = PartitionI.from_word(mu, 3)
        levels = tuple(tuple(rng.uniform(0.3, 2.0)
                             for _ in I.prefix_union(l))
                       for l in range(1, 3))
        vars_ = TriangularVars(levels, W3)
        got = u_tilde(I, vars_, dyn3, params)
        ref = u_tilde_reference(I, vars_, dyn3, params)
        assert got == pytest.approx(ref, rel=1e-12)


def test_u_tilde_trivial_partition(params, dyn2):
    # everything in the first block: the factor groups cancel pairwise
    I = PartitionI.from_word((1, 1, 1), 2)
    vars_ = TriangularVars.specialize(I, W3)
    assert u_tilde(I, vars_, dyn2, params) == pytest.approx(1.0, rel=1e-12)


def test_sym_over_singleton_group(params, dyn2):
    # one variable per level: symmetrization is the bare product
    I = PartitionI.from_word((1, 2, 2), 2)
    vars_ = TriangularVars(((0.9,),), W3)
    assert w_tilde(I, vars_, dyn2, params) == pytest.approx(
        u_tilde(I, vars_, dyn2, params), rel=1e-14)


def test_worked_example_wtilde_values(params, dyn2):
    q, th = params.q, params.theta
    w = W3
    I = PartitionI(((1, 2), (3,)))
    vars_ = TriangularVars.specialize(I, w)
    pi = dyn2.pistar(1, 2, q)
    vals = {
        (2, 1, 1): th(pi * w[2] / (q ** 2 * w[0])) * th(q ** 2)
        / (th(q ** 2 * w[2] / w[0]) * th(pi / q ** 2)),
        (1, 2, 1): th(w[2] / w[0]) * th(pi * w[2] / w[1]) * th(q ** 2)
        / (th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1]) * th(pi)),
        (1, 1, 2): th(w[2] / w[0]) * th(w[2] / w[1])
        / (th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1])),
    }
    for mu, val in vals.items():
        J = PartitionI.from_word(mu, 2)
        assert w_tilde(J, vars_, dyn2, params) == pytest.approx(val, rel=1e-12)


def test_diagonal_closed_form(params, dyn3):
    for mu in itertools.product((1, 2, 3), repeat=3):
        I = PartitionI.from_word(mu, 3)
        vars_ = TriangularVars.specialize(I, W3)
        sym = w_tilde(I, vars_, dyn3, params)
        assert sym == pytest.approx(wtilde_diagonal_closed(I, W3, params),
                                    rel=1e-11)


def test_expansion_theorem(params):
    for N, dyn in ((2, DynExponents(LAM2)), (3, DynExponents(LAM3))):
        for mu in all_words(N, 3):
            I = PartitionI.from_word(mu, N)
            xp = build_xi_prime(I, dyn, W3, params)
            assert xi_prime_expansion_residual(I, xp, dyn, W3, params) < 1e-9


def test_change_of_basis_triangular(params, dyn3):
    for content in ((2, 1, 0), (1, 1, 1)):
        mat, parts = change_of_basis(content, dyn3, W3, params)
        scale = np.max(np.abs(mat))
        for r, I in enumerate(parts):
            assert abs(mat[r, r]) > 1e-10 * scale
            for c, J in enumerate(parts):
                if not partial_order_leq(I, J):
                    assert abs(mat[r, c]) < 1e-10 * scale
        # the listed order is a linear extension: entries above the
        # diagonal positionwise vanish
        for r in range(len(parts)):
            for c in range(r + 1, len(parts)):
                assert abs(mat[r, c]) < 1e-10 * scale


def test_partition_identity_rank2_all_pairs(params, dyn2):
    for mu in all_words(2, 3):
        I = PartitionI.from_word(mu, 2)
        for nu in all_words(2, 3):
            if PartitionI.from_word(nu, 2).content() != I.content():
                continue
            assert verify_partition_identity(I, nu, dyn2, W3, params) < 1e-9


def test_partition_identity_rank3_samples(params, dyn3, rng):
    words = all_words(3, 3)
    done = 0
    while done < 10:
        mu = words[rng.integers(len(words))]
        nu = words[rng.integers(len(words))]
        I = PartitionI.from_word(mu, 3)
        if PartitionI.from_word(nu, 3).content() != I.content():
            continue
        assert verify_partition_identity(I, nu, dyn3, W3, params) < 1e-9
        done += 1


def test_partition_identity_diagonal_is_coeff_theorem(params, dyn3):
    from ellgt.gt import xtilde_diagonal
    I = PartitionI.from_word((2, 1, 3), 3)
    vars_ = TriangularVars.specialize(I, W3)
    lhs = (normalization_n(I, W3, params)
           * w_tilde(I, vars_, dyn3.shifted(I.content()), params))
    assert lhs == pytest.approx(xtilde_diagonal(I, W3, params), rel=1e-11)


def test_partition_identity_weight_mismatch_raises(params, dyn2):
    I = PartitionI.from_word((1, 1, 2), 2)
    with pytest.raises(DomainError):
        verify_partition_identity(I, (2, 2, 2), dyn2, W3, params)


def test_shift_covariance(params, dyn3):
    I = PartitionI.from_word((2, 1, 3), 3)
    vars_ = TriangularVars.specialize(I, W3)
    for a in (1, 2, 3):
        via_shift = w_tilde(I, vars_, dyn3.shifted_by_index(a), params)
        lam2 = tuple(l + (1 if i == a - 1 else 0)
                     for i, l in enumerate(LAM3))
        via_lambda = w_tilde(I, vars_, DynExponents(lam2), params)
        assert via_shift == pytest.approx(via_lambda, rel=1e-13)


def test_partitions_of_content_order(params):
    parts = partitions_of_content((2, 1))
    words = [P.to_word() for P in parts]
    assert words[0] == (2, 1, 1)  # extremal first
    assert words[-1] == (1, 1, 2)
    # linear extension: nothing later is strictly greater
    for i, I in enumerate(parts):
        for j in range(i + 1, len(parts)):
            assert not (partial_order_leq(I, parts[j])
                        and parts[j].to_word() != I.to_word())


def test_symmetrized_finiteness_fallback(params, dyn2):
    # collapse two points so that single terms blow up; the symmetrized
    # value must come back finite through the perturbation fallback
    w_degenerate = (0.83, 0.83 * params.q ** 2, 0.42)
    I = PartitionI.from_word((1, 1, 2), 2)
    vars_ = TriangularVars.specialize(I, w_degenerate)
    val = w_tilde(I, vars_, dyn2, params)
    assert np.isfinite(val.real) and np.isfinite(val.imag)
