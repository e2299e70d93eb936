"""Gelfand-Tsetlin bases: spectra, factor theorems, rank-2 suite."""
import itertools

import numpy as np
import pytest

from conftest import LAM2, LAM3, W3, W4
from ellgt.basis import PartitionI, TensorVector, all_words, word_to_index
from ellgt.errors import DomainError
from ellgt.gt import (GTPattern, apply_operator, build_xi_minor,
                      build_xi_prime, build_xi_tilde, column_factor,
                      drinfeld_theta, eigenvalue_a, gl2_evaluation_weights,
                      gl2_suite, k_plus_eigenvalue, normalization_n,
                      proportionality, relation_factor,
                      wtilde_diagonal_closed, xtilde_diagonal, zk_partition)
from ellgt.minors import a_operator
from ellgt.rmatrix import DynExponents
from ellgt.special import theta_big


@pytest.fixture(scope="module")
def dyn3():
    return DynExponents(LAM3)


ALL_I3 = [PartitionI.from_word(mu, 3) for mu in all_words(3, 3)]


def test_trivial_partition_gives_zeta(params, dyn3):
    I = PartitionI.from_word((1, 1, 1), 3)
    xt = build_xi_tilde(I, dyn3, W3, params)
    assert np.allclose(xt.coeffs, TensorVector.highest(3, 3).coeffs)


def test_eigenvectors_and_closed_forms(params, dyn3):
    for I in ALL_I3:
        xt = build_xi_tilde(I, dyn3, W3, params)
        builder = lambda d, I=I: build_xi_tilde(I, d, W3, params)
        for l in (1, 2, 3):
            for z in (0.77, 1.31):
                got = apply_operator(a_operator(l, z, 3, params), builder,
                                     dyn3, W3, params)
                ev = eigenvalue_a(l, z, I, W3, params)
                assert (np.linalg.norm(got.coeffs - ev * xt.coeffs)
                        / max(np.linalg.norm(got.coeffs), 1e-30)) < 1e-9


def test_eigenvalue_l1_is_partition_independent(params):
    vals = {eigenvalue_a(1, 0.77, I, W3, params) for I in ALL_I3}
    ref = vals.pop()
    assert all(abs(v - ref) < 1e-12 * abs(ref) for v in vals)


def test_eigenvalue_topmost(params):
    # l = N on the all-ones partition: plain theta product, no marked sites
    th = params.theta
    I = PartitionI.from_word((1, 1, 1), 3)
    got = eigenvalue_a(3, 0.77, I, W3, params)
    expect = np.prod([th(0.77 / w) for w in W3])
    assert got == pytest.approx(expect, rel=1e-13)


def test_minor_basis_relation(params, dyn3):
    for I in ALL_I3:
        xt = build_xi_tilde(I, dyn3, W3, params)
        xm = build_xi_minor(I, dyn3, W3, params)
        fac = relation_factor(I, W3, params)
        assert (np.linalg.norm(xm.coeffs - fac * xt.coeffs)
                / max(xm.norm(), 1e-30)) < 1e-10


def test_rank2_minor_equals_tilde(params):
    # two colors: the relation factor is an empty product
    dyn = DynExponents(LAM2)
    for mu in all_words(2, 3):
        I = PartitionI.from_word(mu, 2)
        assert relation_factor(I, W3, params) == 1.0
        xt = build_xi_tilde(I, dyn, W3, params)
        xm = build_xi_minor(I, dyn, W3, params)
        assert np.allclose(xt.coeffs, xm.coeffs, rtol=1e-12, atol=1e-14)


def test_prime_path_independence(params, dyn3):
    for I in ALL_I3:
        a = build_xi_prime(I, dyn3, W3, params, ascent="first")
        b = build_xi_prime(I, dyn3, W3, params, ascent="last")
        assert np.allclose(a.coeffs, b.coeffs, rtol=1e-10, atol=1e-14)


def test_normalization_relation(params, dyn3):
    for I in ALL_I3:
        xt = build_xi_tilde(I, dyn3, W3, params)
        xp = build_xi_prime(I, dyn3, W3, params)
        nw = normalization_n(I, W3, params)
        assert (np.linalg.norm(xt.coeffs - nw * xp.coeffs)
                / max(xt.norm(), 1e-30)) < 1e-10


def test_k_plus_diagonal(params, dyn3):
    q = params.q
    z = 0.77
    for I in ALL_I3[:: 4]:
        xp = build_xi_prime(I, dyn3, W3, params)
        builder = lambda d, I=I: build_xi_prime(I, d, W3, params)
        for l in (1, 2, 3):
            got = apply_operator(a_operator(l, z, 3, params), builder, dyn3,
                                 W3, params)
            ev = 1.0 + 0.0j
            for j in range(l, 4):
                ev *= k_plus_eigenvalue(j, q ** (-2 * (j - l)) * z, I, W3,
                                        params)
            assert (np.linalg.norm(got.coeffs - ev * xp.coeffs)
                    / max(np.linalg.norm(got.coeffs), 1e-30)) < 1e-9


def test_xtilde_diagonal_forms(params, dyn3):
    for I in ALL_I3:
        closed = xtilde_diagonal(I, W3, params)
        via_cols = np.prod([column_factor(I, k, W3, params)
                            for k in range(1, 4)])
        assert closed == pytest.approx(via_cols, rel=1e-12)
        xt = build_xi_tilde(I, dyn3, W3, params)
        got = xt.coeffs[word_to_index(I.to_word(), 3)]
        assert got == pytest.approx(closed, rel=1e-11)


def test_zk_recursion(params, dyn3):
    for mu in ((2, 3, 1), (1, 2, 3), (3, 3, 2)):
        I = PartitionI.from_word(mu, 3)
        for k in range(1, 4):
            zk = zk_partition(I, k, dyn3, W3, params)
            zk1 = zk_partition(I, k + 1, dyn3, W3, params)
            wk = column_factor(I, k, W3, params)
            assert zk == pytest.approx(wk * zk1, rel=1e-11)
        assert zk_partition(I, 1, dyn3, W3, params) == pytest.approx(
            xtilde_diagonal(I, W3, params), rel=1e-11)


def test_normalization_rank2_closed_form(params):
    # two-color example: N(w) = theta(q^2) theta(q^2 w_3/w_1) theta(q^2 w_3/w_2)
    q, th = params.q, params.theta
    I = PartitionI(((1, 2), (3,)))
    got = normalization_n(I, W3, params)
    expect = th(q ** 2) * th(q ** 2 * W3[2] / W3[0]) * th(q ** 2 * W3[2] / W3[1])
    assert got == pytest.approx(expect, rel=1e-12)


def test_wtilde_diagonal_nonstrict_bound(params):
    # the pair product must include the last color; the strict variant
    # is off by the I_N factors already for two colors
    q, th = params.q, params.theta
    I = PartitionI(((1, 2), (3,)))
    got = wtilde_diagonal_closed(I, W3, params)
    expect = (th(W3[2] / W3[0]) * th(W3[2] / W3[1])
              / (th(q ** 2 * W3[2] / W3[0]) * th(q ** 2 * W3[2] / W3[1])))
    assert got == pytest.approx(expect, rel=1e-13)
    assert abs(got - 1.0) > 1e-3  # the strict variant would give 1


def test_n4_sample(params, dyn3):
    # spot check the heavier lattice: spectra and factor theorems
    for mu in ((1, 2, 3, 1), (3, 2, 2, 1), (2, 3, 1, 3)):
        I = PartitionI.from_word(mu, 3)
        xt = build_xi_tilde(I, dyn3, W4, params)
        builder = lambda d, I=I: build_xi_tilde(I, d, W4, params)
        got = apply_operator(a_operator(2, 0.77, 3, params), builder, dyn3,
                             W4, params)
        ev = eigenvalue_a(2, 0.77, I, W4, params)
        assert (np.linalg.norm(got.coeffs - ev * xt.coeffs)
                / max(np.linalg.norm(got.coeffs), 1e-30)) < 1e-9
        closed = xtilde_diagonal(I, W4, params)
        assert xt.coeffs[word_to_index(mu, 3)] == pytest.approx(closed,
                                                                rel=1e-10)


# -- rank-2 suite -------------------------------------------------------------


def test_gl2_suite_all_patterns(params):
    dyn = DynExponents(LAM2)
    for n, w in ((2, W3[:2]), (3, W3)):
        for gamma in itertools.product((0, 1), repeat=n):
            rep = gl2_suite(n, GTPattern(gamma), dyn, w, params)
            for name, resid in rep["residuals"].items():
                assert resid < 1e-9, (gamma, name, resid)


def test_gl2_highest_weight_case(params):
    # gamma = beta: xi is the highest vector, lowering annihilates it
    dyn = DynExponents(LAM2)
    rep = gl2_suite(3, GTPattern((0, 0, 0)), dyn, W3, params)
    assert rep["residuals"]["C_annihilation"] < 1e-12
    assert rep["xi_norm"] == pytest.approx(1.0)


def test_gl2_pattern_validation():
    with pytest.raises(DomainError):
        GTPattern((2, 0))
    with pytest.raises(DomainError):
        GTPattern((-1,))


def test_gl2_evaluation_weight_order_zero(params):
    k1, k2 = gl2_evaluation_weights(0, 1.37, 0, 0.77, params)
    assert k1 == pytest.approx(k2, rel=1e-12)


def test_gl2_weight_domain(params):
    with pytest.raises(DomainError):
        gl2_evaluation_weights(2, 1.37, 3, 0.77, params)


def test_drinfeld_ratio_identity(params):
    q = params.q
    a = 1.37
    for l in (1, 2, 3):
        for z in (0.5, 0.91, 1.7):
            k1, k2 = gl2_evaluation_weights(l, a, 0, q ** (-1) * z, params)
            rhs = (q ** (-l) * drinfeld_theta(l, a, q ** 2 * z, params)
                   / drinfeld_theta(l, a, z, params))
            assert k1 / k2 == pytest.approx(rhs, rel=1e-10)


def test_evaluation_weight_theta_quotient(params):
    q, th = params.q, params.theta
    a = 1.37
    for l in (1, 2, 3):
        z = 0.91
        k1, k2 = gl2_evaluation_weights(l, a, 0, z, params)
        assert k1 / k2 == pytest.approx(
            th(q ** (l + 2) * z / a) / th(q ** (-l + 2) * z / a), rel=1e-10)


def test_drinfeld_theta_telescoping(params):
    # P(q^2 z)/P(z) telescopes to a single capital-theta quotient
    a, l, z = 1.37, 3, 0.8
    lhs = drinfeld_theta(l, a, params.q ** 2 * z, params) / drinfeld_theta(
        l, a, z, params)
    rhs = (theta_big(params.q ** (l + 1) * z / a, params.p, params)
           / theta_big(params.q ** (-l + 1) * z / a, params.p, params))
    assert lhs == pytest.approx(rhs, rel=1e-11)


def test_proportionality_helper():
    a = TensorVector(np.array([2.0, 4.0, 0.0], dtype=complex), 3, 1)
    b = TensorVector(np.array([1.0, 2.0, 0.0], dtype=complex), 3, 1)
    ratio, resid = proportionality(a, b)
    assert ratio == pytest.approx(2.0)
    assert resid < 1e-15


def test_singular_vector_mechanism(params, dyn3):
    """Numeric form of the singular-vector lemma on the partial words.

    The truncated word (the lowest block only) is annihilated by the
    lowering entries of the corner subalgebra, diagonalized by its
    diagonal entries, and one more raising factor at the right point
    rescales exactly one weight component.
    """
    from ellgt.gt import apply_operator
    from ellgt.tensor import LWord, get_lattice

    q, th = params.q, params.theta
    lat = get_lattice(dyn3, W3, params)
    I = PartitionI.from_word((2, 3, 1), 3)  # I_2 = {1}, I_3 = {2}
    block = tuple((1, 2, lat.w[j - 1])
                  for j in sorted(I.union_from(2), reverse=True))

    def builder(d):
        return lat.apply_word(LWord(block), lat.zeta(), d.shift)

    eta = builder(dyn3)
    marked = set(I.union_from(2))

    def lam2(k, z):
        if k == 1:
            return np.prod([th((q ** 2 if m in marked else 1) * z / wm)
                            for m, wm in enumerate(W3, start=1)])
        return np.prod([th(z / wm) for wm in W3])

    # annihilation by the lowering corner entry
    low = apply_operator([LWord(((3, 2, 0.77),))], builder, dyn3, W3, params)
    assert low.norm() < 1e-10 * eta.norm()
    # diagonal action with the truncated weights
    for k, (row, col) in ((1, (2, 2)), (2, (3, 3))):
        got = apply_operator([LWord(((row, col, 0.77),))], builder, dyn3, W3,
                             params)
        assert (np.linalg.norm(got.coeffs - lam2(k, 0.77) * eta.coeffs)
                / max(np.linalg.norm(got.coeffs), 1e-30)) < 1e-10
    # the raising point annihilates the matching diagonal entry ...
    wk = lat.w[1]  # the element of I_3
    got = apply_operator([LWord(((3, 3, wk),))], builder, dyn3, W3, params)
    assert got.norm() < 1e-10 * eta.norm()
    # ... and the raised vector has one rescaled weight component
    def raised_builder(d):
        return lat.apply_word(LWord(((2, 3, wk),) + block), lat.zeta(),
                              d.shift)

    eta2 = raised_builder(dyn3)
    got = apply_operator([LWord(((3, 3, 0.77),))], raised_builder, dyn3, W3,
                         params)
    expect = th(q ** 2 * 0.77 / wk) / th(0.77 / wk) * lam2(2, 0.77)
    assert (np.linalg.norm(got.coeffs - expect * eta2.coeffs)
            / max(np.linalg.norm(got.coeffs), 1e-30)) < 1e-10


def test_evaluation_weights_match_lattice_realization(params):
    """The rank-2 evaluation-module weight ratios equal the diagonal
    Gauss-component ratios of the one-site lattice at a = q w."""
    q = params.q
    wpt = 0.83
    a = q * wpt
    for m, mu in ((0, (1,)), (1, (2,))):
        I = PartitionI.from_word(mu, 2)
        for z in (0.77, 1.31):
            k1, k2 = gl2_evaluation_weights(1, a, m, z, params)
            K1 = k_plus_eigenvalue(1, z, I, (wpt,), params)
            K2 = k_plus_eigenvalue(2, z, I, (wpt,), params)
            assert k1 / k2 == pytest.approx(K1 / K2, rel=1e-12)


def test_dyn_weight_parameter(params):
    from ellgt.gt import DynWeight
    dyn = DynExponents(LAM3, (1, 0, 0))
    dw = DynWeight(dyn, (2, 1, 0))
    q = params.q
    # exponents include both the integer shift and the content
    expect = q ** (2 * ((0.37 + 1 + 2) - (0.11 + 0 + 1)))
    assert dw.pi(1, 2, q) == pytest.approx(expect, rel=1e-14)
    assert dw.pi(2, 1, q) == pytest.approx(1 / expect, rel=1e-14)
