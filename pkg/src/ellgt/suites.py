"""Named verification checks grouped into suites.

Each check function returns a :class:`Check` with a residual, its
threshold and timing; suites bundle them.  The CLI and the acceptance
tests share these implementations.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

import numpy as np

from .basis import PartitionI, TensorVector, all_words, word_to_index
from .gt import (GTPattern, apply_operator, build_xi_minor, build_xi_prime,
                 build_xi_tilde, column_factor, drinfeld_theta, eigenvalue_a,
                 gl2_evaluation_weights, gl2_suite, k_plus_eigenvalue,
                 normalization_n, relation_factor,
                 wtilde_diagonal_closed, xtilde_diagonal, zk_partition)
from .minors import (a_operator, b_operator, c_operator,
                     column_expansion_words, minor_words, sgn_star_exchange)
from .rmatrix import (DynExponents, check_dybe, check_unitarity,
                      permutation_matrix, pi_exponent_value, rbar_matrix,
                      stilde_apply)
from .sampling import default_lambda, sample_lambda, sample_w
from .special import (EllipticParams, elliptic_gamma, q_pochhammer, rho_plus,
                      theta_big)
from .tensor import compose_sums, get_lattice
from .weights import (TriangularVars, change_of_basis, partial_order_leq,
                      verify_partition_identity, w_tilde,
                      xi_prime_expansion_residual)


@dataclass
class Check:
    name: str
    residual: float
    threshold: float
    passed: bool
    seconds: float


def _run(name, threshold, fn) -> Check:
    t0 = time.perf_counter()
    residual = float(fn())
    dt = time.perf_counter() - t0
    return Check(name, residual, threshold, bool(residual < threshold), dt)


def _rel(a, b) -> float:
    scale = max(abs(a), abs(b))
    if scale < 1e-6:
        return abs(a - b)
    return abs(a - b) / scale


# -- special functions --------------------------------------------------------


def suite_special(params: EllipticParams, rng, tol: float = 1e-11,
                  n_points: int = 100):
    checks = []
    p, q = params.p, params.q

    def quasi_periodicity():
        worst = 0.0
        for _ in range(n_points):
            z = rng.uniform(0.1, 10.0)
            big = theta_big(z, p, params)
            worst = max(worst, abs(theta_big(p * z, p, params) + big / z)
                        / max(abs(big), 1e-30))
        return worst

    checks.append(_run(f"theta_quasi_periodicity_{n_points}pts", tol,
                       quasi_periodicity))

    def zero_set():
        # Theta vanishes on the whole lattice p^k; evaluate the outliers
        # both directly and shifted into the fundamental annulus via
        # Theta(p z) = -Theta(z)/z
        worst = abs(theta_big(1.0 + 0j, p, params))
        for k in range(-2, 3):
            worst = max(worst, abs(theta_big(p ** k + 0j, p, params)))
            scale = np.prod([(-1 / p ** j) for j in range(k)]) if k > 0 else \
                np.prod([-p ** (j + 1) for j in range(-k)]) if k < 0 else 1.0
            worst = max(worst, abs(scale * theta_big(1.0 + 0j, p, params)))
        return worst

    checks.append(_run("theta_zero_set", tol, zero_set))

    def gamma_shifts():
        worst = 0.0
        qq = 0.2 if abs(q) >= 1 else q
        for _ in range(n_points):
            z = rng.uniform(0.05, 0.95)
            g = elliptic_gamma(z, p, qq, params)
            lhs1 = elliptic_gamma(p * z, p, qq, params)
            rhs1 = theta_big(z, qq, params) / q_pochhammer(qq, (qq,), params) * g
            lhs2 = elliptic_gamma(qq * z, p, qq, params)
            rhs2 = theta_big(z, p, params) / q_pochhammer(p, (p,), params) * g
            worst = max(worst, _rel(lhs1, rhs1), _rel(lhs2, rhs2))
        return worst

    checks.append(_run(f"gamma_shift_relations_{n_points}pts", tol,
                       gamma_shifts))

    def truncation_stability():
        doubled = EllipticParams(q=params.q, p=params.p,
                                 truncation_order=2 * params.truncation_order,
                                 tol=params.tol)
        worst = 0.0
        for z in (0.5, 0.31, 2.7, 0.05):
            worst = max(worst, _rel(theta_big(z, p, params),
                                    theta_big(z, p, doubled)))
        return worst

    checks.append(_run("truncation_stability", params.tol / 10, truncation_stability))

    def rho_compositional():
        z = 0.5
        got = rho_plus(z, 2, params)
        base = q ** 4

        def gam(x):
            return elliptic_gamma(x, base, p, params)

        direct = (q ** (-0.5) * gam(z) * gam(q ** 4 * z)
                  / (gam(q ** 2 * z) * gam(q ** 2 * z)))
        return _rel(got, direct)

    checks.append(_run("rho_plus_compositional", tol, rho_compositional))
    return checks


# -- R-matrix -----------------------------------------------------------------


def suite_rmatrix(params: EllipticParams, rng, Ns=(2, 3), draws: int = 20):
    checks = []
    q = params.q

    def ice_rule():
        worst = 0.0
        for N in Ns:
            lam = default_lambda(N)
            R = rbar_matrix(0.83, DynExponents(lam), params, N).tensor()
            for o1, o2, i1, i2 in itertools.product(range(N), repeat=4):
                if {o1, o2} != {i1, i2}:
                    worst = max(worst, abs(R[o1, o2, i1, i2]))
        return worst

    checks.append(_run("ice_rule_structural_zeros", 1e-15, ice_rule))

    def r_at_one():
        worst = 0.0
        for N in Ns:
            lam = default_lambda(N)
            R = rbar_matrix(1.0 + 0j, DynExponents(lam), params, N).entries
            worst = max(worst, float(np.max(np.abs(R - permutation_matrix(N)))))
        return worst

    checks.append(_run("rbar_at_1_equals_P", 1e-12, r_at_one))

    def dybe():
        worst = 0.0
        for N in Ns:
            for _ in range(draws):
                lam = sample_lambda(rng, N, abs(q), abs(params.p))
                zs = sample_w(rng, 3, abs(q), abs(params.p))
                worst = max(worst, check_dybe(zs[0], zs[1], zs[2],
                                              DynExponents(lam), params, N,
                                              relative=True))
        return worst

    checks.append(_run(f"dybe_{draws}_draws", 1e-10, dybe))

    def unitarity():
        worst = 0.0
        for N in Ns:
            for _ in range(max(4, draws // 2)):
                lam = sample_lambda(rng, N, abs(q), abs(params.p))
                z = rng.uniform(0.3, 2.5)
                worst = max(worst, check_unitarity(z, DynExponents(lam),
                                                   params, N))
        return worst

    checks.append(_run("unitarity", 1e-10, unitarity))

    def stilde_involution():
        worst = 0.0
        for N in Ns:
            n = 3
            lam = default_lambda(N)
            dyn = DynExponents(lam)
            w = sample_w(rng, n, abs(q), abs(params.p))
            vec = TensorVector(
                rng.normal(size=N ** n) + 1j * rng.normal(size=N ** n), N, n)
            for i in (1, 2):
                v1, pts = stilde_apply(i, vec, dyn, w, params)
                v2, pts2 = stilde_apply(i, v1, dyn, pts, params)
                assert pts2 == tuple(w)
                worst = max(worst, np.linalg.norm(v2.coeffs - vec.coeffs)
                            / vec.norm())
        return worst

    checks.append(_run("stilde_involution", 1e-10, stilde_involution))

    def stilde_braid():
        worst = 0.0
        for N in Ns:
            n = 3
            dyn = DynExponents(default_lambda(N))
            w = sample_w(rng, n, abs(q), abs(params.p))
            vec = TensorVector(
                rng.normal(size=N ** n) + 1j * rng.normal(size=N ** n), N, n)

            def chain(order):
                v, pts = vec, tuple(w)
                for i in order:
                    v, pts = stilde_apply(i, v, dyn, pts, params)
                return v

            a = chain((1, 2, 1))
            b = chain((2, 1, 2))
            worst = max(worst, np.linalg.norm(a.coeffs - b.coeffs)
                        / max(a.norm(), 1e-30))
        return worst

    checks.append(_run("stilde_braid", 1e-10, stilde_braid))

    def blockwise_shift():
        worst = 0.0
        N = max(Ns)
        dyn = DynExponents(default_lambda(N))
        for a in range(1, N + 1):
            R1 = rbar_matrix(0.63, dyn.shifted_by_index(a), params, N).tensor()
            # entrywise substitution Pi*_{i,j} q^{2(delta_{a,i}-delta_{a,j})}
            R2 = np.zeros_like(R1)
            th, thd = params.theta, params.theta_denom
            for j in range(N):
                R2[j, j, j, j] = 1.0
            for j1 in range(1, N + 1):
                for j2 in range(j1 + 1, N + 1):
                    pi = dyn.pistar(j1, j2, q) * q ** (
                        2 * ((1 if a == j1 else 0) - (1 if a == j2 else 0)))
                    u = 0.63
                    R2[j1 - 1, j2 - 1, j1 - 1, j2 - 1] = (
                        th(q ** 2 * pi) * th(pi / q ** 2) * th(u)
                        / (thd(pi) ** 2 * thd(q ** 2 * u)))
                    R2[j2 - 1, j1 - 1, j2 - 1, j1 - 1] = th(u) / thd(q ** 2 * u)
                    R2[j1 - 1, j2 - 1, j2 - 1, j1 - 1] = (
                        th(q ** 2) * th(u * pi) / (thd(pi) * thd(q ** 2 * u)))
                    R2[j2 - 1, j1 - 1, j1 - 1, j2 - 1] = (
                        th(q ** 2) * th(u / pi) / (thd(1 / pi) * thd(q ** 2 * u)))
            worst = max(worst, float(np.max(np.abs(R1 - R2))))
        return worst

    checks.append(_run("blockwise_shift_consistency", 1e-12, blockwise_shift))
    return checks


# -- quantum minors -----------------------------------------------------------


def suite_minors(params: EllipticParams, rng, N: int = 3, n: int = 2,
                 tol: float = 1e-9):
    checks = []
    q = params.q
    lam = default_lambda(N)
    dyn = DynExponents(lam)
    w = sample_w(rng, n, abs(q), abs(params.p))
    lat = get_lattice(dyn, w, params)
    dim = N ** n
    vec = TensorVector(rng.normal(size=dim) + 1j * rng.normal(size=dim), N, n)

    def qdet_central():
        z = rng.uniform(0.4, 1.9)
        words = a_operator(1, z, N, params)
        M = np.zeros((dim, dim), dtype=np.complex128)
        for c in range(dim):
            e = TensorVector.zero(N, n)
            e.coeffs[c] = 1.0
            M[:, c] = lat.apply_sum(words, e, dyn.shift).coeffs
        return float(np.max(np.abs(M - M[0, 0] * np.eye(dim))) / abs(M[0, 0]))

    checks.append(_run("qdet_centrality", tol, qdet_central))

    def exchange_property():
        worst = 0.0
        z = 0.77
        col_sets = [c for k in (2, 3) if k <= N
                    for c in itertools.combinations(range(1, N + 1), k)]
        for cols in col_sets:
            k = len(cols)
            rows = tuple(range(1, k + 1))
            base = minor_words(rows, cols, z, params, "alternative")
            for tau in itertools.permutations(range(k)):
                tau_cols = tuple(cols[t] for t in tau)
                sg = sgn_star_exchange(cols, tau, dyn, params)
                perm = minor_words(rows, tau_cols, z, params, "alternative")
                for mu in all_words(N, n):
                    v = TensorVector.basis(mu, N)
                    a = lat.apply_sum(base, v, dyn.shift)
                    b = lat.apply_sum(perm, v, dyn.shift)
                    if max(a.norm(), b.norm()) < 1e-18:
                        continue
                    worst = max(worst, float(
                        np.linalg.norm(b.coeffs - sg * a.coeffs)
                        / max(b.norm(), 1e-30)))
        return worst

    checks.append(_run("exchange_property", tol, exchange_property))

    def column_expansion():
        worst = 0.0
        z = 0.77
        pairs = [((1, 2), (2, 3)), ((1, 3), (2, 3)), ((2, 3), (1, 2)),
                 (tuple(range(1, N + 1)), tuple(range(1, N + 1)))]
        for rows, cols in pairs:
            if max(rows + cols) > N:
                continue
            a = lat.apply_sum(minor_words(rows, cols, z, params), vec, dyn.shift)
            b = lat.apply_sum(column_expansion_words(rows, cols, z, params),
                              vec, dyn.shift)
            worst = max(worst, float(np.linalg.norm(a.coeffs - b.coeffs)
                                     / max(a.norm(), 1e-30)))
        return worst

    checks.append(_run("column_expansion", tol, column_expansion))

    def expansion_cross_check():
        worst = 0.0
        z = 0.77
        pairs = [((1, 2), (2, 3)), ((1, 3), (1, 2)),
                 (tuple(range(1, N + 1)), tuple(range(1, N + 1)))]
        for rows, cols in pairs:
            if max(rows + cols) > N:
                continue
            a = lat.apply_sum(minor_words(rows, cols, z, params), vec, dyn.shift)
            b = lat.apply_sum(minor_words(rows, cols, z, params, "alternative"),
                              vec, dyn.shift)
            worst = max(worst, float(np.linalg.norm(a.coeffs - b.coeffs)
                                     / max(a.norm(), 1e-30)))
        return worst

    checks.append(_run("expansion_two_cross_check", tol, expansion_cross_check))

    def commutation_suite():
        z, wz = 0.77, 1.31
        ops = {("A", m): a_operator(m, z, N, params) for m in range(1, N + 1)}
        ops.update({("Aw", m): a_operator(m, wz, N, params)
                    for m in range(1, N + 1)})
        ops.update({("Bw", m): b_operator(m, wz, N, params)
                    for m in range(2, N + 1)})
        ops.update({("Cw", m): c_operator(m, wz, N, params)
                    for m in range(2, N + 1)})

        def comm(X, Y):
            a = lat.apply_sum(compose_sums(X, Y), vec, dyn.shift)
            b = lat.apply_sum(compose_sums(Y, X), vec, dyn.shift)
            return float(np.linalg.norm(a.coeffs - b.coeffs)
                         / max(a.norm(), b.norm(), 1e-30))

        worst = 0.0
        for m in range(1, N + 1):
            for m2 in range(1, N + 1):
                worst = max(worst, comm(ops[("A", m)], ops[("Aw", m2)]))
            for m2 in range(2, N + 1):
                if m2 != m:
                    worst = max(worst, comm(ops[("A", m)], ops[("Bw", m2)]))
                    worst = max(worst, comm(ops[("A", m)], ops[("Cw", m2)]))
        for m in range(2, N + 1):
            for m2 in range(2, N + 1):
                if m2 != m:
                    worst = max(worst, comm(
                        b_operator(m, z, N, params), ops[("Cw", m2)]))
                if abs(m2 - m) > 1:
                    worst = max(worst, comm(
                        b_operator(m, z, N, params), ops[("Bw", m2)]))
                    worst = max(worst, comm(
                        c_operator(m, z, N, params), ops[("Cw", m2)]))
        return worst

    checks.append(_run("commutation_suite", tol, commutation_suite))

    def exchange_relations_rank2():
        # level-0 exchange relations between A_2 and B_2 / C_2 at N = 2,
        # with the non-starred parameter read off the final weight
        lam2 = default_lambda(2)
        dyn2 = DynExponents(lam2)
        w2 = sample_w(rng, 3, abs(q), abs(params.p))
        lat2 = get_lattice(dyn2, w2, params)
        th, thd = params.theta, params.theta_denom
        z1, z2 = 0.77, 1.31
        u = z1 / z2
        A = lambda x: a_operator(2, x, 2, params)
        B = lambda x: b_operator(2, x, 2, params)
        C = lambda x: c_operator(2, x, 2, params)
        worst = 0.0
        for mu in all_words(2, 3):
            v = TensorVector.basis(mu, 2)
            cv = [mu.count(1), mu.count(2)]
            # A2(z1) B2(z2): the scalar carries Pi at the final content
            cfin = (cv[0] - 1, cv[1] + 1)
            if cfin[0] >= 0:
                ab = lat2.apply_sum(compose_sums(A(z1), B(z2)), v, dyn2.shift)
                ba1 = lat2.apply_sum(compose_sums(B(z2), A(z1)), v, dyn2.shift)
                ba2 = lat2.apply_sum(compose_sums(B(z1), A(z2)), v, dyn2.shift)
                pi12 = pi_exponent_value(dyn2.effective(), cfin, 1, 2, q)
                bbar = th(u) / thd(q ** 2 * u)
                cbar = th(q ** 2) * th(u / pi12) / (thd(1 / pi12) * thd(q ** 2 * u))
                worst = max(worst, float(np.linalg.norm(
                    bbar * ab.coeffs + cbar * ba2.coeffs - ba1.coeffs)
                    / max(ba1.norm(), 1e-30)))
            # A2(z1) C2(z2): the scalar carries the ambient starred parameter
            ac = lat2.apply_sum(compose_sums(A(z1), C(z2)), v, dyn2.shift)
            ca1 = lat2.apply_sum(compose_sums(C(z2), A(z1)), v, dyn2.shift)
            ac2 = lat2.apply_sum(compose_sums(A(z2), C(z1)), v, dyn2.shift)
            pist = dyn2.pistar(1, 2, q)
            bbar = th(u) / thd(q ** 2 * u)
            cval = th(q ** 2) * th(u * pist) / (thd(pist) * thd(q ** 2 * u))
            worst = max(worst, float(np.linalg.norm(
                ac.coeffs - bbar * ca1.coeffs - cval * ac2.coeffs)
                / max(ac.norm(), 1e-30)))
        return worst

    checks.append(_run("exchange_relations_rank2", tol, exchange_relations_rank2))
    return checks


# -- Gelfand-Tsetlin ----------------------------------------------------------


def suite_gtbasis(params: EllipticParams, rng, N: int = 3, n: int = 4,
                  z_count: int = 3, tol: float = 1e-9):
    checks = []
    q = params.q
    lam = default_lambda(N)
    dyn = DynExponents(lam)
    # sample spectral test points jointly with w so that no ratio z/w_m
    # sits near a theta zero (which would deflate the reference norms)
    joint = sample_w(rng, n + z_count, abs(q), abs(params.p))
    w, zs = joint[:n], joint[n:]
    lat = get_lattice(dyn, w, params)
    partitions = [PartitionI.from_word(mu, N) for mu in all_words(N, n)]

    def eigenvectors():
        worst = 0.0
        for I in partitions:
            xt = build_xi_tilde(I, dyn, w, params)
            builder = (lambda d, I=I: build_xi_tilde(I, d, w, params))
            for l in range(1, N + 1):
                for z in zs:
                    got = apply_operator(a_operator(l, z, N, params), builder,
                                         dyn, w, params)
                    ev = eigenvalue_a(l, z, I, w, params)
                    worst = max(worst, float(
                        np.linalg.norm(got.coeffs - ev * xt.coeffs)
                        / max(np.linalg.norm(got.coeffs), 1e-30)))
        return worst

    checks.append(_run(f"gt_eigenvectors_N{N}_n{n}", tol, eigenvectors))

    def distinct_spectra():
        sigs = []
        for I in partitions:
            sigs.append(tuple(eigenvalue_a(l, z, I, w, params)
                              for l in range(1, N + 1) for z in zs))
        min_gap = np.inf
        for i in range(len(sigs)):
            for j in range(i + 1, len(sigs)):
                gap = max(abs(a - b) for a, b in zip(sigs[i], sigs[j]))
                min_gap = min(min_gap, gap)
        # pass when every pair of partitions is separated by > 1e3 tol
        return 0.0 if min_gap > 1e3 * tol else 1.0

    checks.append(_run("gt_distinct_spectra", 0.5, distinct_spectra))

    def basis_independence():
        mat = np.zeros((len(partitions), N ** n), dtype=np.complex128)
        for r, I in enumerate(partitions):
            row = build_xi_tilde(I, dyn, w, params).coeffs
            mat[r] = row / np.linalg.norm(row)
        s = np.linalg.svd(mat, compute_uv=False)
        return 0.0 if s[-1] / s[0] > 1e-6 else 1.0

    checks.append(_run("gt_basis_linear_independence", 0.5, basis_independence))

    def path_independence():
        worst = 0.0
        for I in partitions[:: max(1, len(partitions) // 12)]:
            a = build_xi_prime(I, dyn, w, params, ascent="first")
            b = build_xi_prime(I, dyn, w, params, ascent="last")
            worst = max(worst, float(np.linalg.norm(a.coeffs - b.coeffs)
                                     / max(a.norm(), 1e-30)))
        return worst

    checks.append(_run("xi_prime_path_independence", tol, path_independence))

    def three_way_consistency():
        worst = 0.0
        for I in partitions:
            xt = build_xi_tilde(I, dyn, w, params)
            xm = build_xi_minor(I, dyn, w, params)
            xp = build_xi_prime(I, dyn, w, params)
            fac = relation_factor(I, w, params)
            nw = normalization_n(I, w, params)
            worst = max(worst, float(np.linalg.norm(xm.coeffs - fac * xt.coeffs)
                                     / max(xm.norm(), 1e-30)))
            worst = max(worst, float(np.linalg.norm(xt.coeffs - nw * xp.coeffs)
                                     / max(xt.norm(), 1e-30)))
        return worst

    checks.append(_run(f"gt_three_way_consistency_N{N}_n{n}", tol,
                       three_way_consistency))

    def k_plus_diagonal():
        worst = 0.0
        z = zs[0]
        for I in partitions[:: max(1, len(partitions) // 9)]:
            xp = build_xi_prime(I, dyn, w, params)
            builder = (lambda d, I=I: build_xi_prime(I, d, w, params))
            for l in range(1, N + 1):
                got = apply_operator(a_operator(l, z, N, params), builder,
                                     dyn, w, params)
                ev = 1.0 + 0.0j
                for j in range(l, N + 1):
                    ev *= k_plus_eigenvalue(j, q ** (-2 * (j - l)) * z, I, w,
                                            params)
                worst = max(worst, float(
                    np.linalg.norm(got.coeffs - ev * xp.coeffs)
                    / max(np.linalg.norm(got.coeffs), 1e-30)))
        return worst

    checks.append(_run("k_plus_diagonal_action", tol, k_plus_diagonal))

    def factor_theorems():
        worst = 0.0
        for I in partitions:
            closed = xtilde_diagonal(I, w, params)
            # column recursion
            prod = 1.0 + 0.0j
            for k in range(1, n + 1):
                zk = zk_partition(I, k, dyn, w, params)
                zk1 = zk_partition(I, k + 1, dyn, w, params)
                wk = column_factor(I, k, w, params)
                worst = max(worst, _rel(zk, wk * zk1))
                prod *= wk
            worst = max(worst, _rel(closed, prod))
            # direct diagonal coefficient
            xt = build_xi_tilde(I, dyn, w, params)
            got = xt.coeffs[word_to_index(I.to_word(), N)]
            worst = max(worst, _rel(got, closed))
            # diagonal weight function and the normalization corollary
            vars_ = TriangularVars.specialize(I, w)
            sym = w_tilde(I, vars_, dyn, params)
            worst = max(worst, _rel(sym, wtilde_diagonal_closed(I, w, params)))
            worst = max(worst, _rel(normalization_n(I, w, params),
                                    closed / wtilde_diagonal_closed(I, w, params)))
        return worst

    checks.append(_run(f"factor_theorems_N{N}_n{n}", tol, factor_theorems))
    return checks


def suite_worked_example(params: EllipticParams, tol: float = 1e-10):
    """The rank-2, three-site worked example with all displayed values."""
    checks = []
    q, th = params.q, params.theta
    dyn = DynExponents((0.37, 0.0))
    w = (0.83, 1.71, 0.42)
    I = PartitionI(((1, 2), (3,)))
    pi = dyn.pistar(1, 2, q)

    def xi_tilde_values():
        xt = build_xi_tilde(I, dyn, w, params)
        exp = {
            (2, 1, 1): th(pi * w[2] / w[0]) * th(q ** 2) ** 2
            * th(q ** 2 * w[2] / w[1]) / th(pi),
            (1, 2, 1): th(w[2] / w[0]) * th(q ** 2 * pi * w[2] / w[1])
            * th(q ** 2) ** 2 / th(q ** 2 * pi),
            (1, 1, 2): th(w[2] / w[0]) * th(w[2] / w[1]) * th(q ** 2),
        }
        worst = 0.0
        for mu, val in exp.items():
            worst = max(worst, _rel(xt.coeffs[word_to_index(mu, 2)], val))
        return worst

    checks.append(_run("worked_example_xi_tilde", tol, xi_tilde_values))

    def xi_prime_values():
        xp = build_xi_prime(I, dyn, w, params)
        exp = {
            (2, 1, 1): th(pi * w[2] / w[0]) * th(q ** 2)
            / (th(q ** 2 * w[2] / w[0]) * th(pi)),
            (1, 2, 1): th(w[2] / w[0]) * th(q ** 2 * pi * w[2] / w[1])
            * th(q ** 2) / (th(q ** 2 * w[2] / w[0])
                            * th(q ** 2 * w[2] / w[1]) * th(q ** 2 * pi)),
            (1, 1, 2): th(w[2] / w[0]) * th(w[2] / w[1])
            / (th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1])),
        }
        worst = 0.0
        for mu, val in exp.items():
            worst = max(worst, _rel(xp.coeffs[word_to_index(mu, 2)], val))
        return worst

    checks.append(_run("worked_example_xi_prime", tol, xi_prime_values))

    def wtilde_values():
        vars_ = TriangularVars.specialize(I, w)
        vals = {
            (2, 1, 1): th(pi * w[2] / (q ** 2 * w[0])) * th(q ** 2)
            / (th(q ** 2 * w[2] / w[0]) * th(pi / q ** 2)),
            (1, 2, 1): th(w[2] / w[0]) * th(pi * w[2] / w[1]) * th(q ** 2)
            / (th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1]) * th(pi)),
            (1, 1, 2): th(w[2] / w[0]) * th(w[2] / w[1])
            / (th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1])),
        }
        worst = 0.0
        for mu, val in vals.items():
            got = w_tilde(PartitionI.from_word(mu, 2), vars_, dyn, params)
            worst = max(worst, _rel(got, val))
        return worst

    checks.append(_run("worked_example_wtilde", tol, wtilde_values))

    def normalization_value():
        got = normalization_n(I, w, params)
        exp = th(q ** 2) * th(q ** 2 * w[2] / w[0]) * th(q ** 2 * w[2] / w[1])
        xt = build_xi_tilde(I, dyn, w, params)
        xp = build_xi_prime(I, dyn, w, params)
        resid = float(np.linalg.norm(xt.coeffs - exp * xp.coeffs)
                      / max(xt.norm(), 1e-30))
        return max(_rel(got, exp), resid)

    checks.append(_run("worked_example_normalization", tol, normalization_value))
    return checks


# -- weight functions ---------------------------------------------------------


def suite_weightfn(params: EllipticParams, rng, tol: float = 1e-9):
    checks = []
    q, p = params.q, params.p

    def partition_identity_rank2():
        dyn = DynExponents(default_lambda(2))
        w = sample_w(rng, 3, abs(q), abs(p))
        worst = 0.0
        for mu in all_words(2, 3):
            I = PartitionI.from_word(mu, 2)
            for nu in all_words(2, 3):
                if PartitionI.from_word(nu, 2).content() != I.content():
                    continue
                worst = max(worst, verify_partition_identity(I, nu, dyn, w,
                                                             params))
        return worst

    checks.append(_run("partition_identity_all_pairs_N2_n3", tol,
                       partition_identity_rank2))

    def partition_identity_rank3():
        dyn = DynExponents(default_lambda(3))
        w = sample_w(rng, 3, abs(q), abs(p))
        words = all_words(3, 3)
        worst = 0.0
        count = 0
        while count < 20:
            mu = words[rng.integers(len(words))]
            nu = words[rng.integers(len(words))]
            I = PartitionI.from_word(mu, 3)
            if PartitionI.from_word(nu, 3).content() != I.content():
                continue
            worst = max(worst, verify_partition_identity(I, nu, dyn, w, params))
            count += 1
        return worst

    checks.append(_run("partition_identity_20_random_N3_n3", tol,
                       partition_identity_rank3))

    def expansion_theorem():
        worst = 0.0
        for N in (2, 3):
            dyn = DynExponents(default_lambda(N))
            w = sample_w(rng, 3, abs(q), abs(p))
            for mu in all_words(N, 3):
                I = PartitionI.from_word(mu, N)
                xp = build_xi_prime(I, dyn, w, params)
                worst = max(worst, xi_prime_expansion_residual(I, xp, dyn, w,
                                                               params))
        return worst

    checks.append(_run("xi_prime_expansion_N2_N3_n3", tol, expansion_theorem))

    def triangularity():
        dyn = DynExponents(default_lambda(3))
        w = sample_w(rng, 4, abs(q), abs(p))
        worst = 0.0
        for content in ((2, 1, 1), (2, 2, 0)):
            mat, parts = change_of_basis(content, dyn, w, params)
            scale = float(np.max(np.abs(mat)))
            for r, I in enumerate(parts):
                if abs(mat[r, r]) < 1e-12 * scale:
                    worst = max(worst, 1.0)
                for c, J in enumerate(parts):
                    if not partial_order_leq(I, J):
                        worst = max(worst, abs(mat[r, c]) / scale)
        return worst

    checks.append(_run("change_of_basis_triangularity", tol, triangularity))

    def shift_covariance():
        dyn = DynExponents(default_lambda(3))
        w = sample_w(rng, 3, abs(q), abs(p))
        I = PartitionI.from_word((2, 1, 3), 3)
        vars_ = TriangularVars.specialize(I, w)
        worst = 0.0
        for a in range(1, 4):
            via_shift = w_tilde(I, vars_, dyn.shifted_by_index(a), params)
            lam2 = tuple(l + (1 if i == a - 1 else 0)
                         for i, l in enumerate(dyn.lam))
            via_lambda = w_tilde(I, vars_, DynExponents(lam2), params)
            worst = max(worst, _rel(via_shift, via_lambda))
        return worst

    checks.append(_run("wtilde_shift_covariance", 1e-12, shift_covariance))
    return checks


# -- rank-2 module suite -------------------------------------------------------


def suite_gl2(params: EllipticParams, rng, l_values=(1, 2, 3),
              tol: float = 1e-9):
    checks = []
    q, p = params.q, params.p

    def basis_actions():
        worst = 0.0
        dyn = DynExponents(default_lambda(2))
        for n in (2, 3):
            w = sample_w(rng, n, abs(q), abs(p))
            for gamma in itertools.product((0, 1), repeat=n):
                rep = gl2_suite(n, GTPattern(gamma), dyn, w, params)
                worst = max(worst, max(rep["residuals"].values()))
        return worst

    checks.append(_run("gl2_basis_actions", tol, basis_actions))

    def descent_order_independence():
        # the lowering factors commute at level 0, so the full descent must
        # not depend on the order the columns are lowered in
        from .minors import c_operator

        dyn = DynExponents(default_lambda(2))
        w = sample_w(rng, 3, abs(q), abs(p))
        lat = get_lattice(dyn, w, params)
        worst = 0.0
        for gamma in ((1, 0, 1), (1, 1, 1), (1, 1, 0)):
            cols = [i for i in range(1, 4) if gamma[i - 1] == 1]

            def descent(order):
                from .gt import _gl2_xi_terms
                terms = _gl2_xi_terms(gamma, lat.w, params)
                for i in order:
                    terms = compose_sums(
                        c_operator(2, q ** (-2) * lat.w[i - 1], 2, params),
                        terms)
                return lat.apply_sum(terms, lat.zeta(), dyn.shift)

            a = descent(sorted(cols, reverse=True))
            b = descent(sorted(cols))
            worst = max(worst, float(np.linalg.norm(a.coeffs - b.coeffs)
                                     / max(a.norm(), 1e-30)))
        return worst

    checks.append(_run("gl2_descent_order_independence", tol,
                       descent_order_independence))

    def drinfeld_ratio():
        worst = 0.0
        a = 1.37
        for l in l_values:
            for _ in range(4):
                z = rng.uniform(0.3, 2.2)
                k1, k2 = gl2_evaluation_weights(l, a, 0, q ** (-1) * z, params)
                lhs = k1 / k2
                rhs = (q ** (-l) * drinfeld_theta(l, a, q ** 2 * z, params)
                       / drinfeld_theta(l, a, z, params))
                worst = max(worst, _rel(lhs, rhs))
        return worst

    checks.append(_run("drinfeld_theta_ratio", 1e-10, drinfeld_ratio))

    def weight_reductions():
        worst = 0.0
        a = 1.37
        # order-0 case: both eigenvalues coincide
        k1, k2 = gl2_evaluation_weights(0, a, 0, 0.77, params)
        worst = max(worst, _rel(k1, k2))
        # m = 0 ratio against the highest-weight theta quotient
        th = params.theta
        for l in (1, 2, 3):
            z = 0.91
            k1, k2 = gl2_evaluation_weights(l, a, 0, z, params)
            worst = max(worst, _rel(k1 / k2, th(q ** (l + 2) * z / a)
                                    / th(q ** (-l + 2) * z / a)))
        return worst

    checks.append(_run("gl2_weight_reductions", 1e-10, weight_reductions))
    return checks


SUITES = {
    "special": lambda params, rng, **kw: suite_special(params, rng),
    "rmatrix": lambda params, rng, **kw: suite_rmatrix(params, rng),
    "minors": lambda params, rng, **kw: suite_minors(params, rng, **kw),
    "gtbasis": lambda params, rng, **kw: (suite_gtbasis(params, rng, N=3, n=3, **kw)
                                          + suite_worked_example(params)),
    "weightfn": lambda params, rng, **kw: suite_weightfn(params, rng, **kw),
    "gl2": lambda params, rng, **kw: suite_gl2(params, rng, **kw),
}
