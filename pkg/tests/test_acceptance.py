"""Acceptance gate: one check per criterion, at the stated scale,
tolerance and wall-clock budget.  Each test prints a pass/fail line.

Default regime: q = 0.3, p = 0.1, generic real exponents, evaluation
points in [0.2, 3] pairwise generic.
"""
import time

import numpy as np

from ellgt.special import EllipticParams
from ellgt.suites import (suite_gl2, suite_gtbasis, suite_minors,
                          suite_rmatrix, suite_special, suite_weightfn,
                          suite_worked_example)

PARAMS = EllipticParams(q=0.3, p=0.1)


def _report(criterion, checks, budget, elapsed):
    ok = all(c.passed for c in checks)
    worst = max((c.residual for c in checks), default=0.0)
    status = "PASS" if ok and elapsed < budget else "FAIL"
    print(f"[criterion {criterion:>2}] {status}  worst residual {worst:.2e}  "
          f"{elapsed:.1f}s / budget {budget:.0f}s")
    for c in checks:
        mark = "ok " if c.passed else "BAD"
        print(f"    {mark} {c.name:<45} {c.residual:.2e} < {c.threshold:.0e}")
    assert ok, f"criterion {criterion} failed"
    assert elapsed < budget, f"criterion {criterion} exceeded budget"


def test_criterion_01_special_functions():
    rng = np.random.default_rng(101)
    t0 = time.perf_counter()
    checks = [c for c in suite_special(PARAMS, rng, tol=1e-11, n_points=100)
              if c.name in ("theta_quasi_periodicity_100pts",
                            "gamma_shift_relations_100pts")]
    _report(1, checks, 1.0, time.perf_counter() - t0)


def test_criterion_02_rmatrix():
    rng = np.random.default_rng(201)
    t0 = time.perf_counter()
    checks = [c for c in suite_rmatrix(PARAMS, rng, Ns=(2, 3), draws=20)
              if c.name in ("ice_rule_structural_zeros", "rbar_at_1_equals_P",
                            "dybe_20_draws", "unitarity")]
    _report(2, checks, 5.0, time.perf_counter() - t0)


def test_criterion_03_exchange_operators():
    rng = np.random.default_rng(301)
    t0 = time.perf_counter()
    checks = [c for c in suite_rmatrix(PARAMS, rng, Ns=(2, 3), draws=4)
              if c.name in ("stilde_involution", "stilde_braid")]
    _report(3, checks, 5.0, time.perf_counter() - t0)


def test_criterion_04_quantum_minors():
    rng = np.random.default_rng(401)
    t0 = time.perf_counter()
    checks = [c for c in suite_minors(PARAMS, rng, N=3, n=2)
              if c.name in ("exchange_property", "column_expansion",
                            "qdet_centrality", "commutation_suite")]
    _report(4, checks, 30.0, time.perf_counter() - t0)


def test_criterion_05_gt_spectra():
    rng = np.random.default_rng(501)
    t0 = time.perf_counter()
    checks = [c for c in suite_gtbasis(PARAMS, rng, N=3, n=4, z_count=3)
              if c.name in ("gt_eigenvectors_N3_n4", "gt_distinct_spectra")]
    _report(5, checks, 300.0, time.perf_counter() - t0)


def test_criterion_06_worked_example():
    t0 = time.perf_counter()
    checks = suite_worked_example(PARAMS, tol=1e-10)
    _report(6, checks, 1.0, time.perf_counter() - t0)


def test_criterion_07_factor_theorems():
    rng = np.random.default_rng(701)
    t0 = time.perf_counter()
    checks = []
    for n in (3, 4):
        got = suite_gtbasis(PARAMS, rng, N=3, n=n)
        checks += [c for c in got
                   if c.name.startswith(("factor_theorems",
                                         "gt_three_way_consistency"))]
    _report(7, checks, 120.0, time.perf_counter() - t0)


def test_criterion_08_partition_identity():
    rng = np.random.default_rng(801)
    t0 = time.perf_counter()
    checks = [c for c in suite_weightfn(PARAMS, rng)
              if c.name.startswith("partition_identity")]
    _report(8, checks, 120.0, time.perf_counter() - t0)


def test_criterion_09_weight_expansion():
    rng = np.random.default_rng(901)
    t0 = time.perf_counter()
    checks = [c for c in suite_weightfn(PARAMS, rng)
              if c.name == "xi_prime_expansion_N2_N3_n3"]
    _report(9, checks, 60.0, time.perf_counter() - t0)


def test_criterion_10_rank2_suite():
    rng = np.random.default_rng(1001)
    t0 = time.perf_counter()
    checks = [c for c in suite_gl2(PARAMS, rng, l_values=(1, 2, 3))
              if c.name in ("gl2_basis_actions", "drinfeld_theta_ratio",
                            "gl2_descent_order_independence")]
    _report(10, checks, 60.0, time.perf_counter() - t0)
