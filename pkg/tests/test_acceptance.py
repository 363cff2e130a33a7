"""Acceptance suite: one test per shipping criterion.

Each test emits a single pass/fail line under pytest -v.  Statistical
criteria run the corresponding experiment at its default configuration;
deterministic criteria check exact values or certified brackets directly.
"""

import math
import time

import numpy as np
import pytest

from thinset_lab import (
    OrliczFunction,
    TrigPolynomial,
    derive_exponents,
    emit_report,
    invert_for_p,
    invert_for_q,
    is_quasi_independent,
    luxemburg_norm,
    max_quasi_independent,
    psi_norm_of_constant,
    run_experiment,
)
from util_oracles import brute_q_value

REDUCED_CONFIGS = {
    "E1": {"n": 20_000},
    "E2": {"suite_size": 4, "trials": 120},
    "E3": {"instances": 4, "trials": 200},
    "E4": {"suite_size": 2, "trials": 200},
    "E5": {"n_max": 6, "trials": 200},
    "E6": {"instances": 4, "trials": 150},
    "E7": {"checkpoints": [100, 1000, 10_000, 100_000]},
    "E8": {},
    "E9": {"size_max": 8, "trials": 100},
    "E10": {"size_max": 8},
    "E11": {"k_max": 7},
}


def _assert_passed(exp_id, config=None):
    report = run_experiment(exp_id, config)
    failed = [(c.name, c.statistic) for c in report.checks if not c.passed]
    assert report.passed, f"{exp_id} failing checks: {failed}"
    return report


def test_criterion_01_stable_sampler_fidelity():
    start = time.perf_counter()
    _assert_passed("E1")
    assert time.perf_counter() - start < 30.0


def test_criterion_02_search_matches_exhaustive_enumeration():
    rng = np.random.default_rng(20260816)
    start = time.perf_counter()
    for _ in range(200):
        size = int(rng.integers(1, 9))
        A = sorted(int(x) for x in rng.choice(np.arange(1, 13), size=size, replace=False))
        res = max_quasi_independent(A)
        assert res.exact
        assert res.q_value == brute_q_value(A), f"disagreement on {A}"
    assert time.perf_counter() - start < 60.0


def test_criterion_03_known_independence_numbers():
    assert max_quasi_independent([1, 2, 3]).q_value == 2
    for k in range(16):
        A = [2**j for j in range(k + 1)]
        res = max_quasi_independent(A)
        assert res.exact
        assert res.q_value == k + 1, f"powers of two up to 2^{k}"
    ok, witness = is_quasi_independent([0])
    assert not ok and witness == [1]


def test_criterion_04_partition_postconditions_hold_mechanically():
    report = _assert_passed("E8")
    assert len(report.checks) == 20


def test_criterion_05_lower_moment_estimate_band():
    _assert_passed("E3")


def test_criterion_06_contraction_never_inflates_estimates():
    _assert_passed("E4")


def test_criterion_07_indicator_polynomial_two_sided_band():
    _assert_passed("E5")


def test_criterion_08_independence_number_sandwich_probe():
    _assert_passed("E6")


def test_criterion_09_counting_tables_and_growth_fits():
    _assert_passed("E7")


def test_criterion_10_exponent_algebra_invariants():
    rng = np.random.default_rng(104)
    for _ in range(10_000):
        p = float(rng.uniform(1.05, 2.0))
        q = 1.0 + float(rng.uniform(0.01, 0.99)) * (p - 1.0)
        t = derive_exponents(p, q)
        ratio = t.p_conj / t.q_conj
        assert abs(t.epsilon - (1.0 - ratio)) <= 1e-12 * max(1.0, ratio)
        inv_alpha = 1.0 / p + 1.0 / t.q_conj
        assert abs(1.0 / t.alpha - inv_alpha) <= 1e-12 * max(1.0, inv_alpha)
        beta = t.epsilon / t.p_conj + 1.0 / p - 0.5
        assert abs(t.beta - beta) <= 1e-12 * max(1.0, abs(beta))
        s_conj = t.s / (t.s - 1.0)
        assert abs(2.0 * t.q_conj - s_conj * t.p_conj) <= 1e-12 * 2.0 * t.q_conj
        assert abs(t.mesh_exp - 1.0 / t.epsilon) <= 1e-12 * t.mesh_exp
        assert abs(t.mesh_exp - t.s / (2.0 - t.s)) <= 1e-12 * t.mesh_exp
        assert abs(invert_for_q(p, t.s) - q) <= 1e-12 * q
        assert abs(invert_for_p(q, t.s) - p) <= 1e-12 * p


def test_criterion_11_orlicz_norm_calibration():
    one = TrigPolynomial({0: 1.0})
    for r in (1, 2, 4):
        target = math.log(2.0) ** (-1.0 / r)
        assert abs(psi_norm_of_constant(1.0, r) - target) <= 1e-8
        assert abs(luxemburg_norm(one, OrliczFunction("exp_type", r)) - target) <= 1e-8
    f = TrigPolynomial.indicator([1, 3, 9])
    for family in ("exp_type", "log_type"):
        phi = OrliczFunction(family, 2.0)
        base = luxemburg_norm(f, phi)
        scaled = luxemburg_norm(TrigPolynomial({g: 7.3 * c for g, c in f.terms().items()}), phi)
        assert abs(scaled - 7.3 * base) <= 1e-8 * 7.3 * base
        coarse = luxemburg_norm(f, phi, M=2**14)
        fine = luxemburg_norm(f, phi, M=2**15)
        assert abs(fine - coarse) <= 1e-6 * fine


def test_criterion_12_rearrangement_norm_band_at_derived_exponent():
    assert abs(invert_for_q(1.5, 4.0 / 3.0) - 1.2) <= 1e-12
    report = _assert_passed("E9")
    assert report.config["s"] == pytest.approx(4.0 / 3.0, rel=1e-12)


def test_criterion_13_reports_are_deterministic():
    for exp_id, cfg in REDUCED_CONFIGS.items():
        first = emit_report(run_experiment(exp_id, cfg))
        second = emit_report(run_experiment(exp_id, cfg))
        assert first == second, f"{exp_id} report differs between reruns"
