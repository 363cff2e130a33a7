"""Orlicz gauge norms: Young functions, Luxemburg bisection, functionals."""

import math

import numpy as np
import pytest

from thinset_lab import (
    DomainError,
    OrliczFunction,
    TrigPolynomial,
    evaluate_grid,
    log_type_functional,
    luxemburg_norm,
    psi_norm_of_constant,
    psi_set_norm,
)


def test_young_function_values():
    psi = OrliczFunction("exp_type", 2.0)
    assert math.isclose(float(psi(1.0)), math.e - 1.0, rel_tol=1e-12)
    assert float(psi(0.0)) == 0.0
    phi = OrliczFunction("log_type", 3.0)
    assert math.isclose(float(phi(1.0)), (1.0 + math.log(2.0)) ** (1.0 / 3.0), rel_tol=1e-12)


def test_young_function_domain():
    with pytest.raises(DomainError):
        OrliczFunction("exp_type", 0.0)
    with pytest.raises(DomainError):
        OrliczFunction("poly", 1.0)


@pytest.mark.parametrize("family,r", [("exp_type", 1.0), ("exp_type", 3.0), ("log_type", 2.0)])
def test_inverse_round_trip(family, r):
    phi = OrliczFunction(family, r)
    ys = np.array([1e-6, 0.25, 1.0, 7.0, 1000.0])
    xs = phi.inverse(ys)
    assert np.allclose(phi(xs), ys, rtol=1e-7)
    with pytest.raises(DomainError):
        phi.inverse(-1.0)


@pytest.mark.parametrize("r", [1.0, 2.0, 4.0])
def test_constant_norm_closed_form(r):
    psi = OrliczFunction("exp_type", r)
    for c in (1.0, 2.5, -0.7):
        f = TrigPolynomial({0: c})
        want = psi_norm_of_constant(c, r)
        assert math.isclose(luxemburg_norm(f, psi), want, rel_tol=1e-8)
    assert math.isclose(psi_norm_of_constant(1.0, r), math.log(2.0) ** (-1.0 / r), rel_tol=1e-15)


def test_luxemburg_gauge_property():
    # the returned t is feasible, and barely smaller t is not
    rng = np.random.default_rng(21)
    f = TrigPolynomial({1: 1.0, 4: complex(rng.standard_normal(), 1.0), 9: 0.5})
    for phi in (OrliczFunction("exp_type", 2.0), OrliczFunction("log_type", 2.0)):
        t = luxemburg_norm(f, phi, M=4096)
        samples = np.abs(evaluate_grid(f, 4096))
        assert float(np.mean(phi(samples / t))) <= 1.0 + 1e-9
        assert float(np.mean(phi(samples / (t * (1.0 - 1e-6))))) >= 1.0 - 1e-7


def test_homogeneity():
    rng = np.random.default_rng(22)
    for family in ("exp_type", "log_type"):
        phi = OrliczFunction(family, 2.0)
        for _ in range(5):
            m = int(rng.integers(1, 8))
            freqs = rng.choice(np.arange(1, 60), size=m, replace=False)
            coeffs = rng.standard_normal(m) + 1j * rng.standard_normal(m)
            f = TrigPolynomial(zip(freqs.tolist(), coeffs.tolist()))
            base = luxemburg_norm(f, phi, M=4096)
            for lam in (0.1, 7.3):
                g = TrigPolynomial(zip(freqs.tolist(), (lam * coeffs).tolist()))
                assert math.isclose(luxemburg_norm(g, phi, M=4096), lam * base, rel_tol=1e-8)


def test_grid_doubling_stability():
    f = TrigPolynomial.indicator([2, 4, 8, 16, 32])
    for family in ("exp_type", "log_type"):
        phi = OrliczFunction(family, 2.0)
        a = luxemburg_norm(f, phi, M=1 << 14)
        b = luxemburg_norm(f, phi, M=1 << 15)
        assert abs(a - b) <= 1e-6 * max(a, b)


def test_explicit_grid_floor():
    f = TrigPolynomial({10: 1.0})
    with pytest.raises(DomainError):
        luxemburg_norm(f, OrliczFunction("exp_type", 2.0), M=128)
    with pytest.raises(DomainError):
        log_type_functional(f, 2.0, M=128)


def test_empty_inputs():
    phi = OrliczFunction("exp_type", 2.0)
    assert luxemburg_norm(TrigPolynomial(), phi) == 0.0
    assert psi_set_norm([], 2.0) == 0.0
    assert log_type_functional(TrigPolynomial(), 2.0) == 0.0


def test_psi_set_norm_matches_indicator_norm():
    A = [1, 2, 4, 8]
    direct = luxemburg_norm(TrigPolynomial.indicator(A), OrliczFunction("exp_type", 3.0))
    assert math.isclose(psi_set_norm(A, 3.0), direct, rel_tol=1e-12)


def test_psi_set_norm_monotone_in_size():
    vals = [psi_set_norm([2**j for j in range(1, n + 1)], 2.0) for n in range(1, 7)]
    for a, b in zip(vals, vals[1:]):
        assert b > a


def test_log_type_functional_constant():
    c = 3.0
    f = TrigPolynomial({0: c})
    want = c * (1.0 + math.log1p(c)) ** (1.0 / 2.0)
    assert math.isclose(log_type_functional(f, 2.0, M=1024), want, rel_tol=1e-12)
    assert math.isclose(
        log_type_functional(TrigPolynomial({5: 1.0}), 3.0),
        (1.0 + math.log(2.0)) ** (1.0 / 3.0),
        rel_tol=1e-12,
    )
    with pytest.raises(DomainError):
        log_type_functional(f, 0.0)
