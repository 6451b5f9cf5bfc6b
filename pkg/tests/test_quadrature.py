import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import nested_test_oracle
from mmcasimir.materials import VACUUM, Medium, OscillatorModel
from mmcasimir.quadrature import (GAUSS_WEIGHTS, KRONROD_WEIGHTS, NODES, QuadratureConfig,
                                  adaptive, integrate_semi_inf, nested_force_integral)

# (integrand, scale, exact)
ANALYTIC = [
    (lambda x: np.exp(-x), 1.0, 1.0),
    (lambda x: np.where(x > 0, x**3 * np.exp(-x) / -np.expm1(-np.maximum(x, 1e-300)), 0.0), 1.0,
     math.pi**4 / 15),
    (lambda x: 1.0 / (1.0 + x**2), 1.0, math.pi / 2),
    (lambda x: x**2 * np.exp(-3 * x), 0.3, 2.0 / 27.0),
    (lambda x: np.exp(-x**2), 1.0, math.sqrt(math.pi) / 2),
    (lambda x: 1.0 / (1.0 + x) ** 3, 1.0, 0.5),
]


def test_rule_weights():
    assert KRONROD_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert GAUSS_WEIGHTS.sum() == pytest.approx(2.0, abs=1e-15)
    assert np.count_nonzero(GAUSS_WEIGHTS) == 7
    np.testing.assert_allclose(NODES, -NODES[::-1], atol=1e-16)


@pytest.mark.parametrize("degree", range(0, 23))
def test_kronrod_exact_for_polynomials(degree):
    exact = (1 - (-1) ** (degree + 1)) / (degree + 1)
    assert KRONROD_WEIGHTS @ NODES**degree == pytest.approx(exact, abs=1e-14)


def test_exponential():
    res = integrate_semi_inf(lambda x: np.exp(-x))
    assert res.value == pytest.approx(1.0, rel=1e-12)
    assert res.converged


def test_planck_kernel():
    f, scale, exact = ANALYTIC[1]
    res = integrate_semi_inf(f, QuadratureConfig(), scale=scale)
    assert abs(res.value - exact) <= 1e-8 * exact
    assert res.value == pytest.approx(6.49394, abs=1e-5)


def test_zero_integrand():
    res = integrate_semi_inf(lambda x: np.zeros_like(x))
    assert res.value == 0.0 and res.error_estimate == 0.0 and res.converged


def test_nan_is_hard_error():
    with pytest.raises(FloatingPointError):
        integrate_semi_inf(lambda x: np.full_like(x, np.nan))


def test_nonconvergence_is_flagged():
    cfg = QuadratureConfig(rel_tol=1e-14, max_subdivisions=2)
    res = integrate_semi_inf(lambda x: np.sin(20 * x) * np.exp(-x / 50), cfg)
    assert not res.converged


@pytest.mark.parametrize("case", range(len(ANALYTIC)))
@pytest.mark.parametrize("rel_tol", [1e-4, 1e-6, 1e-8, 1e-10])
def test_tolerance_contract(case, rel_tol):
    f, scale, exact = ANALYTIC[case]
    res = integrate_semi_inf(f, QuadratureConfig(rel_tol=rel_tol), scale=scale)
    assert res.converged
    assert abs(res.value - exact) <= 3 * res.error_estimate + 1e-15 * abs(exact)
    assert res.error_estimate <= max(rel_tol * abs(res.value), 50 * 2.2e-16 * abs(exact))


@pytest.mark.parametrize("case", range(len(ANALYTIC)))
def test_halving_tolerance_never_hurts(case):
    f, scale, exact = ANALYTIC[case]
    errs = [abs(integrate_semi_inf(f, QuadratureConfig(rel_tol=t), scale=scale).value - exact)
            for t in (1e-4, 5e-5, 2.5e-5, 1.25e-5, 6.25e-6)]
    # allow rounding-level jitter once an integral is resolved to machine precision
    floor = 1e-14 * abs(exact)
    assert all(b <= a + floor for a, b in zip(errs, errs[1:]))


def test_finite_upper_limit():
    res = integrate_semi_inf(lambda x: np.ones_like(x), upper=2.0, lower=0.5)
    assert res.value == pytest.approx(1.5, rel=1e-14)


@given(st.floats(0.05, 50.0), st.floats(0.01, 100.0))
def test_scale_does_not_change_value(rate, scale):
    res = integrate_semi_inf(lambda x: np.exp(-rate * x), scale=scale)
    assert res.value == pytest.approx(1.0 / rate, rel=1e-7)


def test_adaptive_polynomial_exact():
    value, err, _, n, ok = adaptive(lambda x: 3 * x**2, 0.0, 2.0, 1e-12)
    assert value == pytest.approx(8.0, rel=1e-15)
    assert n == 15 and ok


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(xi_cutoff_factor=5.0)
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=-1.0)
    assert QuadratureConfig().rel_tol == 1e-8 and QuadratureConfig().abs_tol == 0.0
    assert math.isinf(QuadratureConfig().cutoff(0.0))
    assert QuadratureConfig().cutoff(2.0) == 2000.0


def kernel(xi, kap):
    return kap**2 * np.exp(-2 * kap)


def test_nested_analytic_value():
    # int_0^inf dxi int_xi^inf dkappa kappa^2 e^{-2 kappa} = int_0^inf kappa^3 e^{-2 kappa} = 3/8
    res = nested_force_integral(kernel, VACUUM, length=1.0)
    assert abs(res.value - 0.375) <= 3 * res.error_estimate + 1e-16
    assert res.value == pytest.approx(0.375, rel=1e-8)
    assert res.converged


def test_nested_matches_simpson_oracle():
    # 1001 x 1001 fixed-grid Simpson in (xi, k), frozen: 0.37499999476825496
    frozen = 0.37499999476825496
    assert nested_test_oracle() == pytest.approx(frozen, rel=1e-14)
    res = nested_force_integral(kernel, VACUUM, length=1.0)
    assert res.value == pytest.approx(frozen, rel=1e-7)


def test_nested_zero_kernel():
    res = nested_force_integral(lambda xi, kap: np.zeros_like(kap), VACUUM, length=1.0)
    assert res.value == 0.0 and res.error_estimate == 0.0 and res.converged


@pytest.mark.parametrize("length", [0.1, 1.0, 10.0])
def test_nested_scaling_with_length(length):
    def k(xi, kap):
        return kap**2 * np.exp(-2 * kap * length)
    res = nested_force_integral(k, VACUUM, length=length)
    assert res.value == pytest.approx(0.375 / length**4, rel=1e-8)


def test_k_and_kappa_substitutions_agree():
    host = Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0))

    def k(xi, kap):
        return kap**2 * np.exp(-2 * kap) / (1 + xi**2)
    cfg = QuadratureConfig(rel_tol=1e-9)
    a = nested_force_integral(k, host, cfg, length=1.0, variable="kappa")
    b = nested_force_integral(k, host, cfg, length=1.0, variable="k")
    assert abs(a.value - b.value) <= a.error_estimate + b.error_estimate


def test_cutoff_tail_reported():
    res = nested_force_integral(kernel, VACUUM, length=1.0, cutoff=5.0)
    # inner: e^{-2 xi}(xi^2/2 + xi/2 + 1/4); outer over [5, inf)
    exact_tail = 9.125 * math.exp(-10.0)
    assert res.tail_estimate == pytest.approx(exact_tail, rel=1e-2)
    assert res.value == pytest.approx(0.375 - exact_tail, rel=1e-8)
    assert not res.converged


def test_nested_argument_checks():
    with pytest.raises(ValueError):
        nested_force_integral(kernel, VACUUM, length=0.0)
    with pytest.raises(ValueError):
        nested_force_integral(kernel, VACUUM, length=1.0, variable="q")
