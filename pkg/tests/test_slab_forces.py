import math
import warnings

import numpy as np
import pytest

import oracles
from mmcasimir.layers import DiluteMirror, HalfSpaceMirror, PerfectMirror
from mmcasimir.materials import VACUUM, AtomModel, Medium, OscillatorModel
from mmcasimir.quadrature import QuadratureConfig
from mmcasimir.slab_forces import (ConvergenceWarning, SlabSystem, ideal_casimir_pressure,
                                   lorentz_slab_force, medium_slab_force, minkowski_kernel,
                                   minkowski_slab_force, screening_kernel, screening_weight,
                                   with_distance)
from mmcasimir.units import GAUSSIAN, REDUCED

# double-Simpson oracle (4001 x 4001 points, cut at 25) for the system below
ORACLE_MINKOWSKI = 0.006409911839071993
ORACLE_MEDIUM = 0.0007887628523780074


@pytest.fixture
def slab():
    return Medium(OscillatorModel.lorentz(4.0, 2.0))


@pytest.fixture
def system(md_host, slab):
    return SlabSystem(md_host, slab, 0.5, PerfectMirror(), 1.0)


def test_oracle_reproducible():
    mink, med = oracles.slab_force_oracle(oracles.lorentz(2, 1), oracles.lorentz(1.5, 1),
                                          oracles.lorentz(4, 2), oracles.one, 0.5, 1.0, n=1001)
    assert mink == pytest.approx(ORACLE_MINKOWSKI, rel=1e-7)
    assert med == pytest.approx(ORACLE_MEDIUM, rel=1e-6)


def test_medium_force_matches_oracle(system, cfg):
    assert medium_slab_force(system, cfg).value == pytest.approx(ORACLE_MEDIUM, rel=1e-4)


def test_minkowski_force_matches_oracle(system, cfg):
    assert minkowski_slab_force(system, cfg).value == pytest.approx(ORACLE_MINKOWSKI, rel=1e-4)


@pytest.mark.parametrize("d", np.geomspace(0.1, 10.0, 9))
def test_ideal_limit(d, cfg):
    s = SlabSystem(VACUUM, PerfectMirror(), 0.0, PerfectMirror(), float(d))
    f = minkowski_slab_force(s, cfg).value
    assert f * d**4 == pytest.approx(math.pi**2 / 240, rel=1e-5)
    assert f == pytest.approx(float(ideal_casimir_pressure(d)), rel=1e-4)


def test_no_reflector_gives_zero(md_host, slab, cfg):
    s = SlabSystem(md_host, slab, 0.5, DiluteMirror(0.0, AtomModel(0.1, 1.0)), 1.0)
    assert minkowski_slab_force(s, cfg).value == 0.0


def test_slab_equal_to_host(md_host, cfg):
    s = SlabSystem(md_host, md_host, 0.5, PerfectMirror(), 1.0)
    assert minkowski_slab_force(s, cfg).value == 0.0
    assert abs(medium_slab_force(s, cfg).value) > 1e-4


@pytest.mark.parametrize("mirror", [PerfectMirror(), HalfSpaceMirror(Medium(OscillatorModel.lorentz(5.0, 1.0)))])
def test_vacuum_host_medium_force_vanishes(mirror, slab, cfg):
    s = SlabSystem(VACUUM, slab, 0.5, mirror, 1.0)
    b = lorentz_slab_force(s, cfg)
    assert b.medium == 0.0
    assert b.total == b.minkowski


def test_breakdown_identities(system, cfg):
    b = lorentz_slab_force(system, cfg)
    tol = 1e-14 * abs(b.total)
    assert abs(b.total - (b.minkowski + b.medium)) <= tol
    assert abs(b.screened + b.assisted - b.total) <= tol
    for name in ("minkowski", "medium", "total"):
        parts = b.per_polarization["p"][name] + b.per_polarization["s"][name]
        assert parts == pytest.approx(getattr(b, name), rel=1e-13)
    assert b.converged
    assert b.minkowski == pytest.approx(ORACLE_MINKOWSKI, rel=1e-4)
    assert b.medium == pytest.approx(ORACLE_MEDIUM, rel=1e-4)


def test_screening_weight_identity(system):
    xi = np.linspace(0.0, 5.0, 11)
    kap_grid = np.linspace(0.0, 6.0, 13)
    for q in ("p", "s"):
        base, screened = minkowski_kernel(system, q), screening_kernel(system, q)
        for x in xi:
            kap = kap_grid + system.host.n(x) * x
            eps, mu = system.host.epsilon(x), system.host.mu(x)
            w = 1 / eps - 1 if q == "p" else mu - 1
            assert screening_weight(system, q, x) == w
            np.testing.assert_allclose(screened(x, kap), w * base(x, kap), rtol=1e-15, atol=0)


def test_monotone_decay(system, loose):
    ds = np.geomspace(0.2, 20.0, 8)
    f = [abs(minkowski_slab_force(with_distance(system, float(d)), loose).value) for d in ds]
    assert all(b < a for a, b in zip(f, f[1:]))


def test_invalid_system(md_host):
    with pytest.raises(ValueError):
        SlabSystem(md_host, md_host, 0.5, PerfectMirror(), 0.0)
    with pytest.raises(ValueError):
        SlabSystem(md_host, md_host, -0.5, PerfectMirror(), 1.0)


def test_duality_of_minkowski_force(system, cfg):
    a = minkowski_slab_force(system, cfg)
    b = minkowski_slab_force(system.dual(), cfg)
    assert abs(a.value - b.value) <= 2 * max(cfg.rel_tol * abs(a.value), 1e-300)


def test_unconverged_warns(system):
    cfg = QuadratureConfig(rel_tol=1e-14, max_subdivisions=3)
    with pytest.warns(ConvergenceWarning):
        res = minkowski_slab_force(system, cfg)
    assert not res.converged


def test_gaussian_units_scale_from_reduced(md_host, slab):
    w0 = 2.0e15  # rad/s
    scale = lambda m: OscillatorModel(m.baseline, tuple(  # noqa: E731
        type(t)(t.strength * w0**2, t.resonance * w0, t.damping * w0) for t in m.terms))
    host_g = Medium(scale(md_host.permittivity), scale(md_host.permeability))
    slab_g = Medium(scale(slab.permittivity))
    length = GAUSSIAN.c / w0
    cfg = QuadratureConfig(rel_tol=1e-9)
    red = lorentz_slab_force(SlabSystem(md_host, slab, 0.5, PerfectMirror(), 1.0), cfg, REDUCED)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        gau = lorentz_slab_force(SlabSystem(host_g, slab_g, 0.5 * length, PerfectMirror(), length),
                                 cfg, GAUSSIAN)
    unit = GAUSSIAN.hbar * w0**4 / GAUSSIAN.c**3
    assert gau.minkowski == pytest.approx(red.minkowski * unit, rel=1e-7)
    assert gau.medium == pytest.approx(red.medium * unit, rel=1e-7)


def test_ideal_pressure_gaussian():
    d = 1e-4  # 1 micron in cm
    s = SlabSystem(VACUUM, PerfectMirror(), 0.0, PerfectMirror(), d)
    f = minkowski_slab_force(s, units=GAUSSIAN).value
    # about 1.3 mPa = 0.013 dyn/cm^2 at one micron
    assert f == pytest.approx(math.pi**2 * GAUSSIAN.hbar * GAUSSIAN.c / (240 * d**4), rel=1e-6)
    assert f == pytest.approx(0.0130, rel=0.01)
