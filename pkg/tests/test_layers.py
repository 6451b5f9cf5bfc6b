import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from mmcasimir.layers import (DiluteMirror, HalfSpaceMirror, PerfectMirror, interface_r, kappa,
                              mirror_R, slab_rt)
from mmcasimir.materials import VACUUM, AtomModel, DiluteMixture, Medium, OscillatorModel

statics = st.floats(1.0, 8.0)
xis = st.floats(0.0, 20.0)
ks = st.floats(0.0, 20.0)


def medium(e, u, w=1.0):
    return Medium(OscillatorModel.lorentz(e, w), OscillatorModel.lorentz(u, w))


def test_kappa_examples():
    assert kappa(0.0, 1.0, VACUUM) == 1.0
    assert kappa(3.0, 4.0, VACUUM) == 5.0
    n2 = Medium(OscillatorModel.lorentz(4.0, 1e9))
    assert kappa(1.0, 0.0, n2) == pytest.approx(2.0)
    assert kappa(3.0, 4.0, VACUUM, c=3.0) == pytest.approx(math.sqrt(17.0))


@given(statics, statics, xis, ks)
def test_kappa_bounds(e, u, xi, k):
    m = medium(e, u)
    kap = kappa(xi, k, m)
    assert kap >= k
    assert kap >= m.n(xi) * xi * (1 - 1e-15)


def test_interface_identical_media_is_zero():
    m = medium(3.0, 2.0)
    for q in ("p", "s"):
        assert interface_r(q, m, m, 0.5, 1.0) == 0.0


def test_interface_static_limit():
    a, b = medium(2.0, 1.5), medium(5.0, 3.0)
    assert interface_r("p", a, b, 0.0, 1.0) == pytest.approx(3.0 / 7.0)
    assert interface_r("s", a, b, 0.0, 1.0) == pytest.approx(1.5 / 4.5)


@given(statics, statics, statics, statics, xis, ks)
def test_interface_antisymmetric_and_bounded(e1, u1, e2, u2, xi, k):
    a, b = medium(e1, u1), medium(e2, u2, 2.0)
    for q in ("p", "s"):
        r = interface_r(q, a, b, xi, k + 1e-3)
        assert r == pytest.approx(-interface_r(q, b, a, xi, k + 1e-3), abs=1e-15)
        assert abs(r) <= 1.0


def test_bad_polarization():
    with pytest.raises(ValueError):
        interface_r("x", VACUUM, VACUUM, 0.0, 1.0)


def test_slab_identical_to_host():
    m = medium(2.0, 1.5)
    xi, k, d_s = 0.4, 0.9, 0.7
    for q in ("p", "s"):
        r, t = slab_rt(q, m, m, d_s, xi, k)
        assert r == 0.0
        assert t == pytest.approx(math.exp(-kappa(xi, k, m) * d_s))


def test_slab_zero_thickness():
    host, slab = medium(2.0, 1.5), medium(6.0, 1.0)
    for q in ("p", "s"):
        r, t = slab_rt(q, host, slab, 0.0, 0.3, 1.2)
        assert r == 0.0 and t == 1.0


def test_slab_thick_limit():
    host, slab = medium(2.0, 1.5), medium(6.0, 2.0)
    xi, k = 0.5, 1.0
    d_s = 50.0 / kappa(xi, k, slab)
    for q in ("p", "s"):
        r, t = slab_rt(q, host, slab, d_s, xi, k)
        assert r == pytest.approx(interface_r(q, host, slab, xi, k), rel=1e-15)
        assert t < 1e-21


def test_negative_thickness_rejected():
    with pytest.raises(ValueError):
        slab_rt("p", VACUUM, VACUUM, -1.0, 0.0, 1.0)


@given(statics, statics, statics, statics, st.floats(0.0, 5.0), xis, ks)
def test_slab_bounds(e1, u1, e2, u2, d_s, xi, k):
    r, t = slab_rt("p", medium(e1, u1), medium(e2, u2, 0.5), d_s, xi, k + 1e-3)
    assert abs(r) < 1.0
    assert 0.0 <= t <= 1.0


def test_perfect_slab():
    r, t = slab_rt("s", VACUUM, PerfectMirror(), 1.0, 0.0, np.array([1.0, 2.0]))
    np.testing.assert_array_equal(r, [-1.0, -1.0])
    np.testing.assert_array_equal(t, [0.0, 0.0])


@pytest.mark.parametrize("xi,k", [(0.0, 1.0), (3.0, 0.0), (10.0, 50.0)])
def test_perfect_mirror(xi, k):
    assert mirror_R("p", VACUUM, PerfectMirror(), xi, k) == 1.0
    assert mirror_R("s", VACUUM, PerfectMirror(), xi, k) == -1.0
    assert mirror_R("p", VACUUM, PerfectMirror(magnetic=True), xi, k) == -1.0


def test_dilute_zero_density():
    m = DiluteMirror(0.0, AtomModel(0.1, 1.0, 0.05, 1.0))
    assert mirror_R("p", VACUUM, m, 1.0, 1.0) == 0.0
    assert mirror_R("s", VACUUM, m, 1.0, 1.0) == 0.0


def test_dilute_static_limit():
    atom, n = AtomModel(0.1, 1.0), 0.01
    r = mirror_R("p", VACUUM, DiluteMirror(n, atom), 0.0, 1.0)
    assert r == pytest.approx(2 * math.pi * n * 0.1)
    exact = mirror_R("p", VACUUM, HalfSpaceMirror(Medium(OscillatorModel.lorentz(1 + 4 * math.pi * n * 0.1, 1.0))), 0.0, 1.0)
    assert r == pytest.approx(exact, rel=4 * math.pi * n * 0.1)


def test_dilute_finite_at_origin():
    r = mirror_R("p", VACUUM, DiluteMirror(0.01, AtomModel(0.1, 1.0)), 0.0, 0.0)
    assert np.isfinite(r)


def test_dilute_matches_mixed_half_space_to_second_order():
    host = medium(2.0, 1.5)
    atom = AtomModel(0.02, 1.3, 0.01, 0.6)
    xi = np.array([0.1, 0.5, 1.0, 3.0])
    grid = [(x, k) for x in xi for k in (0.05, 0.5, 2.0, 8.0)]

    def residual(n):
        out = []
        for x, k in grid:
            for q in ("p", "s"):
                exact = mirror_R(q, host, HalfSpaceMirror(DiluteMixture(host, n, atom)), x, k)
                out.append(abs(mirror_R(q, host, DiluteMirror(n, atom), x, k) - exact))
        return np.array(out)

    ratio = residual(1e-2) / residual(5e-3)
    assert np.all(np.abs(ratio - 4.0) < 0.8)


MIRRORS = [
    PerfectMirror(),
    HalfSpaceMirror(medium(5.0, 2.0)),
    DiluteMirror(0.05, AtomModel(0.02, 1.3, 0.01, 0.6)),
]


@pytest.mark.parametrize("mirror", MIRRORS, ids=["perfect", "half_space", "dilute"])
@given(xi=xis, k=ks)
def test_duality_exact(mirror, xi, k):
    host = medium(2.0, 1.5)
    a = mirror_R("p", host.dual(), mirror.dual(), xi, k)
    b = mirror_R("s", host, mirror, xi, k)
    assert a == b


@given(statics, statics, xis, ks)
def test_half_space_bounded(e, u, xi, k):
    r = mirror_R("s", medium(2.0, 1.5), HalfSpaceMirror(medium(e, u)), xi, k + 1e-3)
    assert abs(r) <= 1.0


def test_vectorized_k():
    k = np.linspace(0, 5, 7)
    r = interface_r("p", VACUUM, medium(3.0, 1.0), 0.5, k)
    assert r.shape == (7,)


def test_unknown_mirror():
    with pytest.raises(TypeError):
        mirror_R("p", VACUUM, object(), 0.0, 1.0)
