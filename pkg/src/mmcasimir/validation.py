"""Built-in validation suite: analytic limits and internal consistency checks.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in order.
Reduced units (hbar = c = 1) throughout, with atomic and material resonances
of order 1.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .atom_forces import (AtomMirrorSystem, atom_medium_force, atom_mirror_force, atom_potential,
                          casimir_polder_force, casimir_polder_potential)
from .layers import HalfSpaceMirror, PerfectMirror
from .materials import VACUUM, AtomModel, Medium, OscillatorModel
from .pairwise import (PairSystem, london_force, mirror_consistency_check, pair_force,
                       retarded_limit_force, retarded_limit_parts, vdw_limit_force,
                       vdw_limit_parts)
from .quadrature import QuadratureConfig, integrate_semi_inf
from .slab_forces import (SlabSystem, ideal_casimir_pressure, medium_slab_force,
                          minkowski_slab_force)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail} ({self.seconds:.1f} s)"


def magnetodielectric_host() -> Medium:
    """Single-resonance host with static eps = 2, mu = 1.5."""
    return Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0))


def _rel(a, b):
    return abs(a - b) / abs(b)


def ideal_casimir_limit(cfg: QuadratureConfig) -> CheckResult:
    worst = 0.0
    start = time.perf_counter()
    for d in np.geomspace(0.1, 10.0, 7):
        f = minkowski_slab_force(SlabSystem(VACUUM, PerfectMirror(), 0.0, PerfectMirror(), float(d)), cfg)
        worst = max(worst, _rel(f.value, float(ideal_casimir_pressure(d))))
    elapsed = time.perf_counter() - start
    return CheckResult("ideal Casimir limit", worst <= 1e-4 and elapsed < 10.0,
                       f"max rel. error {worst:.2e} over d in [0.1, 10] (<= 1e-4), "
                       f"runtime {elapsed:.1f} s (< 10 s)")


def casimir_polder_limit(cfg: QuadratureConfig) -> CheckResult:
    alpha, d = 1e-3, 50.0
    system = AtomMirrorSystem(VACUUM, AtomModel(alpha, 1.0), PerfectMirror(), d)
    f = atom_mirror_force(system, cfg).value
    u = atom_potential(system, cfg).value
    ef = _rel(f, float(casimir_polder_force(alpha, d)))
    eu = _rel(u, float(casimir_polder_potential(alpha, d)))
    return CheckResult("Casimir-Polder limit", ef < 0.01 and eu < 0.01,
                       f"f_A d^5/(alpha) = {f * d**5 / alpha:.5f} vs 3/(2 pi) (rel {ef:.1e}); "
                       f"U_A d^4/alpha = {u * d**4 / alpha:.5f} vs 3/(8 pi) (rel {eu:.1e})")


def feinberg_sucher_asymptote(cfg: QuadratureConfig) -> CheckResult:
    alpha, r = 1e-3, 100.0
    atom = AtomModel(alpha, 1.0)
    f = pair_force(PairSystem(VACUUM, atom, atom, r), cfg).value
    coeff = f * r**8 / alpha**2
    err = _rel(coeff, 161.0 / (4.0 * math.pi))
    return CheckResult("Feinberg-Sucher asymptote", err < 0.01,
                       f"f_AB r^8/(aA aB) = {coeff:.5f} vs 161/(4 pi) = {161 / (4 * math.pi):.5f} "
                       f"(rel {err:.1e})")


def london_limit(cfg: QuadratureConfig) -> CheckResult:
    a, b = AtomModel(1e-3, 1.0), AtomModel(2e-3, 1.5)
    r = 1e-2
    pair = PairSystem(VACUUM, a, b, r)
    exact = london_force(a.alpha_e0, a.omega_e, b.alpha_e0, b.omega_e, r)
    e_full = _rel(pair_force(pair, cfg).value, exact)
    e_limit = _rel(vdw_limit_force(pair, cfg).value, exact)
    return CheckResult("London limit", e_full < 0.01 and e_limit < 1e-6,
                       f"full force rel {e_full:.1e} (< 1e-2); short-distance formula rel "
                       f"{e_limit:.1e} (< 1e-6)")


def dilute_mirror_oracle(cfg: QuadratureConfig) -> CheckResult:
    a = AtomModel(1e-3, 1.0, 4e-4, 0.8)
    b = AtomModel(2e-3, 1.5, 1e-3, 1.2)
    gaps = {}
    for label, host in (("vacuum", VACUUM), ("eps0=2, mu0=1.5", magnetodielectric_host())):
        gaps[label] = mirror_consistency_check(host, a, b, 1e-3, 1.0, cfg).relative_gap
    ok = gaps["vacuum"] < 1e-3 and gaps["eps0=2, mu0=1.5"] < 1e-2
    return CheckResult("dilute-mirror oracle", ok,
                       f"gap {gaps['vacuum']:.1e} in vacuum (< 1e-3), "
                       f"{gaps['eps0=2, mu0=1.5']:.1e} in medium (< 1e-2)")


def medium_nulls(cfg: QuadratureConfig) -> CheckResult:
    slab = Medium(OscillatorModel.lorentz(4.0, 2.0), OscillatorModel.lorentz(1.3, 0.7))
    mirror = HalfSpaceMirror(Medium(OscillatorModel.lorentz(6.0, 3.0)))
    atom = AtomModel(1e-3, 1.0, 5e-4, 0.8)
    f_slab = medium_slab_force(SlabSystem(VACUUM, slab, 0.5, mirror, 1.0), cfg).value
    f_atom = atom_medium_force(AtomMirrorSystem(VACUUM, atom, mirror, 1.0), cfg).value
    host = magnetodielectric_host()
    no_slab = medium_slab_force(SlabSystem(host, host, 0.5, PerfectMirror(), 1.0), cfg)
    nonzero = abs(no_slab.value) > 10 * no_slab.error_estimate and no_slab.value != 0
    ok = abs(f_slab) < 1e-12 and abs(f_atom) < 1e-12 and nonzero
    return CheckResult("medium nulls and non-nulls", ok,
                       f"vacuum slab {f_slab:.1e}, vacuum atom {f_atom:.1e} (|.| < 1e-12); "
                       f"slab = host gives {no_slab.value:.3e} (+/- {no_slab.error_estimate:.1e})")


def _random_point(rng):
    def lorentz(lo, hi):
        return OscillatorModel.lorentz(rng.uniform(lo, hi), rng.uniform(0.5, 2.0))
    host = Medium(lorentz(1.2, 3.0), lorentz(1.0, 2.0))
    slab = Medium(lorentz(2.0, 6.0), lorentz(1.0, 2.5))
    mirror = HalfSpaceMirror(Medium(lorentz(2.0, 8.0), lorentz(1.0, 3.0)))
    atom = AtomModel(rng.uniform(1e-4, 1e-3), rng.uniform(0.5, 2.0),
                     rng.uniform(1e-4, 1e-3), rng.uniform(0.5, 2.0))
    return host, slab, mirror, atom, rng.uniform(0.5, 2.0), rng.uniform(0.2, 1.0)


def duality_suite(cfg: QuadratureConfig, points: int = 5, seed: int = 2024) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(points):
        host, slab, mirror, atom, d, d_s = _random_point(rng)
        s = SlabSystem(host, slab, d_s, mirror, d)
        a = AtomMirrorSystem(host, atom, mirror, d)
        for fn, system in ((minkowski_slab_force, s), (atom_mirror_force, a)):
            f, g = fn(system, cfg).value, fn(system.dual(), cfg).value
            worst = max(worst, abs(f - g) / (2 * cfg.rel_tol * abs(f)))
    host = magnetodielectric_host()
    a = AtomMirrorSystem(host, AtomModel(1e-3, 1.0, 5e-4, 0.8), HalfSpaceMirror(
        Medium(OscillatorModel.lorentz(5.0, 2.0), OscillatorModel.lorentz(1.8, 1.2))), 1.0)
    g, g_dual = atom_medium_force(a, cfg).value, atom_medium_force(a.dual(), cfg).value
    broken = abs(g - g_dual) / (cfg.rel_tol * abs(g))
    ok = worst <= 1.0 and broken > 10.0
    return CheckResult("duality suite", ok,
                       f"f, f_A: max |f - f_dual| = {worst:.2f} x (2 rel_tol |f|) (<= 1); "
                       f"f~_A asymmetry = {broken:.1e} x rel_tol |f~_A| (> 10)")


def medium_scaling(cfg: QuadratureConfig) -> CheckResult:
    a = AtomModel(1e-3, 1.0, 0.0, 1.0)
    b = AtomModel(0.0, 1.0, 2e-3, 1.3)
    host = magnetodielectric_host()
    eps0, mu0 = host.static
    n0 = math.sqrt(eps0 * mu0)
    r = 50.0
    cross_vac = retarded_limit_parts(PairSystem(VACUUM, a, b, r, effective=False))[1]
    cross_med = retarded_limit_parts(PairSystem(host, a, b, r, effective=False))[1]
    scale_err = _rel(cross_med / cross_vac, n0**-3)
    weak = Medium(OscillatorModel.lorentz(1.01, 1.0), OscillatorModel.lorentz(1.005, 1.0))
    vdw_vac = vdw_limit_parts(PairSystem(VACUUM, a, b, 1e-2, effective=False), cfg)[1].value
    vdw_weak = vdw_limit_parts(PairSystem(weak, a, b, 1e-2, effective=False), cfg)[1].value
    ok = scale_err < 1e-14 and vdw_vac == vdw_weak
    return CheckResult("medium-scaling claims", ok,
                       f"retarded cross term / n0^-3 - 1 = {scale_err:.1e} (< 1e-14); "
                       f"short-distance cross term identical: {vdw_vac == vdw_weak}")


def analytic_integrals():
    """``(name, f, exact)`` triples with known half-line integrals."""
    return [
        ("exp(-x)", lambda x: np.exp(-x), 1.0),
        ("x^3/(e^x - 1)", lambda x: x**3 * np.exp(-x) / -np.expm1(-x), math.pi**4 / 15),
        ("1/(1 + x^2)", lambda x: 1.0 / (1.0 + x * x), math.pi / 2),
        ("x^4 exp(-2x)", lambda x: x**4 * np.exp(-2 * x), 24.0 / 32.0),
        ("exp(-x^2)", lambda x: np.exp(-x * x), math.sqrt(math.pi) / 2),
        ("1/(1 + x)^3", lambda x: (1.0 + x) ** -3, 0.5),
    ]


def quadrature_contract(cfg: QuadratureConfig) -> CheckResult:
    planck = integrate_semi_inf(analytic_integrals()[1][1], cfg)
    planck_err = _rel(planck.value, math.pi**4 / 15)
    worst = 0.0
    for _, f, exact in analytic_integrals():
        res = integrate_semi_inf(f, cfg)
        true = abs(res.value - exact)
        if true > 0:
            worst = max(worst, true / (3 * res.error_estimate) if res.error_estimate > 0 else math.inf)
    ok = planck_err <= cfg.rel_tol and worst <= 1.0 and planck.converged
    return CheckResult("quadrature contract", ok,
                       f"pi^4/15 rel error {planck_err:.1e} (<= {cfg.rel_tol:g}); "
                       f"max |error| / (3 x estimate) = {worst:.1e} (<= 1)")


def limit_stitching(cfg: QuadratureConfig) -> CheckResult:
    a, b = AtomModel(1e-3, 1.0, 3e-4, 0.6), AtomModel(2e-3, 1.5)
    probe = PairSystem(VACUUM, a, b, 1.0)
    r_small = 1e-2 / probe.max_frequency
    r_large = 1e2 / probe.min_frequency
    small = PairSystem(VACUUM, a, b, r_small)
    large = PairSystem(VACUUM, a, b, r_large)
    e_small = _rel(pair_force(small, cfg).value, vdw_limit_force(small, cfg).value)
    e_large = _rel(pair_force(large, cfg).value, retarded_limit_force(large))
    return CheckResult("limit stitching", e_small < 0.01 and e_large < 0.01,
                       f"r = {r_small:.3g}: rel {e_small:.1e}; r = {r_large:.3g}: rel {e_large:.1e} "
                       f"(< 1e-2)")


CHECKS: list[tuple[str, Callable[[QuadratureConfig], CheckResult]]] = [
    ("ideal_casimir", ideal_casimir_limit),
    ("casimir_polder", casimir_polder_limit),
    ("feinberg_sucher", feinberg_sucher_asymptote),
    ("london", london_limit),
    ("dilute_mirror", dilute_mirror_oracle),
    ("medium_nulls", medium_nulls),
    ("duality", duality_suite),
    ("medium_scaling", medium_scaling),
    ("quadrature", quadrature_contract),
    ("limit_stitching", limit_stitching),
]


def run_check(key: str, cfg: QuadratureConfig = QuadratureConfig()) -> CheckResult:
    fn = dict(CHECKS)[key]
    start = time.perf_counter()
    result = fn(cfg)
    result.seconds = time.perf_counter() - start
    return result


def run_all(cfg: QuadratureConfig = QuadratureConfig(), echo: Callable[[str], None] | None = print):
    results = []
    for key, _ in CHECKS:
        res = run_check(key, cfg)
        if echo is not None:
            echo(res.line())
        results.append(res)
    return results
