"""Zero-temperature force per unit area on a slab in front of a mirror.

The slab (permittivity/permeability ``eps_s, mu_s``, thickness ``d_s``) sits
in a host medium at distance ``d`` from a mirror.  The force splits into

* the Minkowski part, the traditional Lifshitz-type force on the slab;
* the medium part, an extra force from the polarization and magnetization
  terms of the Lorentz-force stress tensor.  It vanishes in vacuum and is
  read as the force on the host medium, not on the slab;

and their sum, the Lorentz total.  The medium part is further split into a
screening piece (the Minkowski integrand scaled by ``1/eps - 1`` for TM and
``mu - 1`` for TE waves) and an assisted piece.  Positive values mean
attraction toward the mirror.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from .layers import POLARIZATIONS, Mirror, PerfectMirror, mirror_R, slab_rt
from .materials import Medium
from .quadrature import IntegralResult, QuadratureConfig, nested_force_integral
from .units import REDUCED, Units


class ConvergenceWarning(RuntimeWarning):
    """A force integral did not reach the requested tolerance."""


@dataclass(frozen=True)
class SlabSystem:
    host: Medium
    slab: Medium | PerfectMirror
    d_s: float
    mirror: Mirror
    d: float

    def __post_init__(self):
        if not self.d > 0:
            raise ValueError("slab-mirror distance d must be > 0")
        if self.d_s < 0:
            raise ValueError("slab thickness d_s must be >= 0")

    def dual(self) -> SlabSystem:
        return SlabSystem(self.host.dual(), self.slab.dual(), self.d_s, self.mirror.dual(), self.d)

    @property
    def max_frequency(self) -> float:
        return max(self.host.max_frequency, self.slab.max_frequency, self.mirror.max_frequency)


@dataclass
class ForceBreakdown:
    minkowski: float
    medium: float
    total: float
    screened: float
    assisted: float
    per_polarization: dict[str, dict[str, float]]
    error_estimate: dict[str, float] = field(default_factory=dict)
    evaluations: int = 0
    converged: bool = True


def _geometry(system, xi, kap, c):
    n = float(system.host.n(xi))
    k = np.sqrt(np.maximum(kap**2 - (n * xi / c) ** 2, 0.0))
    return n, k


def _round_trip(system, q, xi, kap, c):
    """``r, t, R, exp(-2 kappa d)`` for one polarization."""
    _, k = _geometry(system, xi, kap, c)
    r, t = slab_rt(q, system.host, system.slab, system.d_s, xi, k, c)
    big_r = mirror_R(q, system.host, system.mirror, xi, k, c)
    return r, t, big_r, np.exp(-2.0 * kap * system.d)


def minkowski_kernel(system: SlabSystem, q, units: Units = REDUCED):
    """Integrand of the Minkowski force in the ``(xi, kappa)`` measure."""
    pref = units.hbar / (2 * math.pi**2)

    def kernel(xi, kap):
        r, _, big_r, e2 = _round_trip(system, q, xi, kap, units.c)
        x = r * big_r * e2
        return pref * kap**2 * x / (1.0 - x)
    return kernel


def screening_weight(system: SlabSystem, q, xi):
    """``1/eps - 1`` for p, ``mu - 1`` for s."""
    if q == "p":
        return 1.0 / system.host.epsilon(xi) - 1.0
    return system.host.mu(xi) - 1.0


def screening_kernel(system: SlabSystem, q, units: Units = REDUCED):
    base = minkowski_kernel(system, q, units)

    def kernel(xi, kap):
        w = screening_weight(system, q, xi)
        if w == 0.0:
            return np.zeros_like(kap)
        return w * base(xi, kap)
    return kernel


def assisted_kernel(system: SlabSystem, q, units: Units = REDUCED):
    """Second medium term; ``dk k / kappa`` is ``dkappa``, so no Jacobian is left."""
    pref = units.hbar / (8 * math.pi**2 * units.c**2)
    sign = 1.0 if q == "p" else -1.0

    def kernel(xi, kap):
        eps, mu = system.host.epsilon(xi), system.host.mu(xi)
        weight = xi**2 * mu * (eps * mu - 1.0)
        if weight == 0.0:
            return np.zeros_like(kap)
        r, t, big_r, e2 = _round_trip(system, q, xi, kap, units.c)
        x = big_r * e2
        return pref * sign * weight * ((1.0 + r) ** 2 - t**2) * x / (1.0 - r * x)
    return kernel


def _integrate(kernel, system, cfg, units):
    return nested_force_integral(
        kernel, system.host, cfg, length=system.d, c=units.c,
        cutoff=cfg.cutoff(system.max_frequency),
    )


def _combine(results: list[IntegralResult]) -> IntegralResult:
    return IntegralResult(
        math.fsum(r.value for r in results),
        math.fsum(r.error_estimate for r in results),
        sum(r.evaluations for r in results),
        all(r.converged for r in results),
        math.fsum(r.tail_estimate for r in results),
    )


def _warn(name, result, d):
    if not result.converged:
        warnings.warn(f"{name} at d={d:g} did not converge (error {result.error_estimate:.3g})",
                      ConvergenceWarning, stacklevel=3)
    return result


def minkowski_slab_force(system: SlabSystem, cfg: QuadratureConfig = QuadratureConfig(),
                         units: Units = REDUCED) -> IntegralResult:
    """Traditional (Minkowski) force per unit area on the slab.

    ``f = hbar/(2 pi^2) int dxi int dk k kappa sum_q x_q/(1 - x_q)`` with
    ``x_q = r_q R_q exp(-2 kappa d)``.
    """
    parts = [_integrate(minkowski_kernel(system, q, units), system, cfg, units) for q in POLARIZATIONS]
    return _warn("minkowski force", _combine(parts), system.d)


def medium_slab_force(system: SlabSystem, cfg: QuadratureConfig = QuadratureConfig(),
                      units: Units = REDUCED) -> IntegralResult:
    """Medium (Lorentz minus Minkowski) force per unit area."""
    parts = []
    for q in POLARIZATIONS:
        parts.append(_integrate(screening_kernel(system, q, units), system, cfg, units))
        parts.append(_integrate(assisted_kernel(system, q, units), system, cfg, units))
    return _warn("medium force", _combine(parts), system.d)


def lorentz_slab_force(system: SlabSystem, cfg: QuadratureConfig = QuadratureConfig(),
                       units: Units = REDUCED) -> ForceBreakdown:
    """Every piece of the slab force, per polarization and in total."""
    res = {}
    for q in POLARIZATIONS:
        res["minkowski", q] = _integrate(minkowski_kernel(system, q, units), system, cfg, units)
        res["screening", q] = _integrate(screening_kernel(system, q, units), system, cfg, units)
        res["assisted", q] = _integrate(assisted_kernel(system, q, units), system, cfg, units)

    def total(*names):
        return _combine([res[n, q] for n in names for q in POLARIZATIONS])

    mink = total("minkowski")
    med = total("screening", "assisted")
    screened = total("minkowski", "screening")
    assisted = total("assisted")
    everything = total("minkowski", "screening", "assisted")
    per_q = {}
    for q in POLARIZATIONS:
        m = res["minkowski", q].value
        md = res["screening", q].value + res["assisted", q].value
        per_q[q] = {
            "minkowski": m,
            "medium": md,
            "total": m + md,
            "screening": res["screening", q].value,
            "assisted": res["assisted", q].value,
        }
    _warn("slab force", everything, system.d)
    return ForceBreakdown(
        minkowski=mink.value,
        medium=med.value,
        total=mink.value + med.value,
        screened=screened.value,
        assisted=assisted.value,
        per_polarization=per_q,
        error_estimate={
            "minkowski": mink.error_estimate,
            "medium": med.error_estimate,
            "total": everything.error_estimate,
        },
        evaluations=everything.evaluations,
        converged=everything.converged,
    )


def ideal_casimir_pressure(d, units: Units = REDUCED):
    """``pi^2 hbar c / (240 d^4)`` between perfect mirrors in vacuum."""
    return math.pi**2 * units.hbar * units.c / (240.0 * np.asarray(d, dtype=float) ** 4)


def with_distance(system, d):
    return replace(system, d=d)
