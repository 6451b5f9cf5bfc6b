"""Force on a ground-state atom embedded in the host medium near a mirror.

``f_A`` is the force on the atom itself; ``f~_A`` is the accompanying force
the atom induces on the surrounding medium.  The atom's polarizabilities are
its in-host effective values unless ``effective=False`` on the system.
Positive forces attract the atom toward the mirror; the potential is
``U_A(d) = int_d^inf f_A(l) dl`` so that ``f_A = -dU_A/dd``.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .layers import Mirror, mirror_R
from .materials import AtomModel, Medium, host_polarizabilities
from .quadrature import IntegralResult, QuadratureConfig, nested_force_integral
from .slab_forces import ConvergenceWarning
from .units import REDUCED, Units


@dataclass(frozen=True)
class AtomMirrorSystem:
    host: Medium
    atom: AtomModel
    mirror: Mirror
    d: float
    effective: bool = True

    def __post_init__(self):
        if not self.d > 0:
            raise ValueError("atom-mirror distance d must be > 0")

    def dual(self) -> AtomMirrorSystem:
        return AtomMirrorSystem(self.host.dual(), self.atom.dual(), self.mirror.dual(), self.d,
                                self.effective)

    @property
    def max_frequency(self) -> float:
        return max([self.host.max_frequency, self.mirror.max_frequency, *self.atom.frequencies])


@dataclass
class AtomForceBreakdown:
    minkowski: float
    medium: float
    total: float
    error_estimate: dict[str, float]
    evaluations: int
    converged: bool


def _brackets(system, xi, kap, c):
    """Polarization brackets ``(b_p, b_s)`` already multiplied by ``xi**2``,
    plus ``(eps, mu, alpha_e, alpha_m, R_p, R_s)``."""
    eps, mu = system.host.epsilon(xi), system.host.mu(xi)
    ae, am = host_polarizabilities(system.atom, system.host, xi, effective=system.effective)
    n = math.sqrt(eps * mu)
    k = np.sqrt(np.maximum(kap**2 - (n * xi / c) ** 2, 0.0))
    rp = mirror_R("p", system.host, system.mirror, xi, k, c)
    rs = mirror_R("s", system.host, system.mirror, xi, k, c)
    kc2 = 2.0 * (kap * c) ** 2
    xi2 = xi * xi
    bp = ae * (kc2 / eps - mu * xi2) - am * eps * xi2
    bs = am * (kc2 / mu - eps * xi2) - ae * mu * xi2
    return bp, bs, (eps, mu, ae, am, rp, rs)


def minkowski_kernel(system: AtomMirrorSystem, units: Units = REDUCED, *, potential=False):
    """Integrand of ``f_A`` in the ``(xi, kappa)`` measure.

    With ``potential=True`` the distance dependence ``exp(-2 kappa d)`` is
    replaced by its integral from ``d`` to infinity, giving ``U_A``.
    """
    pref = units.hbar / (math.pi * units.c**2)

    def kernel(xi, kap):
        bp, bs, (*_, rp, rs) = _brackets(system, xi, kap, units.c)
        decay = np.exp(-2.0 * kap * system.d)
        if potential:
            decay = decay / (2.0 * kap)
        return pref * kap * decay * (bp * rp + bs * rs)
    return kernel


def medium_kernel(system: AtomMirrorSystem, units: Units = REDUCED, *, footnote_corrected=True):
    """Integrand of ``f~_A``.

    ``footnote_corrected=False`` evaluates the earlier published variant whose
    cross term carries ``alpha_e eps`` and ``alpha_m mu`` in place of
    ``alpha_e`` and ``alpha_m``; it is kept only for comparison.
    """
    pref = units.hbar / (math.pi * units.c**2)

    def kernel(xi, kap):
        bp, bs, (eps, mu, ae, am, rp, rs) = _brackets(system, xi, kap, units.c)
        if not footnote_corrected:
            ae, am = ae * eps, am * mu
        cross = (mu - 1.0 / eps) * xi * xi * (ae * mu * rp - am * eps * rs)
        body = (1.0 / eps - 1.0) * bp * rp + (mu - 1.0) * bs * rs + cross
        return pref * kap * np.exp(-2.0 * kap * system.d) * body
    return kernel


def _integrate(kernel, system, cfg, units, name):
    result = nested_force_integral(kernel, system.host, cfg, length=system.d, c=units.c,
                                   cutoff=cfg.cutoff(system.max_frequency))
    if not result.converged:
        warnings.warn(f"{name} at d={system.d:g} did not converge "
                      f"(error {result.error_estimate:.3g})", ConvergenceWarning, stacklevel=3)
    return result


def atom_mirror_force(system: AtomMirrorSystem, cfg: QuadratureConfig = QuadratureConfig(),
                      units: Units = REDUCED) -> IntegralResult:
    """Force ``f_A`` on the embedded atom."""
    return _integrate(minkowski_kernel(system, units), system, cfg, units, "atom force")


def atom_medium_force(system: AtomMirrorSystem, cfg: QuadratureConfig = QuadratureConfig(),
                      units: Units = REDUCED, *, footnote_corrected=True) -> IntegralResult:
    """Atom-induced force ``f~_A`` on the host medium, per atom."""
    kernel = medium_kernel(system, units, footnote_corrected=footnote_corrected)
    return _integrate(kernel, system, cfg, units, "atom medium force")


def lorentz_atom_force(system: AtomMirrorSystem, cfg: QuadratureConfig = QuadratureConfig(),
                       units: Units = REDUCED, *, footnote_corrected=True) -> AtomForceBreakdown:
    f = atom_mirror_force(system, cfg, units)
    g = atom_medium_force(system, cfg, units, footnote_corrected=footnote_corrected)
    return AtomForceBreakdown(
        minkowski=f.value,
        medium=g.value,
        total=f.value + g.value,
        error_estimate={"minkowski": f.error_estimate, "medium": g.error_estimate,
                        "total": f.error_estimate + g.error_estimate},
        evaluations=f.evaluations + g.evaluations,
        converged=f.converged and g.converged,
    )


def atom_potential(system: AtomMirrorSystem, cfg: QuadratureConfig = QuadratureConfig(),
                   units: Units = REDUCED) -> IntegralResult:
    """Potential ``U_A(d)``, with the distance integral done under the integral sign."""
    return _integrate(minkowski_kernel(system, units, potential=True), system, cfg, units,
                      "atom potential")


def casimir_polder_force(alpha_e0, d, units: Units = REDUCED):
    """Retarded perfect-mirror limit ``3 hbar c alpha / (2 pi d^5)``."""
    return 3.0 * units.hbar * units.c * alpha_e0 / (2.0 * math.pi * np.asarray(d, dtype=float) ** 5)


def casimir_polder_potential(alpha_e0, d, units: Units = REDUCED):
    """Retarded perfect-mirror limit ``3 hbar c alpha / (8 pi d^4)``."""
    return 3.0 * units.hbar * units.c * alpha_e0 / (8.0 * math.pi * np.asarray(d, dtype=float) ** 4)


def with_distance(system, d):
    return replace(system, d=d)
