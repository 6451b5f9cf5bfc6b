"""Dispersion interaction of two ground-state atoms in a magnetodielectric host.

The energy generalizes the Feinberg-Sucher formula to a host with
``eps(i xi)``, ``mu(i xi)``:

    U_AB(r) = hbar/(16 pi r^6) int dxi e^{-x} F(x) (ae ae'/eps^2 + am am'/mu^2)
            - hbar/(4 pi c^2 r^4) int dxi xi^2 e^{-x} G(x) (ae am' + am ae')

with ``x = 2 n xi r / c``, ``F(x) = x^4 + 4x^3 + 20x^2 + 48x + 48`` and
``G(x) = (x + 2)^2``.  Same-type (electric-electric, magnetic-magnetic)
contributions attract, mixed ones repel.  The force ``f_AB = -dU_AB/dr`` is
positive for attraction.

Polarizabilities are the in-host effective values by default, matching the
atom-mirror module; ``effective=False`` uses the vacuum values unchanged,
which is what the medium-scaling statements about the limit formulas refer to.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .atom_forces import AtomMirrorSystem, atom_mirror_force
from .layers import DiluteMirror
from .materials import AtomModel, Medium, host_polarizabilities
from .quadrature import IntegralResult, QuadratureConfig, integrate_semi_inf
from .units import REDUCED, Units

F_COEFFS = (1.0, 4.0, 20.0, 48.0, 48.0)
G_COEFFS = (1.0, 4.0, 4.0)


def F(x):
    return np.polyval(F_COEFFS, x)


def G(x):
    return np.polyval(G_COEFFS, x)


@dataclass(frozen=True)
class PairSystem:
    host: Medium
    atom_a: AtomModel
    atom_b: AtomModel
    r: float
    effective: bool = True

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("atom-atom separation r must be > 0")

    def dual(self) -> PairSystem:
        return PairSystem(self.host.dual(), self.atom_a.dual(), self.atom_b.dual(), self.r,
                          self.effective)

    def swapped(self) -> PairSystem:
        return replace(self, atom_a=self.atom_b, atom_b=self.atom_a)

    @property
    def max_frequency(self) -> float:
        return max([self.host.max_frequency, *self.atom_a.frequencies, *self.atom_b.frequencies])

    @property
    def min_frequency(self) -> float:
        return min([*self.atom_a.frequencies, *self.atom_b.frequencies], default=math.inf)


def polarizability_products(pair: PairSystem, xi):
    """``(same, cross)``: ``ae ae'/eps^2 + am am'/mu^2`` and ``ae am' + am ae'``."""
    eps, mu = pair.host.epsilon(xi), pair.host.mu(xi)
    ae_a, am_a = host_polarizabilities(pair.atom_a, pair.host, xi, effective=pair.effective)
    ae_b, am_b = host_polarizabilities(pair.atom_b, pair.host, xi, effective=pair.effective)
    same = ae_a * ae_b / eps**2 + am_a * am_b / mu**2
    cross = ae_a * am_b + am_a * ae_b
    return same, cross


def energy_integrand(pair: PairSystem, units: Units = REDUCED):
    r, c, hbar = pair.r, units.c, units.hbar

    def f(xi):
        same, cross = polarizability_products(pair, xi)
        x = 2.0 * pair.host.n(xi) * xi * r / c
        ex = np.exp(-x)
        return (hbar / (16 * math.pi * r**6) * ex * F(x) * same
                - hbar / (4 * math.pi * c**2 * r**4) * xi**2 * ex * G(x) * cross)
    return f


def force_integrand(pair: PairSystem, units: Units = REDUCED):
    """``-d/dr`` of :func:`energy_integrand`, differentiated analytically.

    ``d/dr [r^-6 e^-x F(x)] = -r^-7 e^-x [6F + x(F - F')]`` with
    ``F - F' = x^4 + 8x^2 + 8x``, and
    ``d/dr [r^-4 e^-x G(x)] = -r^-5 e^-x [4G + x^2 (x + 2)]``.
    """
    r, c, hbar = pair.r, units.c, units.hbar

    def f(xi):
        same, cross = polarizability_products(pair, xi)
        x = 2.0 * pair.host.n(xi) * xi * r / c
        ex = np.exp(-x)
        same_poly = 6.0 * F(x) + x * (x**4 + 8.0 * x**2 + 8.0 * x)
        cross_poly = 4.0 * G(x) + x**2 * (x + 2.0)
        return (hbar / (16 * math.pi * r**7) * ex * same_poly * same
                - hbar / (4 * math.pi * c**2 * r**5) * xi**2 * ex * cross_poly * cross)
    return f


def _xi_integral(f, pair, cfg, units, cutoff=True):
    scales = [units.c / (2.0 * float(pair.host.n(0.0)) * pair.r), *pair.atom_a.frequencies,
              *pair.atom_b.frequencies]
    upper = cfg.cutoff(pair.max_frequency) if cutoff else math.inf
    return integrate_semi_inf(f, cfg, scale=min(s for s in scales if s > 0), upper=upper, panels=2)


def interaction_energy(pair: PairSystem, cfg: QuadratureConfig = QuadratureConfig(),
                       units: Units = REDUCED) -> IntegralResult:
    return _xi_integral(energy_integrand(pair, units), pair, cfg, units)


def pair_force(pair: PairSystem, cfg: QuadratureConfig = QuadratureConfig(),
               units: Units = REDUCED) -> IntegralResult:
    return _xi_integral(force_integrand(pair, units), pair, cfg, units)


def _require_dispersive(pair: PairSystem):
    for atom in (pair.atom_a, pair.atom_b):
        if (atom.alpha_e0 > 0 and math.isinf(atom.omega_e)) or (
                atom.alpha_m0 > 0 and math.isinf(atom.omega_m)):
            raise ValueError("van der Waals limit diverges for a nondispersive polarizability")


def vdw_limit_parts(pair: PairSystem, cfg: QuadratureConfig = QuadratureConfig(),
                    units: Units = REDUCED) -> tuple[IntegralResult, IntegralResult]:
    """Same-type and mixed-type parts of the short-distance force.

    ``18 hbar/(pi r^7) int dxi same`` and ``-4 hbar/(pi c^2 r^5) int dxi xi^2 cross``.
    """
    _require_dispersive(pair)
    r = pair.r
    same = _xi_integral(lambda xi: polarizability_products(pair, xi)[0], pair, cfg, units,
                        cutoff=False)
    cross = _xi_integral(lambda xi: xi**2 * polarizability_products(pair, xi)[1], pair, cfg, units,
                         cutoff=False)
    a = 18.0 * units.hbar / (math.pi * r**7)
    b = -4.0 * units.hbar / (math.pi * units.c**2 * r**5)
    return (IntegralResult(a * same.value, abs(a) * same.error_estimate, same.evaluations, same.converged),
            IntegralResult(b * cross.value, abs(b) * cross.error_estimate, cross.evaluations,
                           cross.converged))


def vdw_limit_force(pair: PairSystem, cfg: QuadratureConfig = QuadratureConfig(),
                    units: Units = REDUCED) -> IntegralResult:
    """Nonretarded (van der Waals-London) force, valid for ``r << c/Omega``."""
    same, cross = vdw_limit_parts(pair, cfg, units)
    return IntegralResult(same.value + cross.value, same.error_estimate + cross.error_estimate,
                          same.evaluations + cross.evaluations, same.converged and cross.converged)


def retarded_limit_parts(pair: PairSystem, units: Units = REDUCED) -> tuple[float, float]:
    """Same-type and mixed-type parts of the large-distance force (static values)."""
    eps, mu = pair.host.static
    n = math.sqrt(eps * mu)
    ae_a, am_a = host_polarizabilities(pair.atom_a, pair.host, 0.0, effective=pair.effective)
    ae_b, am_b = host_polarizabilities(pair.atom_b, pair.host, 0.0, effective=pair.effective)
    pref = 7.0 * units.hbar * units.c / (4.0 * math.pi * n**5 * pair.r**8)
    same = pref * 23.0 * (ae_a * ae_b * mu**2 + am_a * am_b * eps**2)
    cross = -pref * 7.0 * (ae_a * am_b + am_a * ae_b) * eps * mu
    return float(same), float(cross)


def retarded_limit_force(pair: PairSystem, units: Units = REDUCED) -> float:
    """Retarded (Casimir-Polder) force, valid for ``r`` beyond all resonance wavelengths."""
    same, cross = retarded_limit_parts(pair, units)
    return same + cross


def london_force(alpha_a, omega_a, alpha_b, omega_b, r, units: Units = REDUCED):
    """Vacuum single-oscillator London force ``9 hbar aA aB wA wB / ((wA + wB) r^7)``."""
    return 9.0 * units.hbar * alpha_a * alpha_b * omega_a * omega_b / ((omega_a + omega_b) * r**7)


@dataclass
class ConsistencyResult:
    lhs: float
    rhs: float
    relative_gap: float
    lhs_result: IntegralResult
    rhs_result: IntegralResult

    @property
    def defined(self) -> bool:
        return not math.isnan(self.relative_gap)


def mirror_consistency_check(host: Medium, atom_a: AtomModel, atom_b: AtomModel, n_b: float,
                             d: float, cfg: QuadratureConfig = QuadratureConfig(),
                             units: Units = REDUCED, *, effective=True) -> ConsistencyResult:
    """Compare the atom-mirror force for a dilute mirror of B atoms with the
    pairwise sum over the mirror's half space.

    lhs is ``f_A`` with the first-order dilute-mirror reflection coefficients;
    rhs is ``2 pi N_B int_d^inf r U_AB(r) dr``.  The gap is NaN when both vanish.
    """
    lhs = atom_mirror_force(AtomMirrorSystem(host, atom_a, DiluteMirror(n_b, atom_b, effective), d,
                                             effective), cfg, units)
    inner_cfg = replace(cfg, rel_tol=0.1 * cfg.rel_tol)
    stats = {"evaluations": 0, "converged": True, "rel_err": 0.0}

    def r_u(rs):
        out = np.empty(len(rs))
        for i, r in enumerate(rs):
            u = interaction_energy(PairSystem(host, atom_a, atom_b, float(r), effective),
                                   inner_cfg, units)
            stats["evaluations"] += u.evaluations
            stats["converged"] &= u.converged
            if u.value != 0:
                stats["rel_err"] = max(stats["rel_err"], u.error_estimate / abs(u.value))
            out[i] = r * u.value
        return out

    if n_b == 0:
        rhs = IntegralResult(0.0, 0.0, 0, True)
    else:
        outer = integrate_semi_inf(r_u, cfg, lower=d, scale=d)
        pref = 2.0 * math.pi * n_b
        rhs = IntegralResult(pref * outer.value,
                             pref * (outer.error_estimate + stats["rel_err"] * abs(outer.value)),
                             outer.evaluations + stats["evaluations"],
                             outer.converged and stats["converged"])
    scale = max(abs(lhs.value), abs(rhs.value))
    gap = abs(lhs.value - rhs.value) / scale if scale > 0 else math.nan
    return ConsistencyResult(lhs.value, rhs.value, gap, lhs, rhs)


def with_separation(pair: PairSystem, r: float) -> PairSystem:
    return replace(pair, r=r)

