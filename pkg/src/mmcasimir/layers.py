"""Perpendicular wavevectors and reflection coefficients at imaginary frequency.

All coefficients are real for ``xi >= 0``.  Polarizations are ``"p"`` (TM)
and ``"s"`` (TE).  Functions broadcast over array-valued ``k``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .materials import AtomModel, Medium, host_polarizabilities

Polarization = Literal["p", "s"]
POLARIZATIONS: tuple[Polarization, ...] = ("p", "s")


def _check_q(q):
    if q not in POLARIZATIONS:
        raise ValueError(f"polarization must be 'p' or 's', got {q!r}")


def kappa(xi, k, medium, c=1.0):
    """``sqrt(n**2 xi**2 / c**2 + k**2)`` in ``medium``."""
    n = medium.n(xi)
    return np.sqrt((n * xi / c) ** 2 + np.asarray(k, dtype=float) ** 2)


def interface_r(q: Polarization, from_, to, xi, k, c=1.0):
    """Fresnel reflection coefficient for a wave in ``from_`` hitting ``to``."""
    _check_q(q)
    k1 = kappa(xi, k, from_, c)
    k2 = kappa(xi, k, to, c)
    if q == "p":
        w1, w2 = from_.epsilon(xi), to.epsilon(xi)
    else:
        w1, w2 = from_.mu(xi), to.mu(xi)
    num, den = w2 * k1 - w1 * k2, w2 * k1 + w1 * k2
    # xi = k = 0: take the static (xi = 0, k -> 0) limit
    static = (w2 - w1) / (w2 + w1)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(den > 0, num / np.where(den > 0, den, 1.0), static)[()]


@dataclass(frozen=True)
class PerfectMirror:
    """Ideal reflector: ``(R_p, R_s) = (+1, -1)``, or the dual ``(-1, +1)``
    when ``magnetic`` is set."""

    magnetic: bool = False

    def coefficient(self, q: Polarization) -> float:
        sign = 1.0 if q == "p" else -1.0
        return -sign if self.magnetic else sign

    def dual(self) -> PerfectMirror:
        return PerfectMirror(not self.magnetic)

    max_frequency = 0.0


@dataclass(frozen=True)
class HalfSpaceMirror:
    medium: Medium

    def dual(self) -> HalfSpaceMirror:
        return HalfSpaceMirror(self.medium.dual())

    @property
    def max_frequency(self) -> float:
        return self.medium.max_frequency


@dataclass(frozen=True)
class DiluteMirror:
    """Half-space of the host medium doped with atoms at density ``number_density``,
    treated to first order in the density."""

    number_density: float
    atom: AtomModel
    effective: bool = True

    def dual(self) -> DiluteMirror:
        return DiluteMirror(self.number_density, self.atom.dual(), self.effective)

    @property
    def max_frequency(self) -> float:
        return max(self.atom.frequencies, default=0.0)


Mirror = Union[PerfectMirror, HalfSpaceMirror, DiluteMirror]


def slab_rt(q: Polarization, host, slab, d_s, xi, k, c=1.0):
    """Reflection and transmission of a slab of thickness ``d_s`` embedded in ``host``.

    Both are referred to the slab faces, so a slab identical to the host gives
    ``(0, exp(-kappa d_s))``.  ``slab`` may be a :class:`PerfectMirror`, in which
    case ``r`` is its coefficient and ``t = 0``.
    """
    _check_q(q)
    if d_s < 0:
        raise ValueError("slab thickness must be >= 0")
    if isinstance(slab, PerfectMirror):
        r = np.full(np.shape(k), slab.coefficient(q))
        return r, np.zeros(np.shape(k))
    rho = interface_r(q, host, slab, xi, k, c)
    ks = kappa(xi, k, slab, c)
    e1 = np.exp(-ks * d_s)
    e2 = e1 * e1
    denom = 1.0 - rho**2 * e2
    return rho * (1.0 - e2) / denom, (1.0 - rho**2) * e1 / denom


def dilute_R(q: Polarization, host, mirror: DiluteMirror, xi, k, c=1.0):
    """First-order reflection coefficient of a dilute atomic half-space.

    The p form is ``(pi N xi^2 / kappa^2 c^2)[alpha_e mu (2 kappa^2 c^2/(n^2 xi^2) - 1)
    - alpha_m eps]``, rewritten so that it stays finite at ``xi = 0``; the s form
    follows from swapping eps<->mu and alpha_e<->alpha_m.
    """
    _check_q(q)
    eps, mu = host.epsilon(xi), host.mu(xi)
    ae, am = host_polarizabilities(mirror.atom, host, xi, effective=mirror.effective)
    kap = kappa(xi, k, host, c)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.where(kap > 0, (xi / c) ** 2 / kap**2, 0.0)
    if q == "s":
        eps, mu, ae, am = mu, eps, am, ae
    return np.pi * mirror.number_density * (2.0 * ae / eps - ratio * (ae * mu + am * eps))


def mirror_R(q: Polarization, host, mirror: Mirror, xi, k, c=1.0):
    """Reflection coefficient of ``mirror`` seen from ``host``."""
    _check_q(q)
    if isinstance(mirror, PerfectMirror):
        return np.full(np.shape(k), mirror.coefficient(q))
    if isinstance(mirror, HalfSpaceMirror):
        return interface_r(q, host, mirror.medium, xi, k, c)
    if isinstance(mirror, DiluteMirror):
        return dilute_R(q, host, mirror, xi, k, c)
    raise TypeError(f"unknown mirror type {type(mirror).__name__}")
