"""Material response on the imaginary-frequency axis.

All response functions are evaluated at omega = i*xi with xi >= 0, where
Lorentz-oscillator sums are real, positive and non-increasing.  Drude terms
are the ``resonance = 0`` special case.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

Channel = Literal["electric", "magnetic"]


class NondispersiveModelWarning(UserWarning):
    """A response model does not relax to 1 at high frequency."""


def _check_xi(xi):
    xi = np.asarray(xi, dtype=float)
    if np.any(xi < 0) or np.any(np.isnan(xi)):
        raise ValueError("imaginary frequency xi must be >= 0")
    return xi


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


@dataclass(frozen=True)
class Oscillator:
    """One Lorentz term ``strength / (resonance**2 + damping*xi + xi**2)``.

    ``strength`` is the squared oscillator (plasma) frequency.
    """

    strength: float
    resonance: float
    damping: float = 0.0

    def __post_init__(self):
        if self.strength < 0 or self.resonance < 0 or self.damping < 0:
            raise ValueError(f"oscillator parameters must be nonnegative: {self}")


@dataclass(frozen=True)
class OscillatorModel:
    """``baseline + sum of Lorentz terms`` at imaginary frequency.

    A ``baseline`` above 1 describes a nondispersive background; it is allowed
    but warned about because such a model never becomes transparent.
    """

    baseline: float = 1.0
    terms: tuple[Oscillator, ...] = ()

    def __post_init__(self):
        terms = tuple(t if isinstance(t, Oscillator) else Oscillator(**t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        if self.baseline < 1.0:
            raise ValueError("baseline must be >= 1 for a passive response")
        if self.baseline > 1.0:
            warnings.warn(
                f"nondispersive background {self.baseline} > 1: the response never "
                "reaches 1, so xi integrals rely on the cutoff",
                NondispersiveModelWarning,
                stacklevel=3,
            )

    @classmethod
    def lorentz(cls, static: float, resonance: float, damping: float = 0.0) -> OscillatorModel:
        """Single oscillator with ``value(0) = static``."""
        return cls(1.0, (Oscillator((static - 1.0) * resonance**2, resonance, damping),))

    @classmethod
    def drude(cls, plasma: float, damping: float) -> OscillatorModel:
        return cls(1.0, (Oscillator(plasma**2, 0.0, damping),))

    def __call__(self, xi):
        return eval_response(self, xi)

    @property
    def max_frequency(self) -> float:
        """Largest frequency scale among the terms (0 when there are none)."""
        return max(
            (max(t.resonance, math.sqrt(t.strength), t.damping) for t in self.terms),
            default=0.0,
        )

    def to_dict(self) -> dict:
        return {
            "baseline": self.baseline,
            "terms": [
                {"strength": t.strength, "resonance": t.resonance, "damping": t.damping}
                for t in self.terms
            ],
        }


def eval_response(model: OscillatorModel, xi):
    """Evaluate ``model`` at imaginary frequency ``xi`` (scalar or array)."""
    xi = _check_xi(xi)
    value = np.full(xi.shape, model.baseline)
    with np.errstate(divide="ignore"):
        for t in model.terms:
            value = value + t.strength / (t.resonance**2 + t.damping * xi + xi**2)
    return _scalar_or_array(value)


VACUUM_RESPONSE = OscillatorModel()


@dataclass(frozen=True)
class AtomModel:
    """Ground-state atom with single-oscillator electric and magnetic polarizabilities.

    ``alpha_e0``/``alpha_m0`` are the static vacuum polarizabilities (volume);
    ``omega_e``/``omega_m`` the transition frequencies.  An infinite frequency
    gives a nondispersive polarizability.
    """

    alpha_e0: float
    omega_e: float
    alpha_m0: float = 0.0
    omega_m: float = 1.0

    def __post_init__(self):
        if self.alpha_e0 < 0 or self.alpha_m0 < 0:
            raise ValueError("static polarizabilities must be >= 0")
        if self.omega_e <= 0 or self.omega_m <= 0:
            raise ValueError("atomic transition frequencies must be > 0")

    def dual(self) -> AtomModel:
        return AtomModel(self.alpha_m0, self.omega_m, self.alpha_e0, self.omega_e)

    def scaled(self, factor: float) -> AtomModel:
        return AtomModel(self.alpha_e0 * factor, self.omega_e, self.alpha_m0 * factor, self.omega_m)

    @property
    def frequencies(self) -> list[float]:
        """Finite transition frequencies of the channels that are present."""
        out = []
        if self.alpha_e0 > 0 and math.isfinite(self.omega_e):
            out.append(self.omega_e)
        if self.alpha_m0 > 0 and math.isfinite(self.omega_m):
            out.append(self.omega_m)
        return out

    def to_dict(self) -> dict:
        return {
            "alpha_e0": self.alpha_e0,
            "omega_e": self.omega_e,
            "alpha_m0": self.alpha_m0,
            "omega_m": self.omega_m,
        }


def eval_polarizability(atom: AtomModel, channel: Channel, xi):
    """Vacuum polarizability ``alpha_0 / (1 + xi**2/omega**2)`` of one channel."""
    xi = _check_xi(xi)
    if channel == "electric":
        alpha0, omega = atom.alpha_e0, atom.omega_e
    elif channel == "magnetic":
        alpha0, omega = atom.alpha_m0, atom.omega_m
    else:
        raise ValueError(f"unknown channel {channel!r}")
    return _scalar_or_array(alpha0 / (1.0 + (xi / omega) ** 2))


def effective_polarizability(atom_vacuum_alpha, host_response):
    """Polarizability of an atom embedded in a host, to leading order in density.

    ``alpha_0 * ((x + 2)/3)**2`` with ``x`` the host permittivity (electric
    channel) or permeability (magnetic channel).
    """
    return atom_vacuum_alpha * ((np.asarray(host_response) + 2.0) / 3.0) ** 2


@dataclass(frozen=True)
class Medium:
    """Homogeneous isotropic magnetodielectric medium."""

    permittivity: OscillatorModel = field(default_factory=OscillatorModel)
    permeability: OscillatorModel = field(default_factory=OscillatorModel)

    def epsilon(self, xi):
        return eval_response(self.permittivity, xi)

    def mu(self, xi):
        return eval_response(self.permeability, xi)

    def n(self, xi):
        return np.sqrt(self.epsilon(xi) * self.mu(xi))

    def dual(self) -> Medium:
        return Medium(self.permeability, self.permittivity)

    @property
    def is_vacuum(self) -> bool:
        return self.permittivity == VACUUM_RESPONSE and self.permeability == VACUUM_RESPONSE

    @property
    def max_frequency(self) -> float:
        return max(self.permittivity.max_frequency, self.permeability.max_frequency)

    @property
    def static(self) -> tuple[float, float]:
        """``(epsilon_0, mu_0)``."""
        return self.epsilon(0.0), self.mu(0.0)

    def to_dict(self) -> dict:
        return {
            "permittivity": self.permittivity.to_dict(),
            "permeability": self.permeability.to_dict(),
        }


VACUUM = Medium()


def dilute_mix(host: Medium, number_density: float, atom: AtomModel, xi, *, effective=True):
    """Permittivity and permeability of a host doped with a dilute atom species.

    Returns ``(epsilon_s, mu_s)`` with ``epsilon_s = epsilon + 4 pi N alpha_e``
    and the magnetic analogue; ``alpha`` is the in-host effective value unless
    ``effective`` is false.
    """
    eps, mu = host.epsilon(xi), host.mu(xi)
    ae = eval_polarizability(atom, "electric", xi)
    am = eval_polarizability(atom, "magnetic", xi)
    if effective:
        ae = effective_polarizability(ae, eps)
        am = effective_polarizability(am, mu)
    return (
        _scalar_or_array(eps + 4 * np.pi * number_density * ae),
        _scalar_or_array(mu + 4 * np.pi * number_density * am),
    )


def mixing_strength(number_density: float, atom: AtomModel) -> float:
    """``4 pi N max(alpha_0)``; the linearized mixing rule needs this << 1."""
    return 4 * np.pi * number_density * max(atom.alpha_e0, atom.alpha_m0)


@dataclass(frozen=True)
class DiluteMixture:
    """A host medium doped with atoms, usable wherever a :class:`Medium` is."""

    host: Medium
    number_density: float
    atom: AtomModel
    effective: bool = True

    def epsilon(self, xi):
        return dilute_mix(self.host, self.number_density, self.atom, xi, effective=self.effective)[0]

    def mu(self, xi):
        return dilute_mix(self.host, self.number_density, self.atom, xi, effective=self.effective)[1]

    def n(self, xi):
        return np.sqrt(self.epsilon(xi) * self.mu(xi))

    def dual(self) -> DiluteMixture:
        return DiluteMixture(self.host.dual(), self.number_density, self.atom.dual(), self.effective)

    @property
    def is_vacuum(self) -> bool:
        return self.host.is_vacuum and self.number_density == 0

    @property
    def max_frequency(self) -> float:
        return max([self.host.max_frequency, *self.atom.frequencies])

    @property
    def static(self) -> tuple[float, float]:
        return self.epsilon(0.0), self.mu(0.0)


def host_polarizabilities(atom: AtomModel, host, xi, *, effective=True):
    """``(alpha_e, alpha_m)`` of ``atom`` inside ``host`` at ``xi``."""
    ae = eval_polarizability(atom, "electric", xi)
    am = eval_polarizability(atom, "magnetic", xi)
    if effective:
        ae = effective_polarizability(ae, host.epsilon(xi))
        am = effective_polarizability(am, host.mu(xi))
    return ae, am
