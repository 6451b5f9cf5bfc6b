"""Run configuration: a JSON file naming materials, atoms, a system and a sweep.

Example::

    {
      "unit_system": {"kind": "reduced", "omega_ref": 1.0},
      "materials": {
        "water": {"permittivity": {"terms": [{"strength": 1.0, "resonance": 1.0}]}}
      },
      "atoms": {"A": {"alpha_e0": 0.001, "omega_e": 1.0}},
      "scenario": "atom_mirror",
      "system": {"host": "water", "atom": "A", "mirror": {"kind": "perfect"}, "d": 1.0},
      "sweep": {"variable": "d", "start": 0.1, "stop": 10, "points": 25, "spacing": "log"},
      "quadrature": {"rel_tol": 1e-8}
    }

``"vacuum"`` is always available as a material name.  Mirrors are
``{"kind": "perfect", "magnetic": false}``, ``{"kind": "half_space", "medium": name}``
or ``{"kind": "dilute", "atom": name, "number_density": N}``; a slab may be a
material name or ``"perfect"``.
"""
from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any

import numpy as np

from .layers import DiluteMirror, HalfSpaceMirror, PerfectMirror
from .materials import VACUUM, AtomModel, Medium, NondispersiveModelWarning, OscillatorModel
from .quadrature import QuadratureConfig
from .units import GAUSSIAN, REDUCED, Units

SCENARIOS = ("slab_force", "atom_mirror", "atom_atom", "validate")
SWEEP_VARIABLES = {
    "slab_force": ("d", "d_s", "N_B"),
    "atom_mirror": ("d", "N_B"),
    "atom_atom": ("r",),
    "validate": (),
}


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending field."""


@dataclass(frozen=True)
class UnitSystem:
    kind: str = "reduced"
    omega_ref: float = 1.0

    @property
    def units(self) -> Units:
        return GAUSSIAN if self.kind == "gaussian" else REDUCED

    def to_dict(self) -> dict:
        if self.kind == "gaussian":
            return {"kind": "gaussian"}
        return {"kind": "reduced", "omega_ref": self.omega_ref}


@dataclass(frozen=True)
class Sweep:
    variable: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"

    def values(self) -> list[float]:
        if self.points == 1:
            return [self.start]
        if self.spacing == "log":
            grid = np.geomspace(self.start, self.stop, self.points)
        else:
            grid = np.linspace(self.start, self.stop, self.points)
        return [float(v) for v in grid]

    def to_dict(self) -> dict:
        return {"variable": self.variable, "start": self.start, "stop": self.stop,
                "points": self.points, "spacing": self.spacing}


@dataclass(frozen=True)
class RunConfig:
    unit_system: UnitSystem
    materials: dict[str, Medium]
    atoms: dict[str, AtomModel]
    scenario: str
    system: dict[str, Any] = field(default_factory=dict)
    sweep: Sweep | None = None
    quadrature: QuadratureConfig = QuadratureConfig()

    def medium(self, name: str) -> Medium:
        return VACUUM if name == "vacuum" else self.materials[name]

    def to_dict(self) -> dict:
        out = {
            "unit_system": self.unit_system.to_dict(),
            "materials": {k: v.to_dict() for k, v in self.materials.items()},
            "atoms": {k: v.to_dict() for k, v in self.atoms.items()},
            "scenario": self.scenario,
            "system": self.system,
            "quadrature": {f.name: getattr(self.quadrature, f.name) for f in fields(QuadratureConfig)},
        }
        if self.sweep is not None:
            out["sweep"] = self.sweep.to_dict()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"


def _number(value, where, *, positive=False, nonnegative=False, allow_inf=False):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        if allow_inf and value in ("inf", "Infinity"):
            return math.inf
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if math.isnan(value) or (math.isinf(value) and not allow_inf):
        raise ConfigError(f"{where}: must be finite")
    if positive and not value > 0:
        raise ConfigError(f"{where}: must be > 0, got {value}")
    if nonnegative and value < 0:
        raise ConfigError(f"{where}: must be >= 0, got {value}")
    return value


def _mapping(value, where):
    if not isinstance(value, dict):
        raise ConfigError(f"{where}: expected an object")
    return value


def _unknown(data, allowed, where):
    extra = set(data) - set(allowed)
    if extra:
        raise ConfigError(f"{where}: unknown field(s) {sorted(extra)}")


def _oscillator_model(data, where) -> OscillatorModel:
    data = _mapping(data, where)
    _unknown(data, ("baseline", "terms"), where)
    baseline = _number(data.get("baseline", 1.0), f"{where}.baseline")
    if baseline < 1:
        raise ConfigError(f"{where}.baseline: must be >= 1")
    terms = []
    for i, term in enumerate(data.get("terms", [])):
        tw = f"{where}.terms[{i}]"
        term = _mapping(term, tw)
        _unknown(term, ("strength", "resonance", "damping"), tw)
        if "strength" not in term or "resonance" not in term:
            raise ConfigError(f"{tw}: 'strength' and 'resonance' are required")
        terms.append({
            "strength": _number(term["strength"], f"{tw}.strength", nonnegative=True),
            "resonance": _number(term["resonance"], f"{tw}.resonance", nonnegative=True),
            "damping": _number(term.get("damping", 0.0), f"{tw}.damping", nonnegative=True),
        })
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", NondispersiveModelWarning)
        model = OscillatorModel(baseline, tuple(terms))
    if baseline > 1:
        warnings.warn(f"{where}: nondispersive background {baseline}", NondispersiveModelWarning,
                      stacklevel=2)
    return model


def _medium(data, where) -> Medium:
    data = _mapping(data, where)
    _unknown(data, ("permittivity", "permeability"), where)
    return Medium(_oscillator_model(data.get("permittivity", {}), f"{where}.permittivity"),
                  _oscillator_model(data.get("permeability", {}), f"{where}.permeability"))


def _atom(data, where) -> AtomModel:
    data = _mapping(data, where)
    _unknown(data, ("alpha_e0", "omega_e", "alpha_m0", "omega_m"), where)
    for key in ("alpha_e0", "omega_e"):
        if key not in data:
            raise ConfigError(f"{where}: '{key}' is required")
    return AtomModel(
        _number(data["alpha_e0"], f"{where}.alpha_e0", nonnegative=True),
        _number(data["omega_e"], f"{where}.omega_e", positive=True, allow_inf=True),
        _number(data.get("alpha_m0", 0.0), f"{where}.alpha_m0", nonnegative=True),
        _number(data.get("omega_m", 1.0), f"{where}.omega_m", positive=True, allow_inf=True),
    )


_SYSTEM_FIELDS = {
    "slab_force": {"host", "slab", "d_s", "mirror", "d"},
    "atom_mirror": {"host", "atom", "mirror", "d", "effective", "footnote_corrected"},
    "atom_atom": {"host", "atom_a", "atom_b", "r", "effective"},
    "validate": set(),
}
_REQUIRED = {
    "slab_force": ("host", "slab", "d_s", "mirror", "d"),
    "atom_mirror": ("host", "atom", "mirror", "d"),
    "atom_atom": ("host", "atom_a", "atom_b", "r"),
    "validate": (),
}


def _check_name(name, table, where, what):
    if not isinstance(name, str):
        raise ConfigError(f"{where}: expected a {what} name")
    if name not in table and not (what == "material" and name == "vacuum"):
        raise ConfigError(f"{where}: unknown {what} {name!r}")


def _check_mirror(data, materials, atoms, where):
    data = _mapping(data, where)
    kind = data.get("kind")
    if kind == "perfect":
        _unknown(data, ("kind", "magnetic"), where)
        if not isinstance(data.get("magnetic", False), bool):
            raise ConfigError(f"{where}.magnetic: expected true/false")
    elif kind == "half_space":
        _unknown(data, ("kind", "medium"), where)
        _check_name(data.get("medium"), materials, f"{where}.medium", "material")
    elif kind == "dilute":
        _unknown(data, ("kind", "atom", "number_density", "effective"), where)
        _check_name(data.get("atom"), atoms, f"{where}.atom", "atom")
        _number(data.get("number_density"), f"{where}.number_density", nonnegative=True)
    else:
        raise ConfigError(f"{where}.kind: expected 'perfect', 'half_space' or 'dilute', got {kind!r}")


def _check_system(data, scenario, materials, atoms):
    data = _mapping(data, "system")
    _unknown(data, _SYSTEM_FIELDS[scenario], "system")
    for key in _REQUIRED[scenario]:
        if key not in data:
            raise ConfigError(f"system: '{key}' is required for scenario {scenario}")
    for key in ("d", "r"):
        if key in data:
            _number(data[key], f"system.{key}", positive=True)
    if "d_s" in data:
        _number(data["d_s"], "system.d_s", nonnegative=True)
    if "host" in data:
        _check_name(data["host"], materials, "system.host", "material")
    if "slab" in data and data["slab"] != "perfect":
        _check_name(data["slab"], materials, "system.slab", "material")
    for key in ("atom", "atom_a", "atom_b"):
        if key in data:
            _check_name(data[key], atoms, f"system.{key}", "atom")
    if "mirror" in data:
        _check_mirror(data["mirror"], materials, atoms, "system.mirror")
    for key in ("effective", "footnote_corrected"):
        if key in data and not isinstance(data[key], bool):
            raise ConfigError(f"system.{key}: expected true/false")
    return data


def _sweep(data, scenario, system) -> Sweep:
    data = _mapping(data, "sweep")
    _unknown(data, ("variable", "start", "stop", "points", "spacing"), "sweep")
    variable = data.get("variable")
    if variable not in SWEEP_VARIABLES[scenario]:
        raise ConfigError(f"sweep.variable: must be one of {SWEEP_VARIABLES[scenario]} for "
                          f"{scenario}, got {variable!r}")
    if variable == "N_B" and system.get("mirror", {}).get("kind") != "dilute":
        raise ConfigError("sweep.variable: N_B sweeps need a dilute mirror")
    positive = variable in ("d", "r")
    start = _number(data.get("start"), "sweep.start", positive=positive, nonnegative=True)
    stop = _number(data.get("stop"), "sweep.stop", positive=positive, nonnegative=True)
    points = data.get("points")
    if isinstance(points, bool) or not isinstance(points, int) or points < 1:
        raise ConfigError("sweep.points: expected an integer >= 1")
    if not start < stop:
        raise ConfigError(f"sweep: start ({start}) must be < stop ({stop})")
    spacing = data.get("spacing", "linear")
    if spacing not in ("linear", "log"):
        raise ConfigError("sweep.spacing: expected 'linear' or 'log'")
    if spacing == "log" and not start > 0:
        raise ConfigError("sweep.start: log spacing needs start > 0")
    return Sweep(variable, start, stop, points, spacing)


def _quadrature(data) -> QuadratureConfig:
    data = _mapping(data, "quadrature")
    allowed = [f.name for f in fields(QuadratureConfig)]
    _unknown(data, allowed, "quadrature")
    kwargs = {}
    for key, value in data.items():
        if key == "max_subdivisions":
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError("quadrature.max_subdivisions: expected an integer")
            kwargs[key] = value
        else:
            kwargs[key] = _number(value, f"quadrature.{key}")
    try:
        return QuadratureConfig(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"quadrature: {exc}") from None


def parse_config(data: dict) -> RunConfig:
    data = _mapping(data, "config")
    _unknown(data, ("unit_system", "materials", "atoms", "scenario", "system", "sweep", "quadrature"),
             "config")
    us = _mapping(data.get("unit_system", {"kind": "reduced"}), "unit_system")
    _unknown(us, ("kind", "omega_ref"), "unit_system")
    kind = us.get("kind", "reduced")
    if kind not in ("reduced", "gaussian"):
        raise ConfigError(f"unit_system.kind: expected 'reduced' or 'gaussian', got {kind!r}")
    unit_system = UnitSystem(kind, _number(us.get("omega_ref", 1.0), "unit_system.omega_ref",
                                           positive=True))
    materials = {}
    for name, spec in _mapping(data.get("materials", {}), "materials").items():
        if name in ("vacuum", "perfect"):
            raise ConfigError(f"materials.{name}: reserved name")
        materials[name] = _medium(spec, f"materials.{name}")
    atoms = {name: _atom(spec, f"atoms.{name}")
             for name, spec in _mapping(data.get("atoms", {}), "atoms").items()}
    scenario = data.get("scenario")
    if scenario not in SCENARIOS:
        raise ConfigError(f"scenario: expected one of {SCENARIOS}, got {scenario!r}")
    system = _check_system(data.get("system", {}), scenario, materials, atoms)
    sweep = None
    if scenario != "validate":
        if "sweep" not in data:
            raise ConfigError("sweep: required for scenario " + scenario)
        sweep = _sweep(data["sweep"], scenario, system)
    quadrature = _quadrature(data.get("quadrature", {}))
    return RunConfig(unit_system, materials, atoms, scenario, system, sweep, quadrature)


def load_config(path) -> RunConfig:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return parse_config(data)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def build_mirror(config: RunConfig, spec: dict, *, n_b: float | None = None):
    kind = spec["kind"]
    if kind == "perfect":
        return PerfectMirror(spec.get("magnetic", False))
    if kind == "half_space":
        return HalfSpaceMirror(config.medium(spec["medium"]))
    density = spec["number_density"] if n_b is None else n_b
    return DiluteMirror(float(density), config.atoms[spec["atom"]], spec.get("effective", True))


def example_config(scenario: str = "slab_force") -> RunConfig:
    """A small, valid configuration for ``scenario``."""
    materials = {
        "host": Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0)),
        "glass": Medium(OscillatorModel.lorentz(4.0, 2.0)),
        "metal": Medium(OscillatorModel.drude(10.0, 0.05)),
    }
    atoms = {"A": AtomModel(1e-3, 1.0), "B": AtomModel(2e-3, 1.5, 5e-4, 0.8)}
    systems = {
        "slab_force": ({"host": "host", "slab": "glass", "d_s": 0.5,
                        "mirror": {"kind": "half_space", "medium": "metal"}, "d": 1.0},
                       Sweep("d", 0.1, 10.0, 25, "log")),
        "atom_mirror": ({"host": "host", "atom": "A", "mirror": {"kind": "perfect"}, "d": 1.0},
                        Sweep("d", 0.1, 10.0, 25, "log")),
        "atom_atom": ({"host": "host", "atom_a": "A", "atom_b": "B", "r": 1.0},
                      Sweep("r", 0.01, 100.0, 25, "log")),
        "validate": ({}, None),
    }
    system, sweep = systems[scenario]
    return RunConfig(UnitSystem("reduced", 1.0), materials, atoms, scenario, system, sweep,
                     QuadratureConfig())
