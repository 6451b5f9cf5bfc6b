"""Unit systems.

Formulas are written in Gaussian units with hbar and c kept explicit, so a
unit system is nothing more than the numerical values of those two constants.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Units:
    hbar: float
    c: float
    name: str

    def labels(self) -> dict[str, str]:
        """Unit strings used in CSV headers."""
        if self.name == "gaussian":
            return {
                "length": "cm",
                "frequency": "rad/s",
                "number_density": "cm^-3",
                "force": "dyn",
                "force_per_area": "dyn/cm^2",
                "energy": "erg",
            }
        return {
            "length": "c/omega_ref",
            "frequency": "omega_ref",
            "number_density": "(omega_ref/c)^3",
            "force": "hbar*omega_ref^2/c",
            "force_per_area": "hbar*omega_ref^4/c^3",
            "energy": "hbar*omega_ref",
        }


#: hbar = c = 1; lengths in c/omega_ref, frequencies in omega_ref.
REDUCED = Units(hbar=1.0, c=1.0, name="reduced")
#: CGS values (erg s, cm/s).
GAUSSIAN = Units(hbar=1.054571817e-27, c=2.99792458e10, name="gaussian")
