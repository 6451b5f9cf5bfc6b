"""Casimir, Casimir-Polder and van der Waals forces in planar magnetodielectric systems."""
from .atom_forces import (AtomMirrorSystem, atom_medium_force, atom_mirror_force, atom_potential,
                          lorentz_atom_force)
from .layers import DiluteMirror, HalfSpaceMirror, PerfectMirror, interface_r, kappa, mirror_R, slab_rt
from .materials import (VACUUM, AtomModel, DiluteMixture, Medium, Oscillator, OscillatorModel,
                        dilute_mix, effective_polarizability, eval_polarizability, eval_response)
from .pairwise import (PairSystem, interaction_energy, mirror_consistency_check, pair_force,
                       retarded_limit_force, vdw_limit_force)
from .quadrature import IntegralResult, QuadratureConfig, integrate_semi_inf, nested_force_integral
from .slab_forces import (ForceBreakdown, SlabSystem, lorentz_slab_force, medium_slab_force,
                          minkowski_slab_force)
from .units import GAUSSIAN, REDUCED, Units

__version__ = "0.1.0"
