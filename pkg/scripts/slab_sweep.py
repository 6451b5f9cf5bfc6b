#!/usr/bin/env python3
"""Slab force against distance for a dielectric slab in a magnetodielectric host.

Prints f, f~ and the total, each scaled by the ideal-mirror pressure
pi^2/(240 d^4), so the retarded and nonretarded regimes show up as plateaus
and slopes.  Reduced units.
"""
import argparse

import numpy as np

from mmcasimir import (HalfSpaceMirror, Medium, OscillatorModel, QuadratureConfig, SlabSystem,
                       lorentz_slab_force)
from mmcasimir.slab_forces import ideal_casimir_pressure


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    p.add_argument("--eps0", type=float, default=2.0, help="host static permittivity")
    p.add_argument("--mu0", type=float, default=1.5, help="host static permeability")
    p.add_argument("--points", type=int, default=13)
    p.add_argument("--rel-tol", type=float, default=1e-7)
    args = p.parse_args()

    host = Medium(OscillatorModel.lorentz(args.eps0, 1.0), OscillatorModel.lorentz(args.mu0, 1.0))
    slab = Medium(OscillatorModel.lorentz(6.0, 2.0))
    mirror = HalfSpaceMirror(Medium(OscillatorModel.drude(10.0, 0.05)))
    cfg = QuadratureConfig(rel_tol=args.rel_tol)
    print(f"{'d':>10} {'f/f_ideal':>12} {'f~/f_ideal':>12} {'total/f_ideal':>14} {'assisted':>12}")
    for d in np.geomspace(0.05, 50.0, args.points):
        b = lorentz_slab_force(SlabSystem(host, slab, 0.5, mirror, float(d)), cfg)
        ideal = float(ideal_casimir_pressure(d))
        print(f"{d:10.4g} {b.minkowski / ideal:12.5g} {b.medium / ideal:12.5g} "
              f"{b.total / ideal:14.5g} {b.assisted / ideal:12.5g}")


if __name__ == "__main__":
    main()
