#!/usr/bin/env python3
"""Crossover of the atom-atom force from the short-distance r^-7 law to the
retarded r^-8 law, with the local power-law exponent -d ln f / d ln r."""
import argparse

import numpy as np

from mmcasimir import (VACUUM, AtomModel, Medium, OscillatorModel, PairSystem, QuadratureConfig,
                       pair_force, retarded_limit_force, vdw_limit_force)


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--medium", action="store_true", help="use the eps0 = 2, mu0 = 1.5 host")
    p.add_argument("--points", type=int, default=17)
    args = p.parse_args()

    host = (Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0))
            if args.medium else VACUUM)
    a, b = AtomModel(1e-3, 1.0, 3e-4, 0.7), AtomModel(2e-3, 1.5)
    cfg = QuadratureConfig()
    rs = np.geomspace(1e-3, 1e3, args.points)
    f = np.array([pair_force(PairSystem(host, a, b, float(r)), cfg).value for r in rs])
    slope = -np.gradient(np.log(np.abs(f)), np.log(rs))
    print(f"{'r':>10} {'f_AB':>13} {'f/vdw':>9} {'f/retarded':>11} {'exponent':>9}")
    for r, fr, s in zip(rs, f, slope):
        pair = PairSystem(host, a, b, float(r))
        print(f"{r:10.4g} {fr:13.5e} {fr / vdw_limit_force(pair, cfg).value:9.4f} "
              f"{fr / retarded_limit_force(pair):11.4f} {s:9.3f}")


if __name__ == "__main__":
    main()
