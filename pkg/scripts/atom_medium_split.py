#!/usr/bin/env python3
"""Force on an embedded atom near a metal mirror, split into the force on the
atom (f_A) and the atom-induced force on the host (f~_A), for a purely
electric atom and for its dual.  Shows that only f_A survives the duality swap."""
import argparse

import numpy as np

from mmcasimir import (AtomMirrorSystem, AtomModel, HalfSpaceMirror, Medium, OscillatorModel,
                       QuadratureConfig, lorentz_atom_force)


def main():
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--points", type=int, default=9)
    p.add_argument("--uncorrected", action="store_true",
                   help="use the variant without the alpha/eps, alpha/mu replacement")
    args = p.parse_args()

    host = Medium(OscillatorModel.lorentz(2.0, 1.0), OscillatorModel.lorentz(1.5, 1.0))
    mirror = HalfSpaceMirror(Medium(OscillatorModel.lorentz(8.0, 2.0), OscillatorModel.lorentz(2.0, 1.0)))
    atom = AtomModel(1e-3, 1.0, 4e-4, 0.7)
    cfg = QuadratureConfig()
    print(f"{'d':>8} {'f_A':>13} {'f~_A':>13} {'f_A dual':>13} {'f~_A dual':>13}")
    for d in np.geomspace(0.1, 10.0, args.points):
        s = AtomMirrorSystem(host, atom, mirror, float(d))
        b = lorentz_atom_force(s, cfg, footnote_corrected=not args.uncorrected)
        bd = lorentz_atom_force(s.dual(), cfg, footnote_corrected=not args.uncorrected)
        print(f"{d:8.4g} {b.minkowski:13.5e} {b.medium:13.5e} {bd.minkowski:13.5e} {bd.medium:13.5e}")


if __name__ == "__main__":
    main()
