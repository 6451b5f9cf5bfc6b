"""Command-line front end.

    mmcasimir slab-force  --config run.json --out slab.csv
    mmcasimir atom-mirror --config run.json --out atom.csv --format plot
    mmcasimir atom-atom   --config run.json --threads 4
    mmcasimir validate
    mmcasimir example slab_force > run.json

Exit codes: 0 success, 1 failed validation, 2 bad configuration,
3 unconverged rows under ``--strict``.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterable, Iterator

from . import validation
from .atom_forces import AtomMirrorSystem, atom_potential, lorentz_atom_force
from .layers import PerfectMirror
from .config import ConfigError, RunConfig, build_mirror, example_config, load_config
from .pairwise import (PairSystem, interaction_energy, pair_force, retarded_limit_force,
                       vdw_limit_force)
from .slab_forces import ConvergenceWarning, SlabSystem, lorentz_slab_force

log = logging.getLogger("mmcasimir")

SUBCOMMANDS = {
    "slab-force": "slab_force",
    "atom-mirror": "atom_mirror",
    "atom-atom": "atom_atom",
    "validate": "validate",
}

# (column, unit key or None)
COLUMNS = {
    "slab_force": [
        ("minkowski", "force_per_area"), ("medium", "force_per_area"), ("total", "force_per_area"),
        ("screened", "force_per_area"), ("assisted", "force_per_area"),
        ("minkowski_p", "force_per_area"), ("minkowski_s", "force_per_area"),
        ("medium_p", "force_per_area"), ("medium_s", "force_per_area"),
        ("total_p", "force_per_area"), ("total_s", "force_per_area"),
        ("err_minkowski", "force_per_area"), ("err_medium", "force_per_area"),
        ("err_total", "force_per_area"),
        ("evaluations", None), ("converged", None),
    ],
    "atom_mirror": [
        ("f_A", "force"), ("f_medium", "force"), ("total", "force"), ("U_A", "energy"),
        ("err_f_A", "force"), ("err_f_medium", "force"), ("err_U_A", "energy"),
        ("evaluations", None), ("converged", None),
    ],
    "atom_atom": [
        ("U_AB", "energy"), ("f_AB", "force"), ("f_vdw_limit", "force"),
        ("f_retarded_limit", "force"), ("err_U_AB", "energy"), ("err_f_AB", "force"),
        ("evaluations", None), ("converged", None),
    ],
}
_SWEEP_UNITS = {"d": "length", "r": "length", "d_s": "length", "N_B": "number_density"}


@dataclass
class ResultRow:
    index: int
    sweep_value: float
    values: dict

    @property
    def converged(self) -> bool:
        return bool(self.values["converged"])


def header(config: RunConfig) -> list[str]:
    units = config.unit_system.units
    labels = units.labels()
    system = config.unit_system.kind
    var = config.sweep.variable
    out = [f"{var} [{labels[_SWEEP_UNITS[var]]}; {system}]"]
    for name, unit in COLUMNS[config.scenario]:
        out.append(f"{name} [{labels[unit]}; {system}]" if unit else name)
    return out


def _slab_row(config: RunConfig, var: str, x: float) -> dict:
    sys_ = config.system
    n_b = x if var == "N_B" else None
    slab = PerfectMirror() if sys_["slab"] == "perfect" else config.medium(sys_["slab"])
    system = SlabSystem(
        host=config.medium(sys_["host"]),
        slab=slab,
        d_s=x if var == "d_s" else float(sys_["d_s"]),
        mirror=build_mirror(config, sys_["mirror"], n_b=n_b),
        d=x if var == "d" else float(sys_["d"]),
    )
    b = lorentz_slab_force(system, config.quadrature, config.unit_system.units)
    pq = b.per_polarization
    return {
        "minkowski": b.minkowski, "medium": b.medium, "total": b.total,
        "screened": b.screened, "assisted": b.assisted,
        "minkowski_p": pq["p"]["minkowski"], "minkowski_s": pq["s"]["minkowski"],
        "medium_p": pq["p"]["medium"], "medium_s": pq["s"]["medium"],
        "total_p": pq["p"]["total"], "total_s": pq["s"]["total"],
        "err_minkowski": b.error_estimate["minkowski"], "err_medium": b.error_estimate["medium"],
        "err_total": b.error_estimate["total"],
        "evaluations": b.evaluations, "converged": b.converged,
    }


def _atom_row(config: RunConfig, var: str, x: float) -> dict:
    sys_ = config.system
    system = AtomMirrorSystem(
        host=config.medium(sys_["host"]),
        atom=config.atoms[sys_["atom"]],
        mirror=build_mirror(config, sys_["mirror"], n_b=x if var == "N_B" else None),
        d=x if var == "d" else float(sys_["d"]),
        effective=sys_.get("effective", True),
    )
    units = config.unit_system.units
    b = lorentz_atom_force(system, config.quadrature, units,
                           footnote_corrected=sys_.get("footnote_corrected", True))
    u = atom_potential(system, config.quadrature, units)
    return {
        "f_A": b.minkowski, "f_medium": b.medium, "total": b.total, "U_A": u.value,
        "err_f_A": b.error_estimate["minkowski"], "err_f_medium": b.error_estimate["medium"],
        "err_U_A": u.error_estimate,
        "evaluations": b.evaluations + u.evaluations, "converged": b.converged and u.converged,
    }


def _pair_row(config: RunConfig, var: str, x: float) -> dict:
    sys_ = config.system
    pair = PairSystem(config.medium(sys_["host"]), config.atoms[sys_["atom_a"]],
                      config.atoms[sys_["atom_b"]], x, sys_.get("effective", True))
    units = config.unit_system.units
    u = interaction_energy(pair, config.quadrature, units)
    f = pair_force(pair, config.quadrature, units)
    try:
        vdw = vdw_limit_force(pair, config.quadrature, units).value
    except ValueError:
        vdw = math.nan
    return {
        "U_AB": u.value, "f_AB": f.value, "f_vdw_limit": vdw,
        "f_retarded_limit": retarded_limit_force(pair, units),
        "err_U_AB": u.error_estimate, "err_f_AB": f.error_estimate,
        "evaluations": u.evaluations + f.evaluations, "converged": u.converged and f.converged,
    }


_ROW_BUILDERS = {"slab_force": _slab_row, "atom_mirror": _atom_row, "atom_atom": _pair_row}


def compute_row(config: RunConfig, index: int, x: float) -> ResultRow:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ConvergenceWarning)
        values = _ROW_BUILDERS[config.scenario](config, config.sweep.variable, x)
    return ResultRow(index, x, values)


def _compute(args):
    return compute_row(*args)


def run(config: RunConfig, threads: int = 1) -> Iterator[ResultRow]:
    """Yield one row per sweep point, in sweep order."""
    if config.scenario == "validate":
        raise ValueError("the validate scenario produces no rows; use run_validation")
    jobs = [(config, i, x) for i, x in enumerate(config.sweep.values())]
    if threads <= 1:
        yield from map(_compute, jobs)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(_compute, jobs)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, int):
        return str(value)
    return f"{float(value):.17g}"


def csv_text(config: RunConfig, rows: Iterable[ResultRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header(config))
    names = [name for name, _ in COLUMNS[config.scenario]]
    for row in rows:
        writer.writerow([_fmt(row.sweep_value)] + [_fmt(row.values[n]) for n in names])
    return buf.getvalue()


def plot_script(config: RunConfig, csv_path) -> str:
    """Gnuplot script drawing |force| against the sweep variable on log-log axes."""
    cols = header(config)
    force_cols = {"slab_force": ("minkowski", "medium", "total"),
                  "atom_mirror": ("f_A", "f_medium", "total"),
                  "atom_atom": ("f_AB", "f_vdw_limit", "f_retarded_limit")}[config.scenario]
    names = [name for name, _ in COLUMNS[config.scenario]]
    plots = []
    for name in force_cols:
        col = names.index(name) + 2
        plots.append(f"'{csv_path}' using 1:(abs(${col})) with linespoints title '{name}'")
    logx = "set logscale x" if config.sweep.spacing == "log" else "unset logscale x"
    return "\n".join([
        f"# generated for {csv_path}",
        "set datafile separator ','",
        logx,
        "set logscale y",
        f"set xlabel \"{cols[0]}\"",
        f"set ylabel \"|force| [{cols[2].split('[', 1)[1]}\"",
        "set key top right",
        "plot " + ", \\\n     ".join(plots),
        "",
    ])


def emit(config: RunConfig, rows: list[ResultRow], fmt: str = "csv", out=None) -> list[Path]:
    """Write rows as CSV (to ``out`` or stdout) and, for ``fmt="plot"``, a gnuplot
    script next to the CSV."""
    text = csv_text(config, rows)
    if out is None:
        if fmt == "plot":
            raise ValueError("--format plot needs --out for the CSV the script reads")
        sys.stdout.write(text)
        return []
    out = Path(out)
    out.write_text(text)
    written = [out]
    if fmt == "plot":
        script = out.with_suffix(".gp")
        script.write_text(plot_script(config, out))
        written.append(script)
    return written


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmcasimir", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", required=name != "validate", help="JSON run configuration")
        p.add_argument("--out", help="output CSV path (default: stdout)")
        p.add_argument("--format", choices=("csv", "plot"), default="csv")
        p.add_argument("--rel-tol", type=float)
        p.add_argument("--xi-cutoff-factor", type=float)
        p.add_argument("--strict", action="store_true",
                       help="exit with status 3 if any row did not converge")
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("-v", "--verbose", action="store_true")
    ex = sub.add_parser("example", help="print an example configuration")
    ex.add_argument("scenario", choices=("slab_force", "atom_mirror", "atom_atom", "validate"))
    return parser


def _apply_overrides(config: RunConfig, args) -> RunConfig:
    changes = {}
    if args.rel_tol is not None:
        changes["rel_tol"] = args.rel_tol
    if args.xi_cutoff_factor is not None:
        changes["xi_cutoff_factor"] = args.xi_cutoff_factor
    if not changes:
        return config
    try:
        return replace(config, quadrature=replace(config.quadrature, **changes))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def run_validation(cfg, echo=print) -> bool:
    results = validation.run_all(cfg, echo=echo)
    passed = sum(r.passed for r in results)
    echo(f"{passed}/{len(results)} checks passed")
    return passed == len(results)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "example":
        sys.stdout.write(example_config(args.scenario).dumps())
        return 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    scenario = SUBCOMMANDS[args.command]
    try:
        if args.config is None:
            config = example_config("validate")
        else:
            config = load_config(args.config)
        if config.scenario != scenario:
            raise ConfigError(f"{args.config}: scenario is {config.scenario!r} but the "
                              f"{args.command} subcommand was used")
        config = _apply_overrides(config, args)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if scenario == "validate":
        return 0 if run_validation(config.quadrature) else 1
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2
    if args.format == "plot" and args.out is None:
        print("error: --format plot needs --out", file=sys.stderr)
        return 2
    rows = []
    for row in run(config, args.threads):
        log.info("%s = %.6g done (%d evaluations)", config.sweep.variable, row.sweep_value,
                 row.values["evaluations"])
        rows.append(row)
    try:
        emit(config, rows, args.format, args.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    total_evals = sum(r.values["evaluations"] for r in rows)
    err_cols = [n for n, _ in COLUMNS[scenario] if n.startswith("err_")]
    worst = max((r.values[c] for r in rows for c in err_cols), default=0.0)
    bad = [r for r in rows if not r.converged]
    print(f"# rows={len(rows)} evaluations={total_evals} worst_error_estimate={worst:.3e} "
          f"unconverged={len(bad)}", file=sys.stderr)
    if bad and args.strict:
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
