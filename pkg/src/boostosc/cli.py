"""Deterministic command-line front end for every quantity in the library.

Every numeric column comes from exactly one library operation; the CLI only
generates grids, formats floats to 17 significant digits, and writes a JSON
sidecar recording the configuration, library version, truncation tails and
quadrature order.  Identical configurations produce byte-identical outputs.
Figure rendering (--plot) is opt-in and sits alongside the delimited output,
never replacing it.
"""

import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import click
import numpy as np

from . import __version__, figures
from .covariant_oscillator import (
    CovariantState,
    contraction_law,
    evaluate_direct,
    overlap,
    series_coefficients,
)
from .density_matrix import (
    entropy,
    parton_distribution,
    purity,
    reduced_spectrum,
    wigner,
)
from .errors import OscillatorError
from .form_factor import (
    breit_frame,
    dipole_model,
    form_factor_closed,
    form_factor_numeric,
    static_form_factor,
)
from .kinematics import beta_from_eta, eta_from_beta
from .oscillator_basis import decompose, reconstruct
from .quadrature import build_rule
from .special_functions import chi
from .two_mode_squeezed import (
    entanglement_entropy,
    mode2_distribution,
    n_photon_squeezed,
)

DEFAULT_QUAD_ORDER = 96


@dataclass
class RunConfig:
    """Everything a subcommand needs; one instance fully determines the output."""

    command: str
    n: int = 0
    n_hi: Optional[int] = None
    eta: Optional[float] = None
    beta: Optional[float] = None
    kmax: int = 8
    tol: float = 1e-10
    quad_order: int = DEFAULT_QUAD_ORDER
    grid: Optional[Tuple[float, float, int]] = None
    grid_var: str = "eta"
    mass: float = 1.0
    output: str = "out.csv"
    fmt: str = "csv"
    plot: bool = False


def default_quad_order():
    """Built-in default, overridable through the OSC_QUAD_ORDER environment variable."""
    return int(os.environ.get("OSC_QUAD_ORDER", DEFAULT_QUAD_ORDER))


def _resolved_eta(cfg):
    if cfg.eta is not None:
        return float(cfg.eta)
    if cfg.beta is not None:
        return eta_from_beta(cfg.beta).eta
    return 0.0


def _linspace(grid):
    lo, hi, steps = grid
    return np.linspace(lo, hi, int(steps))


def _fmt(value):
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return f"{value:.16e}"


def _run_basis(cfg):
    xs = _linspace(cfg.grid)
    columns = ["x"] + [f"chi_{m}" for m in range(cfg.n + 1)]
    values = [chi(m, xs) for m in range(cfg.n + 1)]
    rows = [[x] + [col[i] for col in values] for i, x in enumerate(xs)]

    def figure(path):
        figures.save_line_figure(
            path, xs, {f"chi_{m}": values[m] for m in range(cfg.n + 1)}, "x", "chi_n(x)"
        )

    return columns, rows, {}, figure


def _run_boost_table(cfg):
    st = CovariantState(cfg.n, _resolved_eta(cfg))
    xs = _linspace(cfg.grid)
    zg, tg = np.meshgrid(xs, xs, indexing="ij")
    direct = evaluate_direct(st, zg, tg)
    table = series_coefficients(st, cfg.tol)
    series = reconstruct(table, zg, tg)
    rows = [
        [zg[i, j], tg[i, j], direct[i, j], series[i, j]]
        for i in range(len(xs))
        for j in range(len(xs))
    ]

    def figure(path):
        figures.save_heatmap_figure(path, zg, tg, direct, "z", "t", "psi(z, t)")

    return (
        ["z", "t", "psi_direct", "psi_series"],
        rows,
        {"series_tail": table.discarded_weight},
        figure,
    )


def _run_decompose(cfg):
    st = CovariantState(cfg.n, _resolved_eta(cfg))
    rule = build_rule(cfg.quad_order)
    table = decompose(lambda z, t: evaluate_direct(st, z, t), cfg.kmax, rule)
    rows = [[m.n_a, m.n_b, table.entries[m]] for m in sorted(table.entries)]

    def figure(path):
        amps = np.zeros((cfg.kmax + 1, cfg.kmax + 1))
        for m, amp in table.entries.items():
            amps[m.n_a, m.n_b] = abs(amp)
        na, nb = np.meshgrid(
            np.arange(cfg.kmax + 1), np.arange(cfg.kmax + 1), indexing="ij"
        )
        figures.save_heatmap_figure(path, na, nb, amps, "n_a", "n_b", "|amplitude|")

    return (
        ["n_a", "n_b", "amplitude"],
        rows,
        {"discarded_weight": table.discarded_weight},
        figure,
    )


def _run_overlap_table(cfg):
    eta = _resolved_eta(cfg)
    rule = build_rule(cfg.quad_order)
    n_hi = cfg.n if cfg.n_hi is None else cfg.n_hi
    ns = list(range(cfg.n, n_hi + 1))
    numeric = [
        overlap(CovariantState(n, 0.0), CovariantState(n, eta), rule) for n in ns
    ]
    closed = [contraction_law(n, eta) for n in ns]
    rows = [[n, eta, numeric[i], closed[i]] for i, n in enumerate(ns)]

    def figure(path):
        figures.save_line_figure(
            path,
            ns,
            {"overlap_numeric": numeric, "contraction_closed": closed},
            "n",
            "rest/moving overlap",
        )

    return ["n", "eta", "overlap_numeric", "contraction_closed"], rows, {}, figure


def _run_entropy_curve(cfg):
    values = _linspace(cfg.grid)
    if cfg.grid_var == "beta":
        betas = values
        etas = np.array([eta_from_beta(b).eta for b in betas])
    else:
        etas = values
        betas = np.array([beta_from_eta(e) for e in etas])
    ent = [entropy(cfg.n, e, cfg.tol) for e in etas]
    pur = [purity(cfg.n, e, cfg.tol) for e in etas]
    tail_max = max(reduced_spectrum(cfg.n, e, cfg.tol).tail for e in etas)
    rows = [[betas[i], etas[i], ent[i], pur[i]] for i in range(len(etas))]

    def figure(path):
        xs = betas if cfg.grid_var == "beta" else etas
        figures.save_line_figure(
            path, xs, {"entropy": ent, "purity": pur}, cfg.grid_var, "S, Tr(rho^2)"
        )

    return (
        ["beta", "eta", "entropy", "purity"],
        rows,
        {"spectrum_tail_max": tail_max},
        figure,
    )


def _run_wigner_grid(cfg):
    eta = _resolved_eta(cfg)
    xs = _linspace(cfg.grid)
    zg, pg = np.meshgrid(xs, xs, indexing="ij")
    vals = wigner(eta, zg, pg)
    rows = [
        [zg[i, j], pg[i, j], vals[i, j]]
        for i in range(len(xs))
        for j in range(len(xs))
    ]

    def figure(path):
        figures.save_heatmap_figure(path, zg, pg, vals, "z", "p", "W(z, p)")

    return ["z", "p", "wigner"], rows, {}, figure


def _run_parton(cfg):
    eta = _resolved_eta(cfg)
    xs = _linspace(cfg.grid)
    vals = parton_distribution(eta, xs)
    rows = [[x, vals[i]] for i, x in enumerate(xs)]

    def figure(path):
        figures.save_line_figure(path, xs, {"density": vals}, "z", "rho(z, z)")

    return ["z", "density"], rows, {}, figure


def _run_formfactor_curve(cfg):
    ps = _linspace(cfg.grid)
    rule = build_rule(cfg.quad_order)
    kins = [breit_frame(p, cfg.mass) for p in ps]
    closed = [form_factor_closed(k) for k in kins]
    numeric = [form_factor_numeric(k, rule) for k in kins]
    static = [static_form_factor(p) for p in ps]
    dipole = [dipole_model(k) for k in kins]
    rows = [
        [ps[i], kins[i].eta, closed[i], numeric[i], static[i], dipole[i]]
        for i in range(len(ps))
    ]

    def figure(path):
        figures.save_line_figure(
            path,
            ps,
            {
                "F_closed": closed,
                "F_numeric": numeric,
                "F_static": static,
                "F_dipole": dipole,
            },
            "p",
            "F(p)",
            logy=True,
        )

    return (
        ["p", "eta", "F_closed", "F_numeric", "F_static", "F_dipole"],
        rows,
        {},
        figure,
    )


def _run_two_mode(cfg):
    eta = _resolved_eta(cfg)
    st = n_photon_squeezed(cfg.n, eta, cfg.tol)
    probs = mode2_distribution(st)
    ks = np.arange(len(st.amplitudes))
    rows = [[int(k), st.amplitudes[k], probs[k]] for k in ks]

    def figure(path):
        figures.save_bar_figure(path, ks, probs, "k", "P(k)")

    tails = {
        "state_tail": st.tail,
        "entanglement_entropy": entanglement_entropy(st),
    }
    return ["k", "amplitude", "probability"], rows, tails, figure


_HANDLERS = {
    "basis": _run_basis,
    "boost-table": _run_boost_table,
    "decompose": _run_decompose,
    "overlap-table": _run_overlap_table,
    "entropy-curve": _run_entropy_curve,
    "wigner-grid": _run_wigner_grid,
    "parton": _run_parton,
    "formfactor-curve": _run_formfactor_curve,
    "two-mode": _run_two_mode,
}


def run(config):
    """Execute a validated RunConfig: write the table, the sidecar, optional figure."""
    columns, rows, tails, figure = _HANDLERS[config.command](config)
    _write_output(config, columns, rows, tails, figure)
    return 0


def _write_output(cfg, columns, rows, tails, figure):
    path = Path(cfg.output)
    if cfg.fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        path.write_text("\n".join(lines) + "\n")
    else:
        payload = {
            "columns": columns,
            "rows": [[_json_value(v) for v in row] for row in rows],
        }
        path.write_text(json.dumps(payload, sort_keys=True) + "\n")
    sidecar = {
        "command": cfg.command,
        "config": _config_dict(cfg),
        "library_version": __version__,
        "quad_order": cfg.quad_order,
        "truncation_tails": tails,
    }
    if cfg.command == "formfactor-curve":
        sidecar["notes"] = {"F_dipole": "illustrative"}
    Path(str(path) + ".meta.json").write_text(
        json.dumps(sidecar, sort_keys=True, indent=2) + "\n"
    )
    if cfg.plot and figure is not None:
        figure(str(path.with_suffix(".png")))


def _json_value(v):
    if isinstance(v, (int, np.integer)):
        return int(v)
    return float(v)


def _config_dict(cfg):
    data = dataclasses.asdict(cfg)
    data["grid"] = list(cfg.grid) if cfg.grid is not None else None
    return data


# ---------------------------------------------------------------------------
# click layer: flag parsing and validation only; all math happens in run().


def _parse_grid(_ctx, _param, value):
    if value is None:
        return None
    try:
        lo, hi, steps = value.split(":")
        grid = (float(lo), float(hi), int(steps))
    except ValueError:
        raise click.UsageError(f"grid must look like MIN:MAX:STEPS, got {value!r}")
    if grid[2] < 2:
        raise click.UsageError(f"grid needs at least 2 steps, got {grid[2]}")
    return grid


def _parse_n_range(_ctx, _param, value):
    try:
        if ".." in value:
            lo, hi = value.split("..")
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(value)
    except ValueError:
        raise click.UsageError(f"mode range must be N or LO..HI, got {value!r}")
    if lo < 0 or hi < lo:
        raise click.UsageError(f"mode range must satisfy 0 <= LO <= HI, got {value!r}")
    return lo, hi


def _check_exclusive(eta, beta):
    if eta is not None and beta is not None:
        raise click.UsageError("--eta and --beta are mutually exclusive")


def _check_tol(tol):
    if not 0.0 < tol < 1.0:
        raise click.UsageError(f"--tol must lie in (0, 1), got {tol}")
    return tol


def _execute(cfg):
    try:
        run(cfg)
    except OscillatorError as exc:
        raise click.ClickException(str(exc))


_eta_option = click.option("--eta", type=float, default=None, help="Boost rapidity.")
_beta_option = click.option(
    "--beta", type=float, default=None, help="Boost velocity (|beta| < 1)."
)
_output_option = click.option(
    "-o", "--output", type=click.Path(dir_okay=False), default="out.csv", help="Output table path."
)
_format_option = click.option(
    "--format", "fmt", type=click.Choice(["csv", "json"]), default="csv", help="Table format."
)
_plot_option = click.option(
    "--plot", is_flag=True, help="Also render a figure next to the table."
)
_tol_option = click.option(
    "--tol", type=float, default=1e-10, help="Series truncation tolerance."
)
_quad_option = click.option(
    "--quad-order", type=int, default=None, help="Quadrature order (default 96 or OSC_QUAD_ORDER)."
)


@click.group()
@click.version_option(version=__version__)
def cli():
    """Tables, curves and figure data for squeeze-boosted oscillator states."""


@cli.command("basis")
@click.option("--n", type=int, default=5, help="Highest mode to tabulate.")
@click.option("--grid", callback=_parse_grid, default="-5:5:201", help="x grid MIN:MAX:STEPS.")
@_output_option
@_format_option
@_plot_option
def basis_cmd(n, grid, output, fmt, plot):
    """Tabulate the oscillator eigenfunctions chi_0..chi_n."""
    _execute(RunConfig("basis", n=n, grid=grid, output=output, fmt=fmt, plot=plot))


@cli.command("boost-table")
@click.option("--n", type=int, default=0, help="Longitudinal excitation.")
@_eta_option
@_beta_option
@click.option("--grid", callback=_parse_grid, default="-3:3:41", help="z and t grid MIN:MAX:STEPS.")
@_tol_option
@_output_option
@_format_option
@_plot_option
def boost_table_cmd(n, eta, beta, grid, tol, output, fmt, plot):
    """Tabulate a boosted state on a (z, t) grid, direct and series routes."""
    _check_exclusive(eta, beta)
    _check_tol(tol)
    _execute(
        RunConfig(
            "boost-table", n=n, eta=eta, beta=beta, grid=grid, tol=tol,
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("decompose")
@click.option("--n", type=int, default=0, help="Longitudinal excitation.")
@_eta_option
@_beta_option
@click.option("--kmax", type=int, default=8, help="Highest mode per axis.")
@_quad_option
@_output_option
@_format_option
@_plot_option
def decompose_cmd(n, eta, beta, kmax, quad_order, output, fmt, plot):
    """Decompose a boosted state over the 2D oscillator basis by quadrature."""
    _check_exclusive(eta, beta)
    _execute(
        RunConfig(
            "decompose", n=n, eta=eta, beta=beta, kmax=kmax,
            quad_order=quad_order or default_quad_order(),
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("overlap-table")
@click.option("--n", callback=_parse_n_range, default="0..3", help="Mode N or range LO..HI.")
@_eta_option
@_beta_option
@_quad_option
@_output_option
@_format_option
@_plot_option
def overlap_table_cmd(n, eta, beta, quad_order, output, fmt, plot):
    """Rest/moving overlaps against the closed contraction law."""
    _check_exclusive(eta, beta)
    _execute(
        RunConfig(
            "overlap-table", n=n[0], n_hi=n[1], eta=eta, beta=beta,
            quad_order=quad_order or default_quad_order(),
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("entropy-curve")
@click.option("--n", type=int, default=0, help="Longitudinal excitation.")
@click.option("--eta-grid", callback=_parse_grid, default=None, help="Rapidity grid MIN:MAX:STEPS.")
@click.option("--beta-grid", callback=_parse_grid, default=None, help="Velocity grid MIN:MAX:STEPS.")
@click.option("--tol", type=float, default=1e-12, help="Spectrum truncation tolerance.")
@_output_option
@_format_option
@_plot_option
def entropy_curve_cmd(n, eta_grid, beta_grid, tol, output, fmt, plot):
    """Entropy and purity of the reduced state along a boost grid."""
    if eta_grid is not None and beta_grid is not None:
        raise click.UsageError("--eta-grid and --beta-grid are mutually exclusive")
    _check_tol(tol)
    grid = beta_grid if beta_grid is not None else eta_grid
    if grid is None:
        grid = (0.0, 2.0, 21)
    grid_var = "beta" if beta_grid is not None else "eta"
    _execute(
        RunConfig(
            "entropy-curve", n=n, grid=grid, grid_var=grid_var, tol=tol,
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("wigner-grid")
@_eta_option
@_beta_option
@click.option("--grid", callback=_parse_grid, default="-3:3:61", help="z and p grid MIN:MAX:STEPS.")
@_output_option
@_format_option
@_plot_option
def wigner_grid_cmd(eta, beta, grid, output, fmt, plot):
    """Ground-state Wigner function on a phase-space grid."""
    _check_exclusive(eta, beta)
    _execute(
        RunConfig(
            "wigner-grid", eta=eta, beta=beta, grid=grid,
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("parton")
@_eta_option
@_beta_option
@click.option("--grid", callback=_parse_grid, default="-6:6:121", help="z grid MIN:MAX:STEPS.")
@_output_option
@_format_option
@_plot_option
def parton_cmd(eta, beta, grid, output, fmt, plot):
    """Longitudinal density rho(z, z) of the boosted ground state."""
    _check_exclusive(eta, beta)
    _execute(
        RunConfig(
            "parton", eta=eta, beta=beta, grid=grid,
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("formfactor-curve")
@click.option("--p-grid", "grid", callback=_parse_grid, default="0:4:21", help="Momentum grid MIN:MAX:STEPS.")
@click.option("--mass", type=float, default=1.0, help="Hadron mass in oscillator units.")
@_quad_option
@_output_option
@_format_option
@_plot_option
def formfactor_curve_cmd(grid, mass, quad_order, output, fmt, plot):
    """Elastic form factor: closed, numeric, static and dipole columns."""
    if mass <= 0.0:
        raise click.UsageError(f"--mass must be positive, got {mass}")
    _execute(
        RunConfig(
            "formfactor-curve", grid=grid, mass=mass,
            quad_order=quad_order or default_quad_order(),
            output=output, fmt=fmt, plot=plot,
        )
    )


@cli.command("two-mode")
@click.option("--n", type=int, default=0, help="Seed photon number of mode 1.")
@_eta_option
@_beta_option
@click.option("--tol", type=float, default=1e-12, help="Amplitude truncation tolerance.")
@_output_option
@_format_option
@_plot_option
def two_mode_cmd(n, eta, beta, tol, output, fmt, plot):
    """Amplitudes and mode-2 photon statistics of an n-photon squeezed state."""
    _check_exclusive(eta, beta)
    _check_tol(tol)
    _execute(
        RunConfig(
            "two-mode", n=n, eta=eta, beta=beta, tol=tol,
            output=output, fmt=fmt, plot=plot,
        )
    )


def main():
    cli(prog_name="boostosc")


if __name__ == "__main__":
    main()
