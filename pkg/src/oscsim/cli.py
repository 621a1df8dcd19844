"""Command-line scenario runner.

One subcommand per physical setting (lz, dissipative, driven, gate), a
generic `compare` for arbitrary configs, and `sweep` for Cartesian
parameter grids.  Every run writes <name>.csv, <name>_report.json and,
unless suppressed, <name>.svg into the output directory.

Exit codes: 0 success, 1 validation problem, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import model, output, scenario
from .errors import ScenarioError, SimulationError

_KIND_BY_COMMAND = {
    "lz": (model.LZ_LINEAR, model.LZ_ARCTAN),
    "dissipative": (model.DISSIPATIVE,),
    "driven": (model.DRIVEN,),
}

_DEFAULT_CONFIG = {
    "lz": "fig1_v02",
    "dissipative": "fig2",
    "driven": "fig3",
    "gate": "cnot",
    "sweep": "fig1_sweep",
}


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; route through the
    # validation path instead so the documented codes hold
    def error(self, message):
        raise ScenarioError(message)


def _add_common(sub):
    sub.add_argument("--config", help="scenario file path or bundled name")
    sub.add_argument("--out-dir", default=".", help="output directory")
    sub.add_argument("--rtol", type=float, help="relative tolerance")
    sub.add_argument("--atol", type=float, help="absolute tolerance")
    sub.add_argument("--samples", type=int, help="sample grid size")
    sub.add_argument("--no-plot", action="store_true",
                     help="skip SVG output")
    sub.add_argument("--schemes",
                     help="comma list from quantum,exact,rca,doubled,gate")


def build_parser():
    parser = _Parser(prog="oscsim",
                     description="coupled-oscillator quantum dynamics runner")
    subs = parser.add_subparsers(dest="command", required=True)
    for name, text in (
            ("lz", "avoided-crossing sweep scenarios"),
            ("dissipative", "damped two-level scenarios"),
            ("driven", "damped and driven two-level scenarios"),
            ("gate", "qubit circuit on register oscillators"),
            ("compare", "run any scenario file and report agreement"),
            ("sweep", "expand a [sweep] grid and run it concurrently")):
        _add_common(subs.add_parser(name, help=text))
    return parser


def _load(args):
    name = args.config or _DEFAULT_CONFIG.get(args.command)
    if name is None:
        raise ScenarioError(f"{args.command} needs --config")
    if os.path.exists(name):
        return scenario.load_scenario(name)
    if os.sep not in name and "." not in name:
        return scenario.load_bundled(name)
    raise ScenarioError(f"no such config file {name!r}")


def _apply_overrides(cfg, args):
    integrator = cfg.integrator
    updates = {}
    if args.rtol is not None:
        updates["rtol"] = args.rtol
    if args.atol is not None:
        updates["atol"] = args.atol
    if args.samples is not None:
        updates["sample_count"] = args.samples
    if updates:
        integrator = dataclasses.replace(integrator, **updates)
        cfg = dataclasses.replace(cfg, integrator=integrator)
    if args.schemes:
        schemes = tuple(s.strip() for s in args.schemes.split(",")
                        if s.strip())
        try:
            cfg = dataclasses.replace(cfg, schemes=schemes)
        except ValueError as exc:
            raise ScenarioError(str(exc)) from None
    return cfg


def _check_command_kind(cfg, command):
    kinds = _KIND_BY_COMMAND.get(command)
    if kinds is not None:
        if cfg.spec is None or cfg.spec.kind not in kinds:
            raise ScenarioError(
                f"{command} expects a Hamiltonian of kind "
                f"{' or '.join(kinds)}")
    if command == "gate" and "gate" not in cfg.schemes:
        raise ScenarioError("gate command needs the gate scheme")


def _write_outputs(name, results, report, out_dir, no_plot):
    os.makedirs(out_dir, exist_ok=True)
    output.emit_csv(results, os.path.join(out_dir, f"{name}.csv"))
    output.emit_report(report, os.path.join(out_dir, f"{name}_report.json"))
    if not no_plot:
        output.emit_plot(results, report,
                         os.path.join(out_dir, f"{name}.svg"), title=name)


def _print_report(name, report, stream):
    print(f"scenario {name}", file=stream)
    for (a, b), diff in sorted(report.pairs.items()):
        print(f"  max |P_{a} - P_{b}| = {diff.max_diff:.6e} "
              f"at t = {diff.t_at_max:.6g}", file=stream)
    for scheme, pops in sorted(report.final_populations.items()):
        rendered = ", ".join(f"{p:.6f}" for p in pops)
        print(f"  final populations ({scheme}): {rendered}", file=stream)
    if report.zener_prediction is not None:
        print(f"  asymptotic formula prediction: "
              f"{report.zener_prediction:.6f}", file=stream)
    for key, value in sorted(report.diagnostics.items()):
        print(f"  {key}: {value:.6e}", file=stream)


def _run_single(cfg, args, stream):
    results, report = scenario.run_scenario(cfg)
    _write_outputs(cfg.name, results, report, args.out_dir, args.no_plot)
    _print_report(cfg.name, report, stream)


def _run_sweep(cfg, args, stream):
    if not cfg.sweep:
        raise ScenarioError("sweep needs a config with a [sweep] section")
    cfgs = scenario.expand_sweep(cfg)
    workers = min(len(cfgs), os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        runs = list(pool.map(scenario.run_scenario, cfgs))
    # computation is concurrent; all files are written from this thread
    for sub, (results, report) in zip(cfgs, runs):
        _write_outputs(sub.name, results, report, args.out_dir, args.no_plot)
        _print_report(sub.name, report, stream)


def main(argv=None):
    stream = sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = _apply_overrides(_load(args), args)
        _check_command_kind(cfg, args.command)
        if args.command == "sweep":
            _run_sweep(cfg, args, stream)
        else:
            _run_single(cfg, args, stream)
        return 0
    except SimulationError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (ScenarioError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
