"""Command line entry point: ``paritykick {run,presets,sweep,anticommutant}``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .errors import ContractViolation, ValidationError
from .experiments import io
from .experiments.config import load_scenario
from .experiments.models import HeisenbergDM, IsingChain, parse_terms
from .experiments.scenario import get_preset, list_presets, run_scenario, sweep_min_cv
from .pauli import anticommutant

EXIT_OK, EXIT_VALIDATION, EXIT_CONTRACT = 0, 2, 3


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _scenario(args):
    if args.config:
        return load_scenario(args.config)
    return get_preset(args.preset)


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_run(args) -> int:
    report = run_scenario(_scenario(args))
    _emit(io.report_csv(report), args.out)
    if args.free_out:
        if report.free_rows is None:
            raise ValidationError("scenario produced no free-evolution comparison rows")
        _emit(io.report_csv(report, free=True), args.free_out)
    if args.report:
        _emit(io.report_json(report) + "\n", args.report)
    return EXIT_OK


def cmd_presets(args) -> int:
    sys.stdout.write(json.dumps(list_presets(), indent=2) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.T:
        Ts = args.T
    else:
        lo, hi, count = args.T_log
        Ts = list(np.geomspace(float(lo), float(hi), int(count)))
    rows = sweep_min_cv(_scenario(args), Ts)
    _emit(io.sweep_csv(rows), args.out)
    return EXIT_OK


def cmd_anticommutant(args) -> int:
    if args.terms:
        h = parse_terms(args.terms)
    elif args.ising_J is not None or args.ising_h is not None:
        if args.ising_J is None or args.ising_h is None:
            raise ValidationError("--ising-J and --ising-h must be given together")
        h = IsingChain(tuple(args.ising_J), tuple(args.ising_h)).hamiltonian()
    elif args.dm:
        h = HeisenbergDM(*args.dm).hamiltonian()
    else:
        h = _scenario(args).hamiltonian
    for p in anticommutant(h):
        print(p.label)
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser, required: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--preset", help="preset name (see 'presets')")
    g.add_argument("--config", help="TOML scenario file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="paritykick", description="Parity-kick entanglement preservation in spin chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a scenario and write its trajectory as CSV")
    _add_source(p)
    p.add_argument("--out", help="CSV path for the scheduled trajectory (default: stdout)")
    p.add_argument("--free-out", help="CSV path for the free-evolution comparison")
    p.add_argument("--report", help="JSON path for the full run report")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("presets", help="list figure presets and their parameters")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("sweep", help="preserved minimum CV against half period T")
    _add_source(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--T", type=float, nargs="+", help="explicit half periods")
    g.add_argument("--T-log", nargs=3, metavar=("LO", "HI", "COUNT"), help="log-spaced half periods")
    p.add_argument("--out", help="CSV path (default: stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("anticommutant", help="print Pauli kicks anti-commuting with a model")
    _add_source(p, required=False)
    p.add_argument("--terms", nargs="+", metavar="COEF*LABEL", help="explicit Pauli sum, e.g. 2*ZZI 4*IZZ 6*IXI")
    p.add_argument("--ising-J", type=_floats, help="Ising couplings, comma separated")
    p.add_argument("--ising-h", type=_floats, help="Ising fields, comma separated")
    p.add_argument("--dm", type=float, nargs=3, metavar=("J1", "J2", "D"), help="Heisenberg model with DM term")
    p.set_defaults(func=cmd_anticommutant)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "anticommutant":
        sources = [args.preset, args.config, args.terms, args.ising_J or args.ising_h, args.dm]
        if sum(s is not None for s in sources) != 1:
            parser.error("anticommutant needs exactly one model source")
    try:
        return args.func(args)
    except ContractViolation as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
