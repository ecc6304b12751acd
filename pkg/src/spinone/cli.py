"""Command-line front end.

    spinone spectrum --model bilinear --n 2
    spinone sweep-gamma --model bb --n 2 --temps 0.05 --gamma -1:1:201
    spinone threshold --model bilinear --n 3 --out t.json --format json
    spinone validate

A ``--config`` file holds flat ``key = value`` lines using the flag names;
flags given on the command line win.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from . import analysis, io, validation
from .errors import ArgumentError, SpinOneError
from .model import BILINEAR_BIQUADRATIC, ModelSpec, build_hamiltonian, canonical_kind
from .spectra import diagonalize, spectrum_rows

COMMANDS = ("spectrum", "negativity", "sweep-gamma", "sweep-temp", "threshold",
            "threshold-curve", "validate")
OPTIONS = ("model", "n", "j", "gamma", "temp", "temps", "pair", "gamma_grid", "temp_grid",
           "out", "format", "t_lo", "t_hi", "tol")
DEFAULTS = {"model": "bilinear", "n": 2, "j": 1.0, "pair": "1,2", "format": "csv",
            "t_lo": 0.0, "t_hi": 10.0, "tol": analysis.THRESHOLD_TOL}
DEFAULT_TEMP_GRID = "0:2:21"
DEFAULT_GAMMA_GRID = "-1:1:201"


def parse_grid(text):
    """``start:end:steps`` -> evenly spaced values (steps=1 gives [start])."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ArgumentError(f"grid must look like start:end:steps, got {text!r}")
    try:
        start, end, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ArgumentError(f"malformed grid {text!r}") from None
    if steps < 1 or start > end:
        raise ArgumentError(f"grid needs steps >= 1 and start <= end, got {text!r}")
    if steps == 1:
        return np.array([start])
    return np.linspace(start, end, steps)


def parse_values(text):
    """Comma-separated numbers or a grid."""
    text = str(text)
    if ":" in text:
        return parse_grid(text)
    try:
        return np.array([float(x) for x in text.split(",") if x.strip()])
    except ValueError:
        raise ArgumentError(f"expected numbers, got {text!r}") from None


def parse_pair(text):
    try:
        i, j = (int(x) for x in str(text).replace(" ", "").split(","))
    except ValueError:
        raise ArgumentError(f"pair must look like i,j, got {text!r}") from None
    return i, j


def read_config(path):
    values = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ArgumentError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lstrip("-").replace("-", "_")
        if key not in OPTIONS:
            raise ArgumentError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value
    return values


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file; flags override it")
    common.add_argument("--model", help="bilinear | bb (bilinear_biquadratic) | all_to_all")
    common.add_argument("--n", type=int, help="number of sites (2..8)")
    common.add_argument("--j", type=float, help="coupling J (default 1)")
    common.add_argument("--gamma", help="biquadratic coupling, or a start:end:steps grid for sweep-gamma")
    common.add_argument("--temp", help="temperature (k_B = 1); 0 means the ground-level mixture")
    common.add_argument("--temps", help="comma-separated temperatures or a grid")
    common.add_argument("--pair", help="site pair i,j (default 1,2)")
    common.add_argument("--gamma-grid", dest="gamma_grid", help="start:end:steps")
    common.add_argument("--temp-grid", dest="temp_grid", help="start:end:steps")
    common.add_argument("--t-lo", dest="t_lo", type=float, help="threshold bracket low end")
    common.add_argument("--t-hi", dest="t_hi", type=float, help="threshold bracket high end")
    common.add_argument("--tol", type=float, help="threshold tolerance in T")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", choices=("csv", "json"))

    parser = argparse.ArgumentParser(prog="spinone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def resolve(args):
    """Merge defaults < config file < flags into a plain dict."""
    opts = dict(DEFAULTS)
    if args.config:
        opts.update(read_config(args.config))
    for key in OPTIONS:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    opts["command"] = args.command
    return opts


def _model(opts, gamma=None):
    kind = canonical_kind(opts["model"])
    if kind == BILINEAR_BIQUADRATIC:
        if gamma is None:
            if opts.get("gamma") is None:
                raise ArgumentError("--gamma is required for the bilinear-biquadratic model")
            gamma = _scalar(opts["gamma"], "gamma")
    else:
        gamma = None
    return ModelSpec(kind, int(opts["n"]), float(opts["j"]), gamma)


def _scalar(text, name):
    try:
        return float(text)
    except ValueError:
        raise ArgumentError(f"--{name} must be a number here, got {text!r}") from None


def _gamma_grid(opts):
    if opts.get("gamma_grid") is not None:
        return parse_grid(opts["gamma_grid"])
    if opts.get("gamma") is not None and ":" in str(opts["gamma"]):
        return parse_grid(opts["gamma"])
    return parse_grid(DEFAULT_GAMMA_GRID)


def _temps(opts, default):
    if opts.get("temp_grid") is not None:
        return parse_grid(opts["temp_grid"])
    if opts.get("temps") is not None:
        return parse_values(opts["temps"])
    if opts.get("temp") is not None:
        return parse_values(opts["temp"])
    return np.asarray(default, dtype=float)


def _default_sweep_temps(n):
    return {3: analysis.SWEEP_TEMPS_THREE_SPIN, 4: analysis.SWEEP_TEMPS_FOUR_SPIN}.get(n, analysis.SWEEP_TEMPS_TWO_SPIN)


def execute(opts):
    """Run one command; returns (text to emit, exit status)."""
    command, fmt = opts["command"], opts["format"]
    pair = parse_pair(opts["pair"])

    if command == "validate":
        checks = validation.run_checks()
        return validation.format_table(checks) + "\n", int(not all(c.passed for c in checks))

    if command == "spectrum":
        spec = diagonalize(build_hamiltonian(_model(opts)))
        return io.format_records(spectrum_rows(spec), io.SPECTRUM_COLUMNS, fmt), 0

    if command == "negativity":
        temp = _scalar(opts.get("temp") or 0.0, "temp")
        return io.format_records([analysis.thermal_negativity(_model(opts), temp, pair)],
                                 io.SWEEP_COLUMNS, fmt), 0

    if command == "sweep-temp":
        temps = _temps(opts, parse_grid(DEFAULT_TEMP_GRID))
        return io.format_records(analysis.temperature_sweep(_model(opts), temps, pair),
                                 io.SWEEP_COLUMNS, fmt), 0

    if command == "sweep-gamma":
        template = _model({**opts, "model": BILINEAR_BIQUADRATIC}, gamma=0.0)
        temps = _temps(opts, _default_sweep_temps(template.n_sites))
        rows = analysis.gamma_sweep(template, _gamma_grid(opts), temps, pair)
        return io.format_records(rows, io.SWEEP_COLUMNS, fmt), 0

    t_lo, t_hi, tol = float(opts["t_lo"]), float(opts["t_hi"]), float(opts["tol"])
    if command == "threshold":
        result = analysis.threshold_temperature(_model(opts), pair, t_lo, t_hi, tol)
        return io.format_records([result], io.THRESHOLD_COLUMNS, fmt), 0

    if command == "threshold-curve":
        template = _model({**opts, "model": BILINEAR_BIQUADRATIC}, gamma=0.0)
        rows = analysis.threshold_curve(template, _gamma_grid(opts), pair, t_lo, t_hi, tol)
        return io.format_records(rows, io.THRESHOLD_COLUMNS, fmt), 0

    raise ArgumentError(f"unknown command {command!r}")


def _attach_negative_values(argv):
    # argparse reads "-1:1:5" as a flag; bind it to the preceding option instead
    out = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and len(tok) > 1 and tok[0] == "-" and (tok[1].isdigit() or tok[1] == ".")):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_negative_values(argv))
    try:
        opts = resolve(args)
        text, status = execute(opts)
    except SpinOneError as exc:
        print(f"spinone: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"spinone: error: {exc}", file=sys.stderr)
        return 2
    out = opts.get("out")
    if out and args.command != "validate":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
