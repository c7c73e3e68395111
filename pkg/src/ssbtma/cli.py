"""
Command-line interface.

Subcommands
-----------
design      calibrate roll-off, duty and amplitude for L beams (JSON)
coeffs      excitation matrix G_nq (CSV)
pattern     normalized harmonic patterns (CSV)
efficiency  closed-form power/efficiency report (JSON)
simulate    control waveforms and array-output spectrum (CSV)
verify      oracle suite (JSON); exit 3 if any check fails

Exit status: 0 success, 1 I/O failure, 2 invalid input, 3 failed verification.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from .array import pattern
from .checks import build_run, run_checks
from .config import ConfigError, RunConfig, load_config
from .design import DesignError, make_design, solve_rho_for_L
from .efficiency import report
from .oracle import DBC_FLOOR, extract_coefficients, line_spectrum, sample_period
from .modulation import synth_time

EXIT_IO, EXIT_INVALID, EXIT_VERIFY = 1, 2, 3

DESIGN_KEYS = (
    "L", "rho", "rho_feasible_interval", "xi", "omega_bar_1", "omega_bar_2",
    "level_L_db", "level_L1_db", "amplitude", "eta_TMA", "eta_mod", "eta",
)


class CLIError(Exception):
    def __init__(self, message, status):
        super().__init__(message)
        self.status = status


def fmt(x) -> str:
    """Shortest round-trip text of ``x`` rounded to 12 significant digits."""
    x = float(x)
    if not math.isfinite(x):
        return repr(x)
    return repr(float(f"{x:.12g}"))


def _round(obj):
    if isinstance(obj, float):
        return float(fmt(obj)) if math.isfinite(obj) else obj
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, np.generic):
        return _round(obj.item())
    return obj


def dumps(obj) -> str:
    return json.dumps(_round(obj), indent=2, allow_nan=True) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise CLIError(f"cannot write {out}: {exc}", EXIT_IO) from None


def _config(args) -> RunConfig:
    if not getattr(args, "config", None):
        raise CLIError(f"{args.command} needs --config PATH", EXIT_INVALID)
    try:
        return load_config(args.config)
    except OSError as exc:
        raise CLIError(f"cannot read {args.config}: {exc}", EXIT_IO) from None


# -- commands --------------------------------------------------------------

def design_record(L, rho=None, T0=1.0, N=20) -> dict:
    spec = make_design(L, rho, T0=T0, amplitude="auto", N=N)
    sol = solve_rho_for_L(L)
    interval = next((iv for iv in sol.intervals if iv[0] <= spec.rho <= iv[1]), (spec.rho, spec.rho))
    rep = report(spec, N)
    values = {
        "L": L,
        "rho": spec.rho,
        "rho_feasible_interval": list(interval),
        "xi": spec.xi,
        "omega_bar_1": spec.omega_bar_1,
        "omega_bar_2": spec.omega_bar_2,
        "level_L_db": rep.level_L_db,
        "level_L1_db": rep.level_L1_db,
        "amplitude": spec.amplitude,
        "eta_TMA": rep.eta_TMA,
        "eta_mod": rep.eta_mod,
        "eta": rep.eta,
    }
    return {k: values[k] for k in DESIGN_KEYS}


def cmd_design(args):
    if args.harmonics is None:
        cfg = _config(args)
        L, rho, T0, N = cfg.L, None if cfg.rho == "auto" else cfg.rho, cfg.T0, cfg.N
    else:
        L, rho, T0, N = args.harmonics, args.rho, args.period, args.elements
    _write(dumps(design_record(L, rho, T0, N)), args.out)


def cmd_coeffs(args):
    run = build_run(_config(args))
    ex = run.ex
    rows = []
    for n in range(ex.N):
        for j, q in enumerate(ex.harmonics):
            G = ex.G[n, j]
            rows.append((n, int(q), float(G.real), float(G.imag), float(abs(G)), float(ex.phase[n, j])))
    _write(_csv(("element", "q", "re", "im", "magnitude", "phase_rad"), rows), args.out)


def cmd_pattern(args):
    run = build_run(_config(args))
    cfg = run.config
    steps = int(round(180.0 / cfg.grid_deg))
    grid = np.linspace(0.0, steps * cfg.grid_deg, steps + 1)
    qs = range(1, run.spec.L + 2)
    samples = pattern(run.ex, run.geo, qs, grid)
    if args.amplitudes:
        header = ("theta_deg", "q", "power_db", "re", "im")
        rows = [(s.theta, s.q, s.power_db, repr(s.value.real), repr(s.value.imag)) for s in samples]
    else:
        header = ("theta_deg", "q", "power_db")
        rows = [(s.theta, s.q, s.power_db) for s in samples]
    _write(_csv(header, rows), args.out)


def cmd_efficiency(args):
    run = build_run(_config(args))
    _write(dumps(report(run.spec, run.config.N).to_dict()), args.out)


def cmd_simulate(args):
    run = build_run(_config(args))
    cfg, ex = run.config, run.ex
    M = cfg.samples_per_period
    t = ex.T0 * np.arange(M) / M
    g, gh = synth_time(ex, t)
    rows = [(float(t[m]), n, float(g[n, m]), float(gh[n, m])) for m in range(M) for n in range(ex.N)]
    wave = _csv(("t", "element", "g", "g_hilbert"), rows)

    C = line_spectrum(ex, run.geo, args.theta, M)
    q_max = (len(C) - 1) // 2
    power = np.abs(C) ** 2
    ref = power.max()
    with np.errstate(divide="ignore"):
        dbc = np.maximum(10.0 * np.log10(power / ref), DBC_FLOOR) if ref > 0 else np.full(power.shape, DBC_FLOOR)
    spectrum = _csv(("q", "power_dbc"), [(q, float(v)) for q, v in zip(range(-q_max, q_max + 1), dbc)])

    if args.out in (None, "-"):
        _write(wave + "\n" + spectrum, None) if args.spectrum_out is None else _write(wave, None)
        if args.spectrum_out is not None:
            _write(spectrum, args.spectrum_out)
        return
    _write(wave, args.out)
    spec_path = args.spectrum_out or str(Path(args.out).with_name(Path(args.out).stem + "_spectrum.csv"))
    _write(spectrum, spec_path)


def cmd_verify(args):
    results = run_checks(build_run(_config(args)))
    _write(dumps(results), args.out)
    if not all(r["pass"] for r in results):
        raise CLIError("verification failed: " + ", ".join(r["check"] for r in results if not r["pass"]), EXIT_VERIFY)


# -- parser ----------------------------------------------------------------

def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    d = argparse.SUPPRESS if suppress else None
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", metavar="PATH", default=d, help="JSON run configuration")
    p.add_argument("--out", metavar="PATH", default=d, help="output file (default: stdout)")
    p.add_argument("--seedless", action="store_true", default=d if suppress else False,
                   help="reserved; no command uses randomness")
    p.add_argument("--threads", type=int, metavar="K", default=d if suppress else 0,
                   help="reserved; computations are vectorized in-process (0 = auto)")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssbtma",
        description="Single-sideband time-modulated multibeam array design and verification",
        parents=[_global_flags(False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = [_global_flags(True)]

    p = sub.add_parser("design", parents=common, help="calibrate a design for L beams")
    p.add_argument("--harmonics", "-L", type=int, help="number of exploited harmonic beams")
    p.add_argument("--rho", type=float, help="roll-off factor (default: solved from L)")
    p.add_argument("--period", type=float, default=1.0, help="modulation period T0")
    p.add_argument("--elements", "-N", type=int, default=20, help="number of array elements")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("coeffs", parents=common, help="excitation matrix as CSV")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("pattern", parents=common, help="harmonic patterns as CSV")
    p.add_argument("--amplitudes", action="store_true", help="append full-precision complex amplitudes")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("efficiency", parents=common, help="efficiency report as JSON")
    p.set_defaults(func=cmd_efficiency)

    p = sub.add_parser("simulate", parents=common, help="control waveforms and output spectrum")
    p.add_argument("--theta", type=float, default=90.0, help="observation angle for the spectrum (deg)")
    p.add_argument("--spectrum-out", metavar="PATH", help="spectrum CSV path (default: <out>_spectrum.csv)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", parents=common, help="run the oracle suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads is not None and args.threads < 0:
        print("ssbtma: --threads must be >= 0", file=sys.stderr)
        return EXIT_INVALID
    try:
        args.func(args)
    except CLIError as exc:
        print(f"ssbtma: {exc}", file=sys.stderr)
        return exc.status
    except (ConfigError, DesignError, ValueError) as exc:
        print(f"ssbtma: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"ssbtma: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
