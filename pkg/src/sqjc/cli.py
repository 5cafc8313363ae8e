"""Command-line front end: ``sqjc {spectrum,critical,sweep,gapscan,validate}``.

Exit codes: 0 success, 1 usage or config error, 2 numerical/convergence
failure, 3 validation failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import analytic, ed, sweep, validation
from .fock import FockSpace
from .models import ModelParams, RabiParams, auto_cutoff, build_jcm, build_mjc, build_rabi

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC, EXIT_VALIDATION = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cutoff(text: str) -> int | str:
    if text == "auto":
        return text
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("cutoff must be >= 1")
    return n


def _positive(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return x


def _num(x):
    if x is None or isinstance(x, (bool, str, int)):
        return x
    if isinstance(x, (list, tuple, np.ndarray)):
        return [_num(v) for v in x]
    return float(f"{float(x):.12g}")


def _render(fmt: str, rows: list[dict], summary: dict | None = None) -> str:
    """Render row records plus an optional summary as table, json or csv."""
    summary = summary or {}
    if fmt == "json":
        doc = {k: _num(v) for k, v in summary.items()}
        doc["rows"] = [{k: _num(v) for k, v in r.items()} for r in rows]
        return json.dumps(doc, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        cols = list(rows[0]) if rows else []
        cols += [k for k in summary if k not in cols]
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows or [{}]:
            merged = {**summary, **r}
            w.writerow([sweep.format_number(merged.get(c)) if not isinstance(merged.get(c), str) else merged[c] for c in cols])
        return buf.getvalue().rstrip("\n")
    lines = []
    if rows:
        cols = list(rows[0])
        cells = [[str(c) for c in cols]] + [
            [v if isinstance(v, str) else sweep.format_number(v) for v in r.values()] for r in rows
        ]
        widths = [max(len(row[i]) for row in cells) for i in range(len(cols))]
        for row in cells:
            lines.append("  ".join(s.rjust(w) for s, w in zip(row, widths)))
    width = max((len(k) for k in summary), default=0)
    for k, v in summary.items():
        text = v if isinstance(v, str) else ("-" if v is None else sweep.format_number(v))
        lines.append(f"{k.ljust(width)}  {text}")
    return "\n".join(lines)


def cmd_spectrum(args) -> int:
    if args.squeeze is not None and args.model != "mjc":
        raise UsageError("--squeeze is only valid with --model mjc")
    r = args.squeeze or 0.0
    if args.model == "rabi":
        params = RabiParams(args.omega_c, args.omega_a, args.coupling)
        build = lambda s: build_rabi(params, s)  # noqa: E731
    else:
        if args.coupling < 0 or r < 0:
            raise UsageError("--coupling and --squeeze must be nonnegative")
        params = ModelParams(args.omega_c, args.omega_a, args.coupling, r)
        build = (lambda s: build_mjc(params, s)) if args.model == "mjc" else (lambda s: build_jcm(params, s))

    if args.cutoff == "auto":
        n_start = auto_cutoff(r)
        spec = ed.converged_spectrum(build, n_levels=args.levels, n_start=n_start, n_max=max(512, 2 * n_start))
    else:
        if args.levels > 2 * (args.cutoff + 1):
            raise UsageError("--levels exceeds the Hilbert-space dimension")
        spec = ed.spectrum_ed(build(FockSpace(args.cutoff)), args.levels)
        spec = ed.SpectrumResult(spec.energies, args.cutoff, True)

    try:
        if args.model == "jcm":
            gap_analytic = analytic.jcm_gap(args.omega_c, args.omega_a, args.coupling)[0]
        elif args.model == "rabi":
            gap_analytic = analytic.rabi_gap(args.omega_c, args.omega_a, args.coupling)[0]
        else:
            gap_analytic = analytic.normal_phase_gap(params).gap
    except analytic.UnphysicalRegime:
        gap_analytic = None

    rows = [{"level": i, "energy": float(e)} for i, e in enumerate(spec.energies)]
    summary = {
        "model": args.model,
        "gap_ed": spec.gap if len(spec.energies) > 1 else None,
        "gap_analytic": gap_analytic,
        "cutoff_used": spec.cutoff_used,
        "converged": spec.converged,
    }
    print(_render(args.format, rows, summary))
    if not spec.converged:
        print("error: spectrum did not converge below the maximum cutoff", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_critical(args) -> int:
    if args.squeeze < 0:
        raise UsageError("--squeeze must be nonnegative")
    ca = analytic.critical_coupling("caseA", args.omega_c, args.omega_a, args.squeeze)
    cb = analytic.critical_coupling("caseB", args.omega_c, args.omega_a, args.squeeze)
    summary = {
        "omega_c": args.omega_c,
        "omega_a": args.omega_a,
        "r": args.squeeze,
        "omega_crit_caseA": ca.omega_crit,
        "omega_crit_caseB": cb.omega_crit,
        "lambda_crit_rabi": analytic.rabi_critical_lambda(args.omega_c, args.omega_a),
    }
    print(_render(args.format, [], summary))
    return EXIT_OK


def cmd_sweep(args) -> int:
    try:
        config = sweep.load_config(args.config)
    except OSError as exc:
        print(f"error: cannot read config {args.config}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_USAGE
    except sweep.ConfigError as exc:
        print(f"error: {args.config}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows = sweep.run_sweep(config, workers=None)
    sweep.write_csv(rows, config.output_path)
    failed = sum(r.error is not None for r in rows)
    print(f"wrote {len(rows)} rows to {config.output_path}" + (f" ({failed} with errors)" if failed else ""))
    return EXIT_OK


def cmd_gapscan(args) -> int:
    if args.squeeze < 0 or args.coupling_min < 0:
        raise UsageError("--squeeze and --coupling-min must be nonnegative")
    if args.coupling_max < args.coupling_min:
        raise UsageError("--coupling-max is below --coupling-min")
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    template = ModelParams(args.omega_c, args.omega_a, 0.0, args.squeeze)
    grid = [args.coupling_min] if args.steps == 1 else list(np.linspace(args.coupling_min, args.coupling_max, args.steps))
    cutoff = None if args.cutoff == "auto" else args.cutoff
    scan = ed.gap_scan(template, grid, cutoff=cutoff, parity=args.parity, workers=None)
    refine_cutoff = cutoff or max(p.cutoff_used for p in scan)
    x_min, gap_min = ed.locate_gap_minimum(
        template, grid, cutoff=refine_cutoff, scan=scan, parity=args.parity, first=True
    )
    rows = [
        {"omega": p.coupling, "gap": p.gap, "mean_photons": p.mean_photons, "cutoff_used": p.cutoff_used, "converged": p.converged}
        for p in scan
    ]
    summary = {
        "gap_min_omega": x_min,
        "gap_min": gap_min,
        "omega_crit_caseB": analytic.critical_coupling("caseB", args.omega_c, args.omega_a, args.squeeze).omega_crit,
    }
    print(_render(args.format, rows, summary))
    if not all(p.converged for p in scan) and not args.allow_unconverged:
        print("error: some scan points did not converge (use --allow-unconverged)", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_validate(args) -> int:
    results = validation.run_suites(full=args.full)
    for res in results:
        print(f"{'PASS' if res.passed else 'FAIL'}  {res.name}")
        for line in res.details:
            print(f"      {line}")
    failed = [r.name for r in results if not r.passed]
    if failed:
        print(f"validation failed: {', '.join(failed)}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sqjc",
        description=(
            "Squeezed-photon Jaynes-Cummings model: spectra, critical points, sweeps. "
            "Units: hbar = 1 and omega_c defaults to 1, so energies are in units of omega_c."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="{spectrum,critical,sweep,gapscan,validate}")

    def freqs(p):
        p.add_argument("--omega-c", type=_positive, default=1.0, help="cavity frequency (default 1)")
        p.add_argument("--omega-a", type=_positive, default=1.0, help="atomic frequency (default 1)")

    def fmt(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")

    p = sub.add_parser("spectrum", help="lowest ED levels and gaps")
    p.add_argument("--model", choices=("mjc", "jcm", "rabi"), default="mjc")
    freqs(p)
    p.add_argument("--coupling", type=float, default=0.0, help="Omega (mjc, jcm) or lambda (rabi)")
    p.add_argument("--squeeze", type=float, default=None, help="squeeze parameter r (mjc only)")
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--cutoff", type=_cutoff, default="auto", help="'auto' or an integer photon cutoff")
    fmt(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("critical", help="critical couplings of both branches")
    freqs(p)
    p.add_argument("--squeeze", type=float, default=0.0)
    fmt(p)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("sweep", help="phase-diagram sweep from a JSON config, written as CSV")
    p.add_argument("--config", required=True, metavar="PATH")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gapscan", help="ED gap along a coupling grid")
    freqs(p)
    p.add_argument("--squeeze", type=float, default=0.0)
    p.add_argument("--coupling-min", type=float, required=True)
    p.add_argument("--coupling-max", type=float, required=True)
    p.add_argument("--coupling-steps", "--steps", dest="steps", type=int, default=21)
    p.add_argument("--cutoff", type=_cutoff, default="auto")
    p.add_argument("--parity", action="store_true", help="gap inside the ground-state parity sector")
    p.add_argument("--allow-unconverged", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_gapscan)

    p = sub.add_parser("validate", help="run the built-in identity suites")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--quick", action="store_true", help="reduced grids (default)")
    mode.add_argument("--full", action="store_true", help="complete grids")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help and on usage errors; report the code instead
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"sqjc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, RuntimeError, ArithmeticError) as exc:
        print(f"sqjc: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
