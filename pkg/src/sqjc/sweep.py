"""Phase-diagram sweeps over (squeeze, coupling) grids with CSV output.

Config documents are JSON objects::

    {
      "omega_c": 1.0, "omega_a": 1.0,
      "r_grid": [0.0, 1.0, 5],            # or {"min": .., "max": .., "steps": ..}
      "coupling_grid": [0.0, 4.0, 9],
      "cutoff": "auto",                   # or an integer
      "n_levels": 4,
      "include_ed": false,
      "output_path": "sweep.csv"
    }

Only the first four keys are required.  The phase boundary is the ``caseB``
critical coupling; rows on the superradiant side with ``r > 0`` extrapolate
the displaced generic-Rabi pipeline and carry ``approximate = True`` (not
serialized).  Failed analytic or ED evaluations leave the affected cells
empty and record the message in ``SweepRow.error``.
"""
from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable

import numpy as np

from . import analytic
from .ed import converged_spectrum, ground_observables, spectrum_ed, worker_count
from .fock import FockSpace
from .models import ModelParams, auto_cutoff, build_mjc

__all__ = [
    "ConfigError",
    "Grid",
    "SweepConfig",
    "SweepRow",
    "CSV_HEADER",
    "parse_config",
    "load_config",
    "run_sweep",
    "write_csv",
    "read_csv",
    "format_number",
]

CSV_HEADER = (
    "r,omega,omega_crit_caseA,omega_crit_caseB,phase,gap_analytic,"
    "gap_superradiant,gap_ed,mean_photons_ed,cutoff_used,converged"
)
COLUMNS = CSV_HEADER.split(",")
BOUNDARY_RTOL = 1e-12


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


@dataclass(frozen=True)
class Grid:
    min: float
    max: float
    steps: int

    def values(self) -> np.ndarray:
        if self.steps == 1:
            return np.array([self.min])
        return np.linspace(self.min, self.max, self.steps)


@dataclass(frozen=True)
class SweepConfig:
    omega_c: float
    omega_a: float
    r_grid: Grid
    coupling_grid: Grid
    cutoff: int | str = "auto"
    n_levels: int = 4
    include_ed: bool = False
    output_path: str = "sweep.csv"


@dataclass(frozen=True)
class SweepRow:
    r: float
    omega: float
    omega_crit_caseA: float
    omega_crit_caseB: float
    phase: str
    gap_analytic: float | None = None
    gap_superradiant: float | None = None
    gap_ed: float | None = None
    mean_photons_ed: float | None = None
    cutoff_used: int | None = None
    converged: bool | None = None
    approximate: bool = field(default=False, compare=False)
    error: str | None = field(default=None, compare=False)


def _number(doc: dict, key: str, path: str | None = None) -> float:
    path = path or key
    if key not in doc:
        raise ConfigError(path, "missing required key")
    val = doc[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
        raise ConfigError(path, f"expected a finite number, got {val!r}")
    return float(val)


def _grid(doc: dict, key: str) -> Grid:
    if key not in doc:
        raise ConfigError(key, "missing required key")
    raw = doc[key]
    if isinstance(raw, (list, tuple)):
        if len(raw) != 3:
            raise ConfigError(key, "expected [min, max, steps]")
        raw = dict(zip(("min", "max", "steps"), raw))
    if not isinstance(raw, dict):
        raise ConfigError(key, "expected [min, max, steps] or an object")
    lo = _number(raw, "min", f"{key}.min")
    hi = _number(raw, "max", f"{key}.max")
    steps = raw.get("steps")
    if isinstance(steps, bool) or not isinstance(steps, int) or steps < 1:
        raise ConfigError(f"{key}.steps", f"expected an integer >= 1, got {steps!r}")
    if lo > hi:
        raise ConfigError(key, f"min {lo} exceeds max {hi}")
    return Grid(lo, hi, steps)


def parse_config(text: str) -> SweepConfig:
    """Validate a JSON sweep document; raises :class:`ConfigError` naming the bad key."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError("<document>", f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError("<document>", "top level must be an object")
    omega_c = _number(doc, "omega_c")
    if omega_c <= 0:
        raise ConfigError("omega_c", "must be positive")
    omega_a = _number(doc, "omega_a")
    if omega_a <= 0:
        raise ConfigError("omega_a", "must be positive")
    r_grid = _grid(doc, "r_grid")
    if r_grid.min < 0:
        raise ConfigError("r_grid.min", "squeeze must be nonnegative")
    coupling_grid = _grid(doc, "coupling_grid")
    if coupling_grid.min < 0:
        raise ConfigError("coupling_grid.min", "coupling must be nonnegative")

    cutoff = doc.get("cutoff", "auto")
    if cutoff != "auto" and (isinstance(cutoff, bool) or not isinstance(cutoff, int) or cutoff < 1):
        raise ConfigError("cutoff", f"expected 'auto' or a positive integer, got {cutoff!r}")
    n_levels = doc.get("n_levels", 4)
    if isinstance(n_levels, bool) or not isinstance(n_levels, int) or n_levels < 2:
        raise ConfigError("n_levels", f"expected an integer >= 2, got {n_levels!r}")
    include_ed = doc.get("include_ed", False)
    if not isinstance(include_ed, bool):
        raise ConfigError("include_ed", "expected true or false")
    output_path = doc.get("output_path", "sweep.csv")
    if not isinstance(output_path, str) or not output_path:
        raise ConfigError("output_path", "expected a nonempty string")
    return SweepConfig(omega_c, omega_a, r_grid, coupling_grid, cutoff, n_levels, include_ed, output_path)


def load_config(path: str | Path) -> SweepConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def _ed_columns(params: ModelParams, config: SweepConfig) -> dict:
    if config.cutoff == "auto":
        n_start = auto_cutoff(params.squeeze)
        spec = converged_spectrum("mjc", params, config.n_levels, n_start=n_start, n_max=max(512, 2 * n_start))
    else:
        spec = spectrum_ed(build_mjc(params, FockSpace(config.cutoff)), config.n_levels)
        spec = type(spec)(spec.energies, config.cutoff, spec.converged)
    space = FockSpace(spec.cutoff_used)
    obs = ground_observables(build_mjc(params, space), space)
    return dict(
        gap_ed=spec.gap,
        mean_photons_ed=obs.mean_photons,
        cutoff_used=spec.cutoff_used,
        converged=spec.converged,
    )


def _cell(config: SweepConfig, r: float, omega: float) -> SweepRow:
    r, omega = float(r), float(omega)
    params = ModelParams(config.omega_c, config.omega_a, omega, r)
    crit_a = analytic.critical_coupling("caseA", config.omega_c, config.omega_a, r).omega_crit
    crit_b = analytic.critical_coupling("caseB", config.omega_c, config.omega_a, r).omega_crit
    superradiant = omega > crit_b
    cols: dict = {}
    errors = []
    approximate = False
    try:
        if abs(omega - crit_b) <= BOUNDARY_RTOL * crit_b:
            cols.update(gap_analytic=0.0, gap_superradiant=0.0)
            superradiant = False
        elif superradiant:
            cols["gap_superradiant"], _ = analytic.superradiant_gap_mjc(params)
            approximate = r > 0
        else:
            cols["gap_analytic"] = analytic.normal_phase_gap(params).gap
    except (ValueError, ArithmeticError) as exc:
        errors.append(f"analytic: {exc}")
    if config.include_ed:
        try:
            cols.update(_ed_columns(params, config))
        except (ValueError, ArithmeticError, RuntimeError) as exc:
            errors.append(f"ed: {exc}")
    return SweepRow(
        r=r,
        omega=omega,
        omega_crit_caseA=crit_a,
        omega_crit_caseB=crit_b,
        phase="superradiant" if superradiant else "normal",
        approximate=approximate,
        error="; ".join(errors) or None,
        **cols,
    )


def run_sweep(config: SweepConfig, workers: int | None = 1) -> list[SweepRow]:
    """Evaluate every grid cell, ``r`` outer and coupling inner.

    ``workers=None`` uses ``SQJC_THREADS`` or the CPU count; the result
    order never depends on it.
    """
    cells = [(r, om) for r in config.r_grid.values() for om in config.coupling_grid.values()]
    workers = workers or worker_count()
    if workers == 1:
        return [_cell(config, r, om) for r, om in cells]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda c: _cell(config, *c), cells))


def format_number(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.12g}"


def _row_fields(row: SweepRow) -> list[str]:
    return [row.phase if c == "phase" else format_number(getattr(row, c)) for c in COLUMNS]


def write_csv(rows: Iterable[SweepRow], sink: str | Path | IO[str]) -> int:
    """Write rows under :data:`CSV_HEADER`; returns the number of UTF-8 bytes written."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        writer.writerow(_row_fields(row))
    text = buf.getvalue()
    data = text.encode("utf-8")
    if isinstance(sink, (str, Path)):
        Path(sink).write_bytes(data)
    else:
        sink.write(text)
    return len(data)


def _parse_field(col: str, raw: str):
    if raw == "":
        return None
    if col == "phase":
        return raw
    if col == "converged":
        return raw == "true"
    if col == "cutoff_used":
        return int(raw)
    return float(raw)


def read_csv(source: str | Path | IO[str]) -> list[SweepRow]:
    """Parse a file produced by :func:`write_csv` back into rows."""
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="utf-8")
    else:
        text = source.read()
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != COLUMNS:
        raise ValueError("unexpected CSV header")
    return [SweepRow(**{c: _parse_field(c, v) for c, v in zip(COLUMNS, line)}) for line in reader]
