"""Exact diagonalization: spectra, cutoff convergence, ground-state
observables, coupling scans and the BCH truncation error of the effective
quadratic Hamiltonian.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from . import analytic
from .fock import FockSpace, annihilation, herm_eigen, interior_block_distance, joint, number, pauli_ops
from .models import (
    ModelParams,
    RabiParams,
    auto_cutoff,
    build_jcm,
    build_mjc,
    build_quadratic,
    build_rabi,
    conjugate_project_down,
)

__all__ = [
    "SpectrumResult",
    "GroundObservables",
    "ScanPoint",
    "spectrum_ed",
    "converged_spectrum",
    "ground_observables",
    "gap_scan",
    "locate_gap_minimum",
    "bch_truncation_error",
    "parity_labels",
    "parity_resolved_gap",
    "builder_for",
    "worker_count",
]

DEGENERACY_TOL = 1e-10


@dataclass(frozen=True)
class SpectrumResult:
    energies: np.ndarray
    cutoff_used: int
    converged: bool

    @property
    def gap(self) -> float:
        return float(self.energies[1] - self.energies[0]) if len(self.energies) > 1 else float("nan")


@dataclass(frozen=True)
class GroundObservables:
    mean_photons: float
    mean_sigma_z: float
    mean_quadrature: float


@dataclass(frozen=True)
class ScanPoint:
    coupling: float
    gap: float
    mean_photons: float
    cutoff_used: int
    converged: bool


Builder = Callable[[FockSpace], np.ndarray]


def builder_for(model: str | Builder, params: ModelParams | RabiParams | None = None) -> Builder:
    """Resolve a model name (``"mjc"``, ``"jcm"``, ``"rabi"``) and its parameters to a
    ``space -> matrix`` builder.  Callables are returned unchanged."""
    if callable(model):
        return model
    if model == "mjc":
        return lambda space: build_mjc(params, space)
    if model == "jcm":
        return lambda space: build_jcm(params, space)
    if model == "rabi":
        return lambda space: build_rabi(params, space)
    raise ValueError(f"unknown model {model!r}")


def worker_count(default: int | None = None) -> int:
    """Thread cap from ``SQJC_THREADS``; falls back to ``default`` or the CPU count."""
    env = os.environ.get("SQJC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return default or os.cpu_count() or 1


def spectrum_ed(h: np.ndarray, n_levels: int) -> SpectrumResult:
    """Lowest ``n_levels`` eigenvalues of ``h`` at a single cutoff."""
    if n_levels > h.shape[0]:
        raise ValueError(f"n_levels={n_levels} exceeds dimension {h.shape[0]}")
    values = herm_eigen(h).values[:n_levels]
    return SpectrumResult(energies=values, cutoff_used=h.shape[0] // 2 - 1, converged=False)


def converged_spectrum(
    model: str | Builder,
    params: ModelParams | RabiParams | None = None,
    n_levels: int = 4,
    tol: float = 1e-8,
    n_start: int = 32,
    n_max: int = 512,
) -> SpectrumResult:
    """Double the cutoff from ``n_start`` until no requested level moves by ``tol``.

    When ``n_max`` is reached first the last spectrum is returned with
    ``converged=False``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if n_start >= n_max:
        raise ValueError("n_start must be below n_max")
    build = builder_for(model, params)
    cutoff = n_start
    prev = spectrum_ed(build(FockSpace(cutoff)), n_levels).energies
    while cutoff < n_max:
        cutoff = min(2 * cutoff, n_max)
        cur = spectrum_ed(build(FockSpace(cutoff)), n_levels).energies
        if np.max(np.abs(cur - prev)) < tol:
            return SpectrumResult(cur, cutoff, True)
        prev = cur
    return SpectrumResult(prev, cutoff, False)


def ground_observables(h: np.ndarray, space: FockSpace) -> GroundObservables:
    """Photon number, inversion and quadrature in the ground state of ``h``.

    A degenerate ground space is resolved by taking the state in it with the
    largest ``<sigma_z>``.
    """
    eig = herm_eigen(h)
    vals, vecs = eig.values, eig.vectors
    deg = int(np.sum(vals - vals[0] <= DEGENERACY_TOL * max(1.0, abs(vals[0]))))
    sz = joint(space, spin="z")
    if deg > 1:
        sub = vecs[:, :deg]
        w, c = np.linalg.eigh(sub.conj().T @ sz @ sub)
        psi = sub @ c[:, -1]
    else:
        psi = vecs[:, 0]
    psi = psi / np.linalg.norm(psi)
    a = annihilation(space)
    n_op = joint(space, number(space))
    x_op = joint(space, a + a.conj().T)

    def expect(op):
        return float(np.real(np.vdot(psi, op @ psi)))

    return GroundObservables(
        mean_photons=max(0.0, expect(n_op)),
        mean_sigma_z=float(np.clip(expect(sz), -1.0, 1.0)),
        mean_quadrature=expect(x_op),
    )


def parity_labels(space: FockSpace) -> np.ndarray:
    """Eigenvalue index of ``exp(i pi (n + sz/2 + 1/2))`` per joint basis state: 0 even, 1 odd."""
    idx = np.arange(space.dim)
    return (idx // 2 + idx % 2) % 2


def parity_resolved_gap(h: np.ndarray, space: FockSpace) -> float:
    """Excitation gap inside the parity sector that holds the ground state.

    Only meaningful for parity-conserving Hamiltonians (all modified JC,
    JC and Rabi matrices).  Unlike ``E1 - E0`` it does not collapse onto the
    quasi-degenerate ground doublet on the superradiant side.
    """
    labels = parity_labels(space)
    lows = []
    for p in (0, 1):
        block = labels == p
        lows.append(herm_eigen(h[np.ix_(block, block)]).values[:2])
    ground = min(lows, key=lambda e: e[0])
    return float(ground[1] - ground[0])


def _scan_point(
    template: ModelParams, coupling: float, cutoff: int | None, tol: float, n_max: int, parity: bool = False
) -> ScanPoint:
    params = template.with_(coupling=float(coupling))
    if cutoff is None:
        spec = converged_spectrum("mjc", params, 2, tol=tol, n_start=min(auto_cutoff(params.squeeze), n_max // 2), n_max=n_max)
        n = spec.cutoff_used
    else:
        spec = spectrum_ed(build_mjc(params, FockSpace(cutoff)), 2)
        spec = SpectrumResult(spec.energies, cutoff, True)
        n = cutoff
    space = FockSpace(n)
    h = build_mjc(params, space)
    obs = ground_observables(h, space)
    gap = parity_resolved_gap(h, space) if parity else spec.gap
    return ScanPoint(float(coupling), gap, obs.mean_photons, n, spec.converged)


def gap_scan(
    template: ModelParams,
    couplings: Sequence[float],
    *,
    cutoff: int | None = None,
    tol: float = 1e-8,
    n_max: int = 512,
    workers: int | None = 1,
    parity: bool = False,
) -> list[ScanPoint]:
    """ED gap and ground photon number of the modified JC model along a coupling grid.

    ``cutoff=None`` runs the convergence loop at every point.  With
    ``parity=True`` the gap column is :func:`parity_resolved_gap`.  Points are
    computed independently and returned in grid order whatever ``workers`` is.
    """
    couplings = [float(c) for c in couplings]
    if any(b < a for a, b in zip(couplings, couplings[1:])):
        raise ValueError("coupling grid must be ascending")
    job = lambda c: _scan_point(template, c, cutoff, tol, n_max, parity)  # noqa: E731
    workers = workers or worker_count()
    if workers == 1:
        return [job(c) for c in couplings]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(job, couplings))


def locate_gap_minimum(
    template: ModelParams,
    couplings: Sequence[float],
    *,
    cutoff: int,
    scan: list[ScanPoint] | None = None,
    xatol: float = 1e-10,
    parity: bool = False,
    first: bool = False,
) -> tuple[float, float]:
    """Coupling and value of the smallest ED gap on a grid, refined by bounded
    Brent minimization (parabolic steps with golden-section fallback) inside
    the bracketing grid cell pair.

    ``first=True`` refines the first local minimum along the grid instead of
    the global one; the JC ladder has a sequence of exact crossings and the
    first is the one that leaves the vacuum.
    """
    if scan is None:
        scan = gap_scan(template, couplings, cutoff=cutoff, parity=parity)
    gaps = np.array([p.gap for p in scan])
    i = int(np.argmin(gaps))
    if first:
        for j in range(1, len(gaps) - 1):
            if gaps[j] <= gaps[j - 1] and gaps[j] <= gaps[j + 1]:
                i = j
                break
    if len(scan) < 3:
        return scan[i].coupling, float(gaps[i])
    lo = scan[max(i - 1, 0)].coupling
    hi = scan[min(i + 1, len(scan) - 1)].coupling
    space = FockSpace(cutoff)

    def gap(c):
        h = build_mjc(template.with_(coupling=float(c)), space)
        if parity:
            return parity_resolved_gap(h, space)
        e = herm_eigen(h).values
        return float(e[1] - e[0])

    res = minimize_scalar(gap, bounds=(lo, hi), method="bounded", options={"xatol": xatol})
    if res.fun < gaps[i]:
        return float(res.x), float(res.fun)
    return scan[i].coupling, float(gaps[i])


def bch_truncation_error(params: ModelParams, v: float, space: FockSpace, k: int | None = None) -> float:
    """Interior-block distance between the exact spin-down projection of the
    rotated Hamiltonian and its leading-order quadratic form ``A n + B + C (a+a^dag)^2``."""
    k = space.cutoff // 2 if k is None else k
    exact = conjugate_project_down(build_mjc(params, space), v, params, space)
    c = analytic.abc_coefficients(params, v)
    approx = build_quadratic(c.A, c.B, c.C, space)
    return interior_block_distance(exact, approx, k)
