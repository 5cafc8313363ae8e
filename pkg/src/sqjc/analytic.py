"""Closed-form results: effective quadratic Hamiltonian, Bogoliubov
diagonalization, critical couplings and excitation gaps on both sides of the
transition.

Every function is a pure function of floats (hbar = 1).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .models import ModelParams

__all__ = [
    "UnphysicalRegime",
    "DegenerateInput",
    "QuadraticCoeffs",
    "BogoliubovResult",
    "CriticalPoint",
    "SuperradiantParams",
    "abc_coefficients",
    "v_standard",
    "v_roots_caseA",
    "v_roots_caseB",
    "critical_coupling",
    "rabi_critical_lambda",
    "bogoliubov",
    "normal_phase_coeffs",
    "normal_phase_gap",
    "jcm_gap",
    "rabi_gap",
    "superradiant_setup",
    "superradiant_gap_generic",
    "superradiant_gap_jcm",
    "superradiant_gap_rabi",
    "superradiant_gap_mjc",
    "rabi_coupling_from_g",
    "g_from_rabi_coupling",
]

Branch = Literal["caseA", "caseB"]

# couplings within this relative distance of a critical value count as critical
CRITICAL_RTOL = 1e-12


class UnphysicalRegime(ValueError):
    """Raised when a normal-phase (or superradiant-phase) formula is evaluated
    outside its phase, where the gap would be zero or imaginary."""


class DegenerateInput(ValueError):
    pass


@dataclass(frozen=True)
class QuadraticCoeffs:
    """Coefficients of ``A n + B + C (a + a^dag)^2`` and the ``v`` that produced them."""

    A: float
    B: float
    C: float
    v: float = 0.0


@dataclass(frozen=True)
class BogoliubovResult:
    beta: float
    gap: float
    ground_energy: float


@dataclass(frozen=True)
class CriticalPoint:
    branch: Branch
    omega_crit: float
    r: float


@dataclass(frozen=True)
class SuperradiantParams:
    alpha: float
    theta: float
    omega_tilde: float
    mu: float
    J: float
    K: float
    L: float
    M: float
    g: float | None = None


def abc_coefficients(params: ModelParams, v: float) -> QuadraticCoeffs:
    """Effective spin-down Hamiltonian after the decoupling rotation by ``v``.

    Leading-order (second order in ``v``) result of conjugating the modified
    JC Hamiltonian with ``exp(-v (s+ B^dag - s- B))`` and projecting on the
    atomic ground state.
    """
    wc, wa, om, r = params.omega_c, params.omega_a, params.coupling, params.squeeze
    e2 = math.exp(-2 * r)
    a = wc * (1 + v * v) + v * (om + wa * v) * e2
    b = -0.5 * wa * (1 - v * v) + 0.5 * v * (om + wa * v) * e2 + wc * v * v * math.cosh(r) ** 2
    c = -0.5 * v * om * math.cosh(2 * r) + 0.5 * wa * v * v * math.sinh(2 * r)
    return QuadraticCoeffs(a, b, c, v)


def v_standard(params: ModelParams) -> float:
    """Rotation parameter ``Omega / (2 (w_a + w_c e^{-2r}))`` used for the normal phase."""
    return params.coupling / (2 * (params.omega_a + params.omega_c * math.exp(-2 * params.squeeze)))


def _quadratic_roots(disc: float, scale: float, centre: float, half_width_scale: float) -> list[float]:
    if abs(disc) <= CRITICAL_RTOL * scale:
        return [centre]
    if disc < 0:
        return []
    half = math.sqrt(disc) * half_width_scale
    return sorted([centre - half, centre + half])


def v_roots_caseA(params: ModelParams) -> list[float]:
    """Real ``v`` with ``A(v) = 0``, ascending; empty in the normal phase."""
    wc, wa, om, r = params.omega_c, params.omega_a, params.coupling, params.squeeze
    crit2 = 4 * wc * (wc + wa * math.exp(-2 * r)) * math.exp(4 * r)
    denom = 2 * (wa + wc * math.exp(2 * r))
    return _quadratic_roots(om * om - crit2, crit2, -om / denom, 1 / denom)


def v_roots_caseB(params: ModelParams) -> list[float]:
    """Real ``v`` with ``A(v) + 4 C(v) = 0``, ascending; empty in the normal phase."""
    wc, wa, om, r = params.omega_c, params.omega_a, params.coupling, params.squeeze
    e2 = math.exp(-2 * r)
    crit2 = 4 * wc * (wa + wc * e2) * e2
    denom = 2 * (wa + wc * e2)
    return _quadratic_roots(om * om - crit2, crit2, om / denom, 1 / denom)


def critical_coupling(branch: Branch, omega_c: float, omega_a: float, r: float = 0.0) -> CriticalPoint:
    """Coupling at which the ``v`` roots of the given branch bifurcate.

    ``caseA``: ``Omega_c^2 = 4 w_c (w_c + w_a e^{-2r}) e^{4r}``.
    ``caseB``: ``Omega_c^2 = 4 w_c (w_a + w_c e^{-2r}) e^{-2r}``; this is the
    branch that bounds the normal phase.
    """
    if not (omega_c > 0 and omega_a > 0):
        raise ValueError("frequencies must be positive")
    if r < 0:
        raise ValueError("squeeze parameter must be nonnegative")
    if branch == "caseA":
        sq = 4 * omega_c * (omega_c + omega_a * math.exp(-2 * r)) * math.exp(4 * r)
    elif branch == "caseB":
        sq = 4 * omega_c * (omega_a + omega_c * math.exp(-2 * r)) * math.exp(-2 * r)
    else:
        raise ValueError(f"unknown branch {branch!r}")
    return CriticalPoint(branch, math.sqrt(sq), r)


def rabi_critical_lambda(omega_c: float, omega_a: float) -> float:
    return 0.5 * math.sqrt(omega_a * omega_c)


def bogoliubov(coeffs: QuadraticCoeffs) -> BogoliubovResult:
    """Diagonalize ``A n + B + C (a + a^dag)^2 = E0 + eps b^dag b``.

    The zero-point constant is ``B - A/2 + eps/2``.
    """
    a, c = coeffs.A, coeffs.C
    prod = a * (a + 4 * c)
    if not (a > 0 and a + 4 * c > 0) or prod <= 0:
        raise UnphysicalRegime(f"A(A+4C) = {prod:.6g} <= 0: outside the normal phase")
    ratio = 4 * c / a
    # e^{-4 beta} = 1 + 4C/A; log1p keeps beta accurate as C -> 0
    beta = -0.25 * math.log1p(ratio)
    gap = math.sqrt(prod)
    return BogoliubovResult(beta=beta, gap=gap, ground_energy=coeffs.B - 0.5 * a + 0.5 * gap)


def normal_phase_coeffs(params: ModelParams) -> tuple[float, float, float]:
    """``((2B - A)/2, A, A + 4C)`` at ``v = v_standard(params)``, in closed form."""
    wc, wa, om, r = params.omega_c, params.omega_a, params.coupling, params.squeeze
    d = wa + wc * math.exp(-2 * r)
    half = -0.5 * (wa + wc) + om * om / 8 * (wa + wc * math.cosh(2 * r)) / d**2
    a = wc + om * om / (4 * d**2) * (wc * (1 + 2 * math.exp(-4 * r)) + 3 * wa * math.exp(-2 * r))
    a4c = wc - om * om * math.exp(2 * r) / (4 * d)
    return half, a, a4c


def normal_phase_gap(params: ModelParams) -> BogoliubovResult:
    """Bogoliubov gap and ground energy of the normal-phase effective Hamiltonian."""
    half, a, a4c = normal_phase_coeffs(params)
    prod = a * a4c
    if not (a > 0 and a4c > 0):
        raise UnphysicalRegime(f"A(A+4C) = {prod:.6g} <= 0: outside the normal phase")
    gap = math.sqrt(prod)
    return BogoliubovResult(beta=-0.25 * math.log1p((a4c - a) / a), gap=gap, ground_energy=half + 0.5 * gap)


def jcm_gap(omega_c: float, omega_a: float, coupling: float) -> tuple[float, float]:
    """Normal-phase gap of the JC model and its constant term.

    Returns ``(gap, constant)`` with
    ``constant = -(w_a + w_c)/2 + Omega^2 / (8 (w_a + w_c))``.
    """
    x = coupling**2 / (4 * omega_c * (omega_a + omega_c))
    if x >= 1:
        raise UnphysicalRegime("coupling at or beyond the JC critical point")
    gap = omega_c * math.sqrt((1 + 3 * x) * (1 - x))
    const = -0.5 * (omega_a + omega_c) + coupling**2 / (8 * (omega_a + omega_c))
    return gap, const


def rabi_gap(omega_c: float, omega_a: float, lam: float) -> tuple[float, float]:
    """Normal-phase gap of the Rabi model and its constant term ``-(w_a+w_c)/2 + w_c lam^2 / w_a^2``."""
    y = 4 * lam * lam / (omega_a * omega_c)
    if y >= 1:
        raise UnphysicalRegime("coupling at or beyond the Rabi critical point")
    gap = omega_c * math.sqrt(1 - y)
    const = -0.5 * (omega_a + omega_c) + omega_c * lam * lam / omega_a**2
    return gap, const


def g_from_rabi_coupling(omega_c: float, omega_a: float, lam: float) -> float:
    return 2 * abs(lam) / math.sqrt(omega_a * omega_c)


def rabi_coupling_from_g(omega_c: float, omega_a: float, g: float) -> float:
    return 0.5 * g * math.sqrt(omega_a * omega_c)


def superradiant_setup(params: ModelParams, alpha: float) -> SuperradiantParams:
    """Tilted-spin quantities for the Hamiltonian displaced by ``alpha``.

    The spin rotation satisfies ``tan(2 theta) = alpha Omega e^r / w_a``; the
    generic-Rabi constants are ``J = w_c``, ``K = w_c alpha^2``,
    ``L = Omega^2 e^{2r} / (8 w_c)`` and ``M = Omega cos(2 theta) e^r / 4``,
    with ``mu = -M / (2L)``.
    """
    wc, wa, om, r = params.omega_c, params.omega_a, params.coupling, params.squeeze
    if om == 0:
        raise DegenerateInput("mu is undefined for zero coupling")
    er = math.exp(r)
    drive = alpha * om * er
    theta = 0.5 * math.atan2(drive, wa)
    omega_tilde = math.hypot(wa, drive)
    cos2 = wa / omega_tilde
    j, k = wc, wc * alpha * alpha
    l = om * om * er * er / (8 * wc)
    m = om * cos2 * er / 4
    mu = -m / (2 * l)
    return SuperradiantParams(alpha, theta, omega_tilde, mu, j, k, l, m)


def superradiant_gap_generic(j: float, l: float, m: float, mu: float) -> float:
    """Excitation energy ``J sqrt(1 + 8 mu (M + mu L) / J)`` of the generic Rabi form."""
    arg = 1 + 8 * mu * (m + mu * l) / j
    if arg < 0:
        raise UnphysicalRegime(f"negative radicand {arg:.6g}")
    return j * math.sqrt(arg)


def superradiant_gap_jcm(omega_c: float, omega_a: float, coupling: float) -> tuple[float, float]:
    """Superradiant-side JC gap ``w_c sqrt(1 - Omega_c^4 / Omega^4)``.

    Returns ``(gap, alpha)`` where ``alpha^2 = (w_a^2/Omega^2)(Omega^4/Omega_c^4 - 1)``.
    """
    oc2 = 4 * omega_c * (omega_a + omega_c)
    om2 = coupling * coupling
    if abs(om2 - oc2) <= CRITICAL_RTOL * oc2:
        return 0.0, 0.0
    if om2 < oc2:
        raise UnphysicalRegime("coupling below the JC critical point (normal phase)")
    ratio = oc2 * oc2 / (om2 * om2)
    alpha = math.sqrt(omega_a**2 / om2 * (1 / ratio - 1))
    return omega_c * math.sqrt(1 - ratio), alpha


def superradiant_gap_rabi(omega_c: float, omega_a: float, g: float) -> tuple[float, float, float]:
    """Superradiant-side Rabi gap ``w_c sqrt(1 - g^-4)``.

    Returns ``(gap, lam, alpha)`` with ``lam = g sqrt(w_a w_c)/2`` and
    ``alpha^2 = w_a (g^4 - 1) / (4 g^2 w_c)``.
    """
    if g < 1:
        raise UnphysicalRegime("g < 1 is the normal phase")
    alpha = math.sqrt(omega_a / (4 * g * g * omega_c) * (g**4 - 1))
    return omega_c * math.sqrt(1 - g**-4), rabi_coupling_from_g(omega_c, omega_a, g), alpha


def superradiant_gap_mjc(params: ModelParams) -> tuple[float, SuperradiantParams]:
    """Superradiant gap for any squeeze through the generic displaced-Rabi pipeline.

    The displacement is chosen so that ``cos^2(2 theta) = Omega_c^4 / Omega^4``
    with ``Omega_c`` the ``caseB`` critical coupling, i.e. the JC choice of
    ``alpha`` with ``Omega`` replaced by ``Omega e^r``.  Exact at ``r = 0``;
    for ``r > 0`` it is an extrapolation and callers should flag it as such.
    """
    oc = critical_coupling("caseB", params.omega_c, params.omega_a, params.squeeze).omega_crit
    om = params.coupling
    if abs(om - oc) <= CRITICAL_RTOL * oc:
        om = oc
    elif om < oc:
        raise UnphysicalRegime("coupling below the critical point (normal phase)")
    scaled2 = (om * math.exp(params.squeeze)) ** 2
    alpha = math.sqrt(params.omega_a**2 / scaled2 * max((om / oc) ** 4 - 1, 0.0))
    sp = superradiant_setup(params.with_(coupling=om), alpha)
    return superradiant_gap_generic(sp.J, sp.L, sp.M, sp.mu), sp
