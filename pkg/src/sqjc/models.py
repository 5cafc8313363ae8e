"""Hamiltonians and unitaries of the squeezed-photon Jaynes-Cummings family.

Units have hbar = 1; every energy is in the unit of the input frequencies.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .fock import (
    FockSpace,
    annihilation,
    identity,
    joint,
    number,
    unitary_exp,
)

__all__ = [
    "ModelParams",
    "RabiParams",
    "auto_cutoff",
    "squeeze_operator",
    "squeezed_annihilation",
    "build_mjc",
    "build_mjc_squeezed_form",
    "build_jcm",
    "build_rabi",
    "build_displaced",
    "displacement_operator",
    "build_generic_rabi",
    "build_quadratic",
    "decoupling_unitary",
    "conjugate_project_down",
]


@dataclass(frozen=True)
class ModelParams:
    """Model knobs of the squeezed-exchange Jaynes-Cummings Hamiltonian.

    Parameters
    ----------
    omega_c : float
        Cavity frequency, > 0.
    omega_a : float
        Atomic transition frequency, > 0.
    coupling : float
        Atom-field coupling ``Omega``, >= 0.
    squeeze : float
        Squeezing parameter ``r``, >= 0.
    phase : float
        Squeezing phase ``phi``.  Only the squeezed-mode builders accept a
        nonzero value.
    """

    omega_c: float = 1.0
    omega_a: float = 1.0
    coupling: float = 0.0
    squeeze: float = 0.0
    phase: float = 0.0

    def __post_init__(self):
        if not self.omega_c > 0:
            raise ValueError(f"omega_c must be positive, got {self.omega_c}")
        if not self.omega_a > 0:
            raise ValueError(f"omega_a must be positive, got {self.omega_a}")
        if not self.coupling >= 0:
            raise ValueError(f"coupling must be nonnegative, got {self.coupling}")
        if not self.squeeze >= 0:
            raise ValueError(f"squeeze must be nonnegative, got {self.squeeze}")

    def with_(self, **changes) -> "ModelParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class RabiParams:
    omega_c: float = 1.0
    omega_a: float = 1.0
    lam: float = 0.0

    def __post_init__(self):
        if not (self.omega_c > 0 and self.omega_a > 0):
            raise ValueError("Rabi frequencies must be positive")

    @classmethod
    def from_mjc(cls, params: ModelParams) -> "RabiParams":
        """Rabi parameters reached by the large-squeeze mapping ``lam = -Omega e^r / 4``."""
        return cls(params.omega_c, params.omega_a, -params.coupling * math.exp(params.squeeze) / 4)


def auto_cutoff(squeeze: float = 0.0, alpha: float = 0.0) -> int:
    """Heuristic cutoff covering ~sinh^2(r) squeezed and ~alpha^2 displaced photons."""
    return math.ceil(10 * (math.sinh(squeeze) ** 2 + alpha**2 + 1) + 20)


def _require_zero_phase(params: ModelParams) -> None:
    if params.phase != 0:
        raise ValueError("Hamiltonian builders require phase = 0")


def squeeze_operator(space: FockSpace, r: float, phi: float = 0.0) -> np.ndarray:
    """``S(zeta) = exp(-zeta/2 a^dag^2 + zeta^*/2 a^2)`` with ``zeta = r e^{i phi}``.

    Built from the truncated generator, so ``S a S^dag`` only reproduces the
    squeezed ladder operator away from the truncation edge.
    """
    if r < 0:
        raise ValueError("squeeze parameter must be nonnegative")
    a = annihilation(space)
    ad = a.conj().T
    zeta = r * np.exp(1j * phi)
    gen = -0.5 * zeta * (ad @ ad) + 0.5 * np.conj(zeta) * (a @ a)
    return unitary_exp(gen)


def squeezed_annihilation(space: FockSpace, r: float, phi: float = 0.0) -> np.ndarray:
    """Closed form ``B = cosh(r) a + e^{i phi} sinh(r) a^dag``; ``B^dag`` is its conjugate transpose."""
    if r < 0:
        raise ValueError("squeeze parameter must be nonnegative")
    a = annihilation(space)
    return math.cosh(r) * a + np.exp(1j * phi) * math.sinh(r) * a.conj().T


def _bare(params: ModelParams | RabiParams, space: FockSpace) -> np.ndarray:
    return params.omega_c * joint(space, number(space)) + 0.5 * params.omega_a * joint(space, spin="z")


def build_mjc(params: ModelParams, space: FockSpace) -> np.ndarray:
    """Modified JC Hamiltonian written with bare photon operators.

    ``w_c n + w_a sz/2 + (Omega/2)[cosh r (s+ a + s- a^dag) + sinh r (s- a + s+ a^dag)]``
    """
    _require_zero_phase(params)
    a = annihilation(space)
    ad = a.conj().T
    r = params.squeeze
    rotating = joint(space, a, "+") + joint(space, ad, "-")
    counter = joint(space, a, "-") + joint(space, ad, "+")
    coupling = 0.5 * params.coupling * (math.cosh(r) * rotating + math.sinh(r) * counter)
    return _bare(params, space) + coupling


def build_mjc_squeezed_form(params: ModelParams, space: FockSpace) -> np.ndarray:
    """Same Hamiltonian written as ``w_c n + w_a sz/2 + (Omega/2)(s+ B + s- B^dag)``."""
    _require_zero_phase(params)
    b = squeezed_annihilation(space, params.squeeze)
    coupling = joint(space, b, "+") + joint(space, b.conj().T, "-")
    return _bare(params, space) + 0.5 * params.coupling * coupling


def build_jcm(params: ModelParams, space: FockSpace) -> np.ndarray:
    """Jaynes-Cummings Hamiltonian; ``params.squeeze`` is ignored."""
    _require_zero_phase(params)
    a = annihilation(space)
    rotating = joint(space, a, "+") + joint(space, a.conj().T, "-")
    return _bare(params, space) + 0.5 * params.coupling * rotating


def build_rabi(rabi: RabiParams, space: FockSpace) -> np.ndarray:
    """``w_c n + w_a sz/2 - lam (a + a^dag) sx``."""
    a = annihilation(space)
    return _bare(rabi, space) - rabi.lam * joint(space, a + a.conj().T, "x")


def displacement_operator(space: FockSpace, alpha: float) -> np.ndarray:
    a = annihilation(space)
    return unitary_exp(alpha * (a.conj().T - a))


def build_displaced(params: ModelParams, alpha: float, space: FockSpace) -> np.ndarray:
    """Modified JC Hamiltonian after the real displacement ``a -> a + alpha``.

    Constructed term by term rather than by conjugation, so it carries no
    truncation error from the displacement.
    """
    _require_zero_phase(params)
    a = annihilation(space)
    shifted = a + alpha * identity(space)
    field = params.omega_c * joint(space, shifted.conj().T @ shifted)
    drive = 0.5 * params.coupling * alpha * math.exp(params.squeeze) * joint(space, spin="x")
    coupling = build_mjc(params, space) - _bare(params, space)
    return field + 0.5 * params.omega_a * joint(space, spin="z") + drive + coupling


def build_generic_rabi(j: float, k: float, l: float, m: float, space: FockSpace) -> np.ndarray:
    """``J n + K + L tz + M (a + a^dag) tx`` in the tilted spin basis."""
    a = annihilation(space)
    return (
        j * joint(space, number(space))
        + k * np.eye(space.dim, dtype=complex)
        + l * joint(space, spin="z")
        + m * joint(space, a + a.conj().T, "x")
    )


def build_quadratic(a_coef: float, b_coef: float, c_coef: float, space: FockSpace) -> np.ndarray:
    """Oscillator-only ``A n + B + C (a + a^dag)^2``."""
    a = annihilation(space)
    x = a + a.conj().T
    return a_coef * number(space) + b_coef * identity(space) + c_coef * (x @ x)


def decoupling_unitary(v: float, params: ModelParams, space: FockSpace) -> np.ndarray:
    """``U = exp(-v (s+ B^dag - s- B))`` for real ``v``."""
    _require_zero_phase(params)
    b = squeezed_annihilation(space, params.squeeze)
    gen = joint(space, b.conj().T, "+") - joint(space, b, "-")
    return unitary_exp(-v * gen)


def conjugate_project_down(
    h: np.ndarray, v: float, params: ModelParams, space: FockSpace
) -> np.ndarray:
    """Exact ``<down| U^dag H U |down>`` on the truncated space (oscillator-only block)."""
    u = decoupling_unitary(v, params, space)
    rotated = u.conj().T @ h @ u
    return rotated[0::2, 0::2].copy()
