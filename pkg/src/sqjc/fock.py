"""Truncated Fock-space linear algebra for one oscillator coupled to a qubit.

Joint basis states ``|n, s>`` are stored at index ``2*n + s`` where ``s = 0``
is the atomic ground state ``|1> = |down>`` and ``s = 1`` the excited state
``|2> = |up>``.  All matrices are dense complex128 arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "FockSpace",
    "EigenResult",
    "annihilation",
    "creation",
    "number",
    "identity",
    "pauli_ops",
    "tensor",
    "joint",
    "herm_eigen",
    "unitary_exp",
    "interior_block_distance",
    "commutator",
]

HERMITIAN_TOL = 1e-10


@dataclass(frozen=True)
class FockSpace:
    """Oscillator truncated at occupation ``cutoff`` tensored with a qubit."""

    cutoff: int

    def __post_init__(self):
        if int(self.cutoff) != self.cutoff or self.cutoff < 0:
            raise ValueError(f"cutoff must be a nonnegative integer, got {self.cutoff!r}")

    @property
    def osc_dim(self) -> int:
        return self.cutoff + 1

    @property
    def dim(self) -> int:
        return 2 * (self.cutoff + 1)

    def index(self, n: int, s: int) -> int:
        return 2 * n + s


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray


def annihilation(space: FockSpace) -> np.ndarray:
    """Return the truncated ladder operator with ``<n-1|a|n> = sqrt(n)``."""
    return np.diag(np.sqrt(np.arange(1, space.osc_dim, dtype=float)), k=1).astype(complex)


def creation(space: FockSpace) -> np.ndarray:
    return annihilation(space).conj().T


def number(space: FockSpace) -> np.ndarray:
    return np.diag(np.arange(space.osc_dim, dtype=float)).astype(complex)


def identity(space: FockSpace) -> np.ndarray:
    return np.eye(space.osc_dim, dtype=complex)


def pauli_ops() -> dict[str, np.ndarray]:
    """Qubit operators in the ``s = 0 -> |1>, s = 1 -> |2>`` ordering.

    Keys are ``"I"``, ``"z"``, ``"+"``, ``"-"``, ``"x"`` and ``"y"``.
    ``sigma_z = |2><2| - |1><1|`` and ``sigma_+ = |2><1|``.
    """
    eye = np.eye(2, dtype=complex)
    sz = np.diag([-1.0, 1.0]).astype(complex)
    sp = np.array([[0, 0], [1, 0]], dtype=complex)
    sm = sp.conj().T
    return {
        "I": eye,
        "z": sz,
        "+": sp,
        "-": sm,
        "x": sp + sm,
        "y": -1j * (sp - sm),
    }


def tensor(field_op: np.ndarray, spin_op: np.ndarray) -> np.ndarray:
    """Promote ``field_op (x) spin_op`` to the joint ``2n + s`` basis."""
    field_op = np.asarray(field_op)
    spin_op = np.asarray(spin_op)
    if field_op.ndim != 2 or field_op.shape[0] != field_op.shape[1]:
        raise ValueError(f"field operator must be square, got shape {field_op.shape}")
    if spin_op.shape != (2, 2):
        raise ValueError(f"spin operator must be 2x2, got shape {spin_op.shape}")
    return np.kron(field_op, spin_op)


def joint(space: FockSpace, field_op: np.ndarray | None = None, spin: str = "I") -> np.ndarray:
    """Shorthand for ``tensor(field_op, pauli_ops()[spin])``; ``None`` means identity."""
    if field_op is None:
        field_op = identity(space)
    if field_op.shape[0] != space.osc_dim:
        raise ValueError(
            f"field operator has dim {field_op.shape[0]}, space expects {space.osc_dim}"
        )
    return tensor(field_op, pauli_ops()[spin])


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def _max_abs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def herm_eigen(m: np.ndarray) -> EigenResult:
    """Eigendecomposition of a Hermitian matrix, eigenvalues ascending.

    The input is symmetrized as ``(M + M^H)/2`` after checking that its
    anti-Hermitian part is below ``1e-10`` (relative to ``max|M|`` when that
    exceeds one).  Eigenvector phases are fixed so the largest-magnitude
    component of every column is real and positive, which makes the output
    deterministic for identical input.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    scale = max(1.0, _max_abs(m))
    skew = _max_abs(m - m.conj().T)
    if skew > HERMITIAN_TOL * scale:
        raise ValueError(f"matrix is not Hermitian (max |M - M^H| = {skew:.3e})")
    h = 0.5 * (m + m.conj().T)
    try:
        values, vectors = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise RuntimeError(f"eigensolver failed to converge: {exc}") from exc
    pivot = np.argmax(np.abs(vectors), axis=0)
    phases = vectors[pivot, np.arange(vectors.shape[1])]
    vectors = vectors * (np.abs(phases) / phases)
    return EigenResult(values=values, vectors=vectors)


def unitary_exp(k: np.ndarray) -> np.ndarray:
    """``exp(K)`` for anti-Hermitian ``K`` via the spectrum of ``iK``."""
    k = np.asarray(k, dtype=complex)
    scale = max(1.0, _max_abs(k))
    if _max_abs(k + k.conj().T) > HERMITIAN_TOL * scale:
        raise ValueError("generator is not anti-Hermitian")
    eig = herm_eigen(1j * k)
    v = eig.vectors
    # K = -i (iK)  =>  exp(K) = V exp(-i w) V^H
    return (v * np.exp(-1j * eig.values)) @ v.conj().T


def interior_block_distance(
    m1: np.ndarray, m2: np.ndarray, k: int, *, joint: bool = False
) -> float:
    """Max-abs difference of ``m1`` and ``m2`` on their low-occupation block.

    For oscillator-only matrices the leading ``k x k`` block is compared; with
    ``joint=True`` ``k`` counts oscillator levels and the leading ``2k x 2k``
    block is compared.
    """
    m1 = np.asarray(m1)
    m2 = np.asarray(m2)
    if m1.shape != m2.shape:
        raise ValueError(f"shape mismatch {m1.shape} vs {m2.shape}")
    size = 2 * k if joint else k
    if k < 1 or size > m1.shape[0]:
        raise ValueError(f"block size k={k} out of range for dim {m1.shape[0]}")
    return _max_abs(m1[:size, :size] - m2[:size, :size])
