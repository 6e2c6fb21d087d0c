"""Dense complex linear algebra for two-qubit (4x4) operators."""

from __future__ import annotations

import numpy as np

__all__ = ["kron", "herm_eig", "expm_unitary", "phase_distance", "require_unitary"]


def _as_matrix(a, shape: tuple[int, int], name: str) -> np.ndarray:
    m = np.asarray(a, dtype=complex)
    if m.shape != shape:
        raise ValueError(f"{name} must have shape {shape}, got {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    """Tensor product of two single-qubit operators, qubit 1 leftmost."""
    a = _as_matrix(a, (2, 2), "a")
    b = _as_matrix(b, (2, 2), "b")
    return np.kron(a, b)


def herm_eig(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian 4x4 matrix.

    Returns (w, v): eigenvalues w ascending, orthonormal eigenvectors in the
    columns of v, so that h = v @ diag(w) @ v^dag.
    """
    h = _as_matrix(h, (4, 4), "h")
    if np.abs(h - h.conj().T).max() > 1e-12:
        raise ValueError("matrix is not Hermitian")
    return np.linalg.eigh(h)


def expm_unitary(h, t: float) -> np.ndarray:
    """exp(-i h t) for Hermitian h, computed through the eigendecomposition."""
    w, v = herm_eig(h)
    return (v * np.exp(-1j * w * float(t))) @ v.conj().T


def require_unitary(u, name: str = "matrix", atol: float = 1e-10) -> np.ndarray:
    u = _as_matrix(u, (4, 4), name)
    if np.abs(u.conj().T @ u - np.eye(4)).max() > atol:
        raise ValueError(f"{name} is not unitary")
    return u


def phase_distance(u, v) -> float:
    """1 - |tr(u^dag v)|/4; zero iff the unitaries agree up to a global phase."""
    u = require_unitary(u, "u")
    v = require_unitary(v, "v")
    return 1.0 - float(abs(np.trace(u.conj().T @ v))) / 4.0
