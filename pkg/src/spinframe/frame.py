"""Local rotations that carry the anisotropic exchange onto the isotropic one.

For either axis orientation there is a product of single-qubit rotations
T = U1 (x) U2 with T H T^dag = J S1.S2.  This module holds the closed forms
of T, their per-qubit ZYZ factorizations, and the model eigenvectors that T
maps onto the Bell basis.

Rotation convention: R^z(a) = exp(+i a S^z), R^y(g) = exp(+i g S^y) with
S = sigma/2, so all angles live on a 4 pi circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import kron
from .model import ExchangeParams, build_hamiltonian, build_isotropic

__all__ = [
    "RotationPlan",
    "rotation_matrix",
    "rotation_plan",
    "assemble",
    "eigenstates",
    "verify_isotropization",
    "rz",
    "ry",
    "PSI_PLUS",
    "PSI_MINUS",
    "PHI_PLUS",
    "PHI_MINUS",
]

_SQRT2 = math.sqrt(2.0)
PSI_PLUS = np.array([0, 1, 1, 0], dtype=complex) / _SQRT2
PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / _SQRT2
PHI_PLUS = np.array([1, 0, 0, 1], dtype=complex) / _SQRT2
PHI_MINUS = np.array([1, 0, 0, -1], dtype=complex) / _SQRT2


def rz(angle: float) -> np.ndarray:
    """Single-qubit z rotation exp(+i angle sigma_z / 2)."""
    return np.array(
        [[np.exp(0.5j * angle), 0.0], [0.0, np.exp(-0.5j * angle)]], dtype=complex
    )


def ry(angle: float) -> np.ndarray:
    """Single-qubit y rotation exp(+i angle sigma_y / 2)."""
    c, s = math.cos(angle / 2), math.sin(angle / 2)
    return np.array([[c, s], [-s, c]], dtype=complex)


def _wrap(angle: float) -> float:
    """Wrap onto (-2 pi, 2 pi]; a 4 pi shift leaves the rotation unchanged."""
    r = math.remainder(angle, 4 * math.pi)
    if r <= -2 * math.pi:
        r += 4 * math.pi
    return r


@dataclass(frozen=True)
class RotationPlan:
    """Per-qubit ZYZ angles (alpha, gamma, beta) with a global phase.

    assemble(plan) = e^{i phase} (Rz(alpha1) Ry(gamma1) Rz(beta1)) (x)
    (Rz(alpha2) Ry(gamma2) Rz(beta2)).  Angles are stored wrapped into
    (-2 pi, 2 pi].
    """

    qubit1: tuple[float, float, float]
    qubit2: tuple[float, float, float]
    phase: float = 0.0

    def __post_init__(self) -> None:
        for name, angles in (("qubit1", self.qubit1), ("qubit2", self.qubit2)):
            angles = tuple(float(a) for a in angles)
            if len(angles) != 3 or not all(math.isfinite(a) for a in angles):
                raise ValueError(f"{name} needs three finite angles")
            object.__setattr__(self, name, tuple(_wrap(a) for a in angles))
        if not math.isfinite(self.phase):
            raise ValueError("phase must be finite")


def rotation_matrix(p: ExchangeParams) -> np.ndarray:
    """Closed form of the isotropizing rotation T in the {00,01,10,11} basis.

    Orientation z gives a diagonal T; orientation xy mixes the corner states
    through the quarter-angle w/4.
    """
    w = p.omega
    if p.orientation == "z":
        return np.diag(
            [1.0, np.exp(-0.5j * w), np.exp(0.5j * w), 1.0]
        ).astype(complex)
    th = p.theta
    c, s = math.cos(w / 4), math.sin(w / 4)
    e = np.exp
    q = math.pi / 4
    return np.array(
        [
            [
                c * c * e(1j * (th - q)),
                c * s * e(1j * q),
                -c * s * e(1j * q),
                s * s * e(-1j * (th + q)),
            ],
            [
                c * s * e(1j * (th + 2 * q)),
                c * c,
                s * s,
                c * s * e(-1j * (th + 2 * q)),
            ],
            [
                c * s * e(1j * (th - 2 * q)),
                s * s,
                c * c,
                c * s * e(-1j * (th - 2 * q)),
            ],
            [
                s * s * e(1j * (th + q)),
                c * s * e(-1j * q),
                -c * s * e(-1j * q),
                c * c * e(-1j * (th - q)),
            ],
        ],
        dtype=complex,
    )


def rotation_plan(p: ExchangeParams) -> RotationPlan:
    """ZYZ factorization of rotation_matrix(p), global phase zero.

    The assembled plan reproduces the closed form exactly, not merely up to
    phase.
    """
    w = p.omega
    if p.orientation == "z":
        return RotationPlan(qubit1=(-w / 2, 0.0, 0.0), qubit2=(w / 2, 0.0, 0.0))
    th = p.theta
    return RotationPlan(
        qubit1=(-3 * math.pi / 4, w / 2, th + math.pi / 2),
        qubit2=(math.pi / 4, w / 2, th - math.pi / 2),
    )


def assemble(plan: RotationPlan) -> np.ndarray:
    a1, g1, b1 = plan.qubit1
    a2, g2, b2 = plan.qubit2
    u1 = rz(a1) @ ry(g1) @ rz(b1)
    u2 = rz(a2) @ ry(g2) @ rz(b2)
    return np.exp(1j * plan.phase) * kron(u1, u2)


def eigenstates(p: ExchangeParams) -> tuple[np.ndarray, ...]:
    """The four eigenvectors (phi1, phi2, phi3, phi4) in closed form.

    phi1..phi3 belong to the J/4 eigenvalue, phi4 to -3J/4.  T maps them
    one-to-one onto Bell states: (psi+, phi-, phi+, psi-) for orientation xy
    and (phi-, phi+, psi+, psi-) for orientation z.
    """
    w = p.omega
    if p.orientation == "z":
        t = math.tan(w / 2)
        norm = 1.0 / math.sqrt(1.0 + t * t)
        return (
            PHI_MINUS.copy(),
            PHI_PLUS.copy(),
            norm * (PSI_PLUS + 1j * t * PSI_MINUS),
            norm * (PSI_MINUS + 1j * t * PSI_PLUS),
        )
    c, s = math.cos(w / 2), math.sin(w / 2)
    st, ct = math.sin(p.theta), math.cos(p.theta)
    phi2 = ((st + ct * c) * PHI_MINUS + 1j * (ct - st * c) * PHI_PLUS - 1j * s * PSI_MINUS) / _SQRT2
    phi3 = ((ct + st * c) * PHI_PLUS - 1j * (st - ct * c) * PHI_MINUS + s * PSI_MINUS) / _SQRT2
    phi4 = -1j * ct * s * PHI_MINUS - st * s * PHI_PLUS + c * PSI_MINUS
    return (PSI_PLUS.copy(), phi2, phi3, phi4)


def verify_isotropization(p: ExchangeParams) -> float:
    """Largest entry of |T H T^dag - J S1.S2|."""
    t = rotation_matrix(p)
    h = build_hamiltonian(p)
    return float(np.abs(t @ h @ t.conj().T - build_isotropic(p.J)).max())
