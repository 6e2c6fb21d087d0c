"""Two-spin exchange model with an anisotropic antisymmetric coupling.

Units: hbar = 1, spin operators S = sigma/2, energies in units of the
exchange strength J > 0.  The Hamiltonian is

    H = J cos(w) S1.S2 + 2 J sin^2(w/2) (n.S1)(n.S2) + J sin(w) n.(S1 x S2)

where w = arctan(b/J) in [0, pi/2) measures the antisymmetric
(Dzyaloshinskii-Moriya) coupling strength b >= 0 against J, and the unit
axis n is either (cos(theta), sin(theta), 0) for the "xy" orientation or
(0, 0, 1) for "z".  The cross product uses the standard orientation,
(S1 x S2)^a = eps_abc S1^b S2^c.

The spectrum is {-3J/4, J/4 (x3)} for every w and n: the anisotropy only
rotates the eigenbasis, which is what the frame module exploits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import kron

__all__ = [
    "ExchangeParams",
    "FieldSpec",
    "spin_operators",
    "build_hamiltonian",
    "build_isotropic",
    "build_zeeman",
    "compensating_fields",
]

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)


@dataclass(frozen=True)
class ExchangeParams:
    """Exchange parameters of the two-spin pair.

    theta (the axis azimuth, radians) is required for orientation "xy" and
    must be omitted for orientation "z", where the axis has no azimuth.
    b_over_J is the antisymmetric coupling in units of J; the anisotropy
    angle omega = arctan(b_over_J) is recomputed on every access so it can
    never go stale.
    """

    J: float
    orientation: str
    b_over_J: float
    theta: float | None = None

    def __post_init__(self) -> None:
        if not (math.isfinite(self.J) and self.J > 0):
            raise ValueError("J must be positive and finite")
        if self.orientation not in ("xy", "z"):
            raise ValueError("orientation must be 'xy' or 'z'")
        if not (math.isfinite(self.b_over_J) and self.b_over_J >= 0):
            raise ValueError("b_over_J must be nonnegative and finite")
        if self.orientation == "xy":
            if self.theta is None or not math.isfinite(self.theta):
                raise ValueError("orientation 'xy' requires a finite theta")
        elif self.theta is not None:
            raise ValueError("orientation 'z' takes no theta")

    @property
    def omega(self) -> float:
        return math.atan(self.b_over_J)

    def axis(self) -> np.ndarray:
        """Unit anisotropy axis n."""
        if self.orientation == "z":
            return np.array([0.0, 0.0, 1.0])
        return np.array([math.cos(self.theta), math.sin(self.theta), 0.0])


@dataclass(frozen=True)
class FieldSpec:
    """Static magnetic field on each qubit, in energy units (g mu_B absorbed)."""

    b1: tuple[float, float, float]
    b2: tuple[float, float, float]

    def __post_init__(self) -> None:
        for name, vec in (("b1", self.b1), ("b2", self.b2)):
            vec = tuple(float(x) for x in vec)
            if len(vec) != 3 or not all(math.isfinite(x) for x in vec):
                raise ValueError(f"{name} must be three finite components")
            object.__setattr__(self, name, vec)


def spin_operators() -> tuple[np.ndarray, ...]:
    """The six two-qubit spin operators (S1x, S1y, S1z, S2x, S2y, S2z)."""
    halves = (SIGMA_X / 2, SIGMA_Y / 2, SIGMA_Z / 2)
    s1 = tuple(kron(h, IDENTITY_2) for h in halves)
    s2 = tuple(kron(IDENTITY_2, h) for h in halves)
    return s1 + s2


def _heisenberg() -> np.ndarray:
    s1x, s1y, s1z, s2x, s2y, s2z = spin_operators()
    return s1x @ s2x + s1y @ s2y + s1z @ s2z


def build_hamiltonian(p: ExchangeParams) -> np.ndarray:
    """Full anisotropic exchange Hamiltonian, in the {00,01,10,11} basis."""
    s1x, s1y, s1z, s2x, s2y, s2z = spin_operators()
    n = p.axis()
    w = p.omega

    n_s1 = n[0] * s1x + n[1] * s1y + n[2] * s1z
    n_s2 = n[0] * s2x + n[1] * s2y + n[2] * s2z
    cross = (
        n[0] * (s1y @ s2z - s1z @ s2y)
        + n[1] * (s1z @ s2x - s1x @ s2z)
        + n[2] * (s1x @ s2y - s1y @ s2x)
    )
    return (
        p.J * math.cos(w) * _heisenberg()
        + 2.0 * p.J * math.sin(w / 2) ** 2 * (n_s1 @ n_s2)
        + p.J * math.sin(w) * cross
    )


def build_isotropic(J: float) -> np.ndarray:
    """Isotropic exchange J S1.S2, the target of the frame change."""
    if not (math.isfinite(J) and J > 0):
        raise ValueError("J must be positive and finite")
    return J * _heisenberg()


def build_zeeman(f: FieldSpec) -> np.ndarray:
    """Field term B1.S1 + B2.S2 alone; add it to an exchange Hamiltonian."""
    s1x, s1y, s1z, s2x, s2y, s2z = spin_operators()
    b1, b2 = f.b1, f.b2
    return (
        b1[0] * s1x + b1[1] * s1y + b1[2] * s1z
        + b2[0] * s2x + b2[1] * s2y + b2[2] * s2z
    )


def compensating_fields(p: ExchangeParams, B: float) -> FieldSpec:
    """Per-qubit fields that the frame change maps onto a uniform z field.

    The returned fields satisfy T (B1.S1 + B2.S2) T^dag = B (S1z + S2z) with
    T the isotropizing rotation, and both have magnitude |B|.  For the z
    orientation the fields already point along z.  For the xy orientation the
    z components are written as B cos(w/2) directly (the product
    sin(w/2) cot(w/2) simplified algebraically), so w -> 0 is regular.
    """
    if not math.isfinite(B):
        raise ValueError("B must be finite")
    if p.orientation == "z":
        return FieldSpec(b1=(0.0, 0.0, B), b2=(0.0, 0.0, B))
    s, c = math.sin(p.omega / 2), math.cos(p.omega / 2)
    st, ct = math.sin(p.theta), math.cos(p.theta)
    return FieldSpec(
        b1=(-B * s * st, B * s * ct, B * c),
        b2=(B * s * st, -B * s * ct, B * c),
    )
