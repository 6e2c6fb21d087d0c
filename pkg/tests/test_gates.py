import math

import numpy as np
import pytest

from spinframe.analysis import concurrence
from spinframe.gates import (
    CNOT,
    SQRT_SWAP,
    SWAP,
    PulseSchedule,
    cnot,
    corrected_swap,
    evolve,
    phase_shifted_swap,
    sqrt_swap,
)
from spinframe.gates import _cnot_from_w
from spinframe.linalg import expm_unitary, phase_distance
from spinframe.model import ExchangeParams, build_hamiltonian, build_isotropic

REFERENCE = ExchangeParams(1.0, "xy", 5e-3, theta=5 * math.pi / 6)

POINTS = [
    REFERENCE,
    ExchangeParams(1.0, "z", 5e-3),
    ExchangeParams(2.0, "xy", 0.5, theta=0.3),
    ExchangeParams(0.5, "z", 0.2),
]


def test_evolve_empty_schedule():
    np.testing.assert_array_equal(evolve(PulseSchedule(())), np.eye(4))


def test_evolve_orders_segments():
    """Later segments act later, i.e. multiply on the left."""
    h1 = build_isotropic(1.0)
    h2 = np.diag([1.0, 0.0, 0.0, -1.0]).astype(complex)
    sched = PulseSchedule(((h1, 0.9), (h2, 0.4)))
    expected = expm_unitary(h2, 0.4) @ expm_unitary(h1, 0.9)
    np.testing.assert_allclose(evolve(sched), expected, atol=1e-13)


def test_schedule_rejects_negative_duration():
    with pytest.raises(ValueError):
        PulseSchedule(((build_isotropic(1.0), -0.1),))


@pytest.mark.parametrize("p", POINTS, ids=str)
def test_corrected_swap_hits_target(p):
    report = corrected_swap(p)
    assert report.phase_distance_to_target < 1e-12
    assert report.target_label == "SWAP"


def test_uncorrected_swap_error_closed_form():
    """Without the frame sandwich the pulse misses SWAP by sin^2(w/2)."""
    for p in POINTS:
        u = expm_unitary(build_hamiltonian(p), math.pi / p.J)
        eps = phase_distance(u, SWAP)
        assert eps == pytest.approx(math.sin(p.omega / 2) ** 2, abs=1e-12)


def test_uncorrected_swap_error_decade_at_reference():
    u = expm_unitary(build_hamiltonian(REFERENCE), math.pi)
    assert 5e-6 <= phase_distance(u, SWAP) <= 1e-5


@pytest.mark.parametrize("p", POINTS, ids=str)
def test_sqrt_swap_squares_to_swap(p):
    w = sqrt_swap(p).matrix
    assert sqrt_swap(p).phase_distance_to_target < 1e-12
    assert phase_distance(w @ w, corrected_swap(p).matrix) < 1e-12


def test_sqrt_swap_entangles():
    w = sqrt_swap(REFERENCE).matrix
    state = w @ np.array([0.0, 1.0, 0.0, 0.0], dtype=complex)
    assert concurrence(np.outer(state, state.conj())) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("p", POINTS, ids=str)
def test_cnot_hits_target(p):
    report = cnot(p)
    assert report.phase_distance_to_target < 1e-10
    assert report.target_label == "CNOT"


def test_cnot_core_sequence_is_conditional_phase_flip():
    """Undressed, the pulse sequence gives diag(-1,1,1,1) up to a phase."""
    w = sqrt_swap(REFERENCE).matrix

    # build the raw product independently of the module helper
    def z1(angle):
        return np.kron(np.diag([np.exp(0.5j * angle), np.exp(-0.5j * angle)]), np.eye(2))

    def z2(angle):
        return np.kron(np.eye(2), np.diag([np.exp(0.5j * angle), np.exp(-0.5j * angle)]))

    raw = z1(math.pi / 2) @ z2(-math.pi / 2) @ w @ z1(math.pi) @ w
    target = np.diag([-1.0, 1.0, 1.0, 1.0]).astype(complex)
    assert phase_distance(raw, target) < 1e-10


def test_cnot_dressing_is_parameter_independent():
    """The same fixed single-qubit dressing works at every operating point."""
    for p in POINTS:
        u = _cnot_from_w(sqrt_swap(p).matrix)
        assert phase_distance(u, CNOT) < 1e-10


def test_cnot_flips_target_conditionally():
    u = cnot(REFERENCE).matrix
    e = np.eye(4, dtype=complex)
    # column action: |10> -> |11>, |11> -> |10>, |00> and |01> fixed
    assert abs(np.vdot(e[3], u @ e[2])) == pytest.approx(1.0, abs=1e-8)
    assert abs(np.vdot(e[2], u @ e[3])) == pytest.approx(1.0, abs=1e-8)
    assert abs(np.vdot(e[0], u @ e[0])) == pytest.approx(1.0, abs=1e-8)
    assert abs(np.vdot(e[1], u @ e[1])) == pytest.approx(1.0, abs=1e-8)


def test_phase_shifted_swap_zero_field_is_swap():
    u0 = phase_shifted_swap(REFERENCE, 0.0).matrix
    assert phase_distance(u0, corrected_swap(REFERENCE).matrix) < 1e-12


@pytest.mark.parametrize("B", [0.1, 1.0])
def test_phase_shifted_swap_closed_form(B):
    """Swap followed by equal and opposite z phases on both outputs."""
    p = REFERENCE
    u = phase_shifted_swap(p, B).matrix
    half = B * math.pi / (2 * p.J)
    d = np.diag([np.exp(-1j * half), np.exp(1j * half)])
    target = SWAP @ np.kron(d, d)
    assert phase_distance(u, target) < 1e-12


def test_phase_shifted_swap_still_swaps_populations():
    u = phase_shifted_swap(REFERENCE, 1.0).matrix
    e = np.eye(4, dtype=complex)
    assert abs(np.vdot(e[2], u @ e[1])) == pytest.approx(1.0, abs=1e-10)
    assert abs(np.vdot(e[1], u @ e[2])) == pytest.approx(1.0, abs=1e-10)


def test_gate_labels():
    assert corrected_swap(REFERENCE).label == "swap"
    assert sqrt_swap(REFERENCE).label == "sqrt_swap"
    assert phase_shifted_swap(REFERENCE, 1.0).label == "psw(B=1.0)"
