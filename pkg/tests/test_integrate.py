"""Adaptive kernel: sampling contract, accuracy, failure modes."""

import numpy as np
import pytest

from oscsim.errors import DivergenceError, SimulationError, StiffnessError
from oscsim.integrate import IntegratorConfig, Trajectory, integrate


def circle_rhs(t, y):
    return np.array([y[1], -y[0]])


# ------------------------------------------------------------- config

@pytest.mark.parametrize("kwargs", [
    {"rtol": 0.0}, {"rtol": -1e-8}, {"atol": 0.0}, {"max_step": 0.0},
    {"initial_step": 0.0}, {"sample_count": 1},
])
def test_config_validation(kwargs):
    with pytest.raises(ValueError):
        IntegratorConfig(**kwargs)


def test_trajectory_requires_matching_lengths():
    with pytest.raises(ValueError):
        Trajectory(times=np.arange(3.0), states=np.zeros((4, 2)))


def test_trajectory_requires_monotone_times():
    with pytest.raises(ValueError):
        Trajectory(times=np.array([0.0, 2.0, 1.0]), states=np.zeros((3, 1)))


# ------------------------------------------------------------- accuracy

def test_zero_field_stays_constant():
    traj = integrate(lambda t, y: np.zeros(2), [1.0, 2.0], 0.0, 10.0)
    assert np.array_equal(traj.states, np.tile([1.0, 2.0], (len(traj), 1)))


def test_unit_circle_closes_after_one_period():
    cfg = IntegratorConfig(rtol=1e-10, atol=1e-12, sample_count=11)
    traj = integrate(circle_rhs, [1.0, 0.0], 0.0, 2.0 * np.pi, cfg)
    assert np.max(np.abs(traj.states[-1] - [1.0, 0.0])) < 1e-8


def test_fast_oscillator_energy_drift_over_one_period():
    w = 40.0

    def rhs(t, y):
        return np.array([w * y[1], -w * y[0]])

    cfg = IntegratorConfig(rtol=1e-10, atol=1e-12, sample_count=101)
    traj = integrate(rhs, [1.0, 0.0], 0.0, 2.0 * np.pi / w, cfg)
    energy = 0.5 * np.sum(traj.states ** 2, axis=1)
    assert np.max(np.abs(energy - energy[0])) / energy[0] < 1e-9


def test_dense_samples_track_closed_form():
    cfg = IntegratorConfig(sample_count=257)
    traj = integrate(circle_rhs, [1.0, 0.0], 0.0, 2.0 * np.pi, cfg)
    exact = np.column_stack([np.cos(traj.times), -np.sin(traj.times)])
    assert np.max(np.abs(traj.states - exact)) < 1e-8


def test_grid_layout_and_endpoints():
    cfg = IntegratorConfig(sample_count=17)
    traj = integrate(circle_rhs, [1.0, 0.0], 0.0, 3.0, cfg, label="x")
    assert len(traj) == 17
    assert np.array_equal(traj.times, np.linspace(0.0, 3.0, 17))
    assert np.array_equal(traj.states[0], [1.0, 0.0])
    assert traj.label == "x"


def test_empty_window_rejected():
    with pytest.raises(ValueError):
        integrate(circle_rhs, [1.0, 0.0], 2.0, 2.0)


# ------------------------------------------------------------- invariants

def test_halving_tolerances_never_hurts():
    errors = []
    for k in range(8):
        cfg = IntegratorConfig(rtol=1e-5 / 2 ** k, atol=1e-7 / 2 ** k,
                               sample_count=3)
        traj = integrate(circle_rhs, [1.0, 0.0], 0.0, 2.0 * np.pi, cfg)
        errors.append(np.max(np.abs(traj.states[-1] - [1.0, 0.0])))
    # tiny additive slack: roundoff floor once errors reach ~1e-12
    assert all(b <= a + 1e-14 for a, b in zip(errors, errors[1:]))


def test_deterministic_reruns():
    cfg = IntegratorConfig(sample_count=33)
    a = integrate(circle_rhs, [1.0, 0.0], 0.0, 5.0, cfg)
    b = integrate(circle_rhs, [1.0, 0.0], 0.0, 5.0, cfg)
    assert np.array_equal(a.states, b.states)


def test_backward_window_reverses_forward_run():
    cfg = IntegratorConfig(rtol=1e-10, atol=1e-12, sample_count=21)
    fwd = integrate(circle_rhs, [1.0, 0.0], 0.0, 2.0 * np.pi, cfg)
    back = integrate(circle_rhs, fwd.states[-1], 2.0 * np.pi, 0.0, cfg)
    assert back.times[0] > back.times[-1]
    assert np.max(np.abs(back.states[-1] - [1.0, 0.0])) < 10.0 * 1e-8


# ------------------------------------------------------------- failures

@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_finite_time_blowup_reports_stiffness():
    cfg = IntegratorConfig(initial_step=0.01, sample_count=5)
    with pytest.raises(StiffnessError) as info:
        integrate(lambda t, y: y * y, [1.0], 0.0, 2.0, cfg)
    # solution 1/(1-t) escapes at t = 1
    assert 0.99 < info.value.t < 1.01
    assert isinstance(info.value, SimulationError)


@pytest.mark.filterwarnings("ignore::RuntimeWarning")
def test_overflowing_state_reports_divergence():
    cfg = IntegratorConfig(initial_step=1e150, sample_count=5)
    with pytest.raises(DivergenceError) as info:
        integrate(lambda t, y: np.array([1e154]), [0.0], 0.0, 1e156, cfg)
    assert np.isfinite(info.value.t)
    assert isinstance(info.value, SimulationError)
