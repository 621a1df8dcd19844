"""Adaptive ODE kernel shared by every evolution scheme.

A single explicit embedded Runge-Kutta pair (Dormand-Prince 8(5,3), via
scipy's stepper) integrates real first-order systems; callers reduce
second-order Newton systems and complex equations to this form.  Output is
sampled on a uniform grid through the method's dense output, so the cost is
set by the error control, not by the sample count.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import DOP853

from .errors import DivergenceError, StiffnessError

# relative step floor: a proposed step below this fraction of the window
# means the problem is effectively stiff for an explicit method
STEP_FLOOR = 1e-14


@dataclass(frozen=True)
class IntegratorConfig:
    rtol: float = 1e-10
    atol: float = 1e-12
    max_step: float = np.inf
    initial_step: float | None = None
    sample_count: int = 1001

    def __post_init__(self):
        if not (self.rtol > 0.0 and self.atol > 0.0):
            raise ValueError("rtol and atol must be positive")
        if not self.max_step > 0.0:
            raise ValueError("max_step must be positive")
        if self.initial_step is not None and not self.initial_step > 0.0:
            raise ValueError("initial_step must be positive")
        if self.sample_count < 2:
            raise ValueError("sample_count must be at least 2")


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution: times[i] is the timestamp of states[i]."""

    times: np.ndarray   # (n,), strictly monotone
    states: np.ndarray  # (n, dim), real or complex depending on producer
    label: str = ""

    def __post_init__(self):
        if self.states.shape[0] != self.times.shape[0]:
            raise ValueError("times/states length mismatch")
        dt = np.diff(self.times)
        if not (np.all(dt > 0) or np.all(dt < 0)):
            raise ValueError("times must be strictly monotone")

    def __len__(self):
        return self.times.shape[0]


def integrate(rhs, y0, t0, t1, cfg=None, label=""):
    """Integrate dy/dt = rhs(t, y) from t0 to t1.

    Parameters
    ----------
    rhs : callable
        Vector field returning an array shaped like ``y``.
    y0 : array_like
        Real initial state.
    t0, t1 : float
        Window endpoints.  t1 > t0 is the primary direction; t1 < t0 runs
        the same controller backward (used for reversibility checks).
    cfg : IntegratorConfig, optional
    label : str
        Scheme tag stored on the returned trajectory.

    Returns
    -------
    Trajectory
        States on the uniform grid linspace(t0, t1, cfg.sample_count).

    Raises
    ------
    StiffnessError
        If the controller would need a step below STEP_FLOOR*|t1-t0|.
    DivergenceError
        If the state stops being finite.
    """
    if cfg is None:
        cfg = IntegratorConfig()
    y0 = np.asarray(y0, dtype=float)
    span = t1 - t0
    if span == 0.0:
        raise ValueError("empty integration window (t1 == t0)")
    direction = 1.0 if span > 0 else -1.0
    h_floor = STEP_FLOOR * abs(span)

    grid = np.linspace(t0, t1, cfg.sample_count)
    out = np.empty((cfg.sample_count, y0.size))
    out[0] = y0

    stepper = DOP853(rhs, t0, y0, t1, max_step=cfg.max_step,
                     rtol=cfg.rtol, atol=cfg.atol,
                     first_step=cfg.initial_step)
    i = 1
    while stepper.status == "running":
        stepper.step()
        if stepper.status == "failed":
            if not np.all(np.isfinite(stepper.y)):
                raise DivergenceError(stepper.t)
            raise StiffnessError(stepper.t)
        if not np.all(np.isfinite(stepper.y)):
            raise DivergenceError(stepper.t)
        if stepper.status == "running" and stepper.h_abs < h_floor:
            raise StiffnessError(stepper.t)
        # consume every grid point covered by the accepted step
        if i < cfg.sample_count and (grid[i] - stepper.t) * direction <= 0.0:
            dense = stepper.dense_output()
            while i < cfg.sample_count and \
                    (grid[i] - stepper.t) * direction <= 0.0:
                out[i] = dense(grid[i])
                i += 1
    out[-1] = stepper.y  # endpoint exactly as integrated
    return Trajectory(times=grid, states=out, label=label)
