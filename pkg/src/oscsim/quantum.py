"""Reference amplitude-level evolution and closed-form anchors.

The propagator integrates

    dc/dt = -i (H_R + i H_I) c - i f(t)

numerically for every kind, including the cases that have closed forms;
the closed forms below exist to cross-check it, not to replace it.
"""

from __future__ import annotations

import math

import numpy as np

from . import model
from .integrate import IntegratorConfig, Trajectory, integrate


def _tdse_rhs(spec):
    """Real-packed right-hand side, y = [Re c | Im c]."""
    n = spec.dim
    if spec.kind == model.LZ_LINEAR:
        E0, A, V = spec.E0, spec.A, spec.V

        def rhs(t, y):
            u1, u2, v1, v2 = y.tolist()
            w1 = E0 + A * t
            w2 = E0 - A * t
            return np.array([w1 * v1 + V * v2, V * v1 + w2 * v2,
                             -w1 * u1 - V * u2, -V * u1 - w2 * u2])
        return rhs
    if spec.kind == model.LZ_ARCTAN:
        E0, V = spec.E0, spec.V

        def rhs(t, y):
            u1, u2, v1, v2 = y.tolist()
            a = math.atan(t / E0)
            w1 = 2.0 * E0 * (1.0 + a)
            w2 = 2.0 * E0 * (1.0 - a)
            return np.array([w1 * v1 + V * v2, V * v1 + w2 * v2,
                             -w1 * u1 - V * u2, -V * u1 - w2 * u2])
        return rhs
    if spec.kind in (model.TWO_LEVEL, model.DISSIPATIVE, model.DRIVEN):
        w1, w2, V = spec.E1, spec.E2, spec.V
        l1, l2 = spec.lambda1, spec.lambda2
        m1, m2, wd = spec.mu1, spec.mu2, spec.omega_drive
        driven = spec.kind == model.DRIVEN

        def rhs(t, y):
            u1, u2, v1, v2 = y.tolist()
            du1 = w1 * v1 + V * v2 + l1 * u1
            du2 = V * v1 + w2 * v2 + l2 * u2
            dv1 = -w1 * u1 - V * u2 + l1 * v1
            dv2 = -V * u1 - w2 * u2 + l2 * v2
            if driven:
                c = math.cos(wd * t)
                dv1 -= m1 * c
                dv2 -= m2 * c
            return np.array([du1, du2, dv1, dv2])
        return rhs
    # static matrix kinds of any dimension
    hr, hi = model.eval_h(spec, 0.0)
    has_hi = np.any(hi)

    def rhs(t, y):
        u = y[:n]
        v = y[n:]
        du = hr @ v
        dv = -(hr @ u)
        if has_hi:
            du += hi @ u
            dv += hi @ v
        return np.concatenate([du, dv])
    return rhs


def evolve_tdse(spec, c0, t0, t1, cfg=None):
    """Propagate amplitudes under spec from t0 to t1.

    Returns a Trajectory whose states are the complex amplitude vectors on
    the uniform sample grid.
    """
    c0 = np.asarray(c0, dtype=complex)
    if c0.shape != (spec.dim,):
        raise ValueError(f"initial state has shape {c0.shape}, "
                         f"expected ({spec.dim},)")
    y0 = np.concatenate([c0.real, c0.imag])
    traj = integrate(_tdse_rhs(spec), y0, t0, t1, cfg, label="quantum")
    n = spec.dim
    states = traj.states[:, :n] + 1j * traj.states[:, n:]
    return Trajectory(times=traj.times, states=states, label="quantum")


def two_level_analytic(eps, V, t):
    """Closed-form degenerate-pair amplitudes for c(0) = (1, 0).

    c1 = exp(-i*eps*t) cos(V t),  c2 = -i exp(-i*eps*t) sin(V t).
    Accepts scalar or array t.
    """
    phase = np.exp(-1j * eps * np.asarray(t))
    return phase * np.cos(V * np.asarray(t)), \
        -1j * phase * np.sin(V * np.asarray(t))


def eigenvalues_two_level(E1, E2, V):
    """Stationary energies (E_plus, E_minus) of [[E1, V], [V, E2]]."""
    s = math.hypot(E1 - E2, 2.0 * V)
    return 0.5 * (E1 + E2 + s), 0.5 * (E1 + E2 - s)


def zener_probability(V, A):
    """Asymptotic probability exp(-pi V^2 / A) of staying on the swept
    diabatic level (the crossing is traversed with rate parameter A > 0)."""
    if A <= 0.0:
        raise ValueError("sweep rate A must be positive")
    return math.exp(-math.pi * V * V / A)


def populations(c):
    """|c_n|^2 per component; works on a single state or a stacked array."""
    return np.abs(np.asarray(c)) ** 2
