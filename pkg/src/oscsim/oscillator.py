"""Classical realizations of amplitude dynamics.

Amplitudes map to phase-space pairs through z_n = (q_n + i p_n)/sqrt(2).
For a real static coupling matrix the pair (q, p) obeys the Hamilton
system q' = Hp, p' = -Hq and carries the amplitudes exactly.  Eliminating
p yields position-only Newton systems; for time-dependent or complex H
these acquire velocity couplings, and the reduced-coupling approximation
(RCA) drops everything but position-position coupling.  A separate
doubled scheme removes velocity couplings for complex H by promoting the
momenta to positions of additional oscillators.

Momenta are never part of the integrated state in the position-only
schemes; they are reconstructed on the sample grid afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import model
from .errors import NegativeFrequencyError, SingularityError, SpecError
from .integrate import IntegratorConfig, Trajectory, integrate

_SQRT2 = math.sqrt(2.0)
# relative floor for the two-level denominator w1*w2 - V^2
_DET_GUARD = 1e-10
_COND_LIMIT = 1e12


# ---------------------------------------------------------------- states

@dataclass(frozen=True)
class PhaseSpaceState:
    """Dimensionless oscillator positions and momenta."""

    q: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        q = np.atleast_1d(np.asarray(self.q, dtype=float))
        p = np.atleast_1d(np.asarray(self.p, dtype=float))
        if q.shape != p.shape or q.ndim != 1:
            raise ValueError("q and p must be 1-d arrays of equal length")
        if not (np.all(np.isfinite(q)) and np.all(np.isfinite(p))):
            raise ValueError("phase-space components must be finite")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    @property
    def dim(self):
        return self.q.shape[0]


@dataclass(frozen=True)
class DoubledState:
    """State of the momentum-promoting scheme: 2N oscillator positions
    (q and the former momenta) plus their velocities."""

    q: np.ndarray
    p_as_position: np.ndarray
    q_velocity: np.ndarray
    p_velocity: np.ndarray

    def __post_init__(self):
        arrs = {}
        for name in ("q", "p_as_position", "q_velocity", "p_velocity"):
            a = np.atleast_1d(np.asarray(getattr(self, name), dtype=float))
            if a.ndim != 1 or not np.all(np.isfinite(a)):
                raise ValueError(f"{name} must be a finite 1-d array")
            arrs[name] = a
        if len({a.shape for a in arrs.values()}) != 1:
            raise ValueError("doubled-state components must share one length")
        for name, a in arrs.items():
            object.__setattr__(self, name, a)

    @property
    def dim(self):
        return self.q.shape[0]


@dataclass(frozen=True)
class PhysicalOscillatorParams:
    """Lab parameters of two coupled mass-spring oscillators."""

    m1: float
    m2: float
    omega1: float
    omega2: float
    kappa: float

    def __post_init__(self):
        for name in ("m1", "m2", "omega1", "omega2"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")


# ----------------------------------------------------- representation maps

def qp_from_amplitudes(c):
    """Split complex amplitudes into the phase-space pair they encode:
    q_n = sqrt(2) Re c_n, p_n = sqrt(2) Im c_n."""
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    return PhaseSpaceState(q=_SQRT2 * c.real, p=_SQRT2 * c.imag)


def amplitudes_from_qp(s):
    """Inverse map, z = (q + ip)/sqrt(2)."""
    return (s.q + 1j * s.p) / _SQRT2


def amplitudes_from_states(states):
    """Array form of amplitudes_from_qp for stacked [q | p] rows."""
    states = np.asarray(states, dtype=float)
    n = states.shape[-1] // 2
    return (states[..., :n] + 1j * states[..., n:2 * n]) / _SQRT2


def classical_energy(h, q, p):
    """Oscillator energy (q.H.q + p.H.p)/2 generated by a real coupling
    matrix h; conserved along evolve_exact_real trajectories."""
    h = np.asarray(h, dtype=float)
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    return 0.5 * (q @ h @ q + p @ h @ p)


def _coerce_qp(spec, s0):
    """Accept a PhaseSpaceState or a (complex) amplitude vector."""
    if isinstance(s0, PhaseSpaceState):
        s = s0
    else:
        s = qp_from_amplitudes(s0)
    if s.dim != spec.dim:
        raise ValueError(f"state dimension {s.dim} does not match "
                         f"Hamiltonian dimension {spec.dim}")
    return s.q.copy(), s.p.copy()


# ----------------------------------------------------- momentum recovery

def recover_momenta(h_r, h_i, q, qdot):
    """Momenta consistent with a position trajectory: solve
    H_R p = qdot - H_I q.  h_i may be None for a real Hamiltonian."""
    h_r = np.asarray(h_r, dtype=float)
    _check_condition(h_r, t=None)
    rhs = np.asarray(qdot, dtype=float)
    if h_i is not None:
        h_i = np.asarray(h_i, dtype=float)
        if np.any(h_i):
            rhs = rhs - h_i @ np.asarray(q, dtype=float)
    return np.linalg.solve(h_r, rhs)


def _check_condition(h_r, t):
    cond = np.linalg.cond(h_r)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise SingularityError(0.0 if t is None else t,
                               f"H_R condition number {cond:.3g}")


def _check_two_level_det(w1, w2, V, t):
    det = w1 * w2 - V * V
    if abs(det) < _DET_GUARD * max(abs(w1 * w2), V * V):
        raise SingularityError(t, f"determinant w1*w2 - V^2 = {det:.3g}")
    return det


def _recover_many(h_r, h_i, q_rows, qdot_rows):
    """recover_momenta vectorized over sample rows (rows are states)."""
    rhs = qdot_rows.T.copy()
    if h_i is not None and np.any(h_i):
        rhs -= h_i @ q_rows.T
    _check_condition(h_r, t=None)
    return np.linalg.solve(h_r, rhs).T


def rca_momenta_diagonal(omega, q, qdot, lam=None):
    """Per-component reduced-coupling momentum formula
    p_n = (qdot_n - lambda_n q_n) / omega_n (lambda omitted: p = qdot/omega).

    This is the cited closed form; the dissipative evolutions reconstruct
    their reported momenta through the full linear solve instead because
    the diagonal form carries a counter-rotating ripple of order V/omega.
    """
    omega = np.asarray(omega, dtype=float)
    qdot = np.asarray(qdot, dtype=float)
    if lam is None:
        return qdot / omega
    return (qdot - np.asarray(lam, dtype=float) * np.asarray(q, dtype=float)) / omega


# ----------------------------------------------------- exact evolutions

def evolve_exact_real(spec, s0, t0, t1, cfg=None):
    """First-order Hamilton evolution q' = Hp, p' = -Hq for a real static
    coupling matrix.  States on the sample grid are rows [q | p]."""
    if spec.is_time_dependent or spec.is_complex:
        raise SpecError(f"kind {spec.kind} is not static and real")
    q0, p0 = _coerce_qp(spec, s0)
    if spec.kind == model.TWO_LEVEL:
        w1, w2 = spec.E1, spec.E2
        V = spec.V

        def rhs(t, y):
            q1, q2, p1, p2 = y.tolist()
            return np.array([w1 * p1 + V * p2, V * p1 + w2 * p2,
                             -w1 * q1 - V * q2, -V * q1 - w2 * q2])
    else:
        h = model.eval_h(spec, t0)[0]
        n = spec.dim

        def rhs(t, y):
            return np.concatenate([h @ y[n:], -(h @ y[:n])])
    y0 = np.concatenate([q0, p0])
    return integrate(rhs, y0, t0, t1, cfg, label="exact")


def evolve_exact_td(spec, s0, t0, t1, cfg=None):
    """Position-only Newton evolution for the swept two-level kinds:

        qdd = -H(t)^2 q + Hdot H^{-1} qdot

    integrated as (q, qdot); momenta p = H^{-1} qdot are reconstructed on
    the sample grid.  The denominator w1*w2 - V^2 is monitored at every
    evaluation and aborts the run when it loses ten significant digits.
    """
    if spec.kind not in (model.LZ_LINEAR, model.LZ_ARCTAN):
        raise SpecError(f"kind {spec.kind} has no time-dependent sweep")
    q0, p0 = _coerce_qp(spec, s0)
    V = spec.V
    diag = _sweep_diagonal(spec)
    ddiag = _sweep_diagonal_rate(spec)
    w10, w20 = diag(t0)
    det_sign0 = 1.0 if w10 * w20 - V * V >= 0.0 else -1.0

    def rhs(t, y):
        q1, q2, d1, d2 = y.tolist()
        w1, w2 = diag(t)
        det = _check_two_level_det(w1, w2, V, t)
        if det * det_sign0 < 0.0:
            # the determinant is continuous in t, so an opposite sign
            # means it vanished somewhere inside the window even when no
            # evaluation landed in the guarded band around the zero
            raise SingularityError(t, f"determinant w1*w2 - V^2 crossed "
                                      f"zero ({det:.3g})")
        g1, g2 = ddiag(t)
        a1 = -(w1 * w1 + V * V) * q1 - V * (w1 + w2) * q2 \
            + g1 * (w2 * d1 - V * d2) / det
        a2 = -V * (w1 + w2) * q1 - (w2 * w2 + V * V) * q2 \
            + g2 * (w1 * d2 - V * d1) / det
        return np.array([d1, d2, a1, a2])

    qd0 = np.array([w10 * p0[0] + V * p0[1], V * p0[0] + w20 * p0[1]])
    y0 = np.concatenate([q0, qd0])
    traj = integrate(rhs, y0, t0, t1, cfg, label="exact")
    w1s, w2s = _sweep_diagonal_arrays(spec, traj.times)
    det = w1s * w2s - V * V
    qd1, qd2 = traj.states[:, 2], traj.states[:, 3]
    p1 = (w2s * qd1 - V * qd2) / det
    p2 = (w1s * qd2 - V * qd1) / det
    states = np.column_stack([traj.states[:, 0], traj.states[:, 1], p1, p2])
    return Trajectory(times=traj.times, states=states, label="exact")


def _sweep_diagonal(spec):
    if spec.kind == model.LZ_LINEAR:
        E0, A = spec.E0, spec.A
        return lambda t: (E0 + A * t, E0 - A * t)
    E0 = spec.E0

    def diag(t):
        a = math.atan(t / E0)
        return 2.0 * E0 * (1.0 + a), 2.0 * E0 * (1.0 - a)
    return diag


def _sweep_diagonal_rate(spec):
    if spec.kind == model.LZ_LINEAR:
        A = spec.A
        return lambda t: (A, -A)
    E0 = spec.E0

    def rate(t):
        d = 2.0 / (1.0 + (t / E0) ** 2)
        return d, -d
    return rate


def _sweep_diagonal_arrays(spec, times):
    if spec.kind == model.LZ_LINEAR:
        w1 = spec.E0 + spec.A * times
        w2 = spec.E0 - spec.A * times
    else:
        a = np.arctan(times / spec.E0)
        w1 = 2.0 * spec.E0 * (1.0 + a)
        w2 = 2.0 * spec.E0 * (1.0 - a)
    return w1, w2


def _two_level_velocity_matrices(w1, w2, V, l1, l2, t):
    """Coefficient matrices of the position-only system for a complex
    two-level Hamiltonian: qdd = M_acc q + M_vel qdot."""
    det = _check_two_level_det(w1, w2, V, t)
    # X = H_R H_I H_R^{-1}
    x11 = (w1 * w2 * l1 - V * V * l2) / det
    x12 = V * w1 * (l2 - l1) / det
    x21 = V * w2 * (l1 - l2) / det
    x22 = (w1 * w2 * l2 - V * V * l1) / det
    vel = np.array([[l1 + x11, x12], [x21, l2 + x22]])
    acc = np.array([[-(w1 * w1 + V * V) - x11 * l1, -V * (w1 + w2) - x12 * l2],
                    [-V * (w1 + w2) - x21 * l1, -(w2 * w2 + V * V) - x22 * l2]])
    return acc, vel


def evolve_exact_nonhermitian(spec, s0, t0, t1, cfg=None, form="auto"):
    """Position-only Newton evolution for complex static Hamiltonians:

        qdd = -H_R^2 q + (H_I + H_R H_I H_R^{-1}) qdot
              - H_R H_I H_R^{-1} H_I q        [- sqrt(2) H_R f(t) if driven]

    `form` picks the implementation: "two_level" uses the explicit 2x2
    coefficient expressions, "matrix" the general matrix path, "auto" the
    former when the kind allows it.  Both give identical results; keeping
    them separate lets tests cross-check one against the other.
    """
    if not spec.is_complex:
        raise SpecError(f"kind {spec.kind} has no imaginary part")
    if form not in ("auto", "matrix", "two_level"):
        raise ValueError(f"unknown form {form!r}")
    q0, p0 = _coerce_qp(spec, s0)
    h_r, h_i = model.eval_h(spec, t0)
    two_level = spec.kind in (model.DISSIPATIVE, model.DRIVEN)
    if form == "two_level" and not two_level:
        raise SpecError(f"kind {spec.kind} has no two-level coefficient form")

    if two_level and form != "matrix":
        acc, vel = _two_level_velocity_matrices(
            spec.E1, spec.E2, spec.V, spec.lambda1, spec.lambda2, t0)
        a11, a12 = acc[0].tolist()
        a21, a22 = acc[1].tolist()
        b11, b12 = vel[0].tolist()
        b21, b22 = vel[1].tolist()
        if spec.is_driven:
            g1 = _SQRT2 * (spec.E1 * spec.mu1 + spec.V * spec.mu2)
            g2 = _SQRT2 * (spec.V * spec.mu1 + spec.E2 * spec.mu2)
            wd = spec.omega_drive

            def rhs(t, y):
                q1, q2, d1, d2 = y.tolist()
                c = math.cos(wd * t)
                return np.array([
                    d1, d2,
                    a11 * q1 + a12 * q2 + b11 * d1 + b12 * d2 - g1 * c,
                    a21 * q1 + a22 * q2 + b21 * d1 + b22 * d2 - g2 * c])
        else:
            def rhs(t, y):
                q1, q2, d1, d2 = y.tolist()
                return np.array([
                    d1, d2,
                    a11 * q1 + a12 * q2 + b11 * d1 + b12 * d2,
                    a21 * q1 + a22 * q2 + b21 * d1 + b22 * d2])
    else:
        _check_condition(h_r, t0)
        n = spec.dim
        # X = H_R H_I H_R^{-1} without forming the inverse
        x = np.linalg.solve(h_r.T, (h_r @ h_i).T).T
        m_vel = h_i + x
        m_acc = -(h_r @ h_r) - x @ h_i
        if spec.is_driven:
            gvec = _SQRT2 * (h_r @ np.array([spec.mu1, spec.mu2]))
            wd = spec.omega_drive

            def rhs(t, y):
                q = y[:n]
                d = y[n:]
                return np.concatenate(
                    [d, m_acc @ q + m_vel @ d - math.cos(wd * t) * gvec])
        else:
            def rhs(t, y):
                q = y[:n]
                d = y[n:]
                return np.concatenate([d, m_acc @ q + m_vel @ d])

    qd0 = h_r @ p0 + h_i @ q0
    y0 = np.concatenate([q0, qd0])
    traj = integrate(rhs, y0, t0, t1, cfg, label="exact")
    n = spec.dim
    p_rows = _recover_many(h_r, h_i, traj.states[:, :n], traj.states[:, n:])
    states = np.column_stack([traj.states[:, :n], p_rows])
    return Trajectory(times=traj.times, states=states, label="exact")


# ----------------------------------------------------- reduced coupling

def _rca_frequency_check(spec, times):
    """Frequencies must stay positive on the sample grid; the reduced
    equations divide by them and lose meaning below zero."""
    if spec.kind in (model.LZ_LINEAR, model.LZ_ARCTAN):
        w1, w2 = _sweep_diagonal_arrays(spec, np.asarray(times, dtype=float))
        for w in (w1, w2):
            bad = np.nonzero(w <= 0.0)[0]
            if bad.size:
                i = bad[0]
                raise NegativeFrequencyError(float(np.asarray(times)[i]),
                                             float(w[i]))
    else:
        for w in (spec.E1, spec.E2):
            if w <= 0.0:
                raise NegativeFrequencyError(float(np.asarray(times)[0]), w)


def evolve_rca(spec, s0, t0, t1, cfg=None):
    """Reduced-coupling evolution: oscillators interact through positions
    only.  Forms by kind (qbar is the partner position):

      static        qdd_n = -w_n^2 q_n - 2 V w_n qbar
      swept         qdd_n = -w_n(t)^2 q_n + (wdot_n/w_n) qdot_n - 2 V w_n qbar
      dissipative   qdd_n = -(w_n^2 + l_n^2) q_n + 2 l_n qdot_n
                            - V (w1 + w2) qbar
      driven        dissipative form - sqrt(2) mu_n (w_n + V) cos(wd t)

    Momenta: p_n = qdot_n / w_n for the real kinds; the dissipative kinds
    solve H_R p = qdot - H_I q on the grid, which removes a spurious
    fast ripple the per-component formula would add.
    """
    if spec.kind not in model.TWO_LEVEL_KINDS:
        raise SpecError(f"kind {spec.kind} has no reduced-coupling form")
    q0, p0 = _coerce_qp(spec, s0)
    cfg = cfg or IntegratorConfig()
    sample_times = np.linspace(t0, t1, cfg.sample_count)
    _rca_frequency_check(spec, sample_times)
    V = spec.V

    if spec.kind in (model.LZ_LINEAR, model.LZ_ARCTAN):
        diag = _sweep_diagonal(spec)
        ddiag = _sweep_diagonal_rate(spec)

        def rhs(t, y):
            q1, q2, d1, d2 = y.tolist()
            w1, w2 = diag(t)
            g1, g2 = ddiag(t)
            a1 = -w1 * w1 * q1 + (g1 / w1) * d1 - 2.0 * V * w1 * q2
            a2 = -w2 * w2 * q2 + (g2 / w2) * d2 - 2.0 * V * w2 * q1
            return np.array([d1, d2, a1, a2])

        w10, w20 = diag(t0)
        qd0 = np.array([w10 * p0[0], w20 * p0[1]])
        traj = integrate(rhs, np.concatenate([q0, qd0]), t0, t1, cfg,
                         label="rca")
        w1s, w2s = _sweep_diagonal_arrays(spec, traj.times)
        p1 = traj.states[:, 2] / w1s
        p2 = traj.states[:, 3] / w2s
    elif spec.kind == model.TWO_LEVEL:
        w1, w2 = spec.E1, spec.E2

        def rhs(t, y):
            q1, q2, d1, d2 = y.tolist()
            return np.array([d1, d2,
                             -w1 * w1 * q1 - 2.0 * V * w1 * q2,
                             -w2 * w2 * q2 - 2.0 * V * w2 * q1])

        qd0 = np.array([w1 * p0[0], w2 * p0[1]])
        traj = integrate(rhs, np.concatenate([q0, qd0]), t0, t1, cfg,
                         label="rca")
        p1 = traj.states[:, 2] / w1
        p2 = traj.states[:, 3] / w2
    else:
        w1, w2 = spec.E1, spec.E2
        l1, l2 = spec.lambda1, spec.lambda2
        k = V * (w1 + w2)
        c11 = -(w1 * w1 + l1 * l1)
        c22 = -(w2 * w2 + l2 * l2)
        if spec.is_driven:
            g1 = _SQRT2 * spec.mu1 * (w1 + V)
            g2 = _SQRT2 * spec.mu2 * (w2 + V)
            wd = spec.omega_drive

            def rhs(t, y):
                q1, q2, d1, d2 = y.tolist()
                c = math.cos(wd * t)
                return np.array([
                    d1, d2,
                    c11 * q1 + 2.0 * l1 * d1 - k * q2 - g1 * c,
                    c22 * q2 + 2.0 * l2 * d2 - k * q1 - g2 * c])
        else:
            def rhs(t, y):
                q1, q2, d1, d2 = y.tolist()
                return np.array([d1, d2,
                                 c11 * q1 + 2.0 * l1 * d1 - k * q2,
                                 c22 * q2 + 2.0 * l2 * d2 - k * q1])

        h_r, h_i = model.eval_h(spec, t0)
        qd0 = h_r @ p0 + h_i @ q0
        traj = integrate(rhs, np.concatenate([q0, qd0]), t0, t1, cfg,
                         label="rca")
        p_rows = _recover_many(h_r, h_i, traj.states[:, :2], traj.states[:, 2:])
        p1, p2 = p_rows[:, 0], p_rows[:, 1]
    states = np.column_stack([traj.states[:, 0], traj.states[:, 1], p1, p2])
    return Trajectory(times=traj.times, states=states, label="rca")


def rca_drive_residual(spec):
    """Peak mismatch between the per-component driven inhomogeneity
    -sqrt(2) mu_n (w_n + V) cos(wd t) and the matrix form -sqrt(2) H_R f.
    Zero exactly when mu1 = mu2; reported as a diagnostic, not reconciled.
    """
    if not spec.is_driven:
        return 0.0
    return _SQRT2 * abs(spec.V) * abs(spec.mu1 - spec.mu2)


# ----------------------------------------------------- doubled scheme

def evolve_doubled(spec, c0, t0, t1, cfg=None):
    """Momentum-promoting scheme for complex static Hamiltonians: 2N
    position-only oscillators y = (q, P) with

        qdd = -H_R^2 q + (H_R H_I + H_I H_R) P + H_I^2 q
        Pdd = -H_R^2 P - (H_R H_I + H_I H_R) q + H_I^2 P

    (driven kinds acquire -sqrt(2) H_R f and -sqrt(2)(H_I f + fdot)).
    Initial velocities come from the first-order relations
    qdot = H_R p + H_I q, Pdot = -H_R q + H_I p - sqrt(2) f(t0).
    State rows are [q, P, qdot, Pdot]; amplitudes are (q + iP)/sqrt(2).
    """
    if not spec.is_complex:
        raise SpecError(f"kind {spec.kind} has no imaginary part to double")
    q0, p0 = _coerce_qp(spec, c0)
    h_r, h_i = model.eval_h(spec, t0)
    n = spec.dim
    a2 = h_r @ h_r
    cross = h_r @ h_i + h_i @ h_r
    i2 = h_i @ h_i
    if spec.is_driven:
        mu = np.array([spec.mu1, spec.mu2])
        wd = spec.omega_drive
        gq = _SQRT2 * (h_r @ mu)
        gp = _SQRT2 * (h_i @ mu)
        gpd = _SQRT2 * mu

        def rhs(t, y):
            q = y[:n]
            pp = y[n:2 * n]
            dq = y[2 * n:3 * n]
            dp = y[3 * n:]
            c = math.cos(wd * t)
            s = math.sin(wd * t)
            aq = -(a2 @ q) + cross @ pp + i2 @ q - gq * c
            ap = -(a2 @ pp) - cross @ q + i2 @ pp - gp * c + gpd * wd * s
            return np.concatenate([dq, dp, aq, ap])

        f0 = model.eval_drive(spec, t0)
    else:
        def rhs(t, y):
            q = y[:n]
            pp = y[n:2 * n]
            aq = -(a2 @ q) + cross @ pp + i2 @ q
            ap = -(a2 @ pp) - cross @ q + i2 @ pp
            return np.concatenate([y[2 * n:], aq, ap])

        f0 = np.zeros(n)
    qd0 = h_r @ p0 + h_i @ q0
    pd0 = -(h_r @ q0) + h_i @ p0 - _SQRT2 * f0
    y0 = np.concatenate([q0, p0, qd0, pd0])
    return integrate(rhs, y0, t0, t1, cfg, label="doubled")


def doubled_amplitudes(states):
    """Amplitudes (q + iP)/sqrt(2) from stacked [q, P, qdot, Pdot] rows."""
    states = np.asarray(states, dtype=float)
    n = states.shape[-1] // 4
    return (states[..., :n] + 1j * states[..., n:2 * n]) / _SQRT2


# ----------------------------------------------------- spectra, scaling

def exact_eigenfrequencies(E1, E2, V):
    """Squared normal-mode frequencies of the exact position-only system,
    from det(H^2 - W I) = 0.  Their square roots equal the stationary
    energies of the two-level Hamiltonian."""
    s = math.hypot(E1 * E1 - E2 * E2, 2.0 * V * (E1 + E2))
    half = 0.5 * (E1 * E1 + E2 * E2 + 2.0 * V * V)
    return half + 0.5 * s, half - 0.5 * s


def rca_eigenfrequencies(E1, E2, V):
    """Squared normal-mode frequencies of the reduced-coupling system:
    W = (E1^2 + E2^2 +- sqrt((E1^2 - E2^2)^2 + 16 V^2 E1 E2)) / 2."""
    s = math.sqrt((E1 * E1 - E2 * E2) ** 2 + 16.0 * V * V * E1 * E2)
    half = 0.5 * (E1 * E1 + E2 * E2)
    return half + 0.5 * s, half - 0.5 * s


def physical_to_dimensionless(params):
    """Reduce lab mass-spring parameters to the dimensionless triple
    (omega1, omega2, K) with K = kappa / sqrt(m1 m2 omega1 omega2).

    The symmetric reduced form uses the geometric mean sqrt(omega1*omega2)
    as its single frequency scale.
    """
    k = params.kappa / math.sqrt(
        params.m1 * params.m2 * params.omega1 * params.omega2)
    return params.omega1, params.omega2, k
