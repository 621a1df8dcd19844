"""Qubit registers on oscillator amplitudes.

A register of n qubits is stored as 2^n complex amplitudes over the basis
|00..0>, |00..1>, ..., ordered with the first qubit label as the most
significant bit.  Gates act either as unitary matrices on that vector or
as schedules of timed couplings between pairs of the 2^n oscillators that
carry the amplitudes.

Rotation conventions: R_x(t) = exp(-i t sx / 2), R_y(t) = exp(-i t sy / 2).
Gate equality is always read modulo one global phase, fixed by the phase
of the largest-magnitude amplitude of the reference state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import model, oscillator
from .integrate import IntegratorConfig

_NORM_TOL = 1e-8


# ----------------------------------------------------------- register

@dataclass(frozen=True)
class RegisterState:
    """Normalized amplitudes of an n-qubit register."""

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.n_qubits < 1:
            raise ValueError("n_qubits must be positive")
        amp = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amp.shape[0] != 2 ** self.n_qubits:
            raise ValueError(f"expected {2 ** self.n_qubits} amplitudes, "
                             f"got {amp.shape[0]}")
        norm = np.linalg.norm(amp)
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state norm {norm:.12g} is not 1")
        object.__setattr__(self, "amplitudes", amp)

    @property
    def dim(self):
        return self.amplitudes.shape[0]


def basis_state(label):
    """Register state |label> for a bit string such as "10"."""
    label = str(label)
    if not label or any(ch not in "01" for ch in label):
        raise ValueError(f"basis label must be a bit string, got {label!r}")
    amp = np.zeros(2 ** len(label), dtype=complex)
    amp[int(label, 2)] = 1.0
    return RegisterState(n_qubits=len(label), amplitudes=amp)


def bloch_state(theta, phi):
    """cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>."""
    return RegisterState(1, np.array([math.cos(theta / 2.0),
                                      np.exp(1j * phi) * math.sin(theta / 2.0)]))


# ----------------------------------------------------------- matrices

HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)


def rx(theta):
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]])


def ry(theta):
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def coupling_unitary(V, t):
    """Propagator of two degenerate states coupled with strength V for a
    time t.  At t = pi/(4V) this is the SQiSW block; at t = pi/(2V) it is
    the SWAP block times the global phase -i."""
    c, s = math.cos(V * t), math.sin(V * t)
    return np.array([[c, -1j * s], [-1j * s, c]])


def sqisw():
    """Square root of iSWAP: identity outside the (|01>,|10>) block."""
    g = np.eye(4, dtype=complex)
    g[1:3, 1:3] = np.array([[1.0, -1j], [-1j, 1.0]]) / math.sqrt(2.0)
    return g


def swap_gate():
    g = np.eye(4, dtype=complex)
    g[1:3, 1:3] = np.array([[0.0, 1.0], [1.0, 0.0]])
    return g


def cnot():
    """Control on the first qubit, target the second."""
    g = np.eye(4, dtype=complex)
    g[2:4, 2:4] = np.array([[0.0, 1.0], [1.0, 0.0]])
    return g


def is_unitary(g, tol=1e-10):
    g = np.asarray(g, dtype=complex)
    if g.ndim != 2 or g.shape[0] != g.shape[1]:
        return False
    return bool(np.max(np.abs(g.conj().T @ g - np.eye(g.shape[0]))) <= tol)


# ----------------------------------------------------------- application

def apply_gate(g, targets, s):
    """Apply a unitary on the given qubits (indices count from the most
    significant label) and return the new register state."""
    g = np.asarray(g, dtype=complex)
    if not is_unitary(g, tol=1e-10):
        raise ValueError("gate matrix is not unitary")
    if isinstance(targets, int):
        targets = (targets,)
    targets = tuple(targets)
    k = len(targets)
    if g.shape != (2 ** k, 2 ** k):
        raise ValueError(f"{g.shape} gate does not fit {k} target qubit(s)")
    if len(set(targets)) != k or not all(0 <= q < s.n_qubits for q in targets):
        raise ValueError(f"invalid target qubits {targets}")
    psi = s.amplitudes.reshape((2,) * s.n_qubits)
    gt = g.reshape((2,) * (2 * k))
    psi = np.tensordot(gt, psi, axes=(tuple(range(k, 2 * k)), targets))
    psi = np.moveaxis(psi, tuple(range(k)), targets)
    return RegisterState(s.n_qubits, psi.reshape(-1))


def phase_aligned(c, reference):
    """Remove the one global phase separating c from reference, read off
    at the largest-magnitude reference amplitude."""
    c = np.asarray(c, dtype=complex)
    reference = np.asarray(reference, dtype=complex)
    k = int(np.argmax(np.abs(reference)))
    if abs(c[k]) == 0.0:
        return c.copy()
    phase = (reference[k] / abs(reference[k])) / (c[k] / abs(c[k]))
    return c * phase


def states_match(c, reference, tol):
    """Max amplitude deviation after global-phase alignment."""
    a = c.amplitudes if isinstance(c, RegisterState) else np.asarray(c)
    b = reference.amplitudes if isinstance(reference, RegisterState) \
        else np.asarray(reference)
    return float(np.max(np.abs(phase_aligned(a, b) - b))) <= tol


# ----------------------------------------------------------- decomposition

def cnot_decomposition_factors():
    """The six unitaries whose product (last applied first in the list
    returned here, i.e. apply left to right) realizes CNOT up to a global
    phase: R_y^a(pi/2), SQiSW, R_x^a(pi), SQiSW,
    R_x^a(pi/2) (x) R_x^b(-pi/2), R_y^a(-pi/2)."""
    eye = np.eye(2)
    return [
        np.kron(ry(math.pi / 2.0), eye),
        sqisw(),
        np.kron(rx(math.pi), eye),
        sqisw(),
        np.kron(rx(math.pi / 2.0), rx(-math.pi / 2.0)),
        np.kron(ry(-math.pi / 2.0), eye),
    ]


def cnot_via_decomposition(s):
    """Run the rotation/SQiSW sequence realizing CNOT on a 2-qubit state.

    Returns (final_state, intermediates); intermediates holds the seven
    stages from the input itself through the final state, the last entry
    equal to CNOT applied to the input up to one global phase.
    """
    if s.n_qubits != 2:
        raise ValueError("decomposition is defined on 2-qubit states")
    stages = [s]
    for g in cnot_decomposition_factors():
        stages.append(apply_gate(g, (0, 1), stages[-1]))
    return stages[-1], stages


# ----------------------------------------------------------- schedules

@dataclass(frozen=True)
class Window:
    """One coupling interval between the oscillators carrying two basis
    states; disjoint-pair windows commute, so groups meant to run
    simultaneously may be listed in any order."""

    pair: tuple
    strength: float
    duration: float


@dataclass(frozen=True)
class PhaseShift:
    """Single-oscillator phase advance (a detuning interval, applied
    here as the exact phase it accumulates)."""

    state: int
    angle: float


@dataclass(frozen=True)
class GateSchedule:
    """Ordered coupling windows and phase shifts over `dim` oscillators."""

    dim: int
    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        for step in self.steps:
            if isinstance(step, Window):
                i, j = step.pair
                if i == j or not (0 <= i < self.dim and 0 <= j < self.dim):
                    raise ValueError(f"window pair {step.pair} out of range")
                if step.duration < 0.0:
                    raise ValueError("window duration must be non-negative")
            elif isinstance(step, PhaseShift):
                if not 0 <= step.state < self.dim:
                    raise ValueError(f"phase-shift state {step.state} "
                                     "out of range")
            else:
                raise ValueError(f"unknown schedule step {step!r}")

    @property
    def windows(self):
        return tuple(s for s in self.steps if isinstance(s, Window))

    def __add__(self, other):
        if self.dim != other.dim:
            raise ValueError("schedule dimensions differ")
        return GateSchedule(self.dim, self.steps + other.steps)


@dataclass(frozen=True)
class GateOp:
    """Circuit element: a named gate, optionally bound to one qubit and
    one angle (rotations)."""

    name: str
    qubit: int = None
    angle: float = None


def _qubit_pairs(qubit, n_qubits):
    """Basis-state pairs differing only in the given qubit label."""
    bit = 1 << (n_qubits - 1 - qubit)
    return [(i, i | bit) for i in range(2 ** n_qubits) if not i & bit]


def _rotation_windows(qubit, theta, n_qubits, strength):
    # R_x is 4pi-periodic, so any angle maps to a non-negative duration
    theta = math.fmod(theta, 4.0 * math.pi)
    if theta < 0.0:
        theta += 4.0 * math.pi
    duration = theta / (2.0 * strength)
    return [Window(pair=p, strength=strength, duration=duration)
            for p in _qubit_pairs(qubit, n_qubits)]


def schedule_for_gate(op, n_qubits=2, strength=1.0):
    """Translate a gate into coupling windows over the 2^n oscillators.

    Supported: identity, rx/ry on one qubit, swap, sqisw, cnot.  A window
    of strength V and duration t applies coupling_unitary(V, t) to its
    pair; ry is realized as rx conjugated by +-pi/2 phase shifts of the
    qubit's |1> states.
    """
    if strength <= 0.0:
        raise ValueError("coupling strength must be positive")
    dim = 2 ** n_qubits
    name = op.name.lower()
    if name == "identity":
        return GateSchedule(dim, ())
    if name in ("rx", "ry"):
        if op.qubit is None or op.angle is None:
            raise ValueError(f"{name} needs a qubit index and an angle")
        if not 0 <= op.qubit < n_qubits:
            raise ValueError(f"qubit {op.qubit} out of range")
        windows = _rotation_windows(op.qubit, op.angle, n_qubits, strength)
        if name == "rx":
            return GateSchedule(dim, windows)
        ones = [j for _, j in _qubit_pairs(op.qubit, n_qubits)]
        pre = [PhaseShift(j, -math.pi / 2.0) for j in ones]
        post = [PhaseShift(j, math.pi / 2.0) for j in ones]
        return GateSchedule(dim, pre + windows + post)
    if name in ("sqisw", "swap"):
        if n_qubits != 2:
            raise NotImplementedError(f"{name} schedule needs 2 qubits")
        if name == "sqisw":
            return GateSchedule(dim, (Window(pair=(1, 2), strength=strength,
                                             duration=math.pi / (4.0 * strength)),))
        # the window leaves -i on the swapped pair only; detuning the two
        # idle states by the same phase turns it into one global phase
        return GateSchedule(dim, (
            Window(pair=(1, 2), strength=strength,
                   duration=math.pi / (2.0 * strength)),
            PhaseShift(0, -math.pi / 2.0),
            PhaseShift(3, -math.pi / 2.0)))
    if name == "cnot":
        if n_qubits != 2:
            raise NotImplementedError("cnot schedule needs 2 qubits")
        parts = [GateOp("ry", 0, math.pi / 2.0), GateOp("sqisw"),
                 GateOp("rx", 0, math.pi), GateOp("sqisw"),
                 GateOp("rx", 0, math.pi / 2.0), GateOp("rx", 1, -math.pi / 2.0),
                 GateOp("ry", 0, -math.pi / 2.0)]
        sched = GateSchedule(dim, ())
        for part in parts:
            sched = sched + schedule_for_gate(part, n_qubits, strength)
        return sched
    raise NotImplementedError(f"no schedule for gate {op.name!r}")


def gate_matrix(op, n_qubits=2):
    """Embedded 2^n unitary of a circuit element, for cross-checks
    against schedule execution."""
    name = op.name.lower()
    if name == "identity":
        return np.eye(2 ** n_qubits, dtype=complex)
    if name in ("rx", "ry", "hadamard"):
        if name == "hadamard":
            g = HADAMARD.astype(complex)
        else:
            g = rx(op.angle) if name == "rx" else ry(op.angle)
        mats = [g if q == op.qubit else np.eye(2) for q in range(n_qubits)]
        out = mats[0]
        for m in mats[1:]:
            out = np.kron(out, m)
        return out
    if n_qubits != 2:
        raise ValueError(f"gate {op.name!r} is two-qubit only")
    if name == "sqisw":
        return sqisw()
    if name == "swap":
        return swap_gate()
    if name == "cnot":
        return cnot()
    raise ValueError(f"unknown gate {op.name!r}")


def execute_schedule(sched, s, cfg=None):
    """Realize a schedule on the oscillator amplitudes.

    Each window evolves its pair exactly (the pair's states are taken
    degenerate at zero energy, so idle oscillators hold still and the
    common phase drops out); phase shifts multiply one amplitude.
    """
    if s.dim != sched.dim:
        raise ValueError(f"state dimension {s.dim} does not match "
                         f"schedule dimension {sched.dim}")
    if cfg is None:
        cfg = IntegratorConfig(sample_count=2)
    amp = s.amplitudes.copy()
    for step in sched.steps:
        if isinstance(step, PhaseShift):
            amp[step.state] *= np.exp(1j * step.angle)
            continue
        if step.duration == 0.0:
            continue
        i, j = step.pair
        pair_spec = model.static_real(
            np.array([[0.0, step.strength], [step.strength, 0.0]]))
        s0 = oscillator.qp_from_amplitudes(np.array([amp[i], amp[j]]))
        traj = oscillator.evolve_exact_real(pair_spec, s0, 0.0,
                                            step.duration, cfg)
        final = oscillator.amplitudes_from_states(traj.states[-1])
        amp[i], amp[j] = final[0], final[1]
    return RegisterState(s.n_qubits, amp)


# ----------------------------------------------------------- measures

def density_matrix(s):
    """Pure-state density matrix c c^dagger."""
    c = s.amplitudes if isinstance(s, RegisterState) else \
        np.asarray(s, dtype=complex)
    return np.outer(c, c.conj())


def entanglement_measures(s):
    """Entropy of one qubit's reduced state (base-2) and the pure-state
    concurrence 2|a d - b c| of a 2-qubit register."""
    if isinstance(s, RegisterState):
        if s.n_qubits != 2:
            raise ValueError("entanglement measures need a 2-qubit state")
        c = s.amplitudes
    else:
        c = np.asarray(s, dtype=complex).reshape(-1)
        if c.shape[0] != 4:
            raise ValueError("entanglement measures need 4 amplitudes")
        if abs(np.linalg.norm(c) - 1.0) > _NORM_TOL:
            raise ValueError("state is not normalized")
    m = c.reshape(2, 2)
    rho_a = m @ m.conj().T
    evals = np.linalg.eigvalsh(rho_a)
    evals = np.clip(evals.real, 0.0, 1.0)
    entropy = float(-sum(v * math.log2(v) for v in evals if v > 1e-300))
    concurrence = 2.0 * abs(c[0] * c[3] - c[1] * c[2])
    return {"entropy": entropy, "concurrence": float(concurrence)}
