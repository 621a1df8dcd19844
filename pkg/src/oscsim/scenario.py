"""Scenario files and the comparison engine.

A scenario file is INI-like with three kinds of sections: one [scenario]
block (window, schemes, initial state, tolerances), exactly one section
named after a Hamiltonian kind carrying its parameters, and optionally
[gate] (circuit over register oscillators) and [sweep] (comma lists of
parameter values expanded into a Cartesian grid by the sweep command).
Parsing is strict: unknown sections or keys fail with the line number.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import re
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import gates, model, oscillator, quantum
from .errors import ScenarioError
from .integrate import IntegratorConfig, Trajectory

SCHEMES = ("quantum", "exact", "rca", "doubled", "gate")

_CIRCUIT_GATES = ("identity", "rx", "ry", "swap", "sqisw", "cnot")

_KIND_KEYS = {
    model.TWO_LEVEL: ("E1", "E2", "V"),
    model.LZ_LINEAR: ("E0", "A", "V"),
    model.LZ_ARCTAN: ("E0", "V"),
    model.DISSIPATIVE: ("E1", "E2", "V", "lambda1", "lambda2"),
    model.DRIVEN: ("E1", "E2", "V", "lambda1", "lambda2",
                   "mu1", "mu2", "omega_drive"),
}


@dataclass(frozen=True)
class GateContext:
    """Coupling strength and circuit executed by the gate scheme."""

    strength: float
    circuit: tuple

    def __post_init__(self):
        object.__setattr__(self, "circuit", tuple(self.circuit))
        if self.strength <= 0.0:
            raise ValueError("gate strength must be positive")
        if not self.circuit:
            raise ValueError("gate circuit is empty")


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    schemes: tuple
    initial: np.ndarray
    t0: float = 0.0
    t1: float = 1.0
    integrator: IntegratorConfig = field(default_factory=IntegratorConfig)
    spec: object = None
    gate: GateContext = None
    sweep: dict = None
    out_dir: str = None

    def __post_init__(self):
        object.__setattr__(self, "schemes", tuple(self.schemes))
        if not self.schemes:
            raise ValueError("at least one scheme must be selected")
        for s in self.schemes:
            if s not in SCHEMES:
                raise ValueError(f"unknown scheme {s!r}")
        if not self.t1 > self.t0:
            raise ValueError("t1 must exceed t0")
        if self.spec is None and any(s != "gate" for s in self.schemes):
            raise ValueError("evolution schemes need a Hamiltonian section")
        if "gate" in self.schemes and self.gate is None:
            raise ValueError("the gate scheme needs a [gate] section")
        initial = np.asarray(self.initial, dtype=complex).reshape(-1)
        object.__setattr__(self, "initial", initial)
        if self.spec is not None and initial.shape[0] != self.spec.dim:
            raise ValueError(f"initial state has {initial.shape[0]} "
                             f"amplitudes, Hamiltonian has {self.spec.dim}")


# ------------------------------------------------------------- parsing

def _parse_sections(text, path):
    """Split into {section: {key: (value, line)}}, tracking line numbers."""
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ScenarioError("malformed section header",
                                    line=lineno, path=path)
            name = line[1:-1].strip()
            if name in sections:
                raise ScenarioError(f"duplicate section [{name}]",
                                    line=lineno, path=path)
            sections[name] = {}
            current = name
            continue
        if "=" not in line:
            raise ScenarioError(f"expected key = value, got {line!r}",
                                line=lineno, path=path)
        if current is None:
            raise ScenarioError("key outside any section",
                                line=lineno, path=path)
        key, value = (part.strip() for part in line.split("=", 1))
        if key in sections[current]:
            raise ScenarioError(f"duplicate key {key!r}",
                                line=lineno, path=path)
        sections[current][key] = (value, lineno)
    return sections


def _take_float(section, key, path, required=True, default=None):
    if key not in section:
        if required:
            raise ScenarioError(f"missing key {key!r}", path=path)
        return default
    value, line = section.pop(key)
    try:
        return float(value)
    except ValueError:
        raise ScenarioError(f"{key} must be a number, got {value!r}",
                            line=line, path=path) from None


_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\s*pi\s*(?:/\s*(\d*\.?\d+))?$")


def parse_angle(token):
    """Rotation angle: a float, or a pi expression like pi/2, -pi, 3pi/4."""
    token = token.strip()
    m = _PI_RE.match(token)
    if m:
        coef = m.group(1)
        if coef in ("", "+"):
            num = 1.0
        elif coef == "-":
            num = -1.0
        else:
            num = float(coef)
        den = float(m.group(2)) if m.group(2) else 1.0
        return num * math.pi / den
    return float(token)


def _parse_circuit(value, line, path):
    ops = []
    for step in value.split(","):
        tokens = step.split()
        if not tokens:
            raise ScenarioError("empty circuit step", line=line, path=path)
        name = tokens[0].lower()
        if name not in _CIRCUIT_GATES:
            raise ScenarioError(f"unknown circuit gate {tokens[0]!r}",
                                line=line, path=path)
        if name in ("rx", "ry"):
            if len(tokens) != 3:
                raise ScenarioError(f"{name} needs a qubit and an angle",
                                    line=line, path=path)
            try:
                qubit = int(tokens[1])
                angle = parse_angle(tokens[2])
            except ValueError:
                raise ScenarioError(f"bad rotation step {step.strip()!r}",
                                    line=line, path=path) from None
            ops.append(gates.GateOp(name, qubit, angle))
        else:
            if len(tokens) != 1:
                raise ScenarioError(f"gate {name} takes no arguments",
                                    line=line, path=path)
            ops.append(gates.GateOp(name))
    return tuple(ops)


def _parse_initial(value, line, path, dim, is_gate):
    value = value.strip()
    if value.startswith("basis"):
        token = value[len("basis"):].strip()
        if is_gate:
            try:
                state = gates.basis_state(token)
            except ValueError as exc:
                raise ScenarioError(str(exc), line=line, path=path) from None
            return state.amplitudes
        try:
            index = int(token)
        except ValueError:
            raise ScenarioError(f"bad basis index {token!r}",
                                line=line, path=path) from None
        if dim is None or not 0 <= index < dim:
            raise ScenarioError(f"basis index {index} out of range",
                                line=line, path=path)
        amp = np.zeros(dim, dtype=complex)
        amp[index] = 1.0
        return amp
    try:
        amp = np.array([complex(tok.strip().replace(" ", ""))
                        for tok in value.split(",")])
    except ValueError:
        raise ScenarioError(f"bad amplitude list {value!r}",
                            line=line, path=path) from None
    return amp


def _parse_matrix(value, line, path):
    try:
        rows = [[float(x) for x in row.split()] for row in value.split(";")]
        return np.array(rows)
    except ValueError:
        raise ScenarioError(f"bad matrix {value!r}",
                            line=line, path=path) from None


def _build_spec(kind, section, path):
    if kind == model.STATIC_REAL:
        if "matrix" not in section:
            raise ScenarioError("StaticReal needs a matrix key", path=path)
        value, line = section.pop("matrix")
        return model.static_real(_parse_matrix(value, line, path)), section
    if kind == model.GENERAL_COMPLEX:
        for key in ("matrixR", "matrixI"):
            if key not in section:
                raise ScenarioError(f"{kind} needs a {key} key", path=path)
        vr, lr = section.pop("matrixR")
        vi, li = section.pop("matrixI")
        return model.general_complex_static(_parse_matrix(vr, lr, path),
                                            _parse_matrix(vi, li, path)), section
    keys = _KIND_KEYS[kind]
    values = {key: _take_float(section, key, path) for key in keys}
    factory = {
        model.TWO_LEVEL: model.two_level,
        model.LZ_LINEAR: model.lz_linear,
        model.LZ_ARCTAN: model.lz_arctan,
        model.DISSIPATIVE: model.dissipative_two_level,
        model.DRIVEN: model.driven_dissipative,
    }[kind]
    return factory(**values), section


def parse_scenario(text, path=None):
    """Parse scenario file text into a ScenarioConfig."""
    sections = _parse_sections(text, path)
    if "scenario" not in sections:
        raise ScenarioError("missing [scenario] section", path=path)
    body = dict(sections.pop("scenario"))
    gate_section = sections.pop("gate", None)
    sweep_section = sections.pop("sweep", None)

    kinds = [name for name in sections if name in model.KINDS]
    unknown = [name for name in sections if name not in model.KINDS]
    if unknown:
        raise ScenarioError(f"unknown section [{unknown[0]}]", path=path)
    if len(kinds) > 1:
        raise ScenarioError("more than one Hamiltonian section", path=path)
    spec = None
    if kinds:
        spec, leftover = _build_spec(kinds[0], dict(sections[kinds[0]]), path)
        if leftover:
            key, (_, line) = next(iter(leftover.items()))
            raise ScenarioError(f"unknown key {key!r} for {kinds[0]}",
                                line=line, path=path)

    name = body.pop("name", ("scenario", None))[0]
    if "schemes" in body:
        value, line = body.pop("schemes")
        schemes = tuple(s.strip() for s in value.split(",") if s.strip())
        for s in schemes:
            if s not in SCHEMES:
                raise ScenarioError(f"unknown scheme {s!r}",
                                    line=line, path=path)
    else:
        schemes = ("gate",) if spec is None else ("quantum", "exact", "rca")

    gate = None
    if gate_section is not None:
        gate_section = dict(gate_section)
        strength = _take_float(gate_section, "strength", path,
                               required=False, default=1.0)
        if "circuit" not in gate_section:
            raise ScenarioError("missing circuit in [gate]", path=path)
        value, line = gate_section.pop("circuit")
        circuit = _parse_circuit(value, line, path)
        if gate_section:
            key, (_, line) = next(iter(gate_section.items()))
            raise ScenarioError(f"unknown key {key!r} in [gate]",
                                line=line, path=path)
        gate = GateContext(strength=strength, circuit=circuit)

    needs_window = any(s != "gate" for s in schemes)
    t0 = _take_float(body, "t0", path, required=needs_window, default=0.0)
    t1 = _take_float(body, "t1", path, required=needs_window, default=1.0)
    rtol = _take_float(body, "rtol", path, required=False, default=1e-10)
    atol = _take_float(body, "atol", path, required=False, default=1e-12)
    samples = _take_float(body, "samples", path, required=False,
                          default=1001.0)
    integrator = IntegratorConfig(rtol=rtol, atol=atol,
                                  sample_count=int(samples))

    if "initial" not in body:
        raise ScenarioError("missing initial state", path=path)
    value, line = body.pop("initial")
    initial = _parse_initial(value, line, path,
                             spec.dim if spec is not None else None,
                             is_gate=gate is not None and spec is None)
    if body:
        key, (_, line) = next(iter(body.items()))
        raise ScenarioError(f"unknown key {key!r} in [scenario]",
                            line=line, path=path)

    sweep = None
    if sweep_section is not None:
        sweep = {}
        allowed = _KIND_KEYS.get(spec.kind, ()) if spec is not None else ()
        for key, (value, line) in sweep_section.items():
            if key not in allowed:
                raise ScenarioError(f"cannot sweep {key!r} for this "
                                    "Hamiltonian", line=line, path=path)
            try:
                sweep[key] = tuple(float(v) for v in value.split(","))
            except ValueError:
                raise ScenarioError(f"bad sweep values for {key!r}",
                                    line=line, path=path) from None

    try:
        return ScenarioConfig(name=name, schemes=schemes, initial=initial,
                              t0=t0, t1=t1, integrator=integrator, spec=spec,
                              gate=gate, sweep=sweep)
    except ValueError as exc:
        raise ScenarioError(str(exc), path=path) from None


def load_scenario(path):
    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read(), path=str(path))


def bundled_scenarios():
    """Names of the configuration files shipped with the package."""
    root = resources.files(__package__) / "configs"
    return sorted(entry.name[:-4] for entry in root.iterdir()
                  if entry.name.endswith(".cfg"))


def load_bundled(name):
    root = resources.files(__package__) / "configs"
    entry = root / f"{name}.cfg"
    if not entry.is_file():
        raise ScenarioError(f"no bundled scenario named {name!r}")
    return parse_scenario(entry.read_text(encoding="utf-8"),
                          path=f"bundled:{name}")


def expand_sweep(cfg):
    """Materialize the Cartesian grid of a [sweep] section as a list of
    scenario configs with substituted Hamiltonian parameters."""
    if not cfg.sweep:
        return [cfg]
    keys = sorted(cfg.sweep)
    combos = list(itertools.product(*(cfg.sweep[k] for k in keys)))
    out = []
    for combo in combos:
        spec = dataclasses.replace(cfg.spec, **dict(zip(keys, combo)))
        suffix = "_".join(f"{k}{v:g}" for k, v in zip(keys, combo))
        out.append(dataclasses.replace(
            cfg, spec=spec, sweep=None, name=f"{cfg.name}_{suffix}"))
    return out


# ------------------------------------------------------------- running

@dataclass(frozen=True)
class PairDifference:
    max_diff: float
    t_at_max: float

    def __post_init__(self):
        if self.max_diff < 0.0:
            raise ValueError("population differences cannot be negative")


@dataclass(frozen=True)
class ComparisonReport:
    """Agreement summary over the schemes of one run."""

    pairs: dict
    final_populations: dict
    zener_prediction: float = None
    diagnostics: dict = field(default_factory=dict)

    def max_diff(self, a, b):
        return self.pairs[tuple(sorted((a, b)))].max_diff

    def t_of_max(self, a, b):
        return self.pairs[tuple(sorted((a, b)))].t_at_max

    def as_dict(self):
        return {
            "pairs": {"|".join(k): {"max_diff": v.max_diff,
                                    "t_at_max": v.t_at_max}
                      for k, v in sorted(self.pairs.items())},
            "final_populations": {k: list(map(float, v))
                                  for k, v in sorted(
                                      self.final_populations.items())},
            "zener_prediction": self.zener_prediction,
            "diagnostics": {k: float(v)
                            for k, v in sorted(self.diagnostics.items())},
        }


def populations_of(traj):
    """Per-state populations on the sample grid for any scheme layout."""
    if np.iscomplexobj(traj.states):
        return np.abs(traj.states) ** 2
    if traj.label == "doubled":
        return np.abs(oscillator.doubled_amplitudes(traj.states)) ** 2
    return np.abs(oscillator.amplitudes_from_states(traj.states)) ** 2


def _evolve_exact(spec, c0, t0, t1, cfg):
    if spec.is_time_dependent:
        return oscillator.evolve_exact_td(spec, c0, t0, t1, cfg)
    if spec.is_complex:
        return oscillator.evolve_exact_nonhermitian(spec, c0, t0, t1, cfg)
    return oscillator.evolve_exact_real(spec, c0, t0, t1, cfg)


def _run_gate(cfg):
    amp = cfg.initial
    n_qubits = int(round(math.log2(amp.shape[0])))
    if 2 ** n_qubits != amp.shape[0]:
        raise ValueError("gate scheme needs 2^n amplitudes")
    state = gates.RegisterState(n_qubits, amp)
    window_cfg = IntegratorConfig(rtol=cfg.integrator.rtol,
                                  atol=cfg.integrator.atol, sample_count=2)
    stages = [state]
    for op in cfg.gate.circuit:
        sched = gates.schedule_for_gate(op, n_qubits, cfg.gate.strength)
        stages.append(gates.execute_schedule(sched, stages[-1], window_cfg))
    states = np.vstack([s.amplitudes for s in stages])
    times = np.arange(len(stages), dtype=float)
    return Trajectory(times=times, states=states, label="gate"), stages


def _gate_diagnostics(cfg, stages):
    """Deviation of the scheduled circuit from plain matrix application,
    plus entanglement numbers of the final state when it is two qubits."""
    state = stages[0]
    for op in cfg.gate.circuit:
        g = gates.gate_matrix(op, state.n_qubits)
        state = gates.apply_gate(g, tuple(range(state.n_qubits)), state)
    aligned = gates.phase_aligned(stages[-1].amplitudes, state.amplitudes)
    out = {"gate_matrix_deviation":
           float(np.max(np.abs(aligned - state.amplitudes)))}
    if state.n_qubits == 2:
        measures = gates.entanglement_measures(stages[-1])
        out["final_concurrence"] = measures["concurrence"]
        out["final_entropy"] = measures["entropy"]
    return out


def run_scenario(cfg):
    """Run every selected scheme and summarize their mutual agreement.

    Returns (trajectories keyed by scheme, ComparisonReport).  All
    time-evolution schemes share one uniform sample grid; the gate scheme
    uses circuit-step indices as its time axis and joins the report only
    through its final populations and diagnostics.
    """
    results = {}
    diagnostics = {}
    for scheme in cfg.schemes:
        if scheme == "quantum":
            results[scheme] = quantum.evolve_tdse(
                cfg.spec, cfg.initial, cfg.t0, cfg.t1, cfg.integrator)
        elif scheme == "exact":
            results[scheme] = _evolve_exact(
                cfg.spec, cfg.initial, cfg.t0, cfg.t1, cfg.integrator)
        elif scheme == "rca":
            results[scheme] = oscillator.evolve_rca(
                cfg.spec, cfg.initial, cfg.t0, cfg.t1, cfg.integrator)
        elif scheme == "doubled":
            results[scheme] = oscillator.evolve_doubled(
                cfg.spec, cfg.initial, cfg.t0, cfg.t1, cfg.integrator)
        elif scheme == "gate":
            results[scheme], stages = _run_gate(cfg)
            diagnostics.update(_gate_diagnostics(cfg, stages))

    pops = {scheme: populations_of(traj) for scheme, traj in results.items()}
    pairs = {}
    evolved = [s for s in cfg.schemes if s in results and s != "gate"]
    for i, a in enumerate(evolved):
        for b in evolved[i + 1:]:
            per_time = np.max(np.abs(pops[a] - pops[b]), axis=1)
            k = int(np.argmax(per_time))
            pairs[tuple(sorted((a, b)))] = PairDifference(
                max_diff=float(per_time[k]),
                t_at_max=float(results[a].times[k]))

    zener = None
    if cfg.spec is not None and cfg.spec.kind == model.LZ_LINEAR:
        zener = quantum.zener_probability(cfg.spec.V, cfg.spec.A)
    if cfg.spec is not None and cfg.spec.is_driven:
        diagnostics["rca_drive_residual"] = \
            oscillator.rca_drive_residual(cfg.spec)

    report = ComparisonReport(
        pairs=pairs,
        final_populations={s: pops[s][-1] for s in results},
        zener_prediction=zener,
        diagnostics=diagnostics)
    return results, report
