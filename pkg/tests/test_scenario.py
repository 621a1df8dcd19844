"""Scenario file grammar, bundled configs, sweep expansion, comparisons."""

import math

import numpy as np
import pytest

from oscsim import model, scenario
from oscsim.errors import ScenarioError
from oscsim.integrate import IntegratorConfig

LZ_TEXT = """\
[scenario]
name = demo
t0 = -2
t1 = 2
samples = 51
schemes = quantum, rca
initial = basis 0

[LZLinear]
E0 = 8
A = 1
V = 0.2
"""

GATE_TEXT = """\
[scenario]
name = g
initial = basis 10

[gate]
strength = 1.0
circuit = ry 0 pi/2, sqisw
"""


# ------------------------------------------------------------- parsing

def test_parse_evolution_scenario():
    cfg = scenario.parse_scenario(LZ_TEXT)
    assert cfg.name == "demo"
    assert cfg.schemes == ("quantum", "rca")
    assert (cfg.t0, cfg.t1) == (-2.0, 2.0)
    assert cfg.integrator.sample_count == 51
    assert cfg.integrator.rtol == 1e-10
    assert cfg.spec.kind == model.LZ_LINEAR
    assert np.array_equal(cfg.initial, [1.0, 0.0])
    assert cfg.sweep is None


def test_parse_gate_scenario_defaults():
    cfg = scenario.parse_scenario(GATE_TEXT)
    assert cfg.schemes == ("gate",)
    assert cfg.spec is None
    assert cfg.gate.strength == 1.0
    assert [op.name for op in cfg.gate.circuit] == ["ry", "sqisw"]
    assert cfg.gate.circuit[0].angle == pytest.approx(math.pi / 2.0)
    assert np.array_equal(cfg.initial, [0.0, 0.0, 1.0, 0.0])


def test_default_schemes_for_evolution():
    text = LZ_TEXT.replace("schemes = quantum, rca\n", "")
    assert scenario.parse_scenario(text).schemes == ("quantum", "exact", "rca")


def test_comments_and_blank_lines_ignored():
    text = "# leading note\n\n" + LZ_TEXT.replace(
        "V = 0.2", "V = 0.2   # coupling")
    assert scenario.parse_scenario(text).spec.V == 0.2


def test_amplitude_list_initial():
    text = LZ_TEXT.replace("initial = basis 0",
                           "initial = 0.6, 0.8j")
    cfg = scenario.parse_scenario(text)
    assert np.array_equal(cfg.initial, [0.6, 0.8j])


@pytest.mark.parametrize("token,value", [
    ("pi/2", math.pi / 2.0), ("-pi", -math.pi), ("3pi/4", 3 * math.pi / 4),
    ("2pi", 2 * math.pi), ("+pi", math.pi), ("0.5", 0.5), ("1.5pi", 1.5 * math.pi),
])
def test_angle_tokens(token, value):
    assert scenario.parse_angle(token) == pytest.approx(value)


def test_angle_rejects_garbage():
    with pytest.raises(ValueError):
        scenario.parse_angle("pie")


# ------------------------------------------------------------- errors

def parse_error(text):
    with pytest.raises(ScenarioError) as info:
        scenario.parse_scenario(text, path="case.cfg")
    return info.value


def test_unknown_key_reports_line():
    err = parse_error(LZ_TEXT + "bogus = 1\n")
    assert err.line == 13
    assert "bogus" in str(err) and "case.cfg:13" in str(err)


def test_duplicate_key_reports_line():
    err = parse_error(LZ_TEXT + "V = 0.3\n")
    assert err.line == 13 and "duplicate" in str(err)


def test_duplicate_section_rejected():
    err = parse_error(LZ_TEXT + "[LZLinear]\n")
    assert err.line == 13 and "duplicate section" in str(err)


def test_malformed_header_rejected():
    err = parse_error("[scenario\nname = x\n")
    assert err.line == 1


def test_key_outside_section_rejected():
    err = parse_error("name = x\n")
    assert err.line == 1


def test_missing_scenario_section():
    err = parse_error("[LZLinear]\nE0 = 8\nA = 1\nV = 0.2\n")
    assert "missing [scenario]" in str(err)


def test_unknown_section_rejected():
    err = parse_error(LZ_TEXT + "[Widgets]\nx = 1\n")
    assert "unknown section" in str(err)


def test_two_hamiltonian_sections_rejected():
    err = parse_error(LZ_TEXT + "[TwoLevel]\nE1 = 1\nE2 = 1\nV = 0\n")
    assert "more than one Hamiltonian" in str(err)


def test_unknown_scheme_reports_line():
    err = parse_error(LZ_TEXT.replace("quantum, rca", "quantum, psychic"))
    assert err.line == 6 and "psychic" in str(err)


def test_nonnumeric_value_reports_line():
    err = parse_error(LZ_TEXT.replace("E0 = 8", "E0 = eight"))
    assert err.line == 10 and "E0" in str(err)


def test_missing_kind_key_rejected():
    err = parse_error(LZ_TEXT.replace("A = 1\n", ""))
    assert "'A'" in str(err)


def test_missing_initial_rejected():
    err = parse_error(LZ_TEXT.replace("initial = basis 0\n", ""))
    assert "initial" in str(err)


def test_basis_index_out_of_range():
    err = parse_error(LZ_TEXT.replace("basis 0", "basis 7"))
    assert err.line == 7 and "out of range" in str(err)


def test_bad_amplitude_list():
    err = parse_error(LZ_TEXT.replace("basis 0", "1, banana"))
    assert err.line == 7


def test_initial_dimension_mismatch():
    err = parse_error(LZ_TEXT.replace("initial = basis 0",
                                      "initial = 1, 0, 0"))
    assert "amplitudes" in str(err)


def test_window_must_be_forward():
    err = parse_error(LZ_TEXT.replace("t1 = 2", "t1 = -3"))
    assert "t1" in str(err)


def test_evolution_scheme_without_hamiltonian():
    err = parse_error(GATE_TEXT.replace(
        "[scenario]\n",
        "[scenario]\nschemes = quantum\nt0 = 0\nt1 = 1\n"))
    assert "Hamiltonian" in str(err)


def test_gate_scheme_without_gate_section():
    err = parse_error(LZ_TEXT.replace("quantum, rca", "gate"))
    assert "[gate]" in str(err)


def test_unknown_circuit_gate_reports_line():
    err = parse_error(GATE_TEXT.replace("sqisw", "teleport"))
    assert err.line == 7 and "teleport" in str(err)


def test_rotation_step_needs_qubit_and_angle():
    err = parse_error(GATE_TEXT.replace("ry 0 pi/2", "ry 0"))
    assert err.line == 7


def test_gate_section_unknown_key():
    err = parse_error(GATE_TEXT + "tempo = 3\n")
    assert err.line == 8 and "tempo" in str(err)


def test_sweep_requires_known_parameter():
    err = parse_error(LZ_TEXT + "[sweep]\nlambda1 = 0.1, 0.2\n")
    assert err.line == 14 and "lambda1" in str(err)


def test_sweep_values_must_be_numbers():
    err = parse_error(LZ_TEXT + "[sweep]\nV = 0.1, fast\n")
    assert err.line == 14


# ------------------------------------------------------------- bundled

def test_bundled_listing():
    names = scenario.bundled_scenarios()
    assert names == ["cnot", "fig1_sweep", "fig1_v02", "fig1_v02_arctan",
                     "fig1_v04", "fig1_v04_arctan", "fig1_v06", "fig1_v10",
                     "fig2", "fig3"]


def test_every_bundled_config_parses():
    for name in scenario.bundled_scenarios():
        cfg = scenario.load_bundled(name)
        assert cfg.schemes


def test_unknown_bundled_name():
    with pytest.raises(ScenarioError):
        scenario.load_bundled("fig99")


def test_load_scenario_from_file(tmp_path):
    path = tmp_path / "demo.cfg"
    path.write_text(LZ_TEXT)
    cfg = scenario.load_scenario(path)
    assert cfg.name == "demo"


# ------------------------------------------------------------- sweep

def test_sweep_expansion_grid():
    text = LZ_TEXT + "[sweep]\nV = 0.2, 0.4\nE0 = 8, 10\n"
    cfg = scenario.parse_scenario(text)
    subs = scenario.expand_sweep(cfg)
    assert [s.name for s in subs] == [
        "demo_E08_V0.2", "demo_E08_V0.4",
        "demo_E010_V0.2", "demo_E010_V0.4"]
    assert [s.spec.V for s in subs] == [0.2, 0.4, 0.2, 0.4]
    assert [s.spec.E0 for s in subs] == [8.0, 8.0, 10.0, 10.0]
    assert all(s.sweep is None for s in subs)


def test_sweep_expansion_without_section_is_identity():
    cfg = scenario.parse_scenario(LZ_TEXT)
    assert scenario.expand_sweep(cfg) == [cfg]


# ------------------------------------------------------------- running

def test_single_scheme_report_has_no_pairs():
    cfg = scenario.parse_scenario(
        LZ_TEXT.replace("quantum, rca", "quantum"))
    results, report = scenario.run_scenario(cfg)
    assert list(results) == ["quantum"]
    assert report.pairs == {}
    assert report.zener_prediction == pytest.approx(math.exp(-math.pi * 0.04))


def test_report_pair_lookup_is_symmetric():
    cfg = scenario.parse_scenario(LZ_TEXT)
    _, report = scenario.run_scenario(cfg)
    assert report.max_diff("quantum", "rca") == report.max_diff("rca",
                                                                "quantum")
    assert report.max_diff("quantum", "rca") >= 0.0
    assert report.t_of_max("quantum", "rca") == report.t_of_max("rca",
                                                                "quantum")


def test_report_serialization_round_trip():
    cfg = scenario.parse_scenario(LZ_TEXT)
    _, report = scenario.run_scenario(cfg)
    d = report.as_dict()
    assert "quantum|rca" in d["pairs"]
    assert set(d["final_populations"]) == {"quantum", "rca"}
    assert d["zener_prediction"] is not None


def test_zener_prediction_only_for_linear_sweeps():
    text = LZ_TEXT.replace("[LZLinear]", "[LZArctan]").replace("A = 1\n", "")
    _, report = scenario.run_scenario(scenario.parse_scenario(text))
    assert report.zener_prediction is None


def test_gate_run_reports_diagnostics():
    results, report = scenario.run_scenario(scenario.parse_scenario(GATE_TEXT))
    traj = results["gate"]
    assert traj.label == "gate"
    assert len(traj) == 3  # input plus one state per circuit element
    assert report.pairs == {}
    assert report.diagnostics["gate_matrix_deviation"] < 1e-8
    assert 0.0 <= report.diagnostics["final_concurrence"] <= 1.0
    pops = report.final_populations["gate"]
    assert abs(np.sum(pops) - 1.0) < 1e-10


def test_driven_run_reports_residual():
    text = """\
[scenario]
name = d
t0 = 0
t1 = 2
samples = 21
schemes = quantum
initial = 0, 0

[DrivenDissipative]
E1 = 40
E2 = 40
V = 1.0
lambda1 = 0.0
lambda2 = -0.2
mu1 = 0.2
mu2 = 0.0
omega_drive = 40
"""
    _, report = scenario.run_scenario(scenario.parse_scenario(text))
    assert report.diagnostics["rca_drive_residual"] == \
        pytest.approx(math.sqrt(2.0) * 0.2)


def test_comparison_value_objects_validate():
    with pytest.raises(ValueError):
        scenario.PairDifference(max_diff=-0.1, t_at_max=0.0)
    with pytest.raises(ValueError):
        scenario.ScenarioConfig(name="x", schemes=(), initial=[1.0, 0.0])
    with pytest.raises(ValueError):
        scenario.ScenarioConfig(name="x", schemes=("quantum",),
                                initial=[1.0, 0.0], t0=0.0, t1=1.0)


def test_populations_for_every_layout(rng):
    from oscsim.integrate import Trajectory
    c = rng.standard_normal((5, 2)) + 1j * rng.standard_normal((5, 2))
    t = np.arange(5.0)
    want = np.abs(c) ** 2
    complex_traj = Trajectory(times=t, states=c, label="quantum")
    assert np.allclose(scenario.populations_of(complex_traj), want)
    rows = np.hstack([np.sqrt(2) * c.real, np.sqrt(2) * c.imag])
    qp_traj = Trajectory(times=t, states=rows, label="exact")
    assert np.allclose(scenario.populations_of(qp_traj), want)
    doubled_rows = np.hstack([np.sqrt(2) * c.real, np.sqrt(2) * c.imag,
                              np.zeros((5, 4))])
    dbl_traj = Trajectory(times=t, states=doubled_rows, label="doubled")
    assert np.allclose(scenario.populations_of(dbl_traj), want)
