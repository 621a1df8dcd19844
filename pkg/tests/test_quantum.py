"""Amplitude-level propagator against its closed-form anchors."""

import math

import numpy as np
import pytest

from oscsim import model, quantum
from oscsim.integrate import IntegratorConfig

from conftest import random_amplitudes, random_symmetric


# ---------------------------------------------------------- closed forms

def test_degenerate_pair_solution_at_start():
    c1, c2 = quantum.two_level_analytic(3.0, 0.7, 0.0)
    assert c1 == 1.0 and c2 == 0.0


def test_degenerate_pair_solution_full_transfer():
    V = 0.7
    c1, c2 = quantum.two_level_analytic(0.0, V, math.pi / (2.0 * V))
    assert abs(c1) < 1e-15
    assert abs(c2 - (-1j)) < 1e-15


def test_degenerate_pair_solution_half_transfer():
    V = 0.7
    c1, c2 = quantum.two_level_analytic(0.0, V, math.pi / (4.0 * V))
    r = 1.0 / math.sqrt(2.0)
    assert abs(c1 - r) < 1e-15
    assert abs(c2 - (-1j * r)) < 1e-15


def test_degenerate_pair_solution_accepts_arrays():
    t = np.linspace(0.0, 5.0, 7)
    c1, c2 = quantum.two_level_analytic(2.0, 0.3, t)
    assert c1.shape == t.shape
    pops = np.abs(c1) ** 2 + np.abs(c2) ** 2
    assert np.max(np.abs(pops - 1.0)) < 1e-14


def test_stationary_energies():
    assert quantum.eigenvalues_two_level(5.0, 5.0, 0.3) == (5.3, 4.7)
    assert quantum.eigenvalues_two_level(2.0, 7.0, 0.0) == (7.0, 2.0)
    assert quantum.eigenvalues_two_level(40.0, 40.0, 1.0) == (41.0, 39.0)


def test_stationary_energies_ordering(rng):
    for _ in range(50):
        e1, e2, v = rng.uniform(-5.0, 5.0, size=3)
        hi, lo = quantum.eigenvalues_two_level(e1, e2, v)
        assert hi >= lo
        ref = np.linalg.eigvalsh([[e1, v], [v, e2]])
        assert abs(hi - ref[1]) < 1e-12 and abs(lo - ref[0]) < 1e-12


def test_asymptotic_transfer_formula():
    assert quantum.zener_probability(0.0, 1.0) == 1.0
    assert abs(quantum.zener_probability(0.2, 1.0) - 0.8819) < 5e-5
    # direct evaluation; note exp(-pi) = 0.043213... (0.04321 to 4 s.f.)
    assert quantum.zener_probability(1.0, 1.0) == math.exp(-math.pi)


def test_asymptotic_transfer_formula_domain():
    with pytest.raises(ValueError):
        quantum.zener_probability(0.5, 0.0)
    with pytest.raises(ValueError):
        quantum.zener_probability(0.5, -1.0)


def test_populations():
    assert np.array_equal(quantum.populations([1.0, 0.0]), [1.0, 0.0])
    r = 1.0 / math.sqrt(2.0)
    assert np.max(np.abs(quantum.populations([r, -1j * r]) - 0.5)) < 1e-15
    c1, c2 = quantum.two_level_analytic(1.3, 0.4, 2.0)
    p = quantum.populations([c1, c2])
    assert abs(p[0] - math.cos(0.8) ** 2) < 1e-15
    assert abs(p[0] + p[1] - 1.0) < 1e-15


# ---------------------------------------------------------- propagator

def test_propagator_matches_degenerate_closed_form():
    spec = model.two_level(3.7, 3.7, 0.9)
    traj = quantum.evolve_tdse(spec, [1.0, 0.0], 0.0, 10.0)
    c1, c2 = quantum.two_level_analytic(3.7, 0.9, traj.times)
    err = max(np.max(np.abs(traj.states[:, 0] - c1)),
              np.max(np.abs(traj.states[:, 1] - c2)))
    assert err < 1e-8


def test_propagator_rejects_wrong_dimension():
    with pytest.raises(ValueError):
        quantum.evolve_tdse(model.two_level(1.0, 2.0, 0.1), [1.0, 0.0, 0.0],
                            0.0, 1.0)


def test_eigenvector_evolves_with_pure_phase(rng):
    h = random_symmetric(rng, 4, scale=2.0)
    spec = model.static_real(h)
    evals, evecs = np.linalg.eigh(h)
    c0 = evecs[:, 2].astype(complex)
    cfg = IntegratorConfig(sample_count=101)
    traj = quantum.evolve_tdse(spec, c0, 0.0, 8.0, cfg)
    expected = np.exp(-1j * evals[2] * traj.times)[:, None] * c0[None, :]
    assert np.max(np.abs(traj.states - expected)) < 1e-8
    pops = quantum.populations(traj.states)
    assert np.max(np.abs(pops - pops[0])) < 1e-8


def test_norm_conserved_for_real_couplings(rng):
    specs = (model.two_level(4.0, 5.0, 0.8),
             model.static_real(random_symmetric(rng, 4, scale=2.0)),
             model.lz_linear(8.0, 1.0, 0.4))
    for spec in specs:
        c0 = random_amplitudes(rng, spec.dim)
        traj = quantum.evolve_tdse(spec, c0, -2.0, 6.0,
                                   IntegratorConfig(sample_count=201))
        norms = np.sum(np.abs(traj.states) ** 2, axis=1)
        assert np.max(np.abs(norms - norms[0])) < 1e-8


def test_uncoupled_dissipative_levels_decay_independently():
    spec = model.dissipative_two_level(6.0, 7.0, 0.0, -0.3, -0.05)
    c0 = np.array([0.6, 0.8j])
    traj = quantum.evolve_tdse(spec, c0, 0.0, 4.0,
                               IntegratorConfig(sample_count=101))
    expected = np.abs(c0)[None, :] * np.exp(
        np.outer(traj.times, [spec.lambda1, spec.lambda2]))
    assert np.max(np.abs(np.abs(traj.states) - expected)) < 1e-8


def test_damped_total_population_never_grows():
    spec = model.dissipative_two_level(40.0, 40.0, 1.0, 0.0, -0.2)
    traj = quantum.evolve_tdse(spec, [1.0, 0.0], 0.0, 25.0)
    total = np.sum(np.abs(traj.states) ** 2, axis=1)
    assert np.all(np.diff(total) <= 1e-12)
    assert total[-1] < total[0]


def test_driven_empty_state_picks_up_population():
    spec = model.driven_dissipative(40.0, 40.0, 1.0, 0.0, -0.2,
                                    0.2, 0.0, 40.0)
    traj = quantum.evolve_tdse(spec, [0.0, 0.0], 0.0, 10.0,
                               IntegratorConfig(sample_count=101))
    assert np.max(np.abs(traj.states)) > 1e-3


def test_sweep_closures_match_generic_matrix_path():
    # the swept kinds get hand-expanded right-hand sides; cross-check
    # them against an integration built from eval_h directly
    for spec in (model.lz_linear(4.0, 1.0, 0.5), model.lz_arctan(4.0, 0.5)):
        cfg = IntegratorConfig(sample_count=51)
        traj = quantum.evolve_tdse(spec, [1.0, 0.0], -2.0, 2.0, cfg)

        def rhs(t, y):
            h = model.eval_h(spec, t)[0]
            c = y[:2] + 1j * y[2:]
            dc = -1j * (h @ c)
            return np.concatenate([dc.real, dc.imag])

        from oscsim.integrate import integrate
        ref = integrate(rhs, [1.0, 0.0, 0.0, 0.0], -2.0, 2.0, cfg)
        ref_c = ref.states[:, :2] + 1j * ref.states[:, 2:]
        assert np.max(np.abs(traj.states - ref_c)) < 1e-9
