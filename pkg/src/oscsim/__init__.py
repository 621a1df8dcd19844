"""Quantum dynamics on classical oscillators.

Finite quantum systems evolve here three ways: as amplitudes under the
Schrodinger equation, as classical oscillator pairs carrying those
amplitudes exactly, and under the reduced-coupling approximation that a
real mechanical realization would satisfy.  A gate layer runs qubit
circuits as coupling schedules over register oscillators, and a scenario
engine quantifies how well the pictures agree.
"""

from .errors import (DivergenceError, NegativeFrequencyError, ScenarioError,
                     SimulationError, SingularityError, SpecError,
                     StiffnessError)
from .model import (HamiltonianSpec, diagonal_energies,
                    dissipative_two_level, driven_dissipative, eval_drive,
                    eval_h, eval_hdot, general_complex_static, lz_arctan,
                    lz_linear, static_real, two_level)
from .integrate import IntegratorConfig, Trajectory, integrate
from .quantum import (eigenvalues_two_level, evolve_tdse, populations,
                      two_level_analytic, zener_probability)
from .oscillator import (DoubledState, PhaseSpaceState,
                         PhysicalOscillatorParams, amplitudes_from_qp,
                         amplitudes_from_states, classical_energy,
                         doubled_amplitudes, evolve_doubled,
                         evolve_exact_nonhermitian, evolve_exact_real,
                         evolve_exact_td, evolve_rca,
                         exact_eigenfrequencies, physical_to_dimensionless,
                         qp_from_amplitudes, rca_drive_residual,
                         rca_eigenfrequencies, rca_momenta_diagonal,
                         recover_momenta)
from .gates import (GateOp, GateSchedule, PhaseShift, RegisterState, Window,
                    apply_gate, basis_state, bloch_state, cnot,
                    cnot_decomposition_factors, cnot_via_decomposition,
                    coupling_unitary, density_matrix, entanglement_measures,
                    execute_schedule, gate_matrix, phase_aligned, rx, ry,
                    schedule_for_gate, sqisw, swap_gate)
from .scenario import (ComparisonReport, GateContext, ScenarioConfig,
                       bundled_scenarios, expand_sweep, load_bundled,
                       load_scenario, parse_scenario, populations_of,
                       run_scenario)

__version__ = "0.1.0"
