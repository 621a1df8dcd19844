#!/usr/bin/env python3
"""A resonant level pair where only the second level leaks away.

Complex diagonal energies turn the state-vector equation into damped
oscillator equations.  Four independent routes evolve the same system:
the propagator itself, the exact velocity-coupled pair, the reduced
position-only pair, and a four-oscillator register that trades the
velocity couplings for twice the coordinates.
"""

import numpy as np

from oscsim import model, oscillator, quantum
from oscsim.integrate import IntegratorConfig


def main():
    spec = model.dissipative_two_level(E1=40.0, E2=40.0, V=1.0,
                                       lambda1=0.0, lambda2=-0.2)
    c0 = np.array([1.0, 0.0], dtype=complex)
    cfg = IntegratorConfig(rtol=1e-9, atol=1e-11, sample_count=1001)

    ref = quantum.evolve_tdse(spec, c0, 0.0, 25.0, cfg)
    full = oscillator.evolve_exact_nonhermitian(spec, c0, 0.0, 25.0, cfg)
    reduced = oscillator.evolve_rca(spec, c0, 0.0, 25.0, cfg)
    doubled = oscillator.evolve_doubled(spec, c0, 0.0, 25.0, cfg)

    pq = quantum.populations(ref.states)
    pf = np.abs(oscillator.amplitudes_from_states(full.states)) ** 2
    pr = np.abs(oscillator.amplitudes_from_states(reduced.states)) ** 2
    pd = np.abs(oscillator.doubled_amplitudes(doubled.states)) ** 2

    print("Damped pair: E1=E2=40, V=1, lambda2=-0.2, start on level 1.\n")
    print(f"max |exact   - propagator| = {np.max(np.abs(pf - pq)):.3e}")
    print(f"max |doubled - propagator| = {np.max(np.abs(pd - pq)):.3e}")
    print(f"max |reduced - propagator| = {np.max(np.abs(pr - pq)):.3e}")

    total = pq.sum(axis=1)
    print(f"\ntotal population decays {total[0]:.3f} -> {total[-1]:.3f}, "
          f"monotonically: {bool(np.all(np.diff(total) <= 1e-12))}")
    print("\nThe exact and doubled registers track the propagator to")
    print("solver precision; the reduced pair stays within a percent")
    print("even though it drops every velocity coupling.")


if __name__ == "__main__":
    main()
