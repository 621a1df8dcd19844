#!/usr/bin/env python3
"""Two diabatic levels cross while a constant coupling V mixes them.

The run sweeps V and compares three answers for the population left on
the starting level: the state-vector propagator, the position-only
reduced oscillator pair, and the closed asymptotic formula exp(-pi V^2/A).
The reduced model's error grows with V but stays at the percent level.
"""

import math

import numpy as np

from oscsim import model, oscillator, quantum
from oscsim.integrate import IntegratorConfig


def populations(traj):
    z = traj.states if np.iscomplexobj(traj.states) \
        else oscillator.amplitudes_from_states(traj.states)
    return np.abs(z) ** 2


def main():
    cfg = IntegratorConfig(rtol=1e-9, atol=1e-11, sample_count=801)
    c0 = np.array([1.0, 0.0], dtype=complex)

    print("Linearly swept crossing, E0=40, A=1, window [-25, 25],")
    print("all population starts on level 1.\n")
    print(" V     P1(final)   formula   |diff|   max|reduced-quantum|")
    for v in (0.2, 0.4, 0.6, 1.0):
        spec = model.lz_linear(40.0, 1.0, v)
        ref = quantum.evolve_tdse(spec, c0, -25.0, 25.0, cfg)
        red = oscillator.evolve_rca(spec, c0, -25.0, 25.0, cfg)
        pq, pr = populations(ref), populations(red)
        survived = pq[-1, 0]
        formula = math.exp(-math.pi * v * v)
        gap = np.max(np.abs(pr - pq))
        print(f"{v:4.1f}   {survived:9.6f}  {formula:8.6f}  "
              f"{abs(survived - formula):7.4f}  {gap:12.4f}")

    print("\nThe formula assumes an infinite sweep; truncating at t=25")
    print("leaves a few-per-mille residual.  A saturating sweep removes")
    print("most of it:")
    print("\n V     P1(final)   formula(A=2)   |diff|")
    for v in (0.2, 0.4):
        spec = model.lz_arctan(40.0, v)
        ref = quantum.evolve_tdse(spec, c0, -25.0, 25.0, cfg)
        survived = populations(ref)[-1, 0]
        formula = math.exp(-math.pi * v * v / 2.0)
        print(f"{v:4.1f}   {survived:9.6f}   {formula:8.6f}      "
              f"{abs(survived - formula):7.4f}")
    print("\n(The saturating diagonal crosses with per-level slope 2,")
    print("so its asymptote carries A=2.)")


if __name__ == "__main__":
    main()
