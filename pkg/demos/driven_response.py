#!/usr/bin/env python3
"""Drive an empty, lossy level pair at resonance and watch it fill up
to a steady oscillation.

Only level 1 is driven (mu1=0.2, mu2=0) and only level 2 is damped,
so energy flows in through one side and leaks out through the other.
After the transient the envelope settles; the reduced oscillator pair
reproduces the steady state to a few per mille even though its drive
term cannot represent the cross-coupling exactly (the residual below
quantifies that structural mismatch).
"""

import numpy as np

from oscsim import model, oscillator, quantum
from oscsim.integrate import IntegratorConfig


def main():
    spec = model.driven_dissipative(E1=40.0, E2=40.0, V=1.0,
                                    lambda1=0.0, lambda2=-0.2,
                                    mu1=0.2, mu2=0.0, omega_drive=40.0)
    z0 = np.zeros(2, dtype=complex)
    cfg = IntegratorConfig(rtol=1e-9, atol=1e-11, sample_count=2001)

    ref = quantum.evolve_tdse(spec, z0, 0.0, 100.0, cfg)
    reduced = oscillator.evolve_rca(spec, z0, 0.0, 100.0, cfg)

    pq = quantum.populations(ref.states)
    pr = np.abs(oscillator.amplitudes_from_states(reduced.states)) ** 2
    total = pq.sum(axis=1)
    n = len(total)

    print("Driven lossy pair at resonance, starting empty.\n")
    for lo, hi in ((0, 10), (40, 50), (80, 90), (90, 100)):
        window = slice(int(lo / 100 * n), int(hi / 100 * n))
        print(f"  t in [{lo:3d},{hi:3d}]: peak total population "
              f"{total[window].max():.5f}")
    tail = slice(int(0.9 * n), None)
    print(f"\nfinal-10% max |reduced - propagator| = "
          f"{np.max(np.abs(pr[tail] - pq[tail])):.2e}")
    print(f"drive-term structural residual        = "
          f"{oscillator.rca_drive_residual(spec):.2e}")
    print("\nThe envelope stops growing once the drive feeds level 1 as")
    print("fast as level 2 drains; the reduced model holds that balance.")


if __name__ == "__main__":
    main()
