"""Exception types shared across the simulation layers.

Validation problems (bad specs, bad scenario files) derive from ValueError
so they stay catchable by generic input-checking code; numerical failures
during an evolution derive from SimulationError.
"""


class SimulationError(Exception):
    """A numerical evolution could not be completed."""


class StiffnessError(SimulationError):
    """Adaptive step size underflowed; the system is too stiff at time t."""

    def __init__(self, t, message=None):
        self.t = t
        super().__init__(message or f"step size underflow at t={t:.6g}")


class DivergenceError(SimulationError):
    """State became non-finite during integration."""

    def __init__(self, t, message=None):
        self.t = t
        super().__init__(message or f"non-finite state at t={t:.6g}")


class SingularityError(SimulationError):
    """A required matrix inversion is (numerically) singular."""

    def __init__(self, t, detail, message=None):
        self.t = t
        self.detail = detail
        super().__init__(message or f"singular system at t={t:.6g} ({detail})")


class NegativeFrequencyError(SimulationError):
    """A reduced-coupling oscillator frequency dropped to zero or below."""

    def __init__(self, t, omega):
        self.t = t
        self.omega = omega
        super().__init__(f"oscillator frequency {omega:.6g} <= 0 at t={t:.6g}")


class SpecError(ValueError):
    """A Hamiltonian description is malformed or of unknown kind."""


class ScenarioError(ValueError):
    """A scenario configuration is malformed.

    Carries the source line number when the problem is tied to one.
    """

    def __init__(self, message, line=None, path=None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += str(path)
        if line is not None:
            where += f":{line}"
        super().__init__(f"{where}: {message}" if where else message)
