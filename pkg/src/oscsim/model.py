"""Declarative two-level and N-level Hamiltonian scenarios.

Every scenario is a :class:`HamiltonianSpec` value describing

    H(t) = H_R(t) + i H_I(t),        f(t) = cos(omega_drive * t) * (mu1, mu2)

in units with hbar = 1.  The decay parameters lambda1/lambda2 are stored
signed: dissipation means lambda <= 0, no sign flip is applied anywhere.

Kinds
-----
``StaticReal``            arbitrary real symmetric H, no time dependence
``TwoLevel``              2x2 real [[E1, V], [V, E2]]
``LZLinear``              diagonal swept as E0 +/- A*t, constant coupling V
``LZArctan``              diagonal 2*E0*(1 +/- arctan(t/E0)), constant V
``DissipativeTwoLevel``   TwoLevel plus imaginary diagonal (lambda1, lambda2)
``DrivenDissipative``     DissipativeTwoLevel plus a cosine drive vector
``GeneralComplexStatic``  arbitrary static H_R + i*H_I
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SpecError

STATIC_REAL = "StaticReal"
TWO_LEVEL = "TwoLevel"
LZ_LINEAR = "LZLinear"
LZ_ARCTAN = "LZArctan"
DISSIPATIVE = "DissipativeTwoLevel"
DRIVEN = "DrivenDissipative"
GENERAL_COMPLEX = "GeneralComplexStatic"

KINDS = (STATIC_REAL, TWO_LEVEL, LZ_LINEAR, LZ_ARCTAN, DISSIPATIVE, DRIVEN,
         GENERAL_COMPLEX)
TIME_DEPENDENT_KINDS = (LZ_LINEAR, LZ_ARCTAN)
COMPLEX_KINDS = (DISSIPATIVE, DRIVEN, GENERAL_COMPLEX)
TWO_LEVEL_KINDS = (TWO_LEVEL, LZ_LINEAR, LZ_ARCTAN, DISSIPATIVE, DRIVEN)


def _as_matrix(m, name):
    a = np.asarray(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise SpecError(f"{name} must be a square matrix, got shape {a.shape}")
    return a


@dataclass(frozen=True)
class HamiltonianSpec:
    """One scenario's Hamiltonian (and drive) as evaluatable data.

    Only the fields relevant to ``kind`` are meaningful; construction
    validates the combination.  Instances are immutable and safe to share
    across concurrent runs.
    """

    kind: str
    E1: float = 0.0
    E2: float = 0.0
    V: float = 0.0
    E0: float = 0.0
    A: float = 0.0
    lambda1: float = 0.0
    lambda2: float = 0.0
    mu1: float = 0.0
    mu2: float = 0.0
    omega_drive: float = 0.0
    matrixR: np.ndarray | None = field(default=None, repr=False)
    matrixI: np.ndarray | None = field(default=None, repr=False)
    dim: int = 2

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown Hamiltonian kind {self.kind!r}")
        if self.kind in TWO_LEVEL_KINDS:
            object.__setattr__(self, "dim", 2)
            if self.matrixR is not None or self.matrixI is not None:
                raise SpecError(f"{self.kind} does not take explicit matrices")
        elif self.kind == STATIC_REAL:
            m = _as_matrix(self.matrixR, "matrixR")
            scale = max(np.abs(m).max(), 1.0)
            if np.abs(m - m.T).max() > 1e-12 * scale:
                raise SpecError("StaticReal matrix must be symmetric")
            if self.matrixI is not None and np.any(np.asarray(self.matrixI)):
                raise SpecError("StaticReal admits no imaginary part")
            object.__setattr__(self, "matrixR", m)
            object.__setattr__(self, "matrixI", None)
            object.__setattr__(self, "dim", m.shape[0])
        else:  # GeneralComplexStatic
            mr = _as_matrix(self.matrixR, "matrixR")
            mi = (np.zeros_like(mr) if self.matrixI is None
                  else _as_matrix(self.matrixI, "matrixI"))
            if mi.shape != mr.shape:
                raise SpecError("matrixR and matrixI shapes differ")
            object.__setattr__(self, "matrixR", mr)
            object.__setattr__(self, "matrixI", mi)
            object.__setattr__(self, "dim", mr.shape[0])
        if self.kind == LZ_ARCTAN and self.E0 == 0.0:
            raise SpecError("LZArctan requires E0 != 0")

    @property
    def is_time_dependent(self):
        return self.kind in TIME_DEPENDENT_KINDS

    @property
    def is_complex(self):
        return self.kind in COMPLEX_KINDS and (
            self.kind != GENERAL_COMPLEX or np.any(self.matrixI))

    @property
    def is_driven(self):
        return self.kind == DRIVEN


def static_real(matrix):
    """Arbitrary real symmetric static Hamiltonian."""
    return HamiltonianSpec(STATIC_REAL, matrixR=np.asarray(matrix, float))


def two_level(E1, E2, V):
    """Real 2x2 [[E1, V], [V, E2]]."""
    return HamiltonianSpec(TWO_LEVEL, E1=E1, E2=E2, V=V)


def lz_linear(E0, A, V):
    """Linear sweep: diagonal E0 +/- A*t, constant coupling V."""
    return HamiltonianSpec(LZ_LINEAR, E0=E0, A=A, V=V)


def lz_arctan(E0, V):
    """Smooth sweep: diagonal 2*E0*(1 +/- arctan(t/E0)), constant V."""
    return HamiltonianSpec(LZ_ARCTAN, E0=E0, V=V)


def dissipative_two_level(E1, E2, V, lambda1, lambda2):
    """Two levels with imaginary diagonal energies (signed lambdas)."""
    return HamiltonianSpec(DISSIPATIVE, E1=E1, E2=E2, V=V,
                           lambda1=lambda1, lambda2=lambda2)


def driven_dissipative(E1, E2, V, lambda1, lambda2, mu1, mu2, omega_drive):
    """Dissipative pair driven by f(t) = cos(omega_drive*t) * (mu1, mu2)."""
    return HamiltonianSpec(DRIVEN, E1=E1, E2=E2, V=V,
                           lambda1=lambda1, lambda2=lambda2,
                           mu1=mu1, mu2=mu2, omega_drive=omega_drive)


def general_complex_static(matrixR, matrixI=None):
    """Arbitrary static H_R + i*H_I (H_I need not be diagonal)."""
    return HamiltonianSpec(GENERAL_COMPLEX, matrixR=np.asarray(matrixR, float),
                           matrixI=None if matrixI is None
                           else np.asarray(matrixI, float))


def diagonal_energies(spec, t):
    """(omega1, omega2) of a two-level kind at time t, as floats."""
    if spec.kind in (TWO_LEVEL, DISSIPATIVE, DRIVEN):
        return spec.E1, spec.E2
    if spec.kind == LZ_LINEAR:
        return spec.E0 + spec.A * t, spec.E0 - spec.A * t
    if spec.kind == LZ_ARCTAN:
        a = np.arctan(t / spec.E0)
        return 2.0 * spec.E0 * (1.0 + a), 2.0 * spec.E0 * (1.0 - a)
    raise SpecError(f"{spec.kind} has no two-level diagonal")


def eval_h(spec, t):
    """Evaluate H(t); returns the pair of real matrices (H_R, H_I).

    H_I is the all-zero matrix for real kinds.  Fresh arrays are returned
    on every call, so callers may mutate the results freely.
    """
    n = spec.dim
    if spec.kind == STATIC_REAL:
        return spec.matrixR.copy(), np.zeros((n, n))
    if spec.kind == GENERAL_COMPLEX:
        return spec.matrixR.copy(), spec.matrixI.copy()
    w1, w2 = diagonal_energies(spec, t)
    hr = np.array([[w1, spec.V], [spec.V, w2]])
    hi = np.zeros((2, 2))
    if spec.kind in (DISSIPATIVE, DRIVEN):
        hi[0, 0] = spec.lambda1
        hi[1, 1] = spec.lambda2
    return hr, hi


def eval_hdot(spec, t):
    """Analytic time derivative of H_R(t); zero matrix for static kinds."""
    if spec.kind == LZ_LINEAR:
        return np.diag([spec.A, -spec.A])
    if spec.kind == LZ_ARCTAN:
        d = 2.0 / (1.0 + (t / spec.E0) ** 2)
        return np.diag([d, -d])
    return np.zeros((spec.dim, spec.dim))


def eval_drive(spec, t):
    """Drive vector f(t); zero for undriven kinds."""
    f = np.zeros(spec.dim)
    if spec.kind == DRIVEN:
        c = np.cos(spec.omega_drive * t)
        f[0] = spec.mu1 * c
        f[1] = spec.mu2 * c
    return f
