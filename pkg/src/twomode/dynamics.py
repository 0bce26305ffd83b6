"""Covariance dynamics of two uncoupled oscillators in a common thermal bath.

The covariance matrix obeys ``d sigma/dt = Y sigma + sigma Y^T + 2 D`` with a
block-diagonal drift ``Y`` and a diffusion matrix ``D``.  Because ``Y`` is
time independent the solution is

    sigma(t) = M(t) [sigma(0) - sigma(inf)] M(t)^T + sigma(inf),  M(t) = exp(Y t)

and, for the thermal ``D`` used here, ``sigma(inf)`` is the Gibbs product state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import _frozen, as_covariance, is_physical, symmetrize
from .errors import InvalidParameterError, InvalidStateError

# beyond this value of omega / 2T, coth is evaluated as 1 + 2 exp(-omega / T)
COTH_ASYMPTOTIC_ARG = 20.0

# physicality tolerance applied to initial states handed to evolve()
INITIAL_STATE_TOL = 1e-10

# (name, row, col) of every independent diffusion coefficient
DIFFUSION_INDEX = {
    "D_xx": (0, 0),
    "D_xpx": (0, 1),
    "D_xy": (0, 2),
    "D_xpy": (0, 3),
    "D_pxpx": (1, 1),
    "D_ypx": (1, 2),
    "D_pxpy": (1, 3),
    "D_yy": (2, 2),
    "D_ypy": (2, 3),
    "D_pypy": (3, 3),
}


@dataclass(frozen=True)
class SystemParams:
    """Mass, the two mode frequencies and the dissipation constant.

    Natural units with hbar = k_B = 1.  All four values must be finite and
    strictly positive; ``lam > 0`` is what makes ``M(t) -> 0``.
    """

    m: float = 1.0
    omega1: float = 1.0
    omega2: float = 1.0
    lam: float = 0.1

    def __post_init__(self):
        for name in ("m", "omega1", "omega2", "lam"):
            value = getattr(self, name)
            if not isinstance(value, (int, float, np.floating, np.integer)) or isinstance(value, bool):
                raise InvalidParameterError(f"{name} must be a real number, got {value!r}")
            value = float(value)
            if not math.isfinite(value) or value <= 0:
                raise InvalidParameterError(f"{name} must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def omegas(self):
        return (self.omega1, self.omega2)


def check_temperature(T) -> float:
    T = float(T)
    if not math.isfinite(T) or T < 0:
        raise InvalidParameterError(f"temperature must be finite and >= 0, got {T!r}")
    return T


def _check_time(t) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0:
        raise InvalidParameterError(f"time must be finite and >= 0, got {t!r}")
    return t


def coth_factor(omega: float, T: float) -> float:
    """``coth(omega / 2T)``, equal to 1 at ``T = 0``."""
    T = check_temperature(T)
    if T == 0.0:
        return 1.0
    x = omega / (2.0 * T)
    if x > COTH_ASYMPTOTIC_ARG:
        return 1.0 + 2.0 * math.exp(-omega / T)
    return 1.0 / math.tanh(x)


def drift_matrix(params: SystemParams) -> np.ndarray:
    Y = np.zeros((4, 4))
    for k, omega in enumerate(params.omegas):
        i = 2 * k
        Y[i:i + 2, i:i + 2] = [[-params.lam, 1.0 / params.m],
                               [-params.m * omega**2, -params.lam]]
    return _frozen(Y)


def thermal_diffusion(params: SystemParams, T) -> np.ndarray:
    """Diagonal diffusion matrix whose steady state is the Gibbs state at ``T``.

    ``m w D_xx = D_pxpx / (m w) = (lam / 2) coth(w / 2T)`` for each mode; all
    cross coefficients vanish.
    """
    T = check_temperature(T)
    diag = []
    for omega in params.omegas:
        half = 0.5 * params.lam * coth_factor(omega, T)
        mw = params.m * omega
        diag += [half / mw, half * mw]
    return _frozen(np.diag(diag))


def diffusion_from_coefficients(**coefficients) -> np.ndarray:
    """Build a symmetric diffusion matrix from named coefficients (missing ones are 0)."""
    D = np.zeros((4, 4))
    for name, value in coefficients.items():
        if name not in DIFFUSION_INDEX:
            raise InvalidParameterError(f"unknown diffusion coefficient {name!r}")
        i, j = DIFFUSION_INDEX[name]
        D[i, j] = D[j, i] = float(value)
    return _frozen(D)


def diffusion_coefficients(D) -> dict:
    D = as_covariance(D)
    return {name: float(D[i, j]) for name, (i, j) in DIFFUSION_INDEX.items()}


@dataclass(frozen=True)
class DiffusionReport:
    """Margins of the six positivity constraints on the diffusion coefficients.

    Each margin is ``lhs - rhs`` of one inequality; ``passed`` is true when all
    margins are ``>= -tol``.
    """

    margins: dict
    tol: float

    @property
    def passed(self) -> bool:
        return all(v >= -self.tol for v in self.margins.values())

    @property
    def failures(self):
        return [k for k, v in self.margins.items() if v < -self.tol]


def validate_diffusion(D, lam: float, tol: float = 0.0) -> DiffusionReport:
    """Check the complete-positivity constraints on ``D`` for dissipation ``lam``."""
    D = as_covariance(D)
    if np.max(np.abs(D - D.T)) > 0:
        raise InvalidParameterError("diffusion matrix must be symmetric")
    c = diffusion_coefficients(D)
    quarter = lam * lam / 4.0
    margins = {
        "x-px": c["D_xx"] * c["D_pxpx"] - c["D_xpx"] ** 2 - quarter,
        "y-py": c["D_yy"] * c["D_pypy"] - c["D_ypy"] ** 2 - quarter,
        "x-y": c["D_xx"] * c["D_yy"] - c["D_xy"] ** 2,
        "px-py": c["D_pxpx"] * c["D_pypy"] - c["D_pxpy"] ** 2,
        "x-py": c["D_xx"] * c["D_pypy"] - c["D_xpy"] ** 2,
        "y-px": c["D_yy"] * c["D_pxpx"] - c["D_ypx"] ** 2,
    }
    return DiffusionReport(margins=margins, tol=float(tol))


def propagator(params: SystemParams, t) -> np.ndarray:
    """Closed-form ``M(t) = exp(Y t)``.

    Per mode: ``exp(-lam t) [cos(w t) I + sin(w t) [[0, 1/(m w)], [-m w, 0]]]``.
    """
    t = _check_time(t)
    M = np.zeros((4, 4))
    decay = math.exp(-params.lam * t)
    for k, omega in enumerate(params.omegas):
        i = 2 * k
        mw = params.m * omega
        c, s = math.cos(omega * t), math.sin(omega * t)
        M[i:i + 2, i:i + 2] = [[decay * c, decay * s / mw],
                               [-decay * s * mw, decay * c]]
    return _frozen(M)


def steady_state(params: SystemParams, T) -> np.ndarray:
    """Gibbs product state: ``m w sigma_xx = sigma_pp / (m w) = coth(w / 2T) / 2``."""
    T = check_temperature(T)
    diag = []
    for omega in params.omegas:
        half = 0.5 * coth_factor(omega, T)
        mw = params.m * omega
        diag += [half / mw, half * mw]
    return _frozen(np.diag(diag))


def evolve(sigma0, params: SystemParams, T, t) -> np.ndarray:
    """Covariance matrix at time ``t`` starting from ``sigma0`` in a bath at ``T``."""
    sigma0 = as_covariance(sigma0)
    if not is_physical(sigma0, INITIAL_STATE_TOL):
        raise InvalidStateError("initial covariance matrix is not a physical state")
    return propagate(sigma0, params, T, t)


def propagate(sigma0, params: SystemParams, T, t) -> np.ndarray:
    """:func:`evolve` without the physicality check on ``sigma0``.

    For loops that evaluate many times from one already validated state.
    """
    t = _check_time(t)
    s_inf = steady_state(params, T)
    if t == 0.0:
        return symmetrize(sigma0)
    M = propagator(params, t)
    return symmetrize(M @ (sigma0 - s_inf) @ M.T + s_inf)
