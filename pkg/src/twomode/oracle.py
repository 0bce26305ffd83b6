"""Independent numerical routes used to check the closed-form dynamics.

Nothing on the production path imports this module.  It provides a generic
scaling-and-squaring matrix exponential, a fixed-step RK4 integrator for the
covariance ODE and a direct (vectorised) solve of the steady-state Lyapunov
equation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NumericalDomainError


def expm_generic(M) -> np.ndarray:
    """Matrix exponential by scaling and squaring a truncated Taylor series.

    The argument is scaled by ``2**-s`` until its 1-norm is at most 1/2, the
    series is summed until terms drop below machine precision relative to
    the partial sum, and the result is squared ``s`` times.
    """
    A = np.asarray(M, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InvalidParameterError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise InvalidParameterError("matrix has non-finite entries")
    norm = np.linalg.norm(A, 1)
    s = max(0, int(math.ceil(math.log2(norm / 0.5)))) if norm > 0.5 else 0
    A = A / 2.0**s
    n = A.shape[0]
    result = np.eye(n)
    term = np.eye(n)
    for k in range(1, 40):
        term = term @ A / k
        result = result + term
        if np.max(np.abs(term)) <= 1e-18 * np.max(np.abs(result)):
            break
    for _ in range(s):
        result = result @ result
    return result


@dataclass(frozen=True)
class IntegratorConfig:
    step: float = 1e-4
    method: str = "rk4"

    def __post_init__(self):
        if self.method != "rk4":
            raise InvalidParameterError(f"unsupported integrator {self.method!r}")
        if not (math.isfinite(self.step) and self.step > 0):
            raise InvalidParameterError(f"step must be positive, got {self.step!r}")


def rk4_evolve(sigma0, Y, D, t: float, cfg: IntegratorConfig = IntegratorConfig()) -> np.ndarray:
    """Integrate ``d sigma/dt = Y sigma + sigma Y^T + 2 D`` with classic RK4.

    Uses ``ceil(t / step)`` equal steps, so the effective step never exceeds
    ``cfg.step``.
    """
    sigma = np.array(sigma0, dtype=float)
    Y = np.asarray(Y, dtype=float)
    D2 = 2.0 * np.asarray(D, dtype=float)
    t = float(t)
    if t < 0 or not math.isfinite(t):
        raise InvalidParameterError(f"time must be finite and >= 0, got {t!r}")
    if t == 0.0:
        return 0.5 * (sigma + sigma.T)
    if cfg.step > t:
        raise InvalidParameterError(f"step {cfg.step!r} exceeds integration time {t!r}")
    n = int(math.ceil(t / cfg.step - 1e-9))
    h = t / n
    YT = Y.T

    def rhs(s):
        return Y @ s + s @ YT + D2

    for _ in range(n):
        k1 = rhs(sigma)
        k2 = rhs(sigma + 0.5 * h * k1)
        k3 = rhs(sigma + 0.5 * h * k2)
        k4 = rhs(sigma + h * k3)
        sigma = sigma + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return 0.5 * (sigma + sigma.T)


def lyapunov_solve(Y, D) -> np.ndarray:
    """Solve ``Y S + S Y^T = -2 D`` as a 16x16 linear system.

    With row-major vectorisation ``vec(Y S) = (Y kron I) vec(S)`` and
    ``vec(S Y^T) = (I kron Y) vec(S)``.
    """
    Y = np.asarray(Y, dtype=float)
    D = np.asarray(D, dtype=float)
    n = Y.shape[0]
    if np.max(np.linalg.eigvals(Y).real) >= 0:
        raise NumericalDomainError("drift matrix is not stable; no steady state")
    eye = np.eye(n)
    K = np.kron(Y, eye) + np.kron(eye, Y)
    try:
        x = np.linalg.solve(K, -2.0 * D.reshape(-1))
    except np.linalg.LinAlgError as exc:
        raise NumericalDomainError(f"Lyapunov system is singular: {exc}") from exc
    return x.reshape(n, n)
