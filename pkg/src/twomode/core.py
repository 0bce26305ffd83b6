"""Two-mode covariance matrices: construction, blocks and symplectic spectra.

Covariance matrices are plain ``(4, 4)`` float arrays over the quadrature
basis ``(x, p_x, y, p_y)`` with the vacuum equal to ``0.5 * I``.  Arrays
returned by this package are marked read-only so they behave as values.

Two eigenvalue conventions appear:

* *doubled* symplectic eigenvalues ``nu_bar = 2 * nu``, which are ``>= 1``
  for physical states and feed the entropy function of :mod:`twomode.measures`;
* *half* convention ``nu`` (vacuum = 1/2), used for the partially transposed
  spectrum that enters the logarithmic negativity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameterError, NumericalDomainError

# 2x2 symplectic unit and its two-mode direct sum
J = np.array([[0.0, 1.0], [-1.0, 0.0]])
OMEGA = np.kron(np.eye(2), J)

# Mirror reflection p_y -> -p_y; conjugating by it is the partial transpose.
PARTIAL_TRANSPOSE = np.diag([1.0, 1.0, 1.0, -1.0])

# Discriminants in [-DISCRIMINANT_CLAMP, 0] are treated as exact zeros.
DISCRIMINANT_CLAMP = 1e-12


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _check_squeezing(r) -> float:
    r = float(r)
    if not math.isfinite(r) or r < 0:
        raise InvalidParameterError(f"squeezing parameter must be finite and >= 0, got {r!r}")
    return r


def as_covariance(sigma) -> np.ndarray:
    """Coerce ``sigma`` to a finite ``(4, 4)`` float array (no copy if possible)."""
    a = np.asarray(sigma, dtype=float)
    if a.shape != (4, 4):
        raise InvalidParameterError(f"covariance matrix must be 4x4, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidParameterError("covariance matrix has non-finite entries")
    return a


def symmetrize(sigma) -> np.ndarray:
    a = np.asarray(sigma, dtype=float)
    return _frozen(0.5 * (a + a.T))


def vacuum() -> np.ndarray:
    return _frozen(0.5 * np.eye(4))


def make_separable_squeezed(r) -> np.ndarray:
    """Product of two identical single-mode squeezed vacua.

    Each diagonal block is ``0.5 * [[cosh r, sinh r], [sinh r, cosh r]]`` and
    the cross block is zero, so the state is pure and separable.
    """
    r = _check_squeezing(r)
    c, s = 0.5 * math.cosh(r), 0.5 * math.sinh(r)
    block = np.array([[c, s], [s, c]])
    sigma = np.zeros((4, 4))
    sigma[:2, :2] = block
    sigma[2:, 2:] = block
    return symmetrize(sigma)


def make_two_mode_squeezed(r) -> np.ndarray:
    """Two-mode squeezed vacuum with cross block ``0.5 sinh r diag(1, -1)``."""
    r = _check_squeezing(r)
    c, s = 0.5 * math.cosh(r), 0.5 * math.sinh(r)
    sigma = np.diag([c, c, c, c])
    sigma[0, 2] = sigma[2, 0] = s
    sigma[1, 3] = sigma[3, 1] = -s
    return symmetrize(sigma)


def block_decompose(sigma):
    """Split ``sigma = [[A, C], [C^T, B]]`` into copies of ``(A, B, C)``."""
    a = as_covariance(sigma)
    return a[:2, :2].copy(), a[2:, 2:].copy(), a[:2, 2:].copy()


def assemble(A, B, C) -> np.ndarray:
    """Inverse of :func:`block_decompose`."""
    return np.block([[np.asarray(A, float), np.asarray(C, float)],
                     [np.asarray(C, float).T, np.asarray(B, float)]])


def _det2(m) -> float:
    return float(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


@dataclass(frozen=True)
class SymplecticInvariants:
    """Local symplectic invariants of a two-mode covariance matrix.

    ``alpha``, ``beta``, ``gamma`` and ``delta`` are the doubled-convention
    quantities (``4 det A``, ``4 det B``, ``4 det C``, ``16 det sigma``);
    ``Delta`` and ``DeltaTilde`` are ``det A + det B +/- 2 det C`` in the
    half convention.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    Delta: float
    DeltaTilde: float

    @property
    def det_sigma(self) -> float:
        return self.delta / 16.0


def symplectic_invariants(sigma) -> SymplecticInvariants:
    return _invariants(as_covariance(sigma))


def _invariants(a: np.ndarray) -> SymplecticInvariants:
    # a is an already validated (4, 4) float array
    det_a, det_b, det_c = _det2(a[:2, :2]), _det2(a[2:, 2:]), _det2(a[:2, 2:])
    return SymplecticInvariants(
        alpha=4.0 * det_a,
        beta=4.0 * det_b,
        gamma=4.0 * det_c,
        delta=16.0 * float(np.linalg.det(a)),
        Delta=det_a + det_b + 2.0 * det_c,
        DeltaTilde=det_a + det_b - 2.0 * det_c,
    )


def _pair_from_invariant(seralian: float, det_s: float):
    """Half-convention pair from ``2 nu^2 = s -/+ sqrt(s^2 - 4 det sigma)``."""
    disc = seralian * seralian - 4.0 * det_s
    if disc < -DISCRIMINANT_CLAMP:
        raise NumericalDomainError(
            f"negative symplectic discriminant {disc:.3e} (Delta={seralian!r}, det sigma={det_s!r})")
    root = math.sqrt(max(disc, 0.0))
    hi = 0.5 * (seralian + root)
    if hi <= 0:
        raise NumericalDomainError(f"non-positive symplectic invariant (Delta={seralian!r})")
    # smaller root through the product to avoid cancellation
    lo = det_s / hi
    if lo < 0:
        raise NumericalDomainError(f"negative det sigma={det_s!r}")
    return math.sqrt(lo), math.sqrt(hi)


def symplectic_eigenvalues_from_invariants(sigma):
    """Doubled symplectic eigenvalues from ``Delta`` and ``det sigma``.

    This is the closed-form route.  Its square root sits on zero whenever the
    two eigenvalues coincide (pure states, identical thermal modes), so near
    such points round-off of order ``eps * det A`` is amplified to its square
    root.  :func:`symplectic_eigenvalues` avoids that and is used everywhere
    else; this function is kept as an independent check.
    """
    inv = symplectic_invariants(sigma)
    lo, hi = _pair_from_invariant(inv.Delta, inv.det_sigma)
    return 2.0 * lo, 2.0 * hi


def pt_symplectic_eigenvalues_from_invariants(sigma):
    """Half-convention spectrum of the partial transpose from the seralian."""
    inv = symplectic_invariants(sigma)
    return _pair_from_invariant(inv.DeltaTilde, inv.det_sigma)


def _williamson_pair(a: np.ndarray):
    # sigma = L L^T; the Hermitian matrix i L^T Omega L has spectrum +/- nu.
    L = np.linalg.cholesky(a)
    ev = np.linalg.eigvalsh(1j * (L.T @ OMEGA @ L))
    return 0.5 * (ev[2] - ev[1]), 0.5 * (ev[3] - ev[0])


def symplectic_eigenvalues(sigma):
    """Return doubled symplectic eigenvalues ``(nu_bar_minus, nu_bar_plus)``.

    Positive definite inputs go through the Williamson form, which keeps the
    absolute error near ``eps * ||sigma||`` even for degenerate spectra.
    Other inputs fall back to the invariant formula and raise
    :class:`NumericalDomainError` when it has no real solution.
    """
    return _spectrum(as_covariance(sigma))


def _spectrum(a: np.ndarray):
    try:
        lo, hi = _williamson_pair(0.5 * (a + a.T))
    except np.linalg.LinAlgError:
        return symplectic_eigenvalues_from_invariants(a)
    return 2.0 * float(lo), 2.0 * float(hi)


def partial_transpose(sigma) -> np.ndarray:
    a = as_covariance(sigma)
    return _frozen(PARTIAL_TRANSPOSE @ a @ PARTIAL_TRANSPOSE)


# sign pattern of P sigma P for the mirror reflection P
_PT_SIGNS = np.outer(np.diag(PARTIAL_TRANSPOSE), np.diag(PARTIAL_TRANSPOSE))


def pt_symplectic_eigenvalues(sigma):
    """Half-convention symplectic eigenvalues ``(nu_tilde_minus, nu_tilde_plus)``
    of the partially transposed state (vacuum gives ``(0.5, 0.5)``)."""
    return _pt_spectrum(as_covariance(sigma))


def _pt_spectrum(a: np.ndarray):
    lo, hi = _spectrum(a * _PT_SIGNS)
    return 0.5 * lo, 0.5 * hi


def is_physical(sigma, tol: float = 1e-10) -> bool:
    """Robertson-Schroedinger check: ``nu_bar_minus >= 1 - tol`` and ``A, B > 0``."""
    if tol < 0:
        raise InvalidParameterError(f"tol must be >= 0, got {tol!r}")
    try:
        a = as_covariance(sigma)
        scale = max(1.0, float(np.max(np.abs(a))))
        if np.max(np.abs(a - a.T)) > 1e-12 * scale:
            return False
        A, B, _ = block_decompose(a)
        for block in (A, B):
            if block[0, 0] <= 0 or _det2(block) <= 0:
                return False
        nu_minus, _ = symplectic_eigenvalues(a)
    except (InvalidParameterError, NumericalDomainError, ValueError):
        return False
    return nu_minus >= 1.0 - tol
