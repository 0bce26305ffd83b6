"""Brute-force reference computations, independent of the package internals."""

import itertools
import math

import numpy as np
from scipy.optimize import minimize

OMEGA = np.array([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=float)


def leibniz_det(m):
    """Determinant as a signed sum over permutations."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    total = 0.0
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = (-1.0) ** inversions
        for i, p in enumerate(perm):
            term *= m[i, p]
        total += term
    return total


def symplectic_spectrum_eig(sigma):
    """Doubled symplectic eigenvalues from the general eigenproblem of i Omega sigma."""
    ev = np.abs(np.linalg.eigvals(1j * OMEGA @ np.asarray(sigma, float)))
    ev = np.sort(ev)
    return 2 * 0.5 * (ev[0] + ev[1]), 2 * 0.5 * (ev[2] + ev[3])


def partial_transpose(sigma):
    P = np.diag([1.0, 1.0, 1.0, -1.0])
    return P @ np.asarray(sigma, float) @ P


def simon_trace_bruteforce(sigma):
    """Tr[A J C J B J C^T J] by explicit index sums."""
    s = np.asarray(sigma, float)
    A, B, C = s[:2, :2], s[2:, 2:], s[:2, 2:]
    J = [[0, 1], [-1, 0]]
    mats = [A, J, C, J, B, J, C.T, J]
    total = 0.0
    for idx in itertools.product(range(2), repeat=8):
        term = 1.0
        for k, M in enumerate(mats):
            term *= M[idx[k]][idx[(k + 1) % 8]]
        total += term
    return total


def entropy_f_mp(x):
    import mpmath as mp
    mp.mp.dps = 40
    x = mp.mpf(x)
    if x == 1:
        return 0.0
    return float((x + 1) / 2 * mp.log((x + 1) / 2) - (x - 1) / 2 * mp.log((x - 1) / 2))


def conditional_epsilon(sigma, s, phi):
    """4 det of mode-1 covariance after a Gaussian measurement on mode 2.

    The measurement seed is a pure single-mode state squeezed by ``s`` along
    angle ``phi``.
    """
    a = np.asarray(sigma, float)
    A, B, C = a[:2, :2], a[2:, 2:], a[:2, 2:]
    R = np.array([[math.cos(phi), -math.sin(phi)], [math.sin(phi), math.cos(phi)]])
    seed = 0.5 * R @ np.diag([math.exp(2 * s), math.exp(-2 * s)]) @ R.T
    cond = A - C @ np.linalg.solve(B + seed, C.T)
    return 4.0 * np.linalg.det(cond)


def homodyne_epsilon(sigma, phi):
    """Infinite-squeezing limit of :func:`conditional_epsilon`: a sharp
    measurement of the quadrature along ``u = (-sin phi, cos phi)``."""
    a = np.asarray(sigma, float)
    A, B, C = a[:2, :2], a[2:, 2:], a[:2, 2:]
    u = np.array([-math.sin(phi), math.cos(phi)])
    Cu = C @ u
    return 4.0 * np.linalg.det(A - np.outer(Cu, Cu) / (u @ B @ u))


def epsilon_by_minimization(sigma):
    """Numerical infimum over Gaussian measurements: grid start + Nelder-Mead."""
    best = (math.inf, None)
    for s in np.linspace(0.0, 8.0, 33):
        for phi in np.linspace(0.0, math.pi, 24, endpoint=False):
            v = conditional_epsilon(sigma, s, phi)
            if v < best[0]:
                best = (v, (s, phi))
    # seeds beyond s = 12 swamp B in double precision; the homodyne limit
    # below covers that end exactly
    res = minimize(lambda x: conditional_epsilon(sigma, min(abs(x[0]), 12.0), x[1]), best[1],
                   method="Nelder-Mead", options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000})
    # homodyne limit: infinitely squeezed seed
    phis = np.linspace(0.0, math.pi, 360, endpoint=False)
    k = int(np.argmin([homodyne_epsilon(sigma, phi) for phi in phis]))
    hom = minimize(lambda x: homodyne_epsilon(sigma, x[0]), [phis[k]], method="Nelder-Mead",
                   options={"xatol": 1e-12, "fatol": 1e-15})
    homodyne = min(hom.fun, homodyne_epsilon(sigma, phis[k]))
    return min(res.fun, best[0], homodyne)


def epsilon_mp(sigma, dps=60):
    """Closed-form epsilon (doubled convention) and branch number, in ``dps``-digit arithmetic.

    The input entries are taken as exact, so neither the branch test nor the
    cancellations near pure or vacuum states suffer from round-off.
    """
    import mpmath as mp
    with mp.workdps(dps):
        M = mp.matrix(np.asarray(sigma, float).tolist())
        a, b = 4 * mp.det(M[0:2, 0:2]), 4 * mp.det(M[2:4, 2:4])
        g, d = 4 * mp.det(M[0:2, 2:4]), 16 * mp.det(M)
        if (d - a * b) ** 2 <= (b + 1) * g * g * (a + d):
            return float(((abs(g) + mp.sqrt(g * g + (b - 1) * (d - a))) / (b - 1)) ** 2), 1
        root = mp.sqrt(g ** 4 + (d - a * b) ** 2 - 2 * g * g * (d + a * b))
        return float((a * b - g * g + d - root) / (2 * b)), 2
