"""Correlation measures of two-mode Gaussian states.

Entanglement: Simon's separability function and the logarithmic negativity.
Total correlations split as ``I = C + D`` into Gaussian classical correlations
``C`` and Gaussian quantum discord ``D``, both optimised over Gaussian
measurements on mode 2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    J,
    SymplecticInvariants,
    _det2,
    _invariants,
    _pt_spectrum,
    _spectrum,
    as_covariance,
    block_decompose,
    pt_symplectic_eigenvalues,
    symplectic_invariants,
)
from .dynamics import SystemParams, check_temperature, coth_factor
from .errors import InvalidParameterError, InvalidStateError, NumericalDomainError

# measures accept states that are physical to within this tolerance
STATE_TOL = 1e-8
# f(x) treats x in [1 - ENTROPY_CLAMP, 1] as x = 1
ENTROPY_CLAMP = 1e-12
# |gamma|^2 below this means no cross correlations: epsilon = alpha exactly
PRODUCT_GAMMA_SQ = 1e-24
# relative width of the band where both epsilon branches are evaluated
BRANCH_TIE_REL = 1e-12
BRANCH_AGREEMENT = 1e-9
# square-root arguments within this fraction of their own terms are zero
ROUNDOFF_REL = 1e-14
# small negative discord values that are reported as 0
DISCORD_CLAMP = 1e-10


class EntropyLogBase(str, enum.Enum):
    NATURAL = "natural"
    BASE2 = "base2"


class EpsilonBranch(str, enum.Enum):
    BRANCH1 = "branch1"
    BRANCH2 = "branch2"
    PRODUCT = "product_shortcut"


def _base(base) -> EntropyLogBase:
    try:
        return EntropyLogBase(base)
    except ValueError:
        raise InvalidParameterError(f"unknown log base {base!r}; use 'natural' or 'base2'") from None


def entropy_f(x: float, base=EntropyLogBase.NATURAL) -> float:
    """Entropy of a single mode with doubled symplectic eigenvalue ``x``.

    ``f(x) = (x+1)/2 log((x+1)/2) - (x-1)/2 log((x-1)/2)``, with ``f(1) = 0``.
    """
    base = _base(base)
    x = float(x)
    if not x >= 1.0 - ENTROPY_CLAMP:
        raise NumericalDomainError(f"entropy function needs x >= 1, got {x!r}")
    if x <= 1.0:
        return 0.0
    plus, minus = 0.5 * (x + 1.0), 0.5 * (x - 1.0)
    if minus > 1.0:
        # plus - minus = 1, so f = log(minus) + plus log(1 + 1/minus) without
        # the cancellation between two terms of size x log x
        value = math.log(minus) + plus * math.log1p(1.0 / minus)
    else:
        value = plus * math.log(plus) - minus * math.log(minus)
    if base is EntropyLogBase.BASE2:
        value /= math.log(2.0)
    return value


def simon_S(sigma) -> float:
    """Simon's function; the state is separable iff the result is ``>= 0``."""
    A, B, C = block_decompose(sigma)
    det_a = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    det_b = B[0, 0] * B[1, 1] - B[0, 1] * B[1, 0]
    det_c = C[0, 0] * C[1, 1] - C[0, 1] * C[1, 0]
    trace = np.trace(A @ J @ C @ J @ B @ J @ C.T @ J)
    return float(det_a * det_b + (0.25 - abs(det_c)) ** 2 - trace - 0.25 * (det_a + det_b))


def log_negativity(sigma) -> float:
    """``E_N = -log2(2 nu_tilde_minus)`` in bits; positive iff entangled.

    Uses the partially transposed spectrum from the Williamson form.  The
    equivalent determinant expression is :func:`log_negativity_g`.
    """
    nu_minus, _ = pt_symplectic_eigenvalues(sigma)
    if nu_minus <= 0:
        raise NumericalDomainError(f"non-positive partial-transpose eigenvalue {nu_minus!r}")
    return -math.log2(2.0 * nu_minus)


def log_negativity_g(sigma) -> float:
    """``E_N = -1/2 log2(4 g)`` with ``g = s - sqrt(s^2 - det sigma)``,
    ``s = (det A + det B)/2 - det C``.

    ``g`` is evaluated as ``det sigma / (s + sqrt(...))``, which is the same
    number without the cancellation.  When the two partial-transpose
    eigenvalues are degenerate the square root amplifies round-off, so this
    route is a cross-check rather than the default.
    """
    inv = symplectic_invariants(sigma)
    s = 0.5 * inv.DeltaTilde
    det_s = inv.det_sigma
    arg = s * s - det_s
    if arg < -1e-12:
        raise NumericalDomainError(f"negative radicand {arg:.3e} in log-negativity")
    denom = s + math.sqrt(max(arg, 0.0))
    if denom <= 0 or det_s <= 0:
        raise NumericalDomainError("log-negativity undefined for this matrix")
    return -0.5 * math.log2(4.0 * det_s / denom)


def _radical(value: float, scale: float):
    """``(sqrt(value), error bound)`` for a mathematically non-negative ``value``.

    ``scale`` bounds the size of the terms (and of the cancelled differences)
    that ``value`` was computed from; anything within ``ROUNDOFF_REL * scale``
    of zero is round-off.  The error bound is what that round-off does to the
    square root, which is large when ``value`` is close to zero.
    """
    noise = ROUNDOFF_REL * scale
    if value < 0:
        if value < -noise - 1e-300:
            raise NumericalDomainError(f"negative radicand {value:.3e} (scale {scale:.3e})")
        return 0.0, math.sqrt(noise)
    if value <= noise:
        return 0.0, math.sqrt(noise)
    root = math.sqrt(value)
    return root, min(math.sqrt(noise), noise / root)


def _epsilon_branch1(a, b, g, d):
    x = (b - 1.0) * (d - a)
    # d - a cancels: its round-off is relative to |d| + |a|, not to |d - a|
    root, err = _radical(g * g + x, g * g + abs(b - 1.0) * (abs(d) + abs(a)))
    # 2g^2 + x + 2|g| root == (|g| + root)^2 when root^2 == g^2 + x
    eps = ((abs(g) + root) / (b - 1.0)) ** 2
    # beta - 1 carries an absolute error ~ ROUNDOFF_REL * beta
    rel = 2.0 * err / (abs(g) + root) if abs(g) + root > 0 else 0.0
    rel += 2.0 * ROUNDOFF_REL * b / abs(b - 1.0)
    return eps, eps * rel


def _epsilon_branch2(a, b, g, d):
    g2 = g * g
    ab = a * b
    w = d - ab
    root, err = _radical(g2 * g2 + w * w - 2.0 * g2 * (d + ab),
                         g2 * g2 + 2.0 * g2 * abs(d + ab) + 2.0 * abs(w) * (abs(d) + abs(ab)))
    eps = (ab - g2 + d - root) / (2.0 * b)
    return eps, (err + ROUNDOFF_REL * (ab + g2 + abs(d))) / (2.0 * b)


def _floor_at_one(eps: float, err: float) -> float:
    # the conditional state of mode 1 is physical, so eps >= 1 exactly
    if eps < 1.0:
        if 1.0 - eps > err + ROUNDOFF_REL:
            raise NumericalDomainError(f"epsilon = {eps!r} below 1 beyond its error bound {err:.3e}")
        return 1.0
    return eps


def _closed_form_epsilon(inv: SymplecticInvariants, strict: bool = True):
    """``(epsilon, error bound, EpsilonBranch)`` from the invariants alone.

    With ``strict=False`` disagreeing branches at a tie are not an error;
    the caller then settles the value independently.
    """
    a, b, g, d = inv.alpha, inv.beta, inv.gamma, inv.delta
    if g * g < PRODUCT_GAMMA_SQ:
        return a, 0.0, EpsilonBranch.PRODUCT
    lhs = (d - a * b) ** 2
    rhs = (b + 1.0) * g * g * (a + d)
    if abs(lhs - rhs) <= BRANCH_TIE_REL * max(abs(lhs), abs(rhs)):
        (e1, err1), (e2, err2) = _epsilon_branch1(a, b, g, d), _epsilon_branch2(a, b, g, d)
        # at a pure-state tie the branch-2 radicand has a double zero, so its
        # own error bound is part of the allowed disagreement
        if strict and abs(e1 - e2) > BRANCH_AGREEMENT * max(1.0, abs(e1)) + err1 + err2:
            raise NumericalDomainError(
                f"epsilon branches disagree at their boundary: {e1!r} vs {e2!r}")
        return _floor_at_one(e1, err1), err1, EpsilonBranch.BRANCH1
    if lhs <= rhs:
        eps, err = _epsilon_branch1(a, b, g, d)
        return _floor_at_one(eps, err), err, EpsilonBranch.BRANCH1
    eps, err = _epsilon_branch2(a, b, g, d)
    return _floor_at_one(eps, err), err, EpsilonBranch.BRANCH2


def gaussian_epsilon(inv: SymplecticInvariants):
    """Minimum conditional determinant ``epsilon`` (doubled convention) and its branch.

    ``epsilon = 4 inf det(sigma_1|M)`` over Gaussian measurements ``M`` on
    mode 2.  Returns ``(epsilon, EpsilonBranch)``.

    This is the closed form in the invariants.  Close to the vacuum it loses
    digits (``beta - 1`` and ``delta - alpha`` cancel); :func:`entropic_terms`
    therefore evaluates the optimum from the matrix itself and uses this
    form to pick the branch and as a consistency check.
    """
    eps, _, branch = _closed_form_epsilon(inv)
    return eps, branch


def _local_normaliser(p: float, q: float, r: float):
    """Entries of ``(det M)^(1/4) M^(-1/2)`` for ``M = [[p, q], [q, r]]`` positive definite.

    This 2x2 symplectic takes ``M`` to ``sqrt(det M) I``.  Uses
    ``sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M))``.
    """
    d = math.sqrt(p * r - q * q)
    k = 1.0 / (math.sqrt(p + r + 2.0 * d) * math.sqrt(d))
    return (r + d) * k, -q * k, (p + d) * k


def local_standard_form(sigma):
    """``(a, b, c1, c2)`` with ``sigma`` locally equivalent to
    ``[[a I, diag(c1, c2)], [diag(c1, c2), b I]]`` and ``c1 >= |c2|``."""
    return _standard_form(as_covariance(sigma))


def _standard_form(arr: np.ndarray):
    (a11, a12, c11, c12), (_, a22, c21, c22), (_, _, b11, b12), (_, _, _, b22) = arr.tolist()
    det_a, det_b = a11 * a22 - a12 * a12, b11 * b22 - b12 * b12
    u11, u12, u22 = _local_normaliser(a11, a12, a22)
    v11, v12, v22 = _local_normaliser(b11, b12, b22)
    # m = U C V (U, V symmetric)
    t11, t12 = u11 * c11 + u12 * c21, u11 * c12 + u12 * c22
    t21, t22 = u12 * c11 + u22 * c21, u12 * c12 + u22 * c22
    m11, m12 = t11 * v11 + t12 * v12, t11 * v12 + t12 * v22
    m21, m22 = t21 * v11 + t22 * v12, t21 * v12 + t22 * v22
    # signed singular values of a 2x2 matrix are Q + R and Q - R; local
    # symplectics keep det C, which gives the small one without cancellation
    q = math.hypot(0.5 * (m11 + m22), 0.5 * (m21 - m12))
    r = math.hypot(0.5 * (m11 - m22), 0.5 * (m21 + m12))
    c1 = q + r
    c2 = (c11 * c22 - c12 * c21) / c1 if c1 > 0 else 0.0
    return math.sqrt(det_a), math.sqrt(det_b), c1, c2


def _seed_epsilon(arr: np.ndarray) -> float:
    """``epsilon`` evaluated at the optimal pure Gaussian seed, in standard form.

    With a seed squeezed along x or p (variance ``x`` and ``1/(4x)``) the
    conditional determinant is ``(a - c1^2/(b+x)) (a - c2^2/(b+1/(4x)))``, a
    product of well-conditioned factors.  The optimum is either a stationary
    point (roots of a quadratic in ``x``) or a homodyne limit ``x -> 0, inf``.
    Since the value is stationary at the optimum, an imprecise root costs
    only second-order accuracy.
    """
    a, b, c1, c2 = _standard_form(arr)
    p, q = c1 * c1, c2 * c2
    candidates = [a * (a - q / b), a * (a - p / b)]
    k2 = 16.0 * a * b * b * p - 16.0 * b * p * q - 4.0 * a * q
    k1 = 8.0 * a * b * (p - q)
    k0 = a * p - 4.0 * a * b * b * q + 4.0 * b * p * q
    if k2 != 0.0:
        disc = k1 * k1 - 4.0 * k2 * k0
        half = math.sqrt(max(disc, 0.0))
        roots = ((-k1 + half) / (2.0 * k2), (-k1 - half) / (2.0 * k2))
    elif k1 != 0.0:
        roots = (-k0 / k1,)
    else:
        roots = ()
    for x in roots:
        if 0.0 < x < math.inf:
            candidates.append((a - p / (b + x)) * (a - q / (b + 0.25 / x)))
    return 4.0 * min(candidates)


# absolute error of the optimal-seed value, in units of ROUNDOFF_REL * alpha:
# the standard-form entries are good to round-off relative to sqrt(alpha)
SEED_ERROR_FACTOR = 64.0


def _epsilon(arr: np.ndarray, inv: SymplecticInvariants):
    """``(epsilon, branch)`` checked against the optimal-seed evaluation.

    The closed form cancels close to the vacuum, the optimal-seed evaluation
    cancels at strong squeezing; each carries an error bound and the smaller
    one wins.  Close to pure states the branch test itself is decided by
    round-off, so when the chosen branch disagrees with the optimal-seed
    value the other branch's formula must reproduce it instead.
    """
    eps_cf, err_cf, branch = _closed_form_epsilon(inv, strict=False)
    if branch is EpsilonBranch.PRODUCT:
        return eps_cf, branch
    eps_seed = _seed_epsilon(arr)
    err_seed = SEED_ERROR_FACTOR * ROUNDOFF_REL * max(1.0, inv.alpha)

    def agrees(eps, err):
        return abs(eps_seed - eps) <= err + err_seed + BRANCH_AGREEMENT * max(1.0, eps)

    if not agrees(eps_cf, err_cf):
        a, b, g, d = inv.alpha, inv.beta, inv.gamma, inv.delta
        if branch is EpsilonBranch.BRANCH1:
            other, (eps, err) = EpsilonBranch.BRANCH2, _epsilon_branch2(a, b, g, d)
        else:
            other, (eps, err) = EpsilonBranch.BRANCH1, _epsilon_branch1(a, b, g, d)
        if not agrees(eps, err):
            raise NumericalDomainError(
                f"epsilon closed form {eps_cf!r} disagrees with the optimal-seed value {eps_seed!r}")
        eps_cf, err_cf, branch = _floor_at_one(eps, err), err, other
    if err_cf <= err_seed:
        return eps_cf, branch
    # 1 <= epsilon <= alpha holds exactly; only round-off can leave the interval
    return min(_floor_at_one(eps_seed, err_seed), inv.alpha), branch


@dataclass(frozen=True)
class EntropicTerms:
    """The five entropy terms from which ``I``, ``C`` and ``D`` are assembled."""

    f_alpha: float
    f_beta: float
    f_nu_minus: float
    f_nu_plus: float
    f_epsilon: float
    branch: EpsilonBranch
    nu_bar_minus: float
    nu_bar_plus: float
    epsilon: float

    @property
    def mutual_information(self) -> float:
        return self.f_alpha + self.f_beta - self.f_nu_minus - self.f_nu_plus

    @property
    def classical(self) -> float:
        return self.f_alpha - self.f_epsilon

    @property
    def discord(self) -> float:
        return self.f_beta - self.f_nu_minus - self.f_nu_plus + self.f_epsilon


def _physical_spectrum(a: np.ndarray):
    # one Williamson pass serves both the state check and the entropies
    A, B = a[:2, :2], a[2:, 2:]
    if min(A[0, 0], B[0, 0], _det2(A), _det2(B)) <= 0:
        raise InvalidStateError("reduced covariance blocks must be positive definite")
    try:
        nu_minus, nu_plus = _spectrum(a)
    except NumericalDomainError as exc:
        raise InvalidStateError(f"not a physical covariance matrix: {exc}") from exc
    if nu_minus < 1.0 - STATE_TOL:
        raise InvalidStateError(
            f"not a physical covariance matrix: nu_bar_minus = {nu_minus!r} < 1")
    return nu_minus, nu_plus


def entropic_terms(sigma, base=EntropyLogBase.NATURAL) -> EntropicTerms:
    a = as_covariance(sigma)
    base = _base(base)
    nu_minus, nu_plus = _physical_spectrum(a)
    inv = _invariants(a)
    epsilon, branch = _epsilon(a, inv)
    return EntropicTerms(
        # accepted states are physical, so these arguments are >= 1 exactly and
        # anything below is round-off (~eps * cosh(2r)^2 at strong squeezing)
        f_alpha=entropy_f(max(math.sqrt(inv.alpha), 1.0), base),
        f_beta=entropy_f(max(math.sqrt(inv.beta), 1.0), base),
        f_nu_minus=entropy_f(max(nu_minus, 1.0), base),
        f_nu_plus=entropy_f(max(nu_plus, 1.0), base),
        f_epsilon=entropy_f(max(math.sqrt(epsilon), 1.0), base),
        branch=branch,
        nu_bar_minus=nu_minus,
        nu_bar_plus=nu_plus,
        epsilon=epsilon,
    )


def state_diagnostics(sigma):
    """``(nu_bar_minus, nu_tilde_minus, EpsilonBranch)`` without any entropy.

    Performs the same physicality check as :func:`entropic_terms`.
    """
    a = as_covariance(sigma)
    nu_minus, _ = _physical_spectrum(a)
    _, branch = gaussian_epsilon(_invariants(a))
    return nu_minus, _pt_spectrum(a)[0], branch


def discord(sigma, base=EntropyLogBase.NATURAL):
    """Gaussian quantum discord (measurement on mode 2) and the epsilon branch used.

    Returns the raw value; :func:`correlation_report` clamps round-off
    negatives to zero.
    """
    terms = entropic_terms(sigma, base)
    return terms.discord, terms.branch


def classical_correlations(sigma, base=EntropyLogBase.NATURAL) -> float:
    return entropic_terms(sigma, base).classical


def mutual_information(sigma, base=EntropyLogBase.NATURAL) -> float:
    return entropic_terms(sigma, base).mutual_information


@dataclass(frozen=True)
class CorrelationReport:
    simon_S: float
    log_negativity: float
    discord: float
    classical: float
    mutual_information: float
    epsilon_branch: EpsilonBranch
    base: EntropyLogBase
    discord_raw: float
    nu_bar_minus: float
    nu_tilde_minus: float


def correlation_report(sigma, base=EntropyLogBase.NATURAL) -> CorrelationReport:
    """Evaluate every measure on ``sigma`` in one pass."""
    base = _base(base)
    terms = entropic_terms(sigma, base)
    raw = terms.discord
    shown = 0.0 if -DISCORD_CLAMP <= raw < 0 else raw
    return CorrelationReport(
        simon_S=simon_S(sigma),
        log_negativity=log_negativity(sigma),
        discord=shown,
        classical=terms.classical,
        mutual_information=terms.mutual_information,
        epsilon_branch=terms.branch,
        base=base,
        discord_raw=raw,
        nu_bar_minus=terms.nu_bar_minus,
        nu_tilde_minus=pt_symplectic_eigenvalues(sigma)[0],
    )


def asymptotic_simon(params: SystemParams, T) -> float:
    """``S(inf) = (coth^2(w1/2T) - 1)(coth^2(w2/2T) - 1) / 16``; never negative."""
    T = check_temperature(T)
    c1, c2 = (coth_factor(w, T) for w in params.omegas)
    return (c1 * c1 - 1.0) * (c2 * c2 - 1.0) / 16.0


def asymptotic_log_negativity(params: SystemParams, T) -> float:
    """``E_N(inf) = -log2 coth(w_max / 2T)``; zero only at ``T = 0``."""
    T = check_temperature(T)
    return -math.log2(coth_factor(max(params.omegas), T))
