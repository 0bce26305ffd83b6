"""Parameter sweeps over (t, T) grids and entanglement sudden-death search."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    is_physical,
    make_separable_squeezed,
    make_two_mode_squeezed,
    pt_symplectic_eigenvalues,
)
from .dynamics import INITIAL_STATE_TOL, SystemParams, check_temperature, propagate
from .errors import InvalidParameterError, InvalidStateError, NumericalDomainError
from .measures import (
    DISCORD_CLAMP,
    EntropyLogBase,
    entropic_terms,
    log_negativity,
    simon_S,
    state_diagnostics,
)

MEASURES = ("S", "E_N", "D", "C", "I")
DIAGNOSTICS = ("nu_bar_minus", "nu_tilde_minus", "epsilon_branch")

STATES = {
    "sep": make_separable_squeezed,
    "tmss": make_two_mode_squeezed,
}
STATE_ALIASES = {
    "separable_squeezed": "sep",
    "two_mode_squeezed": "tmss",
}

# default figure grids: t in [0, 20], T in [0, 4]
FIGURE_T_GRID = tuple(np.linspace(0.0, 20.0, 81).tolist())
FIGURE_TEMP_GRID = tuple(np.linspace(0.0, 4.0, 41).tolist())
FIGURE_MEASURES = {1: "E_N", 2: "D", 3: "C", 4: "I"}

SCAN_POINTS = 1000
BISECTION_TOL = 1e-9
# bisection also continues until the bracket is this narrow (relative to t):
# near a shallow zero many times satisfy |E_N| <= BISECTION_TOL
BRACKET_REL = 1e-12
MAX_BISECTIONS = 200


def canonical_state(name: str) -> str:
    name = STATE_ALIASES.get(name, name)
    if name not in STATES:
        raise InvalidParameterError(f"unknown initial state {name!r}; use one of {sorted(STATES)}")
    return name


def initial_state(name: str, r: float) -> np.ndarray:
    return STATES[canonical_state(name)](r)


def _check_grid(name, grid):
    grid = tuple(float(v) for v in grid)
    if not grid:
        raise InvalidParameterError(f"{name} grid is empty")
    if any(not math.isfinite(v) or v < 0 for v in grid):
        raise InvalidParameterError(f"{name} grid values must be finite and >= 0")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise InvalidParameterError(f"{name} grid must be strictly increasing")
    return grid


@dataclass(frozen=True)
class SweepJob:
    state: str
    r: float
    params: SystemParams = field(default_factory=SystemParams)
    t_grid: tuple = FIGURE_T_GRID
    T_grid: tuple = FIGURE_TEMP_GRID
    measures: tuple = MEASURES
    base: EntropyLogBase = EntropyLogBase.NATURAL

    def __post_init__(self):
        object.__setattr__(self, "state", canonical_state(self.state))
        r = float(self.r)
        if not math.isfinite(r) or r < 0:
            raise InvalidParameterError(f"r must be finite and >= 0, got {self.r!r}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "t_grid", _check_grid("t", self.t_grid))
        object.__setattr__(self, "T_grid", _check_grid("T", self.T_grid))
        unknown = set(self.measures) - set(MEASURES)
        if unknown or not self.measures:
            raise InvalidParameterError(f"measures must be a non-empty subset of {MEASURES}")
        # column order is fixed regardless of how the subset was given
        object.__setattr__(self, "measures", tuple(m for m in MEASURES if m in self.measures))
        try:
            object.__setattr__(self, "base", EntropyLogBase(self.base))
        except ValueError:
            raise InvalidParameterError(f"unknown log base {self.base!r}") from None


@dataclass(frozen=True)
class SweepTable:
    """Rows ordered T-major then t-ascending; one tuple per (T, t) cell."""

    columns: tuple
    rows: tuple

    def column(self, name: str) -> np.ndarray:
        i = self.columns.index(name)
        values = [row[i] for row in self.rows]
        return np.array(values, dtype=object if name == "epsilon_branch" else float)

    def surface(self, name: str) -> np.ndarray:
        """Values of ``name`` reshaped to ``(len(T_grid), len(t_grid))``."""
        n_T = len(set(self.column("T").tolist()))
        return self.column(name).reshape(n_T, -1)

    def __len__(self):
        return len(self.rows)


ENTROPIC = ("D", "C", "I")


def _cell(sigma0, job: SweepJob, T: float, t: float):
    sigma = propagate(sigma0, job.params, T, t)
    values = {}
    if "S" in job.measures:
        values["S"] = simon_S(sigma)
    if any(m in job.measures for m in ENTROPIC):
        terms = entropic_terms(sigma, job.base)
        raw = terms.discord
        values["D"] = 0.0 if -DISCORD_CLAMP <= raw < 0 else raw
        values["C"] = terms.classical
        values["I"] = terms.mutual_information
        nu_bar_minus, branch = terms.nu_bar_minus, terms.branch
        nu_tilde_minus = pt_symplectic_eigenvalues(sigma)[0]
    else:
        # same state check, no entropies
        nu_bar_minus, nu_tilde_minus, branch = state_diagnostics(sigma)
    if "E_N" in job.measures:
        values["E_N"] = -math.log2(2.0 * nu_tilde_minus)
    return (t, T, *(values[m] for m in job.measures), nu_bar_minus, nu_tilde_minus, branch.value)


def run_sweep(job: SweepJob) -> SweepTable:
    """Evaluate the job on every (T, t) cell, T-major then t-ascending.

    Each cell is the evolved state from :func:`twomode.dynamics.evolve`
    (the initial state is validated once) fed to :mod:`twomode.measures`.
    """
    sigma0 = initial_state(job.state, job.r)
    if not is_physical(sigma0, INITIAL_STATE_TOL):
        raise InvalidStateError("initial covariance matrix is not a physical state")
    rows = []
    for T in job.T_grid:
        for t in job.t_grid:
            try:
                rows.append(_cell(sigma0, job, T, t))
            except (InvalidParameterError, InvalidStateError, NumericalDomainError) as exc:
                raise type(exc)(f"sweep cell t={t!r}, T={T!r}: {exc}") from exc
    columns = ("t", "T", *job.measures, *DIAGNOSTICS)
    return SweepTable(columns=columns, rows=tuple(rows))


def figure_job(fig: int) -> SweepJob:
    """Canned job behind figure ``fig`` (1: E_N, 2: D, 3: C, 4: I).

    Two-mode squeezed vacuum with r = 4, m = 1, lam = 0.1, w1 = w2 = 1.
    """
    if fig not in FIGURE_MEASURES:
        raise InvalidParameterError(f"unknown figure {fig!r}; valid ids are {sorted(FIGURE_MEASURES)}")
    return SweepJob(
        state="tmss",
        r=4.0,
        params=SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=0.1),
        measures=(FIGURE_MEASURES[fig],),
    )


class SuddenDeathStatus(str, enum.Enum):
    FOUND = "found"
    NONE = "none_within_horizon"


@dataclass(frozen=True)
class SuddenDeathResult:
    status: SuddenDeathStatus
    crossing_time: float | None
    bracket: tuple
    residual: float | None
    initially_separable: bool = False

    @property
    def found(self) -> bool:
        return self.status is SuddenDeathStatus.FOUND


def sudden_death_time(initial, params: SystemParams, T, horizon: float,
                      scan_points: int = SCAN_POINTS, tol: float = BISECTION_TOL) -> SuddenDeathResult:
    """First time at which the logarithmic negativity reaches zero.

    ``E_N`` is scanned on ``scan_points`` equal steps up to ``horizon``.  A
    crossing is registered at the first scan point with ``E_N < -tol``; the
    bracket from the last positive point is then bisected until
    ``|E_N| <= tol`` and the bracket is narrower than ``BRACKET_REL * t``.
    Values inside ``[-tol, tol]`` count as zero, so an
    ``E_N`` that only decays towards zero (zero temperature) is never
    reported as a crossing.  A state with ``E_N(0) <= tol`` is reported as
    found at 0 with ``initially_separable`` set.
    """
    T = check_temperature(T)
    horizon = float(horizon)
    if not math.isfinite(horizon) or horizon <= 0:
        raise InvalidParameterError(f"horizon must be finite and > 0, got {horizon!r}")
    if scan_points < 1:
        raise InvalidParameterError("scan_points must be >= 1")
    if not tol > 0:
        raise InvalidParameterError(f"tol must be > 0, got {tol!r}")
    initial = np.asarray(initial, dtype=float)
    if not is_physical(initial, INITIAL_STATE_TOL):
        raise InvalidStateError("initial covariance matrix is not a physical state")

    def e_n(t):
        return log_negativity(propagate(initial, params, T, t))

    e0 = e_n(0.0)
    if e0 <= tol:
        return SuddenDeathResult(SuddenDeathStatus.FOUND, 0.0, (0.0, 0.0), abs(e0),
                                 initially_separable=True)

    step = horizon / scan_points
    t_lo = 0.0
    for k in range(1, scan_points + 1):
        t_hi = horizon if k == scan_points else k * step
        e_hi = e_n(t_hi)
        if e_hi < -tol:
            break
        if e_hi > 0:
            t_lo = t_hi
    else:
        return SuddenDeathResult(SuddenDeathStatus.NONE, None, (0.0, horizon), None)

    mid, e_mid = t_hi, e_hi
    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (t_lo + t_hi)
        if mid in (t_lo, t_hi):
            break
        e_mid = e_n(mid)
        if e_mid > 0:
            t_lo = mid
        else:
            t_hi = mid
        if abs(e_mid) <= tol and t_hi - t_lo <= BRACKET_REL * t_hi:
            break
    if abs(e_mid) > tol:
        raise NumericalDomainError(
            f"bisection stalled at t={mid!r} with |E_N| = {abs(e_mid):.3e} > {tol!r}")
    return SuddenDeathResult(SuddenDeathStatus.FOUND, mid, (t_lo, t_hi), abs(e_mid))


def lambda_sensitivity(initial, params_list, T, horizon: float, **kwargs):
    """Sudden-death times for a list of parameter sets that differ only in ``lam``.

    ``params_list`` must be ordered by increasing ``lam``.  When every entry
    has a crossing, the crossing times are required to decrease strictly.
    """
    params_list = list(params_list)
    if params_list:
        ref = params_list[0]
        for p in params_list[1:]:
            if (p.m, p.omega1, p.omega2) != (ref.m, ref.omega1, ref.omega2):
                raise InvalidParameterError("parameter sets may differ only in lam")
        lams = [p.lam for p in params_list]
        if any(b <= a for a, b in zip(lams, lams[1:])):
            raise InvalidParameterError("lam values must be strictly increasing")
    results = [sudden_death_time(initial, p, T, horizon, **kwargs) for p in params_list]
    if results and all(r.found and not r.initially_separable for r in results):
        times = [r.crossing_time for r in results]
        if any(b >= a for a, b in zip(times, times[1:])):
            raise NumericalDomainError(f"crossing times do not decrease with lam: {times}")
    return results
