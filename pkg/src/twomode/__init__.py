"""Correlations of two-mode Gaussian states in a thermal bath.

Modules:

* :mod:`twomode.core` -- covariance matrices, invariants, symplectic spectra
* :mod:`twomode.dynamics` -- open-system evolution and the thermal steady state
* :mod:`twomode.measures` -- Simon's criterion, log-negativity, discord
* :mod:`twomode.experiments` -- (t, T) sweeps and sudden-death search
* :mod:`twomode.oracle` -- independent numerical routes used for checking
* :mod:`twomode.cli` -- command-line front end
"""

from .core import (
    is_physical,
    make_separable_squeezed,
    make_two_mode_squeezed,
    pt_symplectic_eigenvalues,
    symplectic_eigenvalues,
    symplectic_invariants,
)
from .dynamics import SystemParams, evolve, steady_state
from .errors import InvalidParameterError, InvalidStateError, NumericalDomainError
from .experiments import SweepJob, run_sweep, sudden_death_time
from .measures import (
    EntropyLogBase,
    correlation_report,
    discord,
    log_negativity,
    simon_S,
)

__version__ = "0.1.0"

__all__ = [
    "EntropyLogBase",
    "InvalidParameterError",
    "InvalidStateError",
    "NumericalDomainError",
    "SweepJob",
    "SystemParams",
    "correlation_report",
    "discord",
    "evolve",
    "is_physical",
    "log_negativity",
    "make_separable_squeezed",
    "make_two_mode_squeezed",
    "pt_symplectic_eigenvalues",
    "run_sweep",
    "simon_S",
    "steady_state",
    "sudden_death_time",
    "symplectic_eigenvalues",
    "symplectic_invariants",
]
