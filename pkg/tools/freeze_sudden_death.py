"""Establish sudden-death regression constants with the RK4 oracle.

Integrates the covariance ODE with fixed-step RK4 (step 1e-4), evaluates the
logarithmic negativity through the determinant (g) expression, and bisects
the first sign change.  Nothing here touches the closed-form propagator or
the Williamson-based negativity used in production.

Run:  python tools/freeze_sudden_death.py
The printed dictionary is pasted into tests/regression_constants.py.
"""

import numpy as np

from twomode.core import make_two_mode_squeezed
from twomode.dynamics import SystemParams, drift_matrix, thermal_diffusion
from twomode.measures import log_negativity_g
from twomode.oracle import IntegratorConfig, rk4_evolve

STEP = 1e-4
SCAN = 0.01
CASES = [
    # (lam, T)
    (0.1, 0.5),
    (0.1, 1.0),
    (0.1, 2.0),
    (0.1, 4.0),
    (0.05, 2.0),
    (0.2, 2.0),
]


def crossing(lam, T, r=4.0):
    params = SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=lam)
    Y, D = drift_matrix(params), thermal_diffusion(params, T)
    cfg = IntegratorConfig(step=STEP)
    sigma, t = np.array(make_two_mode_squeezed(r)), 0.0
    while True:
        nxt = rk4_evolve(sigma, Y, D, SCAN, cfg)
        if log_negativity_g(nxt) < 0:
            break
        sigma, t = nxt, t + SCAN
    lo, hi = 0.0, SCAN
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        e = log_negativity_g(rk4_evolve(sigma, Y, D, mid, cfg)) if mid >= STEP else log_negativity_g(sigma)
        if e > 0:
            lo = mid
        else:
            hi = mid
    return t + 0.5 * (lo + hi)


if __name__ == "__main__":
    out = {case: crossing(*case) for case in CASES}
    print("SUDDEN_DEATH_RK4 = {")
    for (lam, T), value in out.items():
        print(f"    ({lam!r}, {T!r}): {value!r},")
    print("}")
