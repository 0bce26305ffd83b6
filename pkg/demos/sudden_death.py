"""Entanglement sudden death of a two-mode squeezed state.

A strongly squeezed (r = 4) two-mode state is put in contact with a common
thermal bath.  At zero temperature the log-negativity only decays towards
zero; at any T > 0 it crosses zero at a finite time t*, and hotter baths
kill the entanglement sooner.  Stronger dissipation does the same.

Run:  python demos/sudden_death.py
"""

import numpy as np

from twomode import SystemParams, evolve, log_negativity, make_two_mode_squeezed, sudden_death_time
from twomode.experiments import lambda_sensitivity

s0 = make_two_mode_squeezed(4.0)
params = SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=0.1)

# E_N(t) for a few temperatures
times = np.array([0.0, 2.0, 5.0, 10.0, 20.0, 40.0])
print("E_N(t) for r = 4, lambda = 0.1")
print("   T  " + "".join(f"{t:>9.1f}" for t in times))
for T in (0.0, 0.5, 1.0, 2.0, 4.0):
    row = [log_negativity(evolve(s0, params, T, t)) for t in times]
    print(f"{T:4.1f}  " + "".join(f"{v:9.4f}" for v in row))

# the crossing times themselves
print("\nsudden-death time t* (horizon 200)")
for T in (0.0, 0.1, 0.5, 1.0, 2.0, 4.0):
    res = sudden_death_time(s0, params, T, 200.0)
    if res.found:
        print(f"  T = {T:3.1f}:  t* = {res.crossing_time:.6f}   |E_N(t*)| = {res.residual:.1e}")
    else:
        print(f"  T = {T:3.1f}:  no crossing before t = 200")

# dependence on the dissipation constant at fixed temperature
lams = (0.05, 0.1, 0.2)
results = lambda_sensitivity(s0, [SystemParams(lam=lam) for lam in lams], 2.0, 200.0)
print("\nt* at T = 2 versus lambda")
for lam, res in zip(lams, results):
    print(f"  lambda = {lam:4.2f}:  t* = {res.crossing_time:.6f}")
