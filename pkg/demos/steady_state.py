"""The thermal steady state reached at long times.

Every initial state relaxes to the same asymptotic covariance matrix, the
solution of a Lyapunov equation.  It is separable for every T > 0 (the
asymptotic log-negativity -log2 coth(omega/2T) is negative) and reduces to
the vacuum at T = 0.

Run:  python demos/steady_state.py
"""

import numpy as np

from twomode import SystemParams, evolve, make_separable_squeezed, make_two_mode_squeezed, steady_state
from twomode.measures import asymptotic_log_negativity, asymptotic_simon

params = SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=0.1)
np.set_printoptions(precision=6, suppress=True)

print("sigma(infinity) at T = 1:")
print(steady_state(params, 1.0))

print("\n   T    S(inf)        E_N(inf)")
for T in (0.0, 0.5, 1.0, 2.0, 4.0):
    print(f"{T:5.1f}  {asymptotic_simon(params, T):12.6f}  {asymptotic_log_negativity(params, T) + 0.0:12.6f}")

# memory of the initial state is lost: both starting points end up in the same place
T, t = 1.0, 300.0
for name, s0 in (("two-mode squeezed", make_two_mode_squeezed(2.0)), ("separable squeezed", make_separable_squeezed(2.0))):
    gap = np.max(np.abs(evolve(s0, params, T, t) - steady_state(params, T)))
    print(f"\n{name}: max |sigma(t={t:g}) - sigma(inf)| = {gap:.2e}")
