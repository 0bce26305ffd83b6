"""Quantum discord, classical correlations and mutual information.

For a pure two-mode squeezed state the discord, the classical correlations
and half the mutual information all equal the entanglement entropy
f(cosh r).  Under the bath all three decay, faster at higher temperature,
and discord survives long after the state has become separable.

Run:  python demos/discord_and_correlations.py
"""

import math

import numpy as np

from twomode import SystemParams, correlation_report, evolve, make_two_mode_squeezed
from twomode.measures import entropy_f

params = SystemParams(m=1.0, omega1=1.0, omega2=1.0, lam=0.1)

print("pure state check:  D = C = f(cosh r),  I = 2 f(cosh r)")
for r in (0.5, 1.0, 2.0, 4.0):
    rep = correlation_report(make_two_mode_squeezed(r))
    print(f"  r = {r}:  f(cosh r) = {entropy_f(math.cosh(r)):.10f}   D = {rep.discord:.10f}"
          f"   C = {rep.classical:.10f}   I = {rep.mutual_information:.10f}")

s0 = make_two_mode_squeezed(4.0)
times = np.linspace(0.0, 40.0, 9)
for T in (0.0, 1.0, 4.0):
    print(f"\nT = {T}:   t        S          E_N        D          C          I     branch")
    for t in times:
        rep = correlation_report(evolve(s0, params, T, t))
        print(f"        {t:5.1f} {rep.simon_S:10.3g} {rep.log_negativity:10.4f} {rep.discord:10.5f}"
              f" {rep.classical:10.5f} {rep.mutual_information:10.5f}   {rep.epsilon_branch.value}")
