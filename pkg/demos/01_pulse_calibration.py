"""
Nyquist pulse and duty calibration
==================================

The control pulse of every element is a Nyquist pulse. Its tail has to die
out within half a modulation period so that neighbouring periods barely
overlap. That requirement fixes the pulse width (``xi = tau / T0``) once the
roll-off is chosen.
"""

import numpy as np

from ssbtma import PulseParams, eval_time, t_one_percent
from ssbtma.design import solve_rho_for_L, solve_xi, validate_placement
from ssbtma.efficiency import level_db
from ssbtma import make_design

p = PulseParams(amplitude=1.0, tau=1.0, rho=0.35)
t = np.linspace(0, 3, 13)
print("r(t) for rho=0.35:")
for ti, ri in zip(t, eval_time(p, t)):
    print(f"  t={ti:4.2f} tau  r={ri:+.5f}")

# the last 1% crossing sets the admissible pulse width
t1 = t_one_percent(p)
print(f"\nt_1% = {t1:.5f} tau  ->  xi = 1 / (2 t_1%) = {1 / (2 * t1):.5f}")

###############################################################################
# Harmonic placement for L beams
# ------------------------------
# Harmonics 1..L-1 must lie in the flat part of the spectrum, while L and L+1
# fall in the taper. Each row lists the feasible roll-off range and the
# levels of the two taper harmonics.

print("\n  L   rho   xi      w1      w2      L [dB]   L+1 [dB]  feasible rho")
for L, rho in [(3, 0.35), (5, 0.21), (9, 0.10), (15, 0.05)]:
    spec = make_design(L, rho)
    sol = solve_rho_for_L(L)
    print(f"{L:3d}  {rho:4.2f}  {spec.xi:.4f}  {spec.omega_bar_1:6.3f}  {spec.omega_bar_2:6.3f}"
          f"  {level_db(spec, L):7.3f}  {level_db(spec, L + 1):8.2f}"
          f"   [{sol.interval[0]:.4f}, {sol.interval[1]:.4f}]")

# a roll-off that is too large leaves no room for the flat-zone harmonics
print("\n", validate_placement(3, 0.9).violation)
print("xi grows with roll-off:", [round(solve_xi(r), 4) for r in (0.05, 0.10, 0.21, 0.35)])
