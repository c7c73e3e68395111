"""
Steered harmonic beams
======================

Each harmonic ``q`` of the modulation radiates its own pattern. Delaying the
steering signal of element ``n`` by ``z_n T0 cos(theta_q) / q`` (``z_n`` in
wavelengths) points harmonic ``q`` at ``theta_q``. Harmonic ``L+1`` is an
unwanted leftover and is parked at broadside.
"""

import numpy as np

from ssbtma import ArrayGeometry, build_excitations, make_design, make_plan
from ssbtma.array import directivity, pattern_db

spec = make_design(3, 0.35, amplitude="auto")
geo = ArrayGeometry.uniform(20)
plan = make_plan(spec, geo, {1: 120.0, 2: 60.0, 3: 75.0})
ex = build_excitations(spec, plan)

theta = np.linspace(0, 180, 721)
db = pattern_db(ex, geo, [1, 2, 3, 4], theta)

for q in range(1, 5):
    i = np.argmax(db[q - 1])
    print(f"q={q}: peak {db[q - 1, i]:7.2f} dB at {theta[i]:6.2f} deg, "
          f"directivity {directivity(ex, geo, q, plan.targets[q]):5.2f} dBi")

###############################################################################
# Plot, if matplotlib is around.

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots(figsize=(7, 3.5))
    for q in range(1, 5):
        ax.plot(theta, db[q - 1], label=f"q={q}")
    ax.set_ylim(-40, 2)
    ax.set_xlabel("theta [deg]")
    ax.set_ylabel("normalized power [dB]")
    ax.legend()
    fig.tight_layout()
    fig.savefig("harmonic_beams.png", dpi=120)
    print("wrote harmonic_beams.png")
