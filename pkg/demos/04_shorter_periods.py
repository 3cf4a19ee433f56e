"""
Shorter kick periods preserve more entanglement
===============================================

Sweeps the half period T and compares the smallest CV reached under kicking
with the closed-form first-kick value.
"""

import numpy as np

from paritykick.experiments import get_preset, sweep_min_cv

Ts = np.geomspace(0.15, 1e-3, 12)
print(f"{'T':>10s} {'achieved':>14s} {'predicted':>14s}")
for row in sweep_min_cv(get_preset("fig1"), Ts):
    print(f"{row.T:10.5f} {row.achieved_min:14.10f} {row.predicted_min:14.10f}")
