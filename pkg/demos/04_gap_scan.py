"""
Finite-size gap scan
====================

Far from resonance (w_a = 20 w_c) the JC ground state leaves the vacuum at a
level crossing close to the mean-field threshold.  With squeezing the crossing
becomes an avoided one; the gap inside the ground-state parity sector then has
a minimum that approaches the threshold as w_a / w_c grows.
"""

import numpy as np

from sqjc import ModelParams, critical_coupling, gap_scan, locate_gap_minimum

t = ModelParams(1.0, 20.0, 0.0, 0.0)
oc = critical_coupling("caseB", 1.0, 20.0, 0.0).omega_crit
grid = np.linspace(0.7 * oc, 1.3 * oc, 31)
scan = gap_scan(t, grid, cutoff=64)
for p in scan[::3]:
    print(f"Omega {p.coupling:8.4f}  gap {p.gap:.3e}  <n> {p.mean_photons:.4f}")
x, gap = locate_gap_minimum(t, grid, cutoff=64, scan=scan, first=True)
print(f"JC crossing {x:.6f}  threshold {oc:.6f}  ratio {x / oc:.4f}")

for wa, n in ((20.0, 96), (50.0, 128)):
    oc = critical_coupling("caseB", 1.0, wa, 1.0).omega_crit
    x, gap = locate_gap_minimum(ModelParams(1.0, wa, 0.0, 1.0), np.linspace(0.7 * oc, 1.3 * oc, 61), cutoff=n, parity=True)
    print(f"r=1 w_a={wa:4.0f}: parity gap minimum at {x / oc:.4f} Omega_c")
