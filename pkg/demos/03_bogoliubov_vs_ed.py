"""
Bogoliubov rotation against exact diagonalization
=================================================

A quadratic oscillator A n + C (a + a^dag)^2 has ladder spacing
sqrt(A (A + 4C)) and ground energy -A/2 + sqrt(A (A + 4C))/2.  Check both
on a 200-photon space, then compare the normal-phase gap of the full model
with a far-detuned atom.
"""

import numpy as np

from sqjc import FockSpace, ModelParams, QuadraticCoeffs, bogoliubov, build_quadratic, converged_spectrum, critical_coupling, normal_phase_gap

space = FockSpace(200)
for a, c in [(1.0, 0.0), (1.0, 0.5), (1.0, 2.0), (2.0, -0.25)]:
    levels = np.linalg.eigvalsh(build_quadratic(a, 0.0, c, space))[:4]
    bog = bogoliubov(QuadraticCoeffs(a, 0.0, c))
    print(f"A={a} C={c:5.2f}  ED spacing {np.diff(levels)[0]:.9f}  analytic {bog.gap:.9f}"
          f"  ED ground {levels[0]:+.9f}  analytic {bog.ground_energy:+.9f}")

# one generator cannot remove both the rotating and counter-rotating couplings,
# so the effective-oscillator gap is approximate: it tracks ED qualitatively and
# sits above it, increasingly so toward the threshold
oc = critical_coupling("caseB", 1.0, 20.0, 0.5).omega_crit
for frac in (0.1, 0.3, 0.5, 0.8):
    om = frac * oc
    p = ModelParams(1.0, 20.0, om, 0.5)
    print(f"Omega/Omega_c={frac:3.1f}  ED gap {converged_spectrum('mjc', p, 2).gap:.8f}  Bogoliubov {normal_phase_gap(p).gap:.8f}")
