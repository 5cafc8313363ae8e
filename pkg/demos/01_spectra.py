"""
Spectra of the three cavity models
==================================

Build the Jaynes-Cummings, Rabi and squeezed-exchange Hamiltonians on the
same truncated space and compare their lowest levels.
"""

import numpy as np

from sqjc import FockSpace, ModelParams, RabiParams, build_jcm, build_mjc, build_rabi, converged_spectrum

space = FockSpace(40)

# Jaynes-Cummings at resonance: the dressed ladder is -w/2, then n w +- sqrt(n) Omega/2
p = ModelParams(omega_c=1.0, omega_a=1.0, coupling=0.2)
print("JC levels       ", np.round(np.linalg.eigvalsh(build_jcm(p, space))[:5], 6))

# with zero squeezing the exchange model is the JC model
print("r = 0 identical ", np.array_equal(build_mjc(p, space), build_jcm(p, space)))

# squeezing switches on the counter-rotating channel with weight sinh r
for r in (0.0, 0.5, 1.0):
    res = converged_spectrum("mjc", p.with_(squeeze=r), n_levels=3)
    print(f"r = {r:3.1f}  levels {np.round(res.energies, 6)}  cutoff {res.cutoff_used}")

# the Rabi model for comparison
rabi = RabiParams(1.0, 1.0, lam=0.25)
print("Rabi levels     ", np.round(np.linalg.eigvalsh(build_rabi(rabi, space))[:3], 6))
