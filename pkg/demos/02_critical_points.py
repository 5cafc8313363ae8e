"""
Critical couplings
==================

The normal phase ends where the excitation frequency of the effective
oscillator vanishes.  Compare the closed forms with a bisection on the sign of
the quadratic's discriminant.
"""

import math

from sqjc import ModelParams, abc_coefficients, critical_coupling, rabi_critical_lambda


def discriminant(p):
    f = lambda v: (lambda c: c.A + 4 * c.C)(abc_coefficients(p, v))
    f0, fp, fm = f(0.0), f(1.0), f(-1.0)
    a2, a1 = 0.5 * (fp + fm) - f0, 0.5 * (fp - fm)
    return a1 * a1 - 4 * a2 * f0


def bisect(wc, wa, r):
    lo, hi = 0.0, 10 * math.sqrt(wc * (wa + wc)) * math.exp(2 * r) + 10
    while hi - lo > 1e-14 * hi:
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if discriminant(ModelParams(wc, wa, mid, r)) >= 0 else (mid, hi)
    return 0.5 * (lo + hi)


for r in (0.0, 0.5, 1.0, 2.0):
    a = critical_coupling("caseA", 1.0, 1.0, r).omega_crit
    b = critical_coupling("caseB", 1.0, 1.0, r).omega_crit
    print(f"r = {r:3.1f}  caseA {a:12.6f}  caseB {b:10.6f}  bisection {bisect(1.0, 1.0, r):10.6f}")

# large squeezing: Omega e^r / 4 tends to the Rabi threshold
r = 12.0
print("lambda from mapping", critical_coupling("caseB", 1.0, 1.0, r).omega_crit * math.exp(r) / 4)
print("Rabi lambda_c      ", rabi_critical_lambda(1.0, 1.0))
