"""Self-checks run by ``sqjc validate``.

Each suite returns a :class:`SuiteResult`; a suite passes only if every
check inside it holds at its tolerance.  Suites call into the library through
module attributes so a patched function is seen by the checks.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import analytic, ed, fock, models
from .fock import FockSpace
from .models import ModelParams, RabiParams

__all__ = ["SuiteResult", "run_suites", "SUITES"]


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    details: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: str) -> None:
        self.details.append(("ok   " if ok else "FAIL ") + what)
        self.passed = self.passed and bool(ok)


def operator_identities(full: bool) -> SuiteResult:
    res = SuiteResult("operator identities")
    for n in ((1, 40, 200) if full else (1, 40)):
        space = FockSpace(n)
        a = fock.annihilation(space)
        comm = fock.commutator(a, a.conj().T)
        expected = np.eye(n + 1)
        expected[-1, -1] = -n
        # stored sqrt(n) squares back to n only within ~n ulp
        err = np.max(np.abs(comm - expected))
        res.check(err <= max(1e-14, 2 * n * np.finfo(float).eps), f"[a, a^dag] truncation identity, N={n}: {err:.1e}")
    space = FockSpace(120)
    a = fock.annihilation(space)
    s = models.squeeze_operator(space, 0.5)
    err = fock.interior_block_distance(s @ a @ s.conj().T, models.squeezed_annihilation(space, 0.5), 20)
    res.check(err <= 1e-8, f"squeeze conjugation, r=0.5 N=120 k=20: {err:.2e}")
    b = models.squeezed_annihilation(FockSpace(40), 0.7)
    err = fock.interior_block_distance(fock.commutator(b, b.conj().T), np.eye(41), 20)
    res.check(err <= 1e-12, f"[B, B^dag] = 1 on interior: {err:.2e}")
    rng = np.random.default_rng(7)
    x = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
    k = x - x.conj().T
    k *= 5 / np.linalg.norm(k, 2)
    u = fock.unitary_exp(k)
    res.check(np.max(np.abs(u.conj().T @ u - np.eye(12))) <= 1e-9, "unitary_exp unitarity")
    return res


def limit_reductions(full: bool) -> SuiteResult:
    res = SuiteResult("limit reductions")
    space = FockSpace(30)
    p = ModelParams(1.0, 1.3, 0.7, 0.0)
    res.check(np.array_equal(models.build_mjc(p, space), models.build_jcm(p, space)), "MJC(r=0) == JCM")
    p = ModelParams(1.0, 1.3, 0.7, 0.8)
    diff = np.max(np.abs(models.build_mjc(p, space) - models.build_mjc_squeezed_form(p, space)))
    res.check(diff <= 1e-13, f"squeezed-operator form == photon form: {diff:.1e}")
    lam = -0.4
    devs = []
    for r in (2.0, 3.0, 4.0):
        mp = ModelParams(1.0, 1.0, 4 * abs(lam) * math.exp(-r), r)
        h_rm = models.build_rabi(RabiParams(1.0, 1.0, lam), space)
        dev = np.max(np.abs(models.build_mjc(mp, space) - h_rm))
        devs.append(dev)
        res.check(dev <= 2 * math.exp(-2 * r) * np.max(np.abs(h_rm)), f"Rabi-limit bound at r={r}: {dev:.2e}")
    res.check(devs[0] > devs[1] > devs[2], "Rabi-limit deviation decreasing in r")
    ca = analytic.critical_coupling("caseA", 1.0, 1.0, 0.0).omega_crit
    cb = analytic.critical_coupling("caseB", 1.0, 1.0, 0.0).omega_crit
    res.check(ca == cb == 2 * math.sqrt(2.0), "caseA == caseB == 2 sqrt(w_c (w_a + w_c)) at r=0")
    r = 12.0
    lam_c = analytic.critical_coupling("caseB", 1.0, 2.0, r).omega_crit * math.exp(r) / 4
    res.check(abs(lam_c - analytic.rabi_critical_lambda(1.0, 2.0)) <= 1e-6, "Rabi lambda_c from large-r mapping")
    return res


def identity_chain_1(full: bool) -> SuiteResult:
    res = SuiteResult("identity chain I")
    rng = np.random.default_rng(2024)
    worst = 0.0
    for _ in range(200 if full else 50):
        wc, wa = rng.uniform(0.1, 10, size=2)
        p = ModelParams(wc, wa, rng.uniform(0, 5), rng.uniform(0, 2))
        c = analytic.abc_coefficients(p, analytic.v_standard(p))
        ref = np.array([(2 * c.B - c.A) / 2, c.A, c.A + 4 * c.C])
        got = np.array(analytic.normal_phase_coeffs(p))
        scale = max(1.0, float(np.max(np.abs(ref))))
        worst = max(worst, float(np.max(np.abs(got - ref))) / scale)
    res.check(worst <= 1e-11, f"closed-form normal-phase coefficients vs A, B, C at v_standard: {worst:.1e}")
    return res


def identity_chain_2(full: bool) -> SuiteResult:
    res = SuiteResult("identity chain II")
    n = 200 if full else 120
    pairs = [(1.0, 0.0), (1.0, 0.5), (1.0, 2.0), (2.0, -0.25)] if full else [(1.0, 0.5), (2.0, -0.25)]
    space = FockSpace(n)
    for a_coef, c_coef in pairs:
        bog = analytic.bogoliubov(analytic.QuadraticCoeffs(a_coef, 0.0, c_coef))
        levels = np.linalg.eigvalsh(models.build_quadratic(a_coef, 0.0, c_coef, space))[:6]
        spacing = np.max(np.abs(np.diff(levels) - bog.gap))
        ground = abs(levels[0] - bog.ground_energy)
        res.check(spacing <= 1e-6 and ground <= 1e-6, f"A={a_coef} C={c_coef}: spacing err {spacing:.1e}, ground err {ground:.1e}")
    if full:
        res.details.append("note ground constant = B - A/2 + eps/2 (erratum: zero-point term is eps/2, not eps)")
    return res


def identity_chain_3(full: bool) -> SuiteResult:
    res = SuiteResult("identity chain III")
    wc, wa = 1.0, 1.7
    oc = analytic.critical_coupling("caseB", wc, wa, 0.0).omega_crit
    worst = 0.0
    for ratio in np.linspace(1.0, 3.0, 41 if full else 11)[1:]:
        om = ratio * oc
        gap, alpha = analytic.superradiant_gap_jcm(wc, wa, om)
        sp = analytic.superradiant_setup(ModelParams(wc, wa, om, 0.0), alpha)
        worst = max(worst, abs(gap - analytic.superradiant_gap_generic(sp.J, sp.L, sp.M, sp.mu)))
    res.check(worst <= 1e-12, f"JC superradiant gap vs generic pipeline: {worst:.1e}")
    worst = 0.0
    for g in np.linspace(1.0, 3.0, 41 if full else 11)[1:]:
        gap, lam, alpha = analytic.superradiant_gap_rabi(wc, wa, g)
        r = 3.0
        sp = analytic.superradiant_setup(ModelParams(wc, wa, 4 * lam * math.exp(-r), r), alpha)
        worst = max(worst, abs(gap - analytic.superradiant_gap_generic(sp.J, sp.L, sp.M, sp.mu)))
    res.check(worst <= 1e-12, f"Rabi superradiant gap vs generic pipeline: {worst:.1e}")
    return res


def finite_size_transition(full: bool) -> SuiteResult:
    res = SuiteResult("finite-size transition")
    t = ModelParams(1.0, 20.0, 0.0, 0.0)
    grid = np.linspace(6, 12, 61 if full else 31)
    x, gap = ed.locate_gap_minimum(t, grid, cutoff=64, first=True)
    oc = analytic.critical_coupling("caseB", 1.0, 20.0, 0.0).omega_crit
    res.check(gap < 1e-6 and abs(x / oc - 1) <= 0.03, f"JC crossing at {x:.6f} vs {oc:.6f} (gap {gap:.1e})")
    if full:
        p = ModelParams(1.0, 1.0, 0.5, 0.0)
        e1 = ed.bch_truncation_error(p, 0.05, FockSpace(60))
        e2 = ed.bch_truncation_error(p, 0.025, FockSpace(60))
        res.check(e1 / e2 >= 3, f"BCH truncation error ratio for v -> v/2: {e1 / e2:.2f}")
    return res


SUITES = {
    "operator identities": operator_identities,
    "limit reductions": limit_reductions,
    "identity chain I": identity_chain_1,
    "identity chain II": identity_chain_2,
    "identity chain III": identity_chain_3,
    "finite-size transition": finite_size_transition,
}


def run_suites(full: bool = False) -> list[SuiteResult]:
    out = []
    for name, suite in SUITES.items():
        try:
            out.append(suite(full))
        except Exception as exc:  # a crashing suite is a failing suite
            out.append(SuiteResult(name, False, [f"FAIL raised {exc!r}"]))
    return out
