import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sqjc import analytic as an
from sqjc.fock import FockSpace
from sqjc.models import ModelParams, build_quadratic


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def test_abc_v_zero():
    c = an.abc_coefficients(ModelParams(1.3, 0.7, 2.0, 0.5), 0.0)
    assert (c.A, c.B, c.C) == (1.3, -0.35, 0.0)


def test_abc_frozen_values():
    # hand substitution: A = 1 + 1/16 + 0.25*1.25, B = -0.46875 + 0.15625 + 0.0625
    c = an.abc_coefficients(ModelParams(1.0, 1.0, 1.0, 0.0), 0.25)
    assert c.A == pytest.approx(1.375, abs=1e-15)
    assert c.B == pytest.approx(-0.25, abs=1e-15)
    assert c.C == pytest.approx(-0.125, abs=1e-15)


def test_v_standard():
    assert an.v_standard(ModelParams(1, 1, 1, 0)) == 0.25
    assert an.v_standard(ModelParams(1, 1, 0, 0.3)) == 0
    assert an.v_standard(ModelParams(1, 1, 0.8, 20.0)) == pytest.approx(0.4, rel=1e-15)


def test_v_roots_caseA():
    assert an.v_roots_caseA(ModelParams(1, 1, 1, 0)) == []
    for r in (0.0, 0.4):
        oc = an.critical_coupling("caseA", 1.0, 1.5, r).omega_crit
        roots = an.v_roots_caseA(ModelParams(1.0, 1.5, oc, r))
        assert roots == [pytest.approx(-oc / (2 * (1.5 + math.exp(2 * r))), abs=1e-15)]
    p = ModelParams(1.0, 1.5, 12.0, 0.4)
    roots = an.v_roots_caseA(p)
    assert len(roots) == 2 and roots[0] < roots[1]
    for v in roots:
        assert abs(an.abc_coefficients(p, v).A) <= 1e-9


def test_v_roots_caseB():
    assert an.v_roots_caseB(ModelParams(1, 1, 2, 0)) == []
    p = ModelParams(1, 1, 3, 0)
    roots = an.v_roots_caseB(p)
    assert len(roots) == 2
    for v in roots:
        c = an.abc_coefficients(p, v)
        assert abs(c.A + 4 * c.C) <= 1e-9
    # exactly degenerate discriminant: w_c = 1, w_a = 1, r = 0 -> Omega_c^2 = 8
    p = ModelParams(1.0, 1.0, math.sqrt(8.0), 0.0)
    assert an.v_roots_caseB(p) == [an.v_standard(p)]
    p = ModelParams(0.5, 2.0, 1.0, 0.0)  # disc = 1 - 4*0.5*2.5 < 0
    assert an.v_roots_caseB(p) == []
    p = ModelParams(0.5, 2.0, math.sqrt(5.0), 0.0)
    assert an.v_roots_caseB(p) == [an.v_standard(p)]


@settings(max_examples=100, deadline=None)
@given(
    st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0, 30), st.floats(0, 2), st.sampled_from(["caseA", "caseB"])
)
def test_v_root_residuals(wc, wa, om, r, branch):
    p = ModelParams(wc, wa, om, r)
    roots = an.v_roots_caseA(p) if branch == "caseA" else an.v_roots_caseB(p)
    for v in roots:
        c = an.abc_coefficients(p, v)
        val = c.A if branch == "caseA" else c.A + 4 * c.C
        scale = max(1.0, wc, wa * v * v * math.exp(2 * r), om * abs(v) * math.exp(2 * r))
        assert abs(val) <= 1e-9 * scale


def quadratic_discriminant(p, branch):
    """Discriminant of A(v) or A(v)+4C(v), reading the quadratic's coefficients off
    three evaluations of abc_coefficients (independent of the closed-form roots)."""

    def f(v):
        c = an.abc_coefficients(p, v)
        return c.A if branch == "caseA" else c.A + 4 * c.C

    f0, fp, fm = f(0.0), f(1.0), f(-1.0)
    a2 = 0.5 * (fp + fm) - f0
    a1 = 0.5 * (fp - fm)
    return a1 * a1 - 4 * a2 * f0


def bisect_critical(wc, wa, r, branch, lo=0.0, hi=None, tol=1e-13):
    hi = hi or 10 * math.sqrt(wc * (wa + wc)) * math.exp(2 * r) + 10
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if quadratic_discriminant(ModelParams(wc, wa, mid, r), branch) >= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_critical_coupling_values():
    cb = an.critical_coupling("caseB", 1.0, 1.0, 0.0)
    assert cb.omega_crit == 2 * math.sqrt(2.0)
    assert cb.omega_crit == pytest.approx(2.828427, abs=1e-6)
    assert an.critical_coupling("caseA", 1.0, 1.0, 0.0).omega_crit == cb.omega_crit
    c1 = an.critical_coupling("caseB", 1.0, 1.0, 1.0).omega_crit
    assert c1 == pytest.approx(0.78397, abs=1e-5)
    assert c1 == pytest.approx(bisect_critical(1.0, 1.0, 1.0, "caseB"), abs=1e-10)
    with pytest.raises(ValueError):
        an.critical_coupling("caseC", 1.0, 1.0, 0.0)


@pytest.mark.parametrize("branch", ["caseA", "caseB"])
@pytest.mark.parametrize("r", [0.0, 0.5, 1.0])
def test_critical_coupling_bisection(branch, r):
    c = an.critical_coupling(branch, 0.7, 1.9, r)
    assert c.omega_crit == pytest.approx(bisect_critical(0.7, 1.9, r, branch), rel=1e-10)
    if branch == "caseA":
        ref = 4 * 0.7 * (0.7 + 1.9 * math.exp(-2 * r)) * math.exp(4 * r)
    else:
        ref = 4 * 0.7 * (1.9 + 0.7 * math.exp(-2 * r)) * math.exp(-2 * r)
    assert abs(c.omega_crit**2 - ref) <= 1e-12 * ref


def test_bogoliubov_examples():
    b = an.bogoliubov(an.QuadraticCoeffs(1.7, 0.3, 0.0))
    assert (b.beta, b.gap) == (0.0, 1.7)
    assert b.ground_energy == pytest.approx(0.3, abs=1e-15)
    b = an.bogoliubov(an.QuadraticCoeffs(1.0, 0.0, 2.0))
    assert b.beta == pytest.approx(-math.log(9) / 4, abs=1e-15)
    assert b.beta == pytest.approx(-0.549306, abs=1e-6)
    assert b.gap == 3.0
    with pytest.raises(an.UnphysicalRegime):
        an.bogoliubov(an.QuadraticCoeffs(1.0, 0.0, -0.25))
    with pytest.raises(an.UnphysicalRegime):
        an.bogoliubov(an.QuadraticCoeffs(-1.0, 0.0, 0.0))


@settings(max_examples=50, deadline=None)
@given(st.floats(0.1, 5), st.floats(-0.2, 3))
def test_bogoliubov_self_consistent(a, c_frac):
    c = c_frac * a / 4 if c_frac > -0.2 else -0.04 * a
    b = an.bogoliubov(an.QuadraticCoeffs(a, 0.1, c))
    assert abs(a * math.exp(-2 * b.beta) - b.gap) <= 1e-12 * max(1, b.gap)
    assert b.ground_energy == pytest.approx(0.1 - a / 2 + b.gap / 2)


def test_bogoliubov_ladder_from_ed():
    space = FockSpace(200)
    vals = np.linalg.eigvalsh(build_quadratic(1.0, 0.0, 2.0, space))[:6]
    np.testing.assert_allclose(np.diff(vals), 3.0, atol=1e-6)
    assert vals[0] == pytest.approx(an.bogoliubov(an.QuadraticCoeffs(1.0, 0.0, 2.0)).ground_energy, abs=1e-6)


def test_normal_phase_coeffs():
    assert an.normal_phase_coeffs(ModelParams(1.3, 0.6, 0.0, 0.7)) == pytest.approx((-0.95, 1.3, 1.3))
    rng = np.random.default_rng(11)
    for _ in range(200):
        p = ModelParams(*rng.uniform(0.1, 10, 2), rng.uniform(0, 5), rng.uniform(0, 2))
        c = an.abc_coefficients(p, an.v_standard(p))
        got = an.normal_phase_coeffs(p)
        ref = ((2 * c.B - c.A) / 2, c.A, c.A + 4 * c.C)
        for g, r_ in zip(got, ref):
            assert rel(g, r_) <= 1e-11
    for r in (0.0, 0.6):
        oc = an.critical_coupling("caseB", 1.0, 2.0, r).omega_crit
        assert abs(an.normal_phase_coeffs(ModelParams(1.0, 2.0, oc, r))[2]) <= 1e-14


def test_jcm_gap():
    assert an.jcm_gap(1.0, 1.0, 0.0) == (1.0, -1.0)
    gap, const = an.jcm_gap(1.0, 1.0, 2.0)
    assert gap == pytest.approx(math.sqrt(1.25), abs=1e-15)
    assert gap == pytest.approx(1.118034, abs=1e-6)
    assert const == pytest.approx(-1 + 4 / 16)
    half, a, a4c = an.normal_phase_coeffs(ModelParams(1.0, 1.0, 2.0, 0.0))
    assert gap == pytest.approx(math.sqrt(a * a4c), abs=1e-12)
    assert const == pytest.approx(half, abs=1e-12)
    oc = 2 * math.sqrt(2.0)
    assert an.jcm_gap(1.0, 1.0, oc * (1 - 1e-9))[0] < 1e-3
    with pytest.raises(an.UnphysicalRegime):
        an.jcm_gap(1.0, 1.0, oc)


def test_rabi_gap():
    assert an.rabi_gap(1.0, 2.0, 0.0)[0] == 1.0
    gap, const = an.rabi_gap(1.0, 1.0, 0.25)
    assert gap == pytest.approx(math.sqrt(0.75), abs=1e-15)
    # large-squeeze limit of the normal-phase Bogoliubov result
    r = 8.0
    res = an.normal_phase_gap(ModelParams(1.0, 1.0, 4 * 0.25 * math.exp(-r), r))
    assert res.gap == pytest.approx(gap, abs=1e-5)
    assert res.ground_energy - res.gap / 2 == pytest.approx(const, abs=1e-5)
    assert an.rabi_gap(1.0, 1.0, 0.5 * (1 - 1e-10))[0] < 1e-4
    with pytest.raises(an.UnphysicalRegime):
        an.rabi_gap(1.0, 1.0, 0.5)


def test_superradiant_setup():
    p = ModelParams(1.0, 1.0, 0.8, 0.4)
    sp = an.superradiant_setup(p, 0.0)
    assert (sp.theta, sp.omega_tilde) == (0.0, 1.0)
    assert sp.mu == pytest.approx(-1.0 / (0.8 * math.exp(0.4)))
    alpha = 1 / (0.8 * math.exp(0.4))
    sp = an.superradiant_setup(p, alpha)
    assert math.cos(2 * sp.theta) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert math.tan(2 * sp.theta) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(an.DegenerateInput):
        an.superradiant_setup(p.with_(coupling=0.0), 1.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.1, 10), st.floats(0.1, 10), st.floats(0.01, 5), st.floats(0, 2), st.floats(-3, 3))
def test_superradiant_setup_identities(wc, wa, om, r, alpha):
    sp = an.superradiant_setup(ModelParams(wc, wa, om, r), alpha)
    assert abs(math.tan(2 * sp.theta) - alpha * om * math.exp(r) / wa) <= 1e-12 * max(1, abs(math.tan(2 * sp.theta)))
    assert sp.omega_tilde == pytest.approx(math.sqrt(wa**2 + alpha**2 * om**2 * math.exp(2 * r)), rel=1e-14)
    ref = -wc * math.cos(2 * sp.theta) / (om * math.exp(r))
    assert abs(sp.mu - ref) <= 1e-12 * max(1, abs(ref))


def test_superradiant_gap_generic():
    assert an.superradiant_gap_generic(1.3, 0.4, 0.0, 0.0) == 1.3
    assert an.superradiant_gap_generic(1.0, 1.0, 0.5, -0.25) == pytest.approx(math.sqrt(0.5), abs=1e-15)
    j, l, m = 1.5, 0.7, 0.4
    assert an.superradiant_gap_generic(j, l, m, -m / (2 * l)) == pytest.approx(j * math.sqrt(1 - 2 * m * m / (j * l)))
    with pytest.raises(an.UnphysicalRegime):
        an.superradiant_gap_generic(1.0, 0.0, -1.0, 1.0)


def test_superradiant_gap_jcm():
    wc, wa = 1.0, 1.0
    oc = 2 * math.sqrt(2.0)
    gap, alpha = an.superradiant_gap_jcm(wc, wa, oc)
    assert gap == 0 and alpha == 0
    gap, alpha = an.superradiant_gap_jcm(wc, wa, math.sqrt(2) * oc)
    assert gap == pytest.approx(math.sqrt(3) / 2, abs=1e-12)
    sp = an.superradiant_setup(ModelParams(wc, wa, math.sqrt(2) * oc, 0.0), alpha)
    assert an.superradiant_gap_generic(sp.J, sp.L, sp.M, sp.mu) == pytest.approx(gap, abs=1e-12)
    assert an.superradiant_gap_jcm(wc, wa, 1e4)[0] == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(an.UnphysicalRegime):
        an.superradiant_gap_jcm(wc, wa, 2.0)


def test_superradiant_gap_rabi():
    assert an.superradiant_gap_rabi(1.0, 1.0, 1.0)[0] == 0
    gap, lam, alpha = an.superradiant_gap_rabi(2.0, 1.0, math.sqrt(2))
    assert gap == pytest.approx(2.0 * math.sqrt(0.75), abs=1e-12)
    assert lam == pytest.approx(math.sqrt(2) * 0.5 * math.sqrt(2.0))
    assert an.g_from_rabi_coupling(2.0, 1.0, lam) == pytest.approx(math.sqrt(2))
    # cos^2(2 theta) = 1/g^4 via the Rabi-limit tilt 16 lam^2 alpha^2
    cos2 = 1.0 / math.sqrt(1 + 16 * lam**2 * alpha**2)
    assert cos2**2 == pytest.approx(0.25, abs=1e-12)
    assert an.superradiant_gap_rabi(1.0, 1.0, 1e3)[0] == pytest.approx(1.0, abs=1e-6)
    with pytest.raises(an.UnphysicalRegime):
        an.superradiant_gap_rabi(1.0, 1.0, 0.9)


def test_superradiant_gap_mjc_matches_jcm_at_r0():
    for ratio in (1.1, 2.0, 3.0):
        om = ratio * 2 * math.sqrt(2.0)
        gap, _ = an.superradiant_gap_mjc(ModelParams(1.0, 1.0, om, 0.0))
        assert gap == pytest.approx(an.superradiant_gap_jcm(1.0, 1.0, om)[0], abs=1e-12)
    with pytest.raises(an.UnphysicalRegime):
        an.superradiant_gap_mjc(ModelParams(1.0, 1.0, 0.5, 1.0))


@pytest.mark.parametrize("delta", [1e-3, 1e-5, 1e-7])
def test_gap_continuity_sqrt_law(delta):
    wc, wa = 1.3, 0.8
    oc = 2 * math.sqrt(wc * (wa + wc))
    below = an.jcm_gap(wc, wa, oc * math.sqrt(1 - delta))[0]
    above = an.superradiant_gap_jcm(wc, wa, oc * math.sqrt(1 + delta))[0]
    bound = 2 * math.sqrt(2 * delta) * wc * 1.1
    assert 0 < below <= bound and 0 < above <= bound
