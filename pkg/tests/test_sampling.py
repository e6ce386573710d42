import math

import numpy as np
import pytest

from spiralinv import build_family
from spiralinv.conic import ConicArc, curvature as conic_curvature, endpoint_data
from spiralinv.errors import CuspDetected
from spiralinv.sampling import (RationalCurve, curvature_values,
                                monotonicity_audit, sample)


def semicircle_curve():
    # lower unit semicircle as an extended rational quadratic:
    # {w=0, j=+1, p_w=0, q_w=-1}, curvature +1 along the whole arc
    arc = ConicArc(w=0.0, j=1, pw=0.0, qw=-1.0)
    X, Y, W = arc.basis_coeffs()
    return RationalCurve.from_coeffs(X, Y, W)


def test_semicircle_curvature_and_length():
    curve = semicircle_curve()
    smp = sample(curve, 201)
    ks = [cs.k for cs in smp]
    assert max(abs(k - 1.0) for k in ks) <= 1e-10
    assert smp[-1].s == pytest.approx(math.pi, abs=1e-10)
    assert smp[0].x == pytest.approx(-1.0)
    assert smp[100].y == pytest.approx(-1.0)


def test_tangent_angles_are_unwrapped():
    curve = semicircle_curve()
    smp = sample(curve, 101)
    taus = [cs.tau for cs in smp]
    jumps = np.abs(np.diff(taus))
    assert jumps.max() < 0.1  # continuous, no 2*pi branches
    # a semicircle turns by exactly pi
    assert taus[-1] - taus[0] == pytest.approx(math.pi, abs=1e-10)


def test_arc_length_is_nondecreasing_and_refines(fig_long_problem):
    sols = build_family(fig_long_problem)
    s_mid = sols[len(sols) // 2]
    smp = sample(s_mid.quartic, 101)
    svals = [cs.s for cs in smp]
    assert svals[0] == 0.0
    assert all(b >= a for a, b in zip(svals, svals[1:]))
    total_101 = svals[-1]
    total_201 = sample(s_mid.quartic, 201)[-1].s
    assert abs(total_101 - total_201) <= 1e-10 * max(1.0, total_201)


def test_quartic_endpoint_samples_match_given_data(fig_long_problem):
    for s in build_family(fig_long_problem)[:5]:
        smp = sample(s.quartic, 17)
        assert smp[0].k == pytest.approx(-0.4, abs=1e-8)
        assert smp[-1].k == pytest.approx(0.3, abs=1e-8)
        assert math.remainder(smp[0].tau - fig_long_problem.alpha,
                              2 * math.pi) == pytest.approx(0.0, abs=1e-8)


def test_family_curvature_plots_monotone(fig_long_problem):
    for s in build_family(fig_long_problem):
        smp = sample(s.quartic, 301)
        ks = [cs.k for cs in smp]
        ok, _ = monotonicity_audit(smp)
        assert ok
        assert ks[0] == pytest.approx(-0.4, abs=1e-7)
        assert ks[-1] == pytest.approx(0.3, abs=1e-7)


def test_exact_curvature_matches_finite_differences(fig_long_problem):
    s = build_family(fig_long_problem)[3]
    curve = s.quartic
    ts = np.linspace(0.1, 0.9, 9)
    ks = curvature_values(curve, 2001)
    h = 1e-3
    for t in ts:
        f = [curve.point(t + i * h) for i in (-2, -1, 0, 1, 2)]
        dx = (f[0][0] - 8 * f[1][0] + 8 * f[3][0] - f[4][0]) / (12 * h)
        dy = (f[0][1] - 8 * f[1][1] + 8 * f[3][1] - f[4][1]) / (12 * h)
        ddx = (-f[0][0] + 16 * f[1][0] - 30 * f[2][0]
               + 16 * f[3][0] - f[4][0]) / (12 * h * h)
        ddy = (-f[0][1] + 16 * f[1][1] - 30 * f[2][1]
               + 16 * f[3][1] - f[4][1]) / (12 * h * h)
        fd = (dx * ddy - dy * ddx) / (dx * dx + dy * dy) ** 1.5
        exact = ks[round(t * 2000)]
        assert exact == pytest.approx(fd, rel=1e-6)


def test_audit_flags_vertex_arc():
    # symmetric ellipse arc: curvature extremum at the apex
    arc = ConicArc(w=0.5, j=1, pw=0.0, qw=0.5)
    X, Y, W = arc.basis_coeffs()
    curve = RationalCurve.from_coeffs(X, Y, W)
    ok, worst = monotonicity_audit(curvature_values(curve, 501))
    assert not ok
    assert worst > 1e-6


def test_audit_constant_curvature_passes():
    ok, worst = monotonicity_audit(curvature_values(semicircle_curve(), 101))
    assert ok
    assert worst <= 1e-12


def test_audit_direction_flag():
    ks = np.linspace(1.0, 0.0, 50)  # decreasing
    ok_inc, _ = monotonicity_audit(ks, increasing=True)
    ok_dec, _ = monotonicity_audit(ks, increasing=False)
    assert not ok_inc and ok_dec


def test_cusp_detection():
    # x = (t - 1/2)^2, y = (t - 1/2)^3: classic cusp at t = 1/2
    x = [0.25, -1.0, 1.0]
    y = [-0.125, 0.75, -1.5, 1.0]
    with pytest.raises(CuspDetected):
        sample(RationalCurve.from_coeffs(x, y, [1.0]), 101)


def test_sample_rejects_tiny_counts():
    with pytest.raises(ValueError):
        sample(semicircle_curve(), 1)


def test_conic_curvature_consistency_via_rational_curve():
    arc = ConicArc(w=0.9, j=1, pw=-0.8, qw=0.7)
    X, Y, W = arc.basis_coeffs()
    curve = RationalCurve.from_coeffs(X, Y, W)
    for t in (0.0, 0.3, 0.71, 1.0):
        assert curve.curvature(t) == pytest.approx(conic_curvature(arc, t),
                                                   rel=1e-10)


def test_kernel_backends_agree(fig_long_problem):
    from spiralinv.kernels import _numba, _numpy
    s = build_family(fig_long_problem)[0]
    xn = np.array(s.quartic.x_num)
    yn = np.array(s.quartic.y_num)
    dn = np.array(s.quartic.den)
    ts = np.linspace(0.0, 1.0, 257)
    for a, b in zip(_numba.rational_frame(xn, yn, dn, ts),
                    _numpy.rational_frame(xn, yn, dn, ts)):
        assert np.allclose(a, b, rtol=1e-12, atol=1e-12)
    assert np.allclose(_numba.arc_length_cumulative(xn, yn, dn, ts),
                       _numpy.arc_length_cumulative(xn, yn, dn, ts),
                       rtol=1e-12, atol=1e-14)
    assert np.allclose(_numba.speeds(xn, yn, dn, ts),
                       _numpy.speeds(xn, yn, dn, ts), rtol=1e-12)
