"""Rational cubic spirals: family members whose inversion center lies on the conic.

The center z1 = -1/z0 of the chord-fixing inversion is a plane point; if it
lies on the carrier conic at parameter T, the quartic interpolant's
numerator and denominator share the factor (t - T) and the curve drops to
degree 3.

Eliminating the weight between the center-on-conic condition and the weight
equation gives a degree-6 polynomial in v = tan(theta/2):

    cos^2(w) [P3 - P4]^2 v^2 - sin^2(w) [P3 + P4]^2 - g1 g2 P3^2 (1+v^2) = 0

with quadratics P3 = A1 v^2 + B1 v + C1 and P4 = A2 v^2 + C2 built from the
data invariants:

    A1 = g1 g2 cos^2(gamma) + cos^2(omega) (g1 sin b - g2 sin a)
    B1 = g1 g2 sin(2 gamma) + sin(2 omega) (g1 sin b + g2 sin a)
    C1 = g1 g2 sin^2(gamma) + sin^2(omega) (g1 sin b - g2 sin a)
    A1 - A2 = 2 g1 g2 sin a sin b              C1 + C2 = -(A1 - A2)

where sin a = sin(omega + gamma), sin b = sin(omega - gamma) are the sines
of the corrected cumulative boundary angles. The recovered weight for a
root v is

    4 j N = (1 + v^2)/(v^2 cos^2 omega - sin^2 omega) * P3(v)/P4(v).

The Bernstein-style basis used for the emitted cubic carries NO binomial
coefficients:  ber_n(x; a_0..a_n) = sum a_i (1-x)^(n-i) x^i.  It is
multiplicative in (1-x, x), so products of such forms convolve coefficients
directly. The cubic denominator W3 keeps its (t - T) factor: the parent
denominator has a double root at T and only one factor cancels against the
numerators. T lies outside [0,1] for every accepted candidate, so W3 has no
zero on the arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import _poly, family
from .conic import ConicArc
from .errors import (CenterAtParameterInfinity, DegreeDrop, InconsistentSolution,
                     NonSpiralArtifact, ReductionFailed)
from .family import FamilyCandidate, MoebiusMap
from .problem import NormalizedProblem
from .sampling import RationalCurve, curvature_values, monotonicity_audit


@dataclass(frozen=True)
class CubicEquation:
    A1: float
    B1: float
    C1: float
    A2: float
    C2: float
    poly: tuple  # monic, ascending, degree 6 for generic data

    @property
    def degree(self) -> int:
        return len(self.poly) - 1


@dataclass(frozen=True)
class CubicSpiral:
    """Rational cubic in the binomial-free Bernstein basis, plus the
    power-basis curve used for evaluation."""

    X3: tuple
    Y3: tuple
    W3: tuple
    T: float
    curve: RationalCurve
    candidate: FamilyCandidate
    map: MoebiusMap

    @property
    def conic(self) -> ConicArc:
        return family.conic_of(self.candidate)


@dataclass(frozen=True)
class RootOutcome:
    """Disposition of one real root of the degree-6 equation."""

    v: float
    theta: float
    status: str  # accepted|out_of_range|excluded|negative_weight|non_spiral|
                 # inconsistent|discontinuous|center_at_infinity|
                 # reduction_failed|audit_failed
    detail: str = ""
    cubic: Optional[CubicSpiral] = None


def bernstein(n: int, x: float, coeffs) -> float:
    """sum a_i (1-x)^(n-i) x^i -- deliberately without binomial factors."""
    if len(coeffs) != n + 1:
        raise ValueError(f"need {n + 1} coefficients, got {len(coeffs)}")
    u = 1.0 - x
    total = 0.0
    for i, a in enumerate(coeffs):
        total += a * u ** (n - i) * x ** i
    return total


def plain_bernstein_to_power(coeffs):
    """Convert sum a_i (1-x)^(n-i) x^i to ascending power-basis coefficients."""
    n = len(coeffs) - 1
    out = [0.0] * (n + 1)
    for i, a in enumerate(coeffs):
        # (1-x)^(n-i) x^i
        m = n - i
        c = 1.0
        # binomial expansion of (1-x)^m
        for k in range(m + 1):
            out[i + k] += a * c
            c *= -(m - k) / (k + 1.0)
    return out


def build_equation(prob: NormalizedProblem) -> CubicEquation:
    """Degree-6 polynomial (monic, ascending) whose real roots give cubics."""
    if not prob.invariants_ready:
        raise ValueError("run compute_invariants first")
    om, ga = prob.omega, prob.gamma
    sa, sb = math.sin(om + ga), math.sin(om - ga)
    G = prob.g1 * prob.g2
    E = prob.g1 * sb - prob.g2 * sa
    F = prob.g1 * sb + prob.g2 * sa
    A1 = G * math.cos(ga) ** 2 + math.cos(om) ** 2 * E
    B1 = G * math.sin(2.0 * ga) + math.sin(2.0 * om) * F
    C1 = G * math.sin(ga) ** 2 + math.sin(om) ** 2 * E
    twoGsasb = 2.0 * G * sa * sb
    A2 = A1 - twoGsasb
    C2 = -twoGsasb - C1
    P3 = [C1, B1, A1]
    P4 = [C2, 0.0, A2]
    diff = _poly.padd(P3, _poly.pscale(P4, -1.0))
    tot = _poly.padd(P3, P4)
    eq6 = _poly.padd(
        _poly.pscale(_poly.pmul(_poly.pmul(diff, diff), [0.0, 0.0, 1.0]),
                     math.cos(om) ** 2),
        _poly.pscale(_poly.pmul(tot, tot), -math.sin(om) ** 2),
        _poly.pscale(_poly.pmul(_poly.pmul(P3, P3), [1.0, 0.0, 1.0]), -G))
    trimmed = _poly.trim(eq6, rel=1e-12)
    if len(trimmed) <= 1:
        raise DegreeDrop("cubic-existence polynomial vanished identically")
    monic = _poly.pscale(trimmed, 1.0 / trimmed[-1])
    return CubicEquation(A1=A1, B1=B1, C1=C1, A2=A2, C2=C2, poly=tuple(monic))


def real_roots(poly):
    """All real roots, ascending, as (root, multiplicity) pairs."""
    return _poly.isolate_real_roots(list(poly))


def recover_weight(eq: CubicEquation, v: float, prob: NormalizedProblem):
    """(j, N) for a root v of the degree-6 equation."""
    om = prob.omega
    denom_angle = v * v * math.cos(om) ** 2 - math.sin(om) ** 2
    theta = 2.0 * math.atan(v)
    j = 1 if abs(theta) > prob.sigma else -1
    P3v = _poly.peval([eq.C1, eq.B1, eq.A1], v)
    P4v = _poly.peval([eq.C2, 0.0, eq.A2], v)
    N = (1.0 + v * v) / denom_angle * P3v / P4v / (4.0 * j)
    return j, N


def candidates_from_roots(eq: CubicEquation, prob: NormalizedProblem):
    """FamilyCandidates for roots that survive range, weight and spirality."""
    return [o for o in _root_candidates(eq, prob) if isinstance(o, FamilyCandidate)]


def _root_candidates(eq: CubicEquation, prob: NormalizedProblem):
    """FamilyCandidate for survivors, RootOutcome for rejected roots."""
    rng = family.theta_range(prob)
    vmax = math.tan(0.5 * rng.Theta)
    out = []
    for v, _mult in real_roots(eq.poly):
        theta = 2.0 * math.atan(v)
        if abs(v) >= vmax:
            out.append(RootOutcome(v, theta, "out_of_range",
                                   f"|v| >= tan(Theta/2) = {vmax:.6g}"))
            continue
        om = prob.omega
        if abs(v * v * math.cos(om) ** 2 - math.sin(om) ** 2) < 1e-12:
            out.append(RootOutcome(v, theta, "excluded", "theta = +/-sigma"))
            continue
        j, N = recover_weight(eq, v, prob)
        if not (math.isfinite(N) and N > 0.0):
            out.append(RootOutcome(v, theta, "negative_weight", f"N = {N:.6g}"))
            continue
        cand = family.make_candidate(theta, j, N, 0, prob)
        if not family.spirality_test(cand, prob):
            out.append(RootOutcome(v, theta, "non_spiral",
                                   "angular spirality test failed"))
            continue
        out.append(cand)
    return out


def center_coords(m: MoebiusMap):
    """Homogeneous coordinates (X1, Y1, W1) of the inversion center -1/z0."""
    return (1.0 / m.r0 - m.r0, 2.0 * math.sin(m.lambda0),
            1.0 / m.r0 + m.r0 - 2.0 * math.cos(m.lambda0))


def compute_T(c: FamilyCandidate, m: MoebiusMap) -> float:
    """Conic parameter at which the inversion center sits on the carrier."""
    sl, cl = math.sin(m.lambda0), math.cos(m.lambda0)
    inv_r0 = 1.0 / m.r0
    num = (c.pw + c.w - c.j) * sl + c.qw * (cl - inv_r0)
    den = ((c.pw + c.w - c.j * (c.pw - c.w + 2.0)) * sl
           + c.qw * (1.0 + c.j) * cl - c.qw * (inv_r0 + c.j * m.r0))
    scale = abs(num) + abs(c.qw) * (m.r0 + inv_r0) + abs(c.pw) + abs(c.w) + 1.0
    if abs(den) <= 1e-14 * scale:
        raise CenterAtParameterInfinity("center corresponds to no finite parameter")
    return num / den


def _nested_bernstein_forms(c: FamilyCandidate, T: float):
    """Closed-form nested-Bernstein coefficient lists (X3, Y3, W3)."""
    j, w, pw, qw = c.j, c.w, c.pw, c.qw
    h1w2 = (w + pw) ** 2 + qw * qw
    h2w2 = (w - pw) ** 2 + qw * qw
    X3 = (bernstein(3, T, [0.0, h1w2, 2.0 * j * (pw + w), 1.0]),
          bernstein(1, T, [1.0, -2.0 * (pw - w)])
          * bernstein(2, T, [h1w2, 2.0 * j * (pw + w), 1.0]),
          bernstein(1, T, [2.0 * j * (pw + w), 1.0])
          * bernstein(2, T, [1.0, -2.0 * (pw - w), h2w2]),
          bernstein(3, T, [1.0, -2.0 * (pw - w), h2w2, 0.0]))
    Y3 = (0.0,
          2.0 * qw * bernstein(3, T, [0.0, j - h1w2, -2.0 * j * pw, 0.0]),
          2.0 * qw * bernstein(3, T, [0.0, -2.0 * j * pw, j * h2w2 - 1.0, 0.0]),
          0.0)
    quad = (bernstein(2, T, [h1w2, 2.0 * j * (pw + w), 1.0]),
            2.0 * bernstein(2, T, [j * (pw + w),
                                   1.0 - j * (pw * pw + qw * qw - w * w),
                                   -(pw - w)]),
            bernstein(2, T, [1.0, -2.0 * (pw - w), h2w2]))
    # (t - T) = ber_1(t; -T, 1-T); the basis is multiplicative, so convolve
    lin = (-T, 1.0 - T)
    W3 = [0.0] * 4
    for i, a in enumerate(lin):
        for k, b in enumerate(quad):
            W3[i + k] += a * b
    return X3, Y3, tuple(W3)


_CHEB_NODES = [0.5 * (1.0 + math.cos(math.pi * k / 32)) for k in range(33)]


def _max_pointwise_gap(c1: RationalCurve, c2: RationalCurve, ts) -> float:
    worst = 0.0
    for t in ts:
        x1, y1 = c1.point(t)
        x2, y2 = c2.point(t)
        worst = max(worst, math.hypot(x1 - x2, y1 - y2))
    return worst


def build_cubic(c: FamilyCandidate, m: MoebiusMap, T: float) -> CubicSpiral:
    """Emit the reduced cubic, verified pointwise against the parent quartic.

    Primary route is the closed-form nested-Bernstein assembly; if it
    disagrees with the parent beyond tolerance the quartic is deflated by
    (t - T) instead.
    Raises ReductionFailed (carrying the quartic) if neither verifies.
    """
    parent = family.build_quartic(c, m)
    X3, Y3, W3 = _nested_bernstein_forms(c, T)
    direct = RationalCurve.from_coeffs(plain_bernstein_to_power(X3),
                                        plain_bernstein_to_power(Y3),
                                        plain_bernstein_to_power(W3))
    # diameter of the normalized arc is >= the chord length 2
    xs = [parent.quartic.point(t)[0] for t in (0.0, 0.25, 0.5, 0.75, 1.0)]
    ys = [parent.quartic.point(t)[1] for t in (0.0, 0.25, 0.5, 0.75, 1.0)]
    diameter = max(2.0, max(xs) - min(xs), max(ys) - min(ys))
    tol = 1e-9 * diameter
    if _max_pointwise_gap(direct, parent.quartic, _CHEB_NODES) <= tol:
        return CubicSpiral(X3=tuple(X3), Y3=tuple(Y3), W3=tuple(W3), T=T,
                           curve=direct, candidate=c, map=m)
    # fallback: synthetic division of the expanded quartic by (t - T)
    qx, rx = _poly.pdeflate(list(parent.quartic.x_num), T)
    qy, ry = _poly.pdeflate(list(parent.quartic.y_num), T)
    qw, rw = _poly.pdeflate(list(parent.quartic.den), T)
    scale = max(abs(v) for v in parent.quartic.den)
    if max(abs(rx), abs(ry), abs(rw)) > 1e-6 * scale:
        raise ReductionFailed(
            f"(t - T) does not divide the quartic (remainders {rx:.2g}, "
            f"{ry:.2g}, {rw:.2g})", quartic=parent.quartic)
    deflated = RationalCurve.from_coeffs(qx, qy, qw)
    if _max_pointwise_gap(deflated, parent.quartic, _CHEB_NODES) > tol:
        raise ReductionFailed("deflated cubic drifts from the parent quartic",
                              quartic=parent.quartic)
    return CubicSpiral(X3=tuple(power_to_plain_bernstein(qx)),
                       Y3=tuple(power_to_plain_bernstein(qy)),
                       W3=tuple(power_to_plain_bernstein(qw)), T=T,
                       curve=deflated, candidate=c, map=m)


def power_to_plain_bernstein(coeffs):
    """Inverse of plain_bernstein_to_power for the same degree."""
    n = len(coeffs) - 1
    # solve the triangular-by-construction linear system column by column
    mat = [[0.0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        unit = [0.0] * (n + 1)
        unit[i] = 1.0
        col = plain_bernstein_to_power(unit)
        for r in range(n + 1):
            mat[r][i] = col[r]
    # Gaussian elimination (tiny system, partial pivoting)
    rhs = list(map(float, coeffs))
    for col in range(n + 1):
        piv = max(range(col, n + 1), key=lambda r: abs(mat[r][col]))
        mat[col], mat[piv] = mat[piv], mat[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        d = mat[col][col]
        for r in range(col + 1, n + 1):
            f = mat[r][col] / d
            rhs[r] -= f * rhs[col]
            for cc in range(col, n + 1):
                mat[r][cc] -= f * mat[col][cc]
    out = [0.0] * (n + 1)
    for r in range(n, -1, -1):
        acc = rhs[r] - sum(mat[r][cc] * out[cc] for cc in range(r + 1, n + 1))
        out[r] = acc / mat[r][r]
    return out


def cubic_sweep(prob: NormalizedProblem):
    """(cubics, outcomes): full pipeline with per-root dispositions."""
    eq = build_equation(prob)
    outcomes = []
    cubics = []
    for item in _root_candidates(eq, prob):
        if isinstance(item, RootOutcome):
            outcomes.append(item)
            continue
        cand = item
        v = math.tan(0.5 * cand.theta)
        try:
            mmap = family.moebius_params(cand, prob)
        except InconsistentSolution as e:
            outcomes.append(RootOutcome(v, cand.theta, "inconsistent", str(e)))
            continue
        try:
            T = compute_T(cand, mmap)
            cub = build_cubic(cand, mmap, T)
        except NonSpiralArtifact as e:
            outcomes.append(RootOutcome(v, cand.theta, "discontinuous", str(e)))
            continue
        except CenterAtParameterInfinity as e:
            outcomes.append(RootOutcome(v, cand.theta, "center_at_infinity", str(e)))
            continue
        except ReductionFailed as e:
            outcomes.append(RootOutcome(v, cand.theta, "reduction_failed", str(e)))
            continue
        ok, worst = monotonicity_audit(curvature_values(cub.curve))
        if not ok:
            outcomes.append(RootOutcome(v, cand.theta, "audit_failed",
                                        f"curvature decreased by {worst:.3g}"))
            continue
        outcomes.append(RootOutcome(v, cand.theta, "accepted", cubic=cub))
        cubics.append(cub)
    cubics.sort(key=lambda cs: cs.candidate.theta)
    return cubics, outcomes


def find_cubics(prob: NormalizedProblem):
    """All rational cubic spirals matching the data (possibly none)."""
    cubics, _ = cubic_sweep(prob)
    return cubics
