"""One-parameter family of rational quartic spiral interpolants.

For a prepared problem (invariants g1 < 0 < g2, Q < 0, lens angle sigma in
(0, pi]) every admissible family parameter theta yields a conic arc sharing
the data's Moebius invariants; an inversion fixing the chord endpoints then
carries the arc onto a quartic interpolant. The steps per theta:

    weights:   D1 = 1 - cos(sigma) cos(theta)      (> 0)
               D2 = cos(sigma) - cos(theta)        (j D2 > 0)
               D3 = 1 - 2Q - cos(theta)            (> 0)
               D0 = D1^2 - D2 D3
               4 N^2 D2 D3 - 4 j N D1 + 1 = 0      (roots N1, N2)
    controls:  n_w = sgn(theta - sigma),  w = n_w sin(theta) sqrt(N),
               p_w = n_w sin(sigma) sqrt(N),
               q_w = -n_w (cos(sigma) - cos(theta)) sqrt(N)
    spirality: angular form of the bounding-circle tests
    map:       cos/sin(lambda0) = j cos/sin(gamma + nu),
               r0 = sqrt(r01 r02), r01 = g1_conic/g1, r02 = g2/g2_conic
    quartic:   x + iy = [r0 A - B/r0 + 2i(P sin(l0) + 2YW cos(l0))] /
                        [r0 A + B/r0 + 2 (P cos(l0) - 2YW sin(l0))]
               A = (X+W)^2 + Y^2, B = (X-W)^2 + Y^2, P = W^2 - X^2 - Y^2

The quartic denominator is a squared modulus: nonnegative, with (double)
zeros exactly where the conic meets the inversion center. A zero inside
[0,1] means the interpolant escapes to infinity between the endpoints and
the candidate is rejected as discontinuous.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

from . import _poly
from .conic import ConicArc
from .errors import (ExcludedPoint, InconsistentSolution, NonSpiralArtifact,
                     NoRealSolution)
from .problem import NormalizedProblem
from .sampling import AUDIT_SAMPLES, RationalCurve, curvature_values, monotonicity_audit

DEFAULT_DTHETA = math.radians(2.0)
SIGMA_EXCLUSION = 1e-6
DENOMINATOR_REL_TOL = 1e-9


@dataclass(frozen=True)
class ThetaRange:
    Theta: float
    Theta0: float
    Theta1: float


@dataclass(frozen=True)
class FamilyCandidate:
    theta: float
    nu: float
    j: int
    N: float
    w: float
    pw: float
    qw: float
    nw: float
    root: int  # 2 for the always-present root N2, 1 for the extra convex root N1


@dataclass(frozen=True)
class MoebiusMap:
    """Chord-fixing inversion parameters (r0 > 0, rotation angle lambda0)."""

    r0: float
    lambda0: float

    @property
    def X0(self) -> float:
        return self.r0 - 1.0 / self.r0

    @property
    def Y0(self) -> float:
        return 2.0 * math.sin(self.lambda0)

    @property
    def W0(self) -> float:
        return self.r0 + 1.0 / self.r0 + 2.0 * math.cos(self.lambda0)

    @property
    def W1(self) -> float:
        return self.r0 + 1.0 / self.r0 - 2.0 * math.cos(self.lambda0)

    @property
    def z0(self) -> complex:
        return complex(self.X0, self.Y0) / self.W0

    def apply(self, z: complex) -> complex:
        z0 = self.z0
        return (z0 + z) / (1.0 + z0 * z)


@dataclass(frozen=True)
class FamilySolution:
    candidate: FamilyCandidate
    conic: ConicArc
    map: MoebiusMap
    quartic: RationalCurve

    @property
    def theta(self) -> float:
        return self.candidate.theta


@dataclass(frozen=True)
class ThetaOutcome:
    """Per-(theta, root) disposition of the construction pipeline."""

    theta: float
    root: int
    status: str  # accepted|excluded|no_real_solution|negative_weight|
                 # non_spiral|inconsistent|discontinuous|audit_failed
    detail: str = ""
    solution: Optional[FamilySolution] = None


def locus_point(theta: float, sigma: float):
    """Control point (p, q) on the constant-lens locus at parameter theta."""
    st = math.sin(theta)
    if st == 0.0:
        raise ValueError("theta = 0 is handled projectively through p_w, q_w")
    if abs(abs(theta) - sigma) < SIGMA_EXCLUSION:
        raise ExcludedPoint(f"theta = +/-sigma gives q = 0 (theta={theta})")
    p = math.sin(sigma) / st
    q = -(math.cos(sigma) - math.cos(theta)) / st
    return p, q


def locus_residual(p: float, q: float, sigma: float) -> float:
    """H(p, q; sigma); vanishes on the locus."""
    return math.sin(sigma) * (1.0 - p * p + q * q) + 2.0 * p * q * math.cos(sigma)


def weight_terms(theta: float, prob: NormalizedProblem):
    """(D1, D2, D3, D0) for the weight equation at this theta."""
    cs, ct = math.cos(prob.sigma), math.cos(theta)
    D1 = 1.0 - cs * ct
    D2 = cs - ct
    D3 = 1.0 - 2.0 * prob.Q - ct
    return D1, D2, D3, D1 * D1 - D2 * D3


def theta_range(prob: NormalizedProblem) -> ThetaRange:
    """Admissible |theta| bound: min(pi/2, pi - sigma, Theta0)."""
    sigma = prob.sigma
    Theta1 = min(0.5 * math.pi, math.pi - sigma)
    G = prob.g1 * prob.g2
    ss = math.sin(sigma)
    if ss == 0.0:  # sigma == pi: D0 >= 0 everywhere
        Theta0 = math.pi
    else:
        s2 = ss * ss
        root = math.sqrt(G * G + 2.0 * G * s2 * math.cos(sigma) + s2 * s2)
        c = (2.0 * G * math.cos(sigma) + s2) / (G - root)
        Theta0 = math.acos(min(1.0, max(-1.0, c)))
    return ThetaRange(min(Theta1, Theta0), Theta0, Theta1)


def solve_N(theta: float, prob: NormalizedProblem):
    """Positive roots of the weight equation at theta, as (j, N) pairs.

    Order is deterministic: the root N2 (exists for every admissible theta)
    first, then N1 for the convex branch. Non-positive or non-finite roots
    are dropped.
    """
    D1, D2, D3, D0 = weight_terms(theta, prob)
    if D0 < 0.0:
        raise NoRealSolution(f"D0 = {D0:.3g} < 0 at theta = {theta:.6g}")
    rt = math.sqrt(D0)
    out = []
    if abs(theta) < prob.sigma:
        j = -1
        N2 = (D1 + rt) / (2.0 * j * D2 * D3)
        if math.isfinite(N2) and N2 > 0.0:
            out.append((j, N2))
    else:
        j = 1
        N2 = (D1 + rt) / (2.0 * j * D2 * D3)
        if math.isfinite(N2) and N2 > 0.0:
            out.append((j, N2))
        N1 = j / (2.0 * (D1 + rt))
        if math.isfinite(N1) and N1 > 0.0:
            out.append((j, N1))
    return out


def make_candidate(theta: float, j: int, N: float, root: int,
                   prob: NormalizedProblem) -> FamilyCandidate:
    """Attach the control products; theta = 0 is projectively clean (w = 0)."""
    nw = math.copysign(1.0, theta - prob.sigma)
    rN = math.sqrt(N)
    return FamilyCandidate(
        theta=theta, nu=0.5 * theta, j=j, N=N,
        w=nw * math.sin(theta) * rN,
        pw=nw * math.sin(prob.sigma) * rN,
        qw=-nw * (math.cos(prob.sigma) - math.cos(theta)) * rN,
        nw=nw, root=root)


def spirality_test(c: FamilyCandidate, prob: NormalizedProblem) -> bool:
    """Angular form of the vertex-freeness test."""
    om, nu, N = prob.omega, c.nu, c.N
    if c.j == 1:
        t1 = ((2.0 * N * math.sin(om + nu) * math.sin(c.theta) - math.cos(om - nu))
              * (2.0 * N * math.sin(om - nu) * math.sin(c.theta) + math.cos(om + nu)))
        return t1 >= 0.0 and 2.0 * N * math.sin(c.theta) ** 2 >= 1.0
    anu, ath = abs(nu), abs(c.theta)
    return (2.0 * N * math.sin(om - anu) * math.sin(ath) - math.cos(om + anu)) <= 0.0


def conic_of(c: FamilyCandidate) -> ConicArc:
    return ConicArc(w=c.w, j=c.j, pw=c.pw, qw=c.qw)


def moebius_params(c: FamilyCandidate, prob: NormalizedProblem) -> MoebiusMap:
    """Inversion parameters matching the conic's boundary data to the given data."""
    om, nu = prob.omega, c.nu
    lam0 = math.atan2(c.j * math.sin(prob.gamma + nu),
                      c.j * math.cos(prob.gamma + nu))
    g1c = math.sin(om - nu) * (c.j - 1.0 / (4.0 * c.N * math.sin(om + nu) ** 2))
    g2c = math.sin(om + nu) * (-c.j + 1.0 / (4.0 * c.N * math.sin(om - nu) ** 2))
    r01 = g1c / prob.g1
    r02 = prob.g2 / g2c
    if r01 * r02 <= 0.0 or not math.isfinite(r01 * r02):
        raise InconsistentSolution(
            f"r01 = {r01:.6g}, r02 = {r02:.6g}: root incompatible with "
            "increasing curvature")
    if abs(r01 - r02) > 1e-8 * max(abs(r01), abs(r02)):
        raise InconsistentSolution(
            f"map radii disagree: r01 = {r01!r}, r02 = {r02!r}")
    return MoebiusMap(r0=math.sqrt(r01 * r02), lambda0=lam0)


def build_quartic(c: FamilyCandidate, m: MoebiusMap) -> FamilySolution:
    """Expand the inverted conic to power-basis degree-4 coefficient vectors.

    Raises NonSpiralArtifact when the denominator (a squared modulus, zero
    only where the conic passes through the inversion center) vanishes
    inside [0,1].
    """
    arc = conic_of(c)
    X, Y, W = (list(v) for v in arc.basis_coeffs())
    A = _poly.padd(_poly.pmul(_poly.padd(X, W), _poly.padd(X, W)), _poly.pmul(Y, Y))
    B = _poly.padd(_poly.pmul(_poly.padd(X, _poly.pscale(W, -1.0)),
                              _poly.padd(X, _poly.pscale(W, -1.0))),
                   _poly.pmul(Y, Y))
    P = _poly.padd(_poly.pmul(W, W),
                   _poly.pscale(_poly.padd(_poly.pmul(X, X), _poly.pmul(Y, Y)), -1.0))
    YW = _poly.pmul(Y, W)
    sl, cl = math.sin(m.lambda0), math.cos(m.lambda0)
    inv_r0 = 1.0 / m.r0
    x_num = _poly.padd(_poly.pscale(A, m.r0), _poly.pscale(B, -inv_r0))
    y_num = _poly.pscale(_poly.padd(_poly.pscale(P, sl), _poly.pscale(YW, 2.0 * cl)), 2.0)
    den = _poly.padd(_poly.pscale(A, m.r0), _poly.pscale(B, inv_r0),
                     _poly.pscale(_poly.padd(_poly.pscale(P, cl),
                                             _poly.pscale(YW, -2.0 * sl)), 2.0))
    den_scale = max(abs(v) for v in den)
    if _poly.min_on_unit_interval(den) <= DENOMINATOR_REL_TOL * den_scale:
        raise NonSpiralArtifact(
            f"denominator vanishes on [0,1] at theta = {c.theta:.6g}; "
            "interpolant passes through infinity")
    curve = RationalCurve.from_coeffs(x_num, y_num, den)
    for t, expect in ((0.0, -1.0), (1.0, 1.0)):
        x, y = curve.point(t)
        if abs(x - expect) > 1e-10 or abs(y) > 1e-10:
            raise NonSpiralArtifact(f"endpoint drift at t={t}: ({x}, {y})")
    return FamilySolution(candidate=c, conic=arc, map=m, quartic=curve)


def evaluate_theta(prob: NormalizedProblem, theta: float,
                   audit_samples: int = AUDIT_SAMPLES):
    """Run the whole per-theta pipeline; one ThetaOutcome per weight root."""
    if abs(abs(theta) - prob.sigma) < SIGMA_EXCLUSION:
        return [ThetaOutcome(theta, 0, "excluded", "theta too close to +/-sigma")]
    try:
        roots = solve_N(theta, prob)
    except NoRealSolution as e:
        return [ThetaOutcome(theta, 0, "no_real_solution", str(e))]
    if not roots:
        return [ThetaOutcome(theta, 0, "negative_weight", "no positive weight root")]
    outcomes = []
    for idx, (j, N) in enumerate(roots):
        root = 2 if idx == 0 else 1
        cand = make_candidate(theta, j, N, root, prob)
        if not spirality_test(cand, prob):
            outcomes.append(ThetaOutcome(theta, root, "non_spiral",
                                         "angular spirality test failed"))
            continue
        try:
            mmap = moebius_params(cand, prob)
            sol = build_quartic(cand, mmap)
        except InconsistentSolution as e:
            outcomes.append(ThetaOutcome(theta, root, "inconsistent", str(e)))
            continue
        except NonSpiralArtifact as e:
            outcomes.append(ThetaOutcome(theta, root, "discontinuous", str(e)))
            continue
        ok, worst = monotonicity_audit(curvature_values(sol.quartic, audit_samples))
        if not ok:
            outcomes.append(ThetaOutcome(theta, root, "audit_failed",
                                         f"curvature decreased by {worst:.3g}"))
            continue
        outcomes.append(ThetaOutcome(theta, root, "accepted", solution=sol))
    return outcomes


def theta_grid(Theta: float, dtheta: float, sigma: float):
    """{0, +/-dtheta, ...} inside [-Theta, Theta] with +/-sigma excluded."""
    if dtheta <= 0.0:
        raise ValueError("dtheta must be positive")
    ks = range(int(math.floor(Theta / dtheta + 1e-12)), -1, -1)
    grid = []
    for k in ks:
        grid.append(-k * dtheta)
    for k in range(1, int(math.floor(Theta / dtheta + 1e-12)) + 1):
        grid.append(k * dtheta)
    return [t for t in grid if abs(abs(t) - sigma) >= SIGMA_EXCLUSION]


def family_sweep(prob: NormalizedProblem, dtheta: float = DEFAULT_DTHETA,
                 audit_samples: int = AUDIT_SAMPLES):
    """(accepted solutions, all outcomes) over the theta grid."""
    if not prob.invariants_ready:
        raise ValueError("run compute_invariants first")
    rng = theta_range(prob)
    outcomes = []
    for theta in theta_grid(rng.Theta, dtheta, prob.sigma):
        outcomes.extend(evaluate_theta(prob, theta, audit_samples))
    solutions = [o.solution for o in outcomes if o.status == "accepted"]
    solutions.sort(key=lambda s: (s.candidate.theta, s.candidate.root))
    return solutions, outcomes


def build_family(prob: NormalizedProblem, dtheta: float = DEFAULT_DTHETA,
                 audit_samples: int = AUDIT_SAMPLES):
    """Accepted family members sorted by (theta, root)."""
    solutions, _ = family_sweep(prob, dtheta, audit_samples)
    if not any(abs(s.candidate.theta) < 0.5 * dtheta for s in solutions):
        warnings.warn("theta = 0 member missing from the accepted family",
                      stacklevel=2)
    return solutions
