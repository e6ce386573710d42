"""Input normalization and Moebius invariants of two-point G2 data.

A problem is given by two G2 elements (point, unit-tangent direction,
signed curvature). `normalize` maps them by a direct similarity onto the
standard chord (-1,0)-(1,0); `make_increasing` mirrors decreasing-curvature
data about the x-axis; `compute_invariants` derives the quantities the
construction runs on (g1, g2, Q, sigma, omega, gamma) and applies the
solvability gates. `denormalize` carries sampled results back to the user
frame.

Sign conventions: curvature is positive for a left turn, angles live in
(-pi, pi] after reduction.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace
from typing import Optional

from .errors import DegenerateChord, NoSpiralExists, ValidationError, WideLens
from .sampling import CurveSample

TWO_PI = 2.0 * math.pi


def wrap_angle(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    r = math.remainder(x, TWO_PI)
    if r <= -math.pi:
        r += TWO_PI
    return r


@dataclass(frozen=True)
class G2Point:
    """Point with tangent direction (radians) and signed curvature."""

    x: float
    y: float
    tau: float
    k: float

    def __post_init__(self):
        for name in ("x", "y", "tau", "k"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValidationError(f"non-finite {name}: {v!r}")
        object.__setattr__(self, "tau", wrap_angle(self.tau))


@dataclass(frozen=True)
class SimilarityTransform:
    """Direct similarity followed by an optional x-axis mirror.

    Forward (user frame -> normalized frame):
        p' = mirror( scale * R(rotation) * p + translation )
    where mirror negates y (and correspondingly tau and k) when `reflect`.
    Curvatures divide by `scale`, arc lengths multiply by it.
    """

    rotation: float
    scale: float
    translation: tuple
    reflect: bool = False

    def __post_init__(self):
        if not (self.scale > 0.0):
            raise ValidationError(f"scale must be positive, got {self.scale}")

    # -- forward ---------------------------------------------------------
    def apply_point(self, x: float, y: float):
        c, s = math.cos(self.rotation), math.sin(self.rotation)
        xn = self.scale * (c * x - s * y) + self.translation[0]
        yn = self.scale * (s * x + c * y) + self.translation[1]
        return (xn, -yn) if self.reflect else (xn, yn)

    def apply_tangent(self, tau: float) -> float:
        t = tau + self.rotation
        return -t if self.reflect else t

    def apply_curvature(self, k: float) -> float:
        kn = k / self.scale
        return -kn if self.reflect else kn

    def apply(self, p: G2Point) -> G2Point:
        x, y = self.apply_point(p.x, p.y)
        return G2Point(x, y, wrap_angle(self.apply_tangent(p.tau)),
                       self.apply_curvature(p.k))

    # -- inverse ---------------------------------------------------------
    def invert_point(self, x: float, y: float):
        if self.reflect:
            y = -y
        x -= self.translation[0]
        y -= self.translation[1]
        c, s = math.cos(-self.rotation), math.sin(-self.rotation)
        return (c * x - s * y) / self.scale, (s * x + c * y) / self.scale

    def invert_tangent(self, tau: float) -> float:
        if self.reflect:
            tau = -tau
        return tau - self.rotation

    def invert_curvature(self, k: float) -> float:
        if self.reflect:
            k = -k
        return k * self.scale

    def with_reflection(self) -> "SimilarityTransform":
        return replace(self, reflect=not self.reflect)


IDENTITY = SimilarityTransform(0.0, 1.0, (0.0, 0.0), False)


@dataclass(frozen=True)
class NormalizedProblem:
    """G2 data on the chord (-1,0)-(1,0) plus derived invariants.

    The invariant fields stay None until compute_invariants fills them.
    """

    alpha: float
    beta: float
    a: float
    b: float
    transform: SimilarityTransform = IDENTITY
    g1: Optional[float] = None
    g2: Optional[float] = None
    Q: Optional[float] = None
    sigma: Optional[float] = None
    omega: Optional[float] = None
    gamma: Optional[float] = None
    long_spiral: Optional[bool] = None

    @property
    def invariants_ready(self) -> bool:
        return self.sigma is not None


def normalize(A: G2Point, B: G2Point):
    """Map (A, B) onto the standard chord by a direct similarity.

    Returns (problem, transform); the problem has no invariants yet.
    """
    cx, cy = B.x - A.x, B.y - A.y
    chord = math.hypot(cx, cy)
    if chord == 0.0:
        raise DegenerateChord("data points coincide")
    scale = 2.0 / chord
    rotation = -math.atan2(cy, cx)
    c, s = math.cos(rotation), math.sin(rotation)
    tx = -1.0 - scale * (c * A.x - s * A.y)
    ty = -scale * (s * A.x + c * A.y)
    t = SimilarityTransform(rotation, scale, (tx, ty), False)
    An, Bn = t.apply(A), t.apply(B)
    prob = NormalizedProblem(alpha=An.tau, beta=Bn.tau, a=An.k, b=Bn.k, transform=t)
    return prob, t


def make_increasing(p: NormalizedProblem):
    """Mirror about the x-axis when curvature decreases (a > b).

    Returns (problem, reflected). Involution: applying twice is the identity.
    """
    if p.a > p.b:
        q = NormalizedProblem(alpha=wrap_angle(-p.alpha), beta=wrap_angle(-p.beta),
                              a=-p.a, b=-p.b, transform=p.transform.with_reflection())
        return q, True
    return p, False


def compute_invariants(p: NormalizedProblem) -> NormalizedProblem:
    """Fill g1, g2, Q, sigma, omega, gamma and apply the solvability gates.

    Raises NoSpiralExists when Q >= 0 (circle/biarc regime) and WideLens when
    the corrected lens angle exceeds pi.
    """
    alpha, beta = wrap_angle(p.alpha), wrap_angle(p.beta)
    g1 = p.a + math.sin(alpha)
    g2 = p.b - math.sin(beta)
    Q = g1 * g2 + math.sin(0.5 * (alpha + beta)) ** 2
    if Q >= 0.0:
        raise NoSpiralExists(f"Q = {Q:.6g} >= 0: no one-piece spiral matches this data")
    if g1 >= 0.0 or g2 <= 0.0:
        raise NoSpiralExists(f"sign pattern g1 = {g1:.6g}, g2 = {g2:.6g} "
                             "is incompatible with increasing curvature")
    ssum = alpha + beta
    if ssum > 0.0:
        sigma = ssum
        gamma = 0.5 * (alpha - beta)
        long_spiral = False
    else:
        if ssum == 0.0:
            warnings.warn("alpha + beta == 0 exactly; treating as a long spiral",
                          stacklevel=2)
        sigma = ssum + TWO_PI
        gamma = 0.5 * (alpha - beta) + math.pi
        long_spiral = True
    if sigma > math.pi:
        raise WideLens(f"lens angle sigma = {math.degrees(sigma):.3f} deg exceeds 180 deg; "
                       "split the path and solve each piece")
    return replace(p, alpha=alpha, beta=beta, g1=g1, g2=g2, Q=Q,
                   sigma=sigma, omega=0.5 * sigma, gamma=gamma,
                   long_spiral=long_spiral)


def prepare(A: G2Point, B: G2Point) -> NormalizedProblem:
    """normalize -> make_increasing -> compute_invariants."""
    p, _ = normalize(A, B)
    p, _ = make_increasing(p)
    return compute_invariants(p)


def denormalize(samples, t: SimilarityTransform):
    """Map CurveSamples from the normalized frame back to the user frame.

    Tangent angles stay continuous (no re-wrapping); arc length rescales.
    """
    out = []
    for cs in samples:
        x, y = t.invert_point(cs.x, cs.y)
        out.append(CurveSample(cs.t, x, y,
                               t.invert_tangent(cs.tau),
                               t.invert_curvature(cs.k),
                               cs.s / t.scale))
    return out
