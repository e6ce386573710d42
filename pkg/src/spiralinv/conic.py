"""Extended rational quadratic conic arcs in normalized position.

The arc runs from A=(-1,0) at t=0 to B=(1,0) at t=1 with weight vector
{1, w, j}, j = +/-1. The middle control point (p, q) is kept only through
the products p_w = p*w and q_w = q*w so that w -> 0 (control point at
infinity, parallel end tangents) stays finite. j = -1 gives hyperbolas whose
parametrization passes through infinity once inside (0,1); these
"discontinuous" arcs are legitimate spiral carriers here.

Basis polynomials:
    X(t) = -(1-t)^2 + 2 p_w (1-t) t + j t^2
    Y(t) =            2 q_w (1-t) t
    W(t) =  (1-t)^2 + 2 w   (1-t) t + j t^2
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (AtInfinity, DegenerateControlPolygon,
                     SingularParametrization, UseThetaFormTest)

SQRT_HALF = 1.0 / math.sqrt(2.0)
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ConicArc:
    w: float
    j: int
    pw: float
    qw: float

    def __post_init__(self):
        if self.j not in (1, -1):
            raise ValueError(f"j must be +1 or -1, got {self.j}")

    @property
    def finite_control(self) -> bool:
        return self.w != 0.0

    @property
    def p(self) -> float:
        if not self.finite_control:
            raise ZeroDivisionError("control point at infinity (w = 0)")
        return self.pw / self.w

    @property
    def q(self) -> float:
        if not self.finite_control:
            raise ZeroDivisionError("control point at infinity (w = 0)")
        return self.qw / self.w

    def basis_coeffs(self):
        """Ascending power-basis coefficients of (X, Y, W)."""
        X = (-1.0, 2.0 + 2.0 * self.pw, -1.0 - 2.0 * self.pw + self.j)
        Y = (0.0, 2.0 * self.qw, -2.0 * self.qw)
        W = (1.0, -2.0 + 2.0 * self.w, 1.0 - 2.0 * self.w + self.j)
        return X, Y, W


@dataclass(frozen=True)
class ConicEndpointData:
    """Boundary G2 data plus weighted control-polygon sides."""

    alpha: float
    beta: float
    a: float
    b: float
    h1w: float
    h2w: float


class ConicType(enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    DEGENERATE = "degenerate"


def evaluate_basis(arc: ConicArc, t: float):
    """(X(t), Y(t), W(t)); always defined."""
    u = 1.0 - t
    X = -u * u + 2.0 * arc.pw * u * t + arc.j * t * t
    Y = 2.0 * arc.qw * t * u
    W = u * u + 2.0 * arc.w * u * t + arc.j * t * t
    return X, Y, W


def evaluate(arc: ConicArc, t: float):
    """Point (x, y) = (X/W, Y/W); raises AtInfinity near a weight zero."""
    X, Y, W = evaluate_basis(arc, t)
    if abs(W) < 1e-13 * max(abs(X), abs(Y), 1.0):
        raise AtInfinity(t, X, Y)
    return X / W, Y / W


def _first_derivatives(arc: ConicArc, t: float):
    u = 1.0 - t
    Xp = 2.0 * u + 2.0 * arc.pw * (1.0 - 2.0 * t) + 2.0 * arc.j * t
    Yp = 2.0 * arc.qw * (1.0 - 2.0 * t)
    Wp = -2.0 * u + 2.0 * arc.w * (1.0 - 2.0 * t) + 2.0 * arc.j * t
    return Xp, Yp, Wp


def curvature(arc: ConicArc, t: float) -> float:
    """Signed curvature k(t) = -8 j q_w W^3 / G^(3/2)."""
    X, Y, W = evaluate_basis(arc, t)
    Xp, Yp, Wp = _first_derivatives(arc, t)
    U = Xp * W - X * Wp
    V = Yp * W - Y * Wp
    G = U * U + V * V
    if G == 0.0:
        raise SingularParametrization(f"zero speed at t={t}")
    return -8.0 * arc.j * arc.qw * W ** 3 / G ** 1.5


def tangent_angle(arc: ConicArc, t: float) -> float:
    """Direction of the velocity vector, in (-pi, pi]."""
    X, Y, W = evaluate_basis(arc, t)
    Xp, Yp, Wp = _first_derivatives(arc, t)
    U = Xp * W - X * Wp
    V = Yp * W - Y * Wp
    if U == 0.0 and V == 0.0:
        raise SingularParametrization(f"zero speed at t={t}")
    # velocity = (U, V)/W^2, and W^2 >= 0, so (U, V) carries the direction
    return math.atan2(V, U)


def endpoint_data(arc: ConicArc) -> ConicEndpointData:
    """Boundary angles and curvatures from the weighted closed forms.

    The weighted forms are complete: the w/|w| sign factor of the unweighted
    forms cancels against |w| in h1 = h1w/|w|, so no sign limit is needed at
    w = 0.
    """
    h1w = math.hypot(arc.w + arc.pw, arc.qw)
    h2w = math.hypot(arc.w - arc.pw, arc.qw)
    if h1w == 0.0 or h2w == 0.0:
        raise DegenerateControlPolygon("weighted polygon side has zero length")
    alpha = math.atan2(arc.qw / h1w, (arc.w + arc.pw) / h1w)
    beta = math.atan2(-arc.j * arc.qw / h2w, arc.j * (arc.w - arc.pw) / h2w)
    a = -arc.j * arc.qw / h1w ** 3
    b = -arc.qw / h2w ** 3
    return ConicEndpointData(alpha, beta, a, b, h1w, h2w)


def implicit_invariants(arc: ConicArc):
    """(I1, I2, I3) of the implicit quadratic form."""
    q2 = arc.qw * arc.qw
    I3 = -arc.j * q2 * q2
    I2 = (arc.j - arc.w * arc.w) * q2
    I1 = arc.pw * arc.pw + q2 + arc.j - arc.w * arc.w
    return I1, I2, I3


def implicit_residual(arc: ConicArc, x: float, y: float) -> float:
    """Value of the implicit equation at (x, y); zero on the conic."""
    q2 = arc.qw * arc.qw
    return (q2 * x * x - 2.0 * arc.pw * arc.qw * x * y
            + (arc.pw * arc.pw + arc.j - arc.w * arc.w) * y * y
            + 2.0 * arc.w * arc.qw * y - q2)


def classify(arc: ConicArc) -> ConicType:
    if arc.qw == 0.0:
        return ConicType.DEGENERATE
    if arc.j == -1:
        return ConicType.HYPERBOLA
    aw = abs(arc.w)
    if aw < 1.0:
        return ConicType.ELLIPSE
    if aw == 1.0:
        return ConicType.PARABOLA
    return ConicType.HYPERBOLA


def discontinuities(arc: ConicArc):
    """Parameters in (0,1) where W vanishes; only j=-1 arcs have one."""
    if arc.j != -1:
        return []
    t2 = 1.0 / (1.0 - arc.w + math.sqrt(1.0 + arc.w * arc.w))
    assert 0.0 < t2 < 1.0
    return [t2]


def reduce_weights(w1: float, w2: float):
    """Reduce a general weight triple {1, w1, w2} to the canonical {1, w, j}.

    The linear reparametrization t -> t/(t + (1-t)sqrt(|w2|)) maps [0,1] onto
    itself and leaves the traced point set unchanged.
    """
    if w2 == 0.0:
        raise ValueError("w2 must be nonzero")
    return w1 / math.sqrt(abs(w2)), (1 if w2 > 0.0 else -1)


def vertex_free(arc: ConicArc) -> bool:
    """Sufficient vertex-freeness test via the two bounding circles.

    A False result means "not certified", not "provably has a vertex".
    Control points at infinity (w=0) must use the family's angular test.
    """
    if not arc.finite_control:
        raise UseThetaFormTest("w = 0: use the theta-form spirality test")
    p, q = arc.p, arc.q
    rw = arc.j / (2.0 * arc.w * arc.w)
    xw = 1.0 - rw
    K1 = (p + xw) ** 2 + q * q - rw * rw
    K2 = (p - xw) ** 2 + q * q - rw * rw
    if arc.j == 1:
        return arc.w >= SQRT_HALF and p != 0.0 and K1 * K2 <= 0.0
    return (arc.w > 0.0 and K1 <= 0.0) or (arc.w < 0.0 and K2 <= 0.0)


def invariant_sigma(arc: ConicArc) -> float:
    """Moebius-invariant lens angle of the arc.

    Short convex arcs (j=+1) give alpha+beta directly; discontinuous arcs
    (j=-1) need the +2*pi cumulative correction.
    """
    d = endpoint_data(arc)
    return d.alpha + d.beta + (TWO_PI if arc.j == -1 else 0.0)


def invariant_g1g2(arc: ConicArc) -> float:
    """Product (a + sin alpha)(b - sin beta) entering the Q invariant."""
    d = endpoint_data(arc)
    return (d.a + math.sin(d.alpha)) * (d.b - math.sin(d.beta))
