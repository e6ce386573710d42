"""Exact-derivative sampling of rational curves.

All derivatives on the product path come from polynomial algebra (quotient
rule on the numerator/denominator coefficient vectors); finite differences
appear only in tests as oracles. Tangent angles are unwrapped so adjacent
samples never jump by 2*pi, and cumulative arc length uses composite 5-point
Gauss-Legendre between samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CuspDetected

AUDIT_SAMPLES = 2001
PLOT_SAMPLES = 200


@dataclass(frozen=True)
class RationalCurve:
    """Plane rational curve (x, y) = (x_num/den, y_num/den), coefficients ascending."""

    x_num: tuple
    y_num: tuple
    den: tuple

    @staticmethod
    def from_coeffs(x_num, y_num, den) -> "RationalCurve":
        return RationalCurve(tuple(map(float, x_num)),
                             tuple(map(float, y_num)),
                             tuple(map(float, den)))

    @property
    def degree(self) -> int:
        return max(len(self.x_num), len(self.y_num), len(self.den)) - 1

    def point(self, t: float):
        from ._poly import peval
        w = peval(self.den, t)
        return peval(self.x_num, t) / w, peval(self.y_num, t) / w

    def curvature(self, t: float) -> float:
        _, _, _, _, k = kernels.rational_frame(self.x_num, self.y_num, self.den,
                                               np.array([t]))
        return float(k[0])


@dataclass(frozen=True)
class CurveSample:
    t: float
    x: float
    y: float
    tau: float
    k: float
    s: float


def _unwrap(angles: np.ndarray) -> np.ndarray:
    out = angles.copy()
    two_pi = 2.0 * math.pi
    offset = 0.0
    for i in range(1, len(out)):
        d = out[i] + offset - out[i - 1]
        if d > math.pi:
            offset -= two_pi
        elif d < -math.pi:
            offset += two_pi
        out[i] += offset
    return out


def sample(curve: RationalCurve, n: int = PLOT_SAMPLES) -> list[CurveSample]:
    """n uniform-parameter samples with position, tangent angle, curvature
    and cumulative arc length."""
    if n < 2:
        raise ValueError("need at least 2 samples")
    ts = np.linspace(0.0, 1.0, n)
    x, y, dx, dy, k = kernels.rational_frame(curve.x_num, curve.y_num, curve.den, ts)
    speed2 = dx * dx + dy * dy
    if not np.all(speed2 > 0.0):
        bad = int(np.argmin(speed2))
        raise CuspDetected(f"zero speed at t={ts[bad]}")
    tau = _unwrap(np.arctan2(dy, dx))
    s = kernels.arc_length_cumulative(curve.x_num, curve.y_num, curve.den, ts)
    return [CurveSample(float(ts[i]), float(x[i]), float(y[i]),
                        float(tau[i]), float(k[i]), float(s[i]))
            for i in range(n)]


def curvature_values(curve: RationalCurve, n: int = AUDIT_SAMPLES) -> np.ndarray:
    """Just the curvature row of sample(); cheap path for audits."""
    ts = np.linspace(0.0, 1.0, n)
    _, _, _, _, k = kernels.rational_frame(curve.x_num, curve.y_num, curve.den, ts)
    return k


def monotonicity_audit(samples, increasing: bool = True):
    """Check monotone curvature along already-sampled data.

    Accepts either a list of CurveSample or a plain curvature array. Returns
    (monotone, worst_violation) where worst_violation is the largest adjacent
    step against the required direction.
    """
    if len(samples) < 3:
        raise ValueError("need at least 3 samples")
    if isinstance(samples[0], CurveSample):
        k = np.array([s.k for s in samples])
    else:
        k = np.asarray(samples, dtype=float)
    steps = np.diff(k)
    if not increasing:
        steps = -steps
    worst = float(max(0.0, -steps.min()))
    k_range = float(k.max() - k.min())
    return worst <= 1e-9 * max(1.0, k_range), worst
