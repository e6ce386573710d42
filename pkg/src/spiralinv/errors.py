"""Exception hierarchy for the spiral interpolation kernel.

Gate errors (NoSpiralExists, WideLens) signal that the input data admits no
solution of the kind this library constructs; they are expected outcomes, not
bugs, and the CLI maps them to a dedicated exit code.
"""


class SpiralInvError(Exception):
    """Base class for all library errors."""


class ValidationError(SpiralInvError):
    """Malformed or out-of-domain input (bad file, NaN, coincident points)."""


class DegenerateChord(ValidationError):
    """The two data points coincide; no chord to normalize onto."""


class GateError(SpiralInvError):
    """Input is valid but provably outside the solvable regime."""


class NoSpiralExists(GateError):
    """Q >= 0: the data is in the circle/biarc regime, no one-piece spiral."""


class WideLens(GateError):
    """sigma > pi after angle correction; the construction does not apply."""


class AtInfinity(SpiralInvError):
    """A rational curve was evaluated at a parameter where its weight vanishes.

    Carries the homogeneous numerator values so projective consumers can still
    use the direction.
    """

    def __init__(self, t, X, Y):
        super().__init__(f"point at infinity at t={t}")
        self.t = t
        self.X = X
        self.Y = Y


class SingularParametrization(SpiralInvError):
    """Zero first-derivative speed where a regular point was required."""


class DegenerateControlPolygon(SpiralInvError):
    """A weighted polygon side has zero length; endpoint data undefined."""


class UseThetaFormTest(SpiralInvError):
    """vertex_free asked for a conic with control point at infinity (w=0);
    use the family's angular spirality test instead."""


class ExcludedPoint(SpiralInvError):
    """Locus parameter hits theta = +/-sigma where the control point degenerates."""


class NoRealSolution(SpiralInvError):
    """The weight equation has no real root at this theta (outside Theta0)."""


class InconsistentSolution(SpiralInvError):
    """A weight root incompatible with increasing curvature (r01*r02 <= 0)."""


class NonSpiralArtifact(SpiralInvError):
    """Constructed quartic has a denominator zero inside [0,1] (curve escapes
    to infinity between the endpoints) and is rejected."""


class CuspDetected(SpiralInvError):
    """Sampling found zero speed at a node; the curve is not regular."""


class CenterAtParameterInfinity(SpiralInvError):
    """The inversion center corresponds to no finite parameter on the conic."""


class ReductionFailed(SpiralInvError):
    """Quartic-to-cubic cancellation did not verify within tolerance.

    Carries the parent quartic so callers can fall back to it.
    """

    def __init__(self, message, quartic=None):
        super().__init__(message)
        self.quartic = quartic


class DegreeDrop(SpiralInvError):
    """Leading coefficient of the constructed polynomial vanished."""
