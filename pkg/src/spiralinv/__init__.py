"""Two-point G2 Hermite interpolation with rational spirals by inversion of conics.

Typical use:

    from spiralinv import G2Point, prepare, build_family, find_cubics

    A = G2Point(-1.0, 0.0, tau=-2.617993877991494, k=-0.4)
    B = G2Point(1.0, 0.0, tau=-2.0943951023931953, k=0.3)
    prob = prepare(A, B)            # normalize + invariants + gates
    members = build_family(prob)    # quartic spiral family over theta
    cubics = find_cubics(prob)      # degree-3 members, when they exist
"""

from .conic import (ConicArc, ConicEndpointData, ConicType, classify,
                    discontinuities, endpoint_data, vertex_free)
from .cubic import (CubicEquation, CubicSpiral, bernstein, build_cubic,
                    build_equation, candidates_from_roots, compute_T,
                    cubic_sweep, find_cubics, real_roots)
from .errors import (AtInfinity, CenterAtParameterInfinity, CuspDetected,
                     DegenerateChord, DegenerateControlPolygon, DegreeDrop,
                     ExcludedPoint, GateError, InconsistentSolution,
                     NonSpiralArtifact, NoRealSolution, NoSpiralExists,
                     ReductionFailed, SingularParametrization, SpiralInvError,
                     UseThetaFormTest, ValidationError, WideLens)
from .family import (FamilyCandidate, FamilySolution, MoebiusMap, ThetaOutcome,
                     ThetaRange, build_family, build_quartic, evaluate_theta,
                     family_sweep, locus_point, moebius_params, solve_N,
                     spirality_test, theta_range)
from .problem import (G2Point, NormalizedProblem, SimilarityTransform,
                      compute_invariants, denormalize, make_increasing,
                      normalize, prepare, wrap_angle)
from .sampling import (CurveSample, RationalCurve, monotonicity_audit, sample)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
