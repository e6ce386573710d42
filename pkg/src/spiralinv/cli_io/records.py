"""JSON schemas: problem files in, solution documents out.

All documents carry a versioned `schema` field. Angles are emitted in both
radians and degrees; floats go through Python's shortest-round-trip repr, so
re-reading a document reproduces the exact doubles and identical inputs
yield byte-identical outputs.
"""

from __future__ import annotations

import json
import math

from ..cubic import CubicSpiral
from ..errors import GateError, SpiralInvError, ValidationError
from ..family import FamilySolution, theta_range
from ..problem import G2Point, NormalizedProblem, denormalize
from ..sampling import sample

SCHEMA_PROBLEM = "spiralinv/problem/1"
SCHEMA_RECORD = "spiralinv/solution-record/1"
SCHEMA_FAMILY = "spiralinv/family/1"
SCHEMA_CUBICS = "spiralinv/cubics/1"
SCHEMA_ERROR = "spiralinv/error/1"

DEFAULT_SAMPLES = 200


def _require_number(obj, key, where):
    v = obj.get(key)
    if not isinstance(v, (int, float)) or isinstance(v, bool):
        raise ValidationError(f"{where}.{key} must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise ValidationError(f"{where}.{key} is not finite: {v!r}")
    return v


def parse_problem_obj(obj, unit_override=None):
    """Validate a problem dict and return (A, B) as G2Points (radians)."""
    if not isinstance(obj, dict):
        raise ValidationError("problem must be a JSON object")
    unknown = set(obj) - {"schema", "angle_unit", "A", "B"}
    if unknown:
        raise ValidationError(f"unknown problem fields: {sorted(unknown)}")
    unit = unit_override or obj.get("angle_unit", "radians")
    if unit not in ("degrees", "radians"):
        raise ValidationError(f"angle_unit must be degrees|radians, got {unit!r}")
    points = []
    for name in ("A", "B"):
        rec = obj.get(name)
        if not isinstance(rec, dict):
            raise ValidationError(f"missing G2 record {name}")
        x = _require_number(rec, "x", name)
        y = _require_number(rec, "y", name)
        tau = _require_number(rec, "tau", name)
        k = _require_number(rec, "k", name)
        if unit == "degrees":
            tau = math.radians(tau)
        points.append(G2Point(x, y, tau, k))
    return points[0], points[1]


def load_problem(path, unit_override=None):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON in {path}: {e}") from e
    return parse_problem_obj(obj, unit_override)


def problem_echo(A: G2Point, B: G2Point) -> dict:
    return {
        "schema": SCHEMA_PROBLEM,
        "angle_unit": "radians",
        "A": {"x": A.x, "y": A.y, "tau": A.tau, "k": A.k},
        "B": {"x": B.x, "y": B.y, "tau": B.tau, "k": B.k},
    }


def invariants_dict(prob: NormalizedProblem) -> dict:
    rng = theta_range(prob)
    return {
        "g1": prob.g1,
        "g2": prob.g2,
        "Q": prob.Q,
        "sigma_rad": prob.sigma,
        "sigma_deg": math.degrees(prob.sigma),
        "omega_rad": prob.omega,
        "gamma_rad": prob.gamma,
        "gamma_deg": math.degrees(prob.gamma),
        "long_spiral": prob.long_spiral,
        "reflected": prob.transform.reflect,
        "theta_range": {
            "Theta_rad": rng.Theta,
            "Theta_deg": math.degrees(rng.Theta),
            "Theta0_rad": rng.Theta0,
            "Theta1_rad": rng.Theta1,
        },
    }


def _samples_block(curve, prob: NormalizedProblem, n: int) -> dict:
    user = denormalize(sample(curve, n), prob.transform)
    return {
        "t": [cs.t for cs in user],
        "x": [cs.x for cs in user],
        "y": [cs.y for cs in user],
        "tau": [cs.tau for cs in user],
        "s": [cs.s for cs in user],
        "k": [cs.k for cs in user],
    }


def solution_record(sol: FamilySolution, prob: NormalizedProblem,
                    n_samples: int = DEFAULT_SAMPLES) -> dict:
    c = sol.candidate
    return {
        "schema": SCHEMA_RECORD,
        "degree": 4,
        "theta_rad": c.theta,
        "theta_deg": math.degrees(c.theta),
        "root": c.root,
        "j": c.j,
        "N": c.N,
        "w": c.w,
        "pw": c.pw,
        "qw": c.qw,
        "r0": sol.map.r0,
        "lambda0_rad": sol.map.lambda0,
        "lambda0_deg": math.degrees(sol.map.lambda0),
        "T": None,
        "samples": _samples_block(sol.quartic, prob, n_samples),
        "diagnostics": {},
    }


def cubic_record(cub: CubicSpiral, prob: NormalizedProblem,
                 n_samples: int = DEFAULT_SAMPLES) -> dict:
    c = cub.candidate
    return {
        "schema": SCHEMA_RECORD,
        "degree": 3,
        "theta_rad": c.theta,
        "theta_deg": math.degrees(c.theta),
        "root": c.root,
        "j": c.j,
        "N": c.N,
        "w": c.w,
        "pw": c.pw,
        "qw": c.qw,
        "r0": cub.map.r0,
        "lambda0_rad": cub.map.lambda0,
        "lambda0_deg": math.degrees(cub.map.lambda0),
        "T": cub.T,
        "bernstein": {"X3": list(cub.X3), "Y3": list(cub.Y3), "W3": list(cub.W3)},
        "samples": _samples_block(cub.curve, prob, n_samples),
        "diagnostics": {},
    }


def family_document(A, B, prob, solutions, outcomes, dtheta,
                    n_samples: int = DEFAULT_SAMPLES) -> dict:
    return {
        "schema": SCHEMA_FAMILY,
        "problem": problem_echo(A, B),
        "invariants": invariants_dict(prob),
        "dtheta_deg": math.degrees(dtheta),
        "samples_per_curve": n_samples,
        "solutions": [solution_record(s, prob, n_samples) for s in solutions],
        "rejected": [
            {"theta_rad": o.theta, "theta_deg": math.degrees(o.theta),
             "root": o.root, "status": o.status, "detail": o.detail}
            for o in outcomes if o.status != "accepted"
        ],
    }


def cubics_document(A, B, prob, equation, cubics, outcomes,
                    n_samples: int = DEFAULT_SAMPLES) -> dict:
    return {
        "schema": SCHEMA_CUBICS,
        "problem": problem_echo(A, B),
        "invariants": invariants_dict(prob),
        "equation": {
            "A1": equation.A1, "B1": equation.B1, "C1": equation.C1,
            "A2": equation.A2, "C2": equation.C2,
            "monic_ascending": list(equation.poly),
        },
        "roots": [
            {"v": o.v, "theta_rad": o.theta, "theta_deg": math.degrees(o.theta),
             "status": o.status, "detail": o.detail}
            for o in outcomes
        ],
        "solutions": [cubic_record(c, prob, n_samples) for c in cubics],
    }


def error_document(exc: Exception) -> dict:
    if isinstance(exc, ValidationError):
        kind = "validation"
    elif isinstance(exc, GateError):
        kind = "gate"
    elif isinstance(exc, SpiralInvError):
        kind = "internal"
    else:
        kind = "internal"
    return {
        "schema": SCHEMA_ERROR,
        "error": {"code": type(exc).__name__, "kind": kind, "message": str(exc)},
    }


def dumps(doc) -> str:
    """Deterministic JSON text (stable key order, shortest-repr floats)."""
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"
