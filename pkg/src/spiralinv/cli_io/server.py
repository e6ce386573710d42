"""Stateless HTTP front end for the interpolation kernel.

Endpoints (all JSON, CORS-enabled):

    POST /solve                problem body -> invariants + theta range
    GET  /family?...           family records (+ rejected dispositions)
    GET  /member?...&theta_deg=&root=   one family member at a given theta
    GET  /cubics?...           rational-cubic records + root dispositions

GET endpoints carry the problem in query parameters (ax, ay, atau, ak, bx,
by, btau, bk, unit=degrees|radians) so every request is self-contained.
Anything else under / serves the optional static explorer directory.
"""

from __future__ import annotations

import json
import math
import mimetypes
import posixpath
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .. import cubic as cubic_mod
from .. import family as family_mod
from ..errors import GateError, SpiralInvError, ValidationError
from ..problem import G2Point, compute_invariants, make_increasing, normalize
from . import records


def _prepare(A, B):
    p, _ = normalize(A, B)
    p, _ = make_increasing(p)
    return compute_invariants(p)


def problem_from_query(q):
    def num(key):
        if key not in q:
            raise ValidationError(f"missing query parameter {key}")
        try:
            v = float(q[key][0])
        except ValueError as e:
            raise ValidationError(f"bad number for {key}: {q[key][0]!r}") from e
        if not math.isfinite(v):
            raise ValidationError(f"{key} is not finite")
        return v

    unit = q.get("unit", ["radians"])[0]
    if unit not in ("degrees", "radians"):
        raise ValidationError("unit must be degrees|radians")
    conv = math.radians if unit == "degrees" else (lambda x: x)
    A = G2Point(num("ax"), num("ay"), conv(num("atau")), num("ak"))
    B = G2Point(num("bx"), num("by"), conv(num("btau")), num("bk"))
    return A, B


def _int_param(q, key, default, lo, hi):
    if key not in q:
        return default
    try:
        v = int(q[key][0])
    except ValueError as e:
        raise ValidationError(f"bad integer for {key}") from e
    if not (lo <= v <= hi):
        raise ValidationError(f"{key} must be in [{lo}, {hi}]")
    return v


def _float_param(q, key, default):
    if key not in q:
        return default
    try:
        return float(q[key][0])
    except ValueError as e:
        raise ValidationError(f"bad number for {key}") from e


def handle_solve(body_obj):
    A, B = records.parse_problem_obj(body_obj)
    prob = _prepare(A, B)
    return {
        "schema": "spiralinv/solve/1",
        "problem": records.problem_echo(A, B),
        "invariants": records.invariants_dict(prob),
    }


def handle_family(q):
    A, B = problem_from_query(q)
    prob = _prepare(A, B)
    dtheta = math.radians(_float_param(q, "dtheta_deg",
                                       math.degrees(family_mod.DEFAULT_DTHETA)))
    if not (0.0 < dtheta <= math.pi):
        raise ValidationError("dtheta_deg out of range")
    n = _int_param(q, "samples", records.DEFAULT_SAMPLES, 2, 20001)
    sols, outcomes = family_mod.family_sweep(prob, dtheta)
    return records.family_document(A, B, prob, sols, outcomes, dtheta, n)


def handle_member(q):
    A, B = problem_from_query(q)
    prob = _prepare(A, B)
    if "theta_deg" not in q:
        raise ValidationError("missing theta_deg")
    theta = math.radians(_float_param(q, "theta_deg", 0.0))
    root = _int_param(q, "root", 2, 0, 2)
    n = _int_param(q, "samples", records.DEFAULT_SAMPLES, 2, 20001)
    rng = family_mod.theta_range(prob)
    if abs(theta) > rng.Theta:
        raise GateError(f"theta outside admissible range +-"
                        f"{math.degrees(rng.Theta):.4f} deg")
    outcomes = family_mod.evaluate_theta(prob, theta)
    for o in outcomes:
        if o.status == "accepted" and o.solution.candidate.root == root:
            return records.solution_record(o.solution, prob, n)
    # not accepted: report the disposition for this root (or the first)
    match = next((o for o in outcomes if o.root == root), outcomes[0])
    raise GateError(f"member rejected: {match.status}"
                    + (f" ({match.detail})" if match.detail else ""))


def handle_cubics(q):
    A, B = problem_from_query(q)
    prob = _prepare(A, B)
    n = _int_param(q, "samples", records.DEFAULT_SAMPLES, 2, 20001)
    eq = cubic_mod.build_equation(prob)
    cubics, outcomes = cubic_mod.cubic_sweep(prob)
    return records.cubics_document(A, B, prob, eq, cubics, outcomes, n)


def make_handler(static_dir=None):
    static_root = Path(static_dir).resolve() if static_dir else None

    class Handler(BaseHTTPRequestHandler):
        server_version = "spiralinv"
        protocol_version = "HTTP/1.1"

        def log_message(self, fmt, *args):  # keep test output quiet
            pass

        def _send(self, code, payload: bytes, content_type="application/json"):
            self.send_response(code)
            self.send_header("Content-Type", content_type)
            self.send_header("Content-Length", str(len(payload)))
            self.send_header("Access-Control-Allow-Origin", "*")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.end_headers()
            self.wfile.write(payload)

        def _send_json(self, code, doc):
            self._send(code, records.dumps(doc).encode("utf-8"))

        def _send_error_doc(self, exc):
            if isinstance(exc, ValidationError):
                code = 400
            elif isinstance(exc, (GateError, SpiralInvError)):
                code = 422
            else:
                code = 500
            self._send_json(code, records.error_document(exc))

        def do_OPTIONS(self):
            self._send(204, b"")

        def do_POST(self):
            parsed = urlparse(self.path)
            if parsed.path != "/solve":
                self._send_json(404, {"schema": records.SCHEMA_ERROR,
                                      "error": {"code": "NotFound", "kind":
                                                "validation",
                                                "message": parsed.path}})
                return
            try:
                length = int(self.headers.get("Content-Length", "0"))
                raw = self.rfile.read(length)
                try:
                    obj = json.loads(raw.decode("utf-8"))
                except (json.JSONDecodeError, UnicodeDecodeError) as e:
                    raise ValidationError(f"malformed JSON body: {e}") from e
                self._send_json(200, handle_solve(obj))
            except Exception as e:  # noqa: BLE001 - every error becomes JSON
                self._send_error_doc(e)

        def do_GET(self):
            parsed = urlparse(self.path)
            q = parse_qs(parsed.query)
            try:
                if parsed.path == "/family":
                    self._send_json(200, handle_family(q))
                elif parsed.path == "/member":
                    self._send_json(200, handle_member(q))
                elif parsed.path == "/cubics":
                    self._send_json(200, handle_cubics(q))
                else:
                    self._serve_static(parsed.path)
            except Exception as e:  # noqa: BLE001
                self._send_error_doc(e)

        def _serve_static(self, path):
            if static_root is None:
                raise ValidationError(f"no such endpoint: {path}")
            rel = posixpath.normpath(path.lstrip("/")) or "index.html"
            if rel in (".", ""):
                rel = "index.html"
            target = (static_root / rel).resolve()
            if not str(target).startswith(str(static_root)) or not target.is_file():
                if path == "/":
                    target = static_root / "index.html"
                if not target.is_file():
                    raise ValidationError(f"no such file: {path}")
            ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
            self._send(200, target.read_bytes(), content_type=ctype)

    return Handler


def make_server(port=0, static_dir=None) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), make_handler(static_dir))
