"""Command-line interface.

    spiralinv family --input problem.json [--dtheta 2] [--samples 200]
                     [--out family.json] [--svg family.svg]
    spiralinv cubic  --input problem.json [--samples 200] [--out ...] [--svg ...]
    spiralinv serve  [--port 8787] [--static frontend/dist]

Exit codes: 0 ok, 2 invalid input, 3 solvability gate (no spiral / wide
lens), 4 internal error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .. import cubic as cubic_mod
from .. import family as family_mod
from ..errors import GateError, SpiralInvError, ValidationError
from ..problem import compute_invariants, make_increasing, normalize
from . import records
from .server import make_server
from .svgplot import document_svg

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_GATE = 3
EXIT_INTERNAL = 4


def _unit_override(args):
    if getattr(args, "degrees", False):
        return "degrees"
    if getattr(args, "radians", False):
        return "radians"
    return None


def _emit(args, doc) -> None:
    text = records.dumps(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if getattr(args, "svg", None):
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(document_svg(doc))


def _emit_error(exc) -> int:
    sys.stderr.write(records.dumps(records.error_document(exc)))
    if isinstance(exc, ValidationError):
        return EXIT_VALIDATION
    if isinstance(exc, GateError):
        return EXIT_GATE
    return EXIT_INTERNAL


def _load_and_prepare(args):
    A, B = records.load_problem(args.input, _unit_override(args))
    prob, _ = normalize(A, B)
    prob, _ = make_increasing(prob)
    return A, B, compute_invariants(prob)


def cmd_family(args) -> int:
    try:
        A, B, prob = _load_and_prepare(args)
        dtheta = math.radians(args.dtheta)
        if not (0.0 < dtheta <= math.pi):
            raise ValidationError("--dtheta out of range")
        sols, outcomes = family_mod.family_sweep(prob, dtheta)
        doc = records.family_document(A, B, prob, sols, outcomes, dtheta,
                                      args.samples)
        _emit(args, doc)
        return EXIT_OK
    except (ValidationError, GateError, SpiralInvError, OSError) as e:
        return _emit_error(e)


def cmd_cubic(args) -> int:
    try:
        A, B, prob = _load_and_prepare(args)
        eq = cubic_mod.build_equation(prob)
        cubics, outcomes = cubic_mod.cubic_sweep(prob)
        doc = records.cubics_document(A, B, prob, eq, cubics, outcomes,
                                      args.samples)
        _emit(args, doc)
        return EXIT_OK
    except (ValidationError, GateError, SpiralInvError, OSError) as e:
        return _emit_error(e)


def cmd_serve(args) -> int:
    try:
        server = make_server(args.port, args.static)
        host, port = server.server_address[:2]
        sys.stderr.write(f"serving on http://{host}:{port}\n")
        try:
            server.serve_forever()
        except KeyboardInterrupt:
            pass
        finally:
            server.server_close()
        return EXIT_OK
    except OSError as e:
        return _emit_error(ValidationError(str(e)))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spiralinv",
        description="Two-point G2 Hermite interpolation with rational spirals")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(p, dtheta=False):
        p.add_argument("--input", required=True, help="problem JSON file")
        if dtheta:
            p.add_argument("--dtheta", type=float, default=2.0,
                           help="family parameter step, degrees (default 2)")
        p.add_argument("--samples", type=int, default=records.DEFAULT_SAMPLES,
                       help="samples per emitted curve")
        p.add_argument("--out", help="output JSON path (default stdout)")
        p.add_argument("--svg", help="also write a two-panel SVG plot")
        unit = p.add_mutually_exclusive_group()
        unit.add_argument("--degrees", action="store_true",
                          help="interpret input tangents in degrees")
        unit.add_argument("--radians", action="store_true",
                          help="interpret input tangents in radians")

    pf = sub.add_parser("family", help="construct the quartic spiral family")
    add_io(pf, dtheta=True)
    pf.set_defaults(func=cmd_family)

    pc = sub.add_parser("cubic", help="find rational cubic spiral members")
    add_io(pc)
    pc.set_defaults(func=cmd_cubic)

    ps = sub.add_parser("serve", help="HTTP API (and optional explorer assets)")
    ps.add_argument("--port", type=int, default=8787)
    ps.add_argument("--static", help="directory of built explorer assets")
    ps.set_defaults(func=cmd_serve)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
