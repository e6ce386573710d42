"""Two-panel SVG output: curve family on the left, curvature-vs-arc-length
profiles on the right. Works off already-serialized solution documents so
the plot and the JSON can never disagree."""

from __future__ import annotations

import math

PANEL_W = 460.0
PANEL_H = 420.0
MARGIN = 36.0
GAP = 40.0

_PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
            "#17becf", "#8c564b", "#e377c2"]


def _fmt(v: float) -> str:
    return f"{v:.6g}"


class _Frame:
    """Maps data coordinates into a panel rectangle, preserving aspect."""

    def __init__(self, xmin, xmax, ymin, ymax, ox, keep_aspect=True):
        spanx = max(xmax - xmin, 1e-9)
        spany = max(ymax - ymin, 1e-9)
        sx = (PANEL_W - 2 * MARGIN) / spanx
        sy = (PANEL_H - 2 * MARGIN) / spany
        if keep_aspect:
            sx = sy = min(sx, sy)
        self.sx, self.sy = sx, sy
        self.cx = ox + 0.5 * (PANEL_W - sx * spanx) - sx * xmin
        self.cy = 0.5 * (PANEL_H - sy * spany) + sy * ymax

    def map(self, x, y):
        return self.cx + self.sx * x, self.cy - self.sy * y


def _polyline(frame, xs, ys, color, width="1.2", dash=None, cls=None):
    pts = " ".join("{},{}".format(_fmt(px), _fmt(py))
                   for px, py in (frame.map(x, y) for x, y in zip(xs, ys)))
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    cls_attr = f' class="{cls}"' if cls else ""
    return (f'<polyline{cls_attr} fill="none" stroke="{color}" '
            f'stroke-width="{width}"{extra} points="{pts}"/>')


def _circle_points(cx, cy, r, n=128):
    xs, ys = [], []
    for i in range(n + 1):
        u = 2.0 * math.pi * i / n
        xs.append(cx + r * math.cos(u))
        ys.append(cy + r * math.sin(u))
    return xs, ys


def _curvature_circle(rec_point):
    """Osculating circle of a G2 record, or None for near-zero curvature."""
    k = rec_point["k"]
    if abs(k) < 1e-9:
        return None
    r = 1.0 / k
    cx = rec_point["x"] - r * math.sin(rec_point["tau"])
    cy = rec_point["y"] + r * math.cos(rec_point["tau"])
    return cx, cy, abs(r)


def document_svg(doc) -> str:
    """Render a family or cubics document produced by records.py."""
    sols = doc["solutions"]
    prob = doc["problem"]
    curves = [(s["samples"], s.get("theta_deg", 0.0)) for s in sols]

    xs_all, ys_all = [], []
    overlays = []
    for name in ("A", "B"):
        cc = _curvature_circle(prob[name])
        if cc is not None:
            overlays.append(cc)
    for smp, _ in curves:
        xs_all.extend(smp["x"])
        ys_all.extend(smp["y"])
    for cx, cy, r in overlays:
        xs_all.extend((cx - r, cx + r))
        ys_all.extend((cy - r, cy + r))
    xs_all.extend((prob["A"]["x"], prob["B"]["x"]))
    ys_all.extend((prob["A"]["y"], prob["B"]["y"]))

    left = _Frame(min(xs_all), max(xs_all), min(ys_all), max(ys_all), 0.0)
    parts = []
    for cx, cy, r in overlays:
        oxs, oys = _circle_points(cx, cy, r)
        parts.append(_polyline(left, oxs, oys, "#999999", width="0.8",
                               dash="4,3", cls="curvature-circle"))
    parts.append(_polyline(left, [prob["A"]["x"], prob["B"]["x"]],
                           [prob["A"]["y"], prob["B"]["y"]],
                           "#bbbbbb", width="0.8", cls="chord"))
    for i, (smp, theta_deg) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(_polyline(left, smp["x"], smp["y"], color, cls="curve"))

    smin = 0.0
    smax = max((max(smp["s"]) for smp, _ in curves), default=1.0)
    kvals = [k for smp, _ in curves for k in smp["k"]]
    kmin, kmax = (min(kvals), max(kvals)) if kvals else (-1.0, 1.0)
    right = _Frame(smin, smax, kmin, kmax, PANEL_W + GAP, keep_aspect=False)
    rparts = []
    if kmin < 0.0 < kmax:
        rparts.append(_polyline(right, [smin, smax], [0.0, 0.0], "#bbbbbb",
                                width="0.8", cls="axis"))
    for i, (smp, theta_deg) in enumerate(curves):
        color = _PALETTE[i % len(_PALETTE)]
        rparts.append(_polyline(right, smp["s"], smp["k"], color,
                                cls="curvature-plot"))

    width = 2 * PANEL_W + GAP
    labels = [f'<text x="{_fmt(MARGIN)}" y="16" font-size="12" '
              f'fill="#444">shapes ({len(curves)} members)</text>',
              f'<text x="{_fmt(PANEL_W + GAP + MARGIN)}" y="16" font-size="12" '
              f'fill="#444">curvature vs arc length</text>']
    return ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(width)}" height="{_fmt(PANEL_H)}" '
            f'viewBox="0 0 {_fmt(width)} {_fmt(PANEL_H)}">\n'
            + "\n".join(labels + parts + rparts) + "\n</svg>\n")
