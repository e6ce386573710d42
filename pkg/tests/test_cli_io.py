import json
import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from spiralinv.cli_io.cli import (EXIT_GATE, EXIT_OK, EXIT_VALIDATION, main)
from spiralinv.cli_io.records import (SCHEMA_CUBICS, SCHEMA_FAMILY, dumps,
                                      load_problem, parse_problem_obj)
from spiralinv.errors import ValidationError

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def run_family(tmp_path, name="long_spiral.json", extra=()):
    out = tmp_path / "family.json"
    rc = main(["family", "--input", str(PROBLEMS / name),
               "--out", str(out), *extra])
    return rc, out


def test_problem_parsing_units():
    A, B = load_problem(PROBLEMS / "long_spiral.json")
    assert A.tau == pytest.approx(math.radians(-150.0))
    assert B.k == pytest.approx(0.3)
    # explicit override wins over the file's unit flag
    A2, _ = load_problem(PROBLEMS / "cubic_demo.json", "radians")
    assert A2.tau == pytest.approx(-0.1)


def test_problem_parsing_rejects_bad_values():
    with pytest.raises(ValidationError):
        parse_problem_obj({"A": {"x": 0, "y": 0, "tau": 0, "k": float("nan")},
                           "B": {"x": 1, "y": 0, "tau": 0, "k": 0}})
    with pytest.raises(ValidationError):
        parse_problem_obj({"A": {"x": 0, "y": 0, "tau": 0, "k": 0}})
    with pytest.raises(ValidationError):
        parse_problem_obj({"A": {"x": 0, "y": 0, "tau": 0, "k": 0},
                           "B": {"x": 1, "y": 0, "tau": 0, "k": 0},
                           "C": {}})
    with pytest.raises(ValidationError):
        parse_problem_obj({"angle_unit": "grads",
                           "A": {"x": 0, "y": 0, "tau": 0, "k": 0},
                           "B": {"x": 1, "y": 0, "tau": 0, "k": 0}})


def test_family_command_writes_document(tmp_path):
    rc, out = run_family(tmp_path)
    assert rc == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["schema"] == SCHEMA_FAMILY
    assert doc["invariants"]["sigma_deg"] == pytest.approx(90.0)
    thetas = [s["theta_deg"] for s in doc["solutions"]]
    assert 0.0 in thetas
    assert thetas == sorted(thetas)
    assert len(doc["solutions"]) == 27
    rec = doc["solutions"][0]
    assert len(rec["samples"]["t"]) == doc["samples_per_curve"]
    assert rec["samples"]["x"][0] == pytest.approx(-1.0)
    assert rec["samples"]["x"][-1] == pytest.approx(1.0)


def test_family_command_is_deterministic(tmp_path):
    _, out1 = run_family(tmp_path)
    first = out1.read_bytes()
    _, out2 = run_family(tmp_path)
    assert out2.read_bytes() == first


def test_family_gate_exit_code(tmp_path):
    rc, _ = run_family(tmp_path, name="circular_arc.json")
    assert rc == EXIT_GATE


def test_family_validation_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc = main(["family", "--input", str(bad), "--out", str(tmp_path / "x.json")])
    assert rc == EXIT_VALIDATION


def test_cubic_command_document(tmp_path):
    out = tmp_path / "cubics.json"
    rc = main(["cubic", "--input", str(PROBLEMS / "cubic_demo.json"),
               "--out", str(out)])
    assert rc == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["schema"] == SCHEMA_CUBICS
    assert len(doc["solutions"]) == 1
    rec = doc["solutions"][0]
    assert rec["degree"] == 3
    assert rec["T"] == pytest.approx(-0.0612, abs=5e-4)
    assert rec["theta_deg"] == pytest.approx(math.degrees(-0.3137), abs=0.05)
    # dispositions: one entry per real root of the degree-6 equation
    monic = doc["equation"]["monic_ascending"]
    assert len(monic) == 7
    from spiralinv.cubic import real_roots
    assert len(doc["roots"]) == len(real_roots(monic))
    assert sum(1 for r in doc["roots"] if r["status"] == "accepted") == 1


def test_cubic_negative_case_empty_with_dispositions(tmp_path):
    prob = tmp_path / "wide.json"
    prob.write_text(json.dumps({
        "angle_unit": "degrees",
        "A": {"x": -1.0, "y": 0.0, "tau": 60.0, "k": -2.0},
        "B": {"x": 1.0, "y": 0.0, "tau": 60.0, "k": 2.0}}))
    out = tmp_path / "cubics.json"
    rc = main(["cubic", "--input", str(prob), "--out", str(out)])
    assert rc == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["solutions"] == []
    assert doc["roots"]  # dispositions still recorded


def test_svg_output_structure(tmp_path):
    out = tmp_path / "family.json"
    svg = tmp_path / "family.svg"
    rc = main(["family", "--input", str(PROBLEMS / "long_spiral.json"),
               "--out", str(out), "--svg", str(svg), "--samples", "120"])
    assert rc == EXIT_OK
    doc = json.loads(out.read_text())
    root = ET.fromstring(svg.read_text())
    ns = "{http://www.w3.org/2000/svg}"
    polys = root.findall(f"{ns}polyline")
    curves = [p for p in polys if p.get("class") == "curve"]
    plots = [p for p in polys if p.get("class") == "curvature-plot"]
    circles = [p for p in polys if p.get("class") == "curvature-circle"]
    assert len(curves) == len(doc["solutions"])
    assert len(plots) == len(doc["solutions"])
    assert len(circles) == 2  # both endpoint curvature circles drawn dashed
    # structural regression: polyline vertex count matches the sample count
    pts = curves[0].get("points").split()
    assert len(pts) == 120
    # re-render is byte-identical
    text1 = svg.read_text()
    rc = main(["family", "--input", str(PROBLEMS / "long_spiral.json"),
               "--out", str(out), "--svg", str(svg), "--samples", "120"])
    assert svg.read_text() == text1


def test_svg_polyline_tracks_samples(tmp_path):
    out = tmp_path / "f.json"
    svg = tmp_path / "f.svg"
    main(["family", "--input", str(PROBLEMS / "long_spiral.json"),
          "--out", str(out), "--svg", str(svg), "--samples", "64"])
    doc = json.loads(out.read_text())
    root = ET.fromstring(svg.read_text())
    ns = "{http://www.w3.org/2000/svg}"
    curves = [p for p in root.findall(f"{ns}polyline")
              if p.get("class") == "curve"]
    raw = [tuple(map(float, pair.split(","))) for pair in
           curves[0].get("points").split()]
    xs = doc["solutions"][0]["samples"]["x"]
    ys = doc["solutions"][0]["samples"]["y"]
    # the affine panel map preserves x-order and aspect ratio
    import numpy as np
    sx = (raw[-1][0] - raw[0][0]) / (xs[-1] - xs[0])
    for (px, py), x, y in zip(raw, xs, ys):
        assert px == pytest.approx(raw[0][0] + sx * (x - xs[0]), abs=2e-3)
        assert py == pytest.approx(raw[0][1] - sx * (y - ys[0]), abs=2e-3)


def test_stdout_output(tmp_path, capsys):
    rc = main(["family", "--input", str(PROBLEMS / "long_spiral.json")])
    assert rc == EXIT_OK
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["schema"] == SCHEMA_FAMILY


def test_json_round_trip_full_precision():
    from spiralinv.cli_io.records import dumps
    vals = [0.1 + 0.2, 1.0 / 3.0, math.pi, -1.2345678901234567e-8]
    text = dumps({"v": vals})
    back = json.loads(text)["v"]
    assert back == vals  # exact doubles survive the round trip
