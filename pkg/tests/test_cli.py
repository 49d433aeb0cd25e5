import json
import sys
import subprocess
import xml.etree.ElementTree as ET

import pytest

from polartwins.arbelos import make_arbelos
from polartwins.cli import main, parse_args
from polartwins.render import render_svg
from polartwins.report import status_from_document, sweep
from polartwins.scene import CONSTRUCTIONS, Scene, SceneSpec, build_scene, verify_scene

SVG = "{http://www.w3.org/2000/svg}"
TOP_KEYS = ["r1", "r2", "tolerance", "constructions"]
ENTRY_KEYS = ["name", "center", "radius", "expected_radius", "radius_rel_error", "constraints", "identities", "status"]


def test_parse_args_example():
    spec, _ = parse_args(["--r1", "2", "--r2", "1", "--construct", "twins,icircle", "--svg", "o.svg", "--report", "o.json"])
    assert (spec.r1, spec.r2) == (2.0, 1.0)
    assert spec.constructions == frozenset({"twins", "icircle"})
    spec, _ = parse_args(["--r1", "2", "--r2", "1", "--construct", "all"])
    assert spec.constructions == frozenset(CONSTRUCTIONS)


@pytest.mark.parametrize(
    "argv, message",
    [
        (["--r1", "0", "--r2", "1", "--construct", "all"], "radius must be positive"),
        (["--r1", "1", "--r2", "1", "--construct", "bogus"], "unknown construction"),
        (["--r1", "1", "--construct", "all"], "required"),
        (["--r1", "1", "--r2", "1", "--construct", "all", "--tol", "-1"], "tolerance must be positive"),
    ],
)
def test_usage_errors_exit_2(argv, message, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
    assert message in capsys.readouterr().err


def test_report_schema_and_order(tmp_path):
    out = tmp_path / "r.json"
    assert main(["--r1", "2", "--r2", "1", "--construct", "all", "--report", str(out)]) == 0
    raw = out.read_bytes()
    assert b"\r\n" not in raw
    doc = json.loads(raw)
    assert list(doc) == TOP_KEYS
    for entry in doc["constructions"]:
        assert list(entry) == ENTRY_KEYS
        assert all(list(k) == ["target", "kind", "residual"] for k in entry["constraints"])
        assert all(list(i) == ["name", "lhs", "rhs", "abs_error"] for i in entry["identities"])
        assert entry["status"] == "passed"
    assert status_from_document(doc)


def test_cousin_sum_identity_entry():
    reports = verify_scene(build_scene(SceneSpec(2, 1, frozenset({"twin_cousins"}))))
    sums = [i for r in reports for i in r.identities if i["name"] == "cousin_sum"]
    assert sums and all(i["lhs"] == pytest.approx(4.5) and i["rhs"] == pytest.approx(4.5) for i in sums)


def test_twin_expected_radius_is_exact_repr(tmp_path):
    out = tmp_path / "r.json"
    main(["--r1", "2", "--r2", "1", "--construct", "twins", "--report", str(out)])
    assert '"expected_radius": 0.6666666666666666' in out.read_text()


def test_failed_verification_exits_1(tmp_path, capsys):
    out = tmp_path / "r.json"
    # a tolerance no floating-point construction can meet
    code = main(["--r1", "2.1", "--r2", "1.3", "--construct", "all", "--tol", "1e-300", "--report", str(out)])
    assert code == 1
    doc = json.loads(out.read_text())
    assert any(c["status"] == "failed" for c in doc["constructions"])
    assert status_from_document(doc)
    assert "verification failed" in capsys.readouterr().err


def test_unwritable_report_exits_1(tmp_path, capsys):
    target = tmp_path / "missing" / "r.json"
    assert main(["--r1", "2", "--r2", "1", "--construct", "twins", "--report", str(target)]) == 1
    assert str(target) in capsys.readouterr().err


def test_round_trip_detects_tampering(tmp_path):
    out = tmp_path / "r.json"
    main(["--r1", "2", "--r2", "1", "--construct", "twins", "--report", str(out)])
    doc = json.loads(out.read_text())
    doc["constructions"][0]["constraints"][0]["residual"] = 1e-3
    assert not status_from_document(doc)


def _svg(spec):
    return render_svg(build_scene(spec))


def test_svg_is_well_formed_and_lists_each_circle_once():
    spec = SceneSpec(2, 1, frozenset(CONSTRUCTIONS), show_conics=True, show_witnesses=True)
    text = _svg(spec)
    root = ET.fromstring(text)
    assert root.tag == SVG + "svg" and root.get("version") == "1.1"
    names = [c.name for c in build_scene(spec).constructions]
    drawn = [e.get("data-name") for e in root.iter(SVG + "circle") if e.get("class") == "construction"]
    assert sorted(drawn) == sorted(names)
    assert len(drawn) == len(set(drawn))
    for e in root.iter(SVG + "circle"):
        if e.get("class") == "construction":
            assert e.get("data-status") == "passed"
    assert any(e.get("class") == "conic" for e in root.iter(SVG + "polyline"))


def test_svg_is_byte_stable():
    spec = SceneSpec(2, 1, frozenset(CONSTRUCTIONS), show_conics=True)
    assert _svg(spec) == _svg(spec)


def test_symmetric_twins_touch_the_vertical_line():
    root = ET.fromstring(_svg(SceneSpec(1, 1, frozenset({"twins"}))))
    circles = [e for e in root.iter(SVG + "circle") if e.get("class") == "construction"]
    assert len(circles) == 2
    r = {float(e.get("r")) for e in circles}
    assert len(r) == 1
    mid = float(root.get("width")) / 2
    for e in circles:
        assert abs(abs(float(e.get("cx")) - mid) - float(e.get("r"))) < 1e-4


def test_empty_scene_renders_skeleton_only():
    a = make_arbelos(2, 1)
    scene = Scene(SceneSpec(2, 1, frozenset({"twins"})), a, None)
    root = ET.fromstring(render_svg(scene))
    classes = {e.get("class") for e in root.iter() if e.get("class")}
    assert classes == {"skeleton"}


def test_sweep_report(tmp_path):
    doc = sweep(5, seed=3)
    assert doc["status"] == "passed" and doc["failures"] == []
    assert doc["max_residual"] < 1e-7
    out = tmp_path / "s.json"
    assert main(["--sweep", "4", "--seed", "1", "--report", str(out)]) == 0
    assert json.loads(out.read_text())["sweep"] == 4
    assert sweep(3, seed=9) == sweep(3, seed=9)


def test_module_entry_point(tmp_path):
    svg = tmp_path / "f.svg"
    proc = subprocess.run(
        [sys.executable, "-m", "polartwins", "--r1", "2", "--r2", "1", "--construct", "twins", "--svg", str(svg)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert json.loads(proc.stdout)["constructions"][0]["name"] == "twin_1"
    ET.parse(svg)
