"""
Writing figures and reports
===========================

The same scene the command line builds, driven from Python.  Writes an SVG
with the loci drawn and a JSON report next to this script.
"""

from pathlib import Path

from polartwins.render import render_svg
from polartwins.report import sweep, write_report
from polartwins.scene import CONSTRUCTIONS, SceneSpec, build_scene, verify_scene

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)

spec = SceneSpec(2.0, 1.0, frozenset(CONSTRUCTIONS), show_conics=True)
scene = build_scene(spec)
reports = verify_scene(scene)
(out / "arbelos.svg").write_text(render_svg(scene))
(out / "arbelos.json").write_text(write_report(reports, spec.r1, spec.r2, spec.tol))
for r in reports:
    print(f"{r.name:15s} radius {r.radius:.12f} expected {r.expected_radius:.12f} {r.status}")

# a small random sweep such as a CI job would run
summary = sweep(25, seed=1)
print("sweep:", summary["status"], "max residual", summary["max_residual"])
print("wrote", *sorted(p.name for p in out.iterdir()))
