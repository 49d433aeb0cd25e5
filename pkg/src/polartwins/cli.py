"""Command-line front end.

Exit status: 0 when every construction verifies, 1 on a verification failure
(or an output error), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import GeometryError
from .geom_core import DEFAULT_TOL, Tolerance
from .render import render_svg
from .report import ReportError, dumps, save_text, sweep, write_report
from .scene import CONSTRUCTIONS, SceneSpec, build_scene, verify_scene


def _constructions(text: str) -> frozenset:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if names == ["all"]:
        return frozenset(CONSTRUCTIONS)
    unknown = [n for n in names if n not in CONSTRUCTIONS]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown construction {', '.join(unknown)}; choose from {', '.join(CONSTRUCTIONS)} or all"
        )
    if not names:
        raise argparse.ArgumentTypeError("empty construction list")
    return frozenset(names)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="polartwins",
        description="Construct and verify arbelos circles by polar reciprocity.",
    )
    p.add_argument("--r1", type=float, help="radius of the left inner circle")
    p.add_argument("--r2", type=float, help="radius of the right inner circle")
    p.add_argument("--construct", type=_constructions, default=None,
                   help=f"comma-separated subset of {','.join(CONSTRUCTIONS)}, or all")
    p.add_argument("--svg", metavar="PATH")
    p.add_argument("--report", metavar="PATH")
    p.add_argument("--show-conics", action="store_true")
    p.add_argument("--show-witnesses", action="store_true")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL.residual_eps,
                   help="tangency residual bound (default %(default)g)")
    p.add_argument("--sweep", type=int, metavar="N", help="verify N random (R1, R2) pairs instead")
    p.add_argument("--seed", type=int, default=0)
    return p


def parse_args(argv=None):
    """Return ``(spec_or_None, args)``.  ``spec`` is None in sweep mode."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not (math.isfinite(args.tol) and args.tol > 0):
        parser.error("tolerance must be positive")
    tol = Tolerance(residual_eps=args.tol)
    args.tolerance = tol
    if args.construct is None:
        args.construct = frozenset(CONSTRUCTIONS) if args.sweep is not None else None
    if args.sweep is not None:
        if args.sweep <= 0:
            parser.error("--sweep needs a positive sample count")
        return None, args
    if args.r1 is None or args.r2 is None:
        parser.error("--r1 and --r2 are required")
    for v in (args.r1, args.r2):
        if not (math.isfinite(v) and v > 0):
            parser.error("radius must be positive")
    if args.construct is None:
        parser.error("--construct is required")
    spec = SceneSpec(args.r1, args.r2, args.construct, args.show_conics, args.show_witnesses, tol)
    return spec, args


def main(argv=None) -> int:
    spec, args = parse_args(argv)
    try:
        if spec is None:
            doc = sweep(args.sweep, args.seed, args.construct, args.tolerance)
            text = dumps(doc)
            if args.report:
                save_text(args.report, text)
            else:
                sys.stdout.write(text)
            return 0 if doc["status"] == "passed" else 1

        scene = build_scene(spec)
        reports = verify_scene(scene)
        if args.svg:
            save_text(args.svg, render_svg(scene))
        text = write_report(reports, spec.r1, spec.r2, spec.tol)
        if args.report:
            save_text(args.report, text)
        else:
            sys.stdout.write(text)
    except ReportError as exc:
        print(f"polartwins: {exc}", file=sys.stderr)
        return 1
    except GeometryError as exc:
        print(f"polartwins: construction failed: {exc}", file=sys.stderr)
        return 1
    failed = [r.name for r in reports if not r.passed]
    if failed:
        print(f"polartwins: verification failed for {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
