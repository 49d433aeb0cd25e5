"""JSON verification reports."""

from __future__ import annotations

import json
import math
import random

from .arbelos import VerificationReport
from .geom_core import DEFAULT_TOL, Tolerance
from .scene import CONSTRUCTIONS, SceneSpec, build_scene, verify_scene


class ReportError(OSError):
    pass


def _finite(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return _finite(obj)


def report_document(r1: float, r2: float, tol: Tolerance, reports: list[VerificationReport]) -> dict:
    return {
        "r1": r1,
        "r2": r2,
        "tolerance": tol.as_dict(),
        "constructions": [r.to_dict() for r in reports],
    }


def write_report(reports: list[VerificationReport], r1: float, r2: float, tol: Tolerance = DEFAULT_TOL) -> str:
    """Serialize in fixed key order; floats use Python's shortest round-trip repr."""
    return dumps(report_document(r1, r2, tol, reports))


def dumps(doc: dict) -> str:
    return json.dumps(_clean(doc), indent=2, allow_nan=False) + "\n"


def save_text(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise ReportError(f"cannot write {path}: {exc.strerror or exc}") from exc


def status_from_document(doc: dict) -> bool:
    """Recheck a parsed report: every residual and error within its tolerance."""
    tol = doc["tolerance"]
    for c in doc["constructions"]:
        ok = all(k["residual"] is not None and k["residual"] <= tol["residual_eps"] for k in c["constraints"])
        ok &= c["radius_rel_error"] is not None and c["radius_rel_error"] <= tol["rel_eps"]
        for i in c["identities"]:
            scale = max(1.0, abs(i["lhs"]), abs(i["rhs"]))
            ok &= i["abs_error"] is not None and i["abs_error"] <= tol["rel_eps"] * scale
        if ok != (c["status"] == "passed"):
            return False
    return True


def sweep(n: int, seed: int, constructions=frozenset(CONSTRUCTIONS), tol: Tolerance = DEFAULT_TOL,
          lo: float = 0.1, hi: float = 10.0) -> dict:
    """Aggregate verification over ``n`` random (R1, R2) pairs drawn uniformly
    from ``[lo, hi]^2``."""
    rng = random.Random(seed)
    max_res = max_rel = max_ident = 0.0
    failures = []
    for index in range(n):
        r1, r2 = rng.uniform(lo, hi), rng.uniform(lo, hi)
        try:
            reports = verify_scene(build_scene(SceneSpec(r1, r2, frozenset(constructions), tol=tol)))
        except Exception as exc:  # a crash at one sample is recorded, the sweep goes on
            failures.append({"index": index, "r1": r1, "r2": r2, "name": type(exc).__name__})
            continue
        for r in reports:
            max_res = max(max_res, r.max_residual())
            max_rel = max(max_rel, r.radius_rel_error)
            max_ident = max(max_ident, r.max_identity_error())
            if not r.passed:
                failures.append({"index": index, "r1": r1, "r2": r2, "name": r.name})
    return {
        "sweep": n,
        "seed": seed,
        "tolerance": tol.as_dict(),
        "max_residual": max_res,
        "max_radius_rel_error": max_rel,
        "max_identity_error": max_ident,
        "failures": failures,
        "status": "passed" if not failures else "failed",
    }
