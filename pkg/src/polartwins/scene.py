"""What to build for one arbelos, and the built result."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import arbelos as ab
from .geom_core import DEFAULT_TOL, Tolerance
from .polarity import Conic
from .tangents_loci import ellipse_locus, parabola_locus

CONSTRUCTIONS = ("twins", "icircle", "cousin_icircle", "twin_cousins", "humble", "siblings", "duals", "loci")


@dataclass(frozen=True)
class SceneSpec:
    r1: float
    r2: float
    constructions: frozenset = frozenset(CONSTRUCTIONS)
    show_conics: bool = False
    show_witnesses: bool = False
    tol: Tolerance = DEFAULT_TOL

    def __post_init__(self):
        if not (self.r1 > 0 and self.r2 > 0):
            raise ValueError("radius must be positive")
        unknown = set(self.constructions) - set(CONSTRUCTIONS)
        if unknown:
            raise ValueError(f"unknown construction(s): {', '.join(sorted(unknown))}")
        if not self.constructions:
            raise ValueError("at least one construction is required")


@dataclass
class Scene:
    spec: SceneSpec
    arbelos: ab.Arbelos
    doubling: ab.DoublingArbelos | None
    constructions: list[ab.Construction] = field(default_factory=list)
    conics: list[tuple[str, Conic]] = field(default_factory=list)


def build_scene(spec: SceneSpec) -> Scene:
    """Run the selected constructions in the fixed :data:`CONSTRUCTIONS` order.

    Constructions always use the default tolerance for their internal
    precondition checks; ``spec.tol`` only governs verification, so a strict
    ``--tol`` yields a failed report rather than an aborted build.
    """
    a = ab.make_arbelos(spec.r1, spec.r2)
    tol = DEFAULT_TOL
    wanted = spec.constructions
    doubling = None
    if {"cousin_icircle", "twin_cousins"} & set(wanted):
        doubling = ab.DoublingArbelos.from_arbelos(a)
    scene = Scene(spec, a, doubling)
    builders = {
        "twins": lambda: ab.construct_twins(a, tol),
        "icircle": lambda: (ab.construct_icircle(a, tol),),
        "cousin_icircle": lambda: (ab.construct_cousin_icircle(doubling, tol),),
        "twin_cousins": lambda: ab.construct_twin_cousins(doubling, tol),
        "humble": lambda: (ab.construct_humble_circle(a, tol),),
        "siblings": lambda: ab.construct_siblings(a, tol),
        "duals": lambda: ab.construct_duals(a, tol),
    }
    for name in CONSTRUCTIONS:
        if name in wanted and name in builders:
            scene.constructions.extend(builders[name]())
    if "loci" in wanted:
        for side in (1, 2):
            inner = a.inner(side)
            scene.conics.append((f"ellipse_{side}", ellipse_locus(a.outer, inner, focus=inner.center, tol=tol)))
            scene.conics.append((f"parabola_{side}", parabola_locus(inner, a.l, tol)))
    if spec.show_conics:
        for c in scene.constructions:
            for key, value in c.witnesses.items():
                if isinstance(value, Conic):
                    scene.conics.append((f"{c.name}.{key}", value))
    return scene


def verify_scene(scene: Scene) -> list[ab.VerificationReport]:
    return [ab.verify(c, scene.spec.tol) for c in scene.constructions]
