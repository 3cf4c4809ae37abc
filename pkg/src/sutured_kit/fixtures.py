"""Bundled fixtures: the contract between the diagram and torsion sides.

Every diagram/presentation pair registered here must satisfy the
cross-check (Euler polynomial of the diagram equals the torsion of the
presentation up to units) and is exercised by the acceptance suite.

The T(1,0;4) diagram is bundled without a paired presentation, on
purpose.  Its Euler polynomial is 1 - h up to units, whose coefficients
sum to zero; the torsion determinant of any geometrically balanced
presentation has coefficient sum equal to plus or minus the index of the
subgroup generated by the inclusion-word classes, which cannot vanish
unless the determinant itself vanishes.  The obstruction is topological:
the determinant formula needs connected top and bottom boundary
subsurfaces, and with four longitudinal sutures the bottom subsurface is
two annuli.  The solid torus therefore also ships as T(2,1;2), where both
subsurfaces are single annuli and the pairing works.
"""

import json
import os
from dataclasses import dataclass
from pathlib import Path

from . import diagram as diagram_mod
from . import fox as fox_mod
from . import polytope as polytope_mod

ENV_VAR = "SUTURED_KIT_FIXTURES"


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    kind: str           # "diagram" | "presentation" | "support"
    file: str
    pair: str           # paired fixture name, or ""
    description: str

    def to_json(self):
        return {"name": self.name, "kind": self.kind, "file": self.file,
                "pair": self.pair, "description": self.description}


FIXTURES = (
    FixtureInfo("disk", "diagram", "disk.json", "disk_pres",
                "product over the disk: no curves, one generator"),
    FixtureInfo("disk_pres", "presentation", "disk_pres.json", "disk",
                "empty presentation of the trivial group, genus-0 boundary"),
    FixtureInfo("annulus", "diagram", "annulus.json", "annulus_pres",
                "product over the annulus: no curves, one generator"),
    FixtureInfo("annulus_pres", "presentation", "annulus_pres.json", "annulus",
                "free rank-1 presentation with the core circle as inclusion word"),
    FixtureInfo("t104", "diagram", "t104.json", "",
                "solid torus with 4 longitudinal sutures: four-holed sphere, "
                "one curve of each family, 2 generators in 2 classes; no "
                "presentation can match its Euler polynomial 1 - h (its "
                "coefficient sum vanishes, a torsion determinant's cannot)"),
    FixtureInfo("t106", "diagram", "t106.json", "",
                "solid torus with 6 longitudinal sutures: chain of two curves "
                "of each family on a six-holed sphere, 4 generators in classes "
                "of sizes 1, 2, 1; unpaired for the same reason as t104"),
    FixtureInfo("t212", "diagram", "t212.json", "t212_pres",
                "solid torus with two (2,1) sutures: genus-1 surface with two "
                "holes, 2 generators, Euler polynomial 1 + h"),
    FixtureInfo("t212_pres", "presentation", "t212_pres.json", "t212",
                "free rank-1 presentation; inclusion word a^2 (annulus core "
                "doubles around the solid torus)"),
    FixtureInfo("t312", "diagram", "t312.json", "t312_pres",
                "solid torus with two (3,1) sutures: one curve of each family "
                "meeting in 3 points, all difference classes distinct"),
    FixtureInfo("t312_pres", "presentation", "t312_pres.json", "t312",
                "free rank-1 presentation; inclusion word a^3"),
    FixtureInfo("trefoil_pres", "presentation", "trefoil_pres.json", "",
                "trefoil knot group with a meridian as inclusion word; "
                "torsion 1 - t + t^2"),
    FixtureInfo("pretzel222", "support", "pretzel222.json", "",
                "support points of the (2,2,2) pretzel link complement: a "
                "triangle, hence a centrally asymmetric polytope"),
)


def fixtures_dir():
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def fixture_list():
    return FIXTURES


def fixture_info(name):
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(f"no bundled fixture named {name!r}")


def _load_json(filename):
    with open(fixtures_dir() / filename, "r", encoding="utf-8") as fh:
        return json.load(fh)


def load_diagram(name):
    info = fixture_info(name)
    if info.kind != "diagram":
        raise KeyError(f"{name} is a {info.kind} fixture, not a diagram")
    return diagram_mod.SuturedDiagram.from_json(_load_json(info.file))


def load_presentation(name):
    info = fixture_info(name)
    if info.kind != "presentation":
        raise KeyError(f"{name} is a {info.kind} fixture, not a presentation")
    return fox_mod.load_presentation_json(_load_json(info.file))


def load_support(name):
    info = fixture_info(name)
    if info.kind != "support":
        raise KeyError(f"{name} is a {info.kind} fixture, not support data")
    return polytope_mod.SupportData.from_json(_load_json(info.file))


def diagram_names():
    return [f.name for f in FIXTURES if f.kind == "diagram"]


def paired_names():
    """(diagram name, presentation name) for every registered pair."""
    out = []
    for f in FIXTURES:
        if f.kind == "diagram" and f.pair:
            out.append((f.name, f.pair))
    return out
