"""Bundled example inputs and what each one is expected to show."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources


@dataclass(frozen=True)
class IdealFixture:
    name: str
    file: str
    claim: str
    dim_degree: tuple | None = None
    tangent_dim_degree: tuple | None = None
    line_support: bool = False
    # a failure here breaks acceptance; otherwise it is reported as unverified
    strict: bool = True


IDEALS = {
    "two-lines": IdealFixture("two-lines", "two_lines.ideal",
                              "two skew lines: a curve of degree 2", (1, 2)),
    "double-line": IdealFixture("double-line", "double_line.ideal",
                                "double line: degree 2 curve supported on a line",
                                (1, 2), line_support=True),
    "IS-corrected": IdealFixture("IS-corrected", "IS_corrected.ideal",
                                 "surface of degree 5 whose tangent cone at v is a double line",
                                 (2, 5), (1, 2), line_support=True, strict=False),
    "IS-printed": IdealFixture("IS-printed", "IS_printed.ideal",
                               "surface of degree 5 (generators as typeset)",
                               (2, 5), (1, 2), line_support=True, strict=False),
}

FANS = {
    "two-planes-blowup": "two_planes_blowup.json",
    "conic-fibration": "conic_fibration.json",
}


def _data(sub, name):
    return resources.files("fibercalc.data").joinpath(sub).joinpath(name)


def ideal_text(name):
    return _data("ideals", IDEALS[name].file).read_text()


def fan_json(name):
    return json.loads(_data("fans", FANS[name]).read_text())


def names():
    return sorted(IDEALS) + sorted(FANS)
