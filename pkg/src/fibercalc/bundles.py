"""Chern and Segre arithmetic for rank 2 bundles, conormal catalogs and
the Castelnuovo graded-ring test.

Bundles are only ever described by Chern data and, when available, a
presentation by line bundles.  No extension classes are modelled.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import combinations_with_replacement
from math import comb

from .surface_pic import DivisorClass, intersect

QUADRIC_KINDS = ("SmoothF0", "ConeS2", "TwoPlanes")


class BundleError(ValueError):
    pass


@dataclass(frozen=True)
class RankTwoBundle:
    base: object                 # SurfaceModel or one of QUADRIC_KINDS
    c1: object                   # int (multiple of the hyperplane) or DivisorClass
    c2: int
    tag: str | None = None

    def c1_squared(self):
        if isinstance(self.c1, DivisorClass):
            return intersect(self.c1, self.c1)
        if self.base in QUADRIC_KINDS:
            return 2 * self.c1 * self.c1      # H^2 = 2 on a quadric surface
        return self.c1 * self.c1

    def dual(self):
        return RankTwoBundle(self.base, -self.c1, self.c2, self.tag and f"({self.tag})^*")


@dataclass(frozen=True)
class SplittingType:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(int(a) for a in self.parts)))

    def dual(self):
        return SplittingType(tuple(-a for a in self.parts))

    def __str__(self):
        return "+".join(f"O({a})" if a else "O" for a in self.parts)


@dataclass(frozen=True)
class GradedDims:
    dims: tuple


def segre2(e: RankTwoBundle) -> int:
    return e.c1_squared() - e.c2


def chi_p2(c1: int, c2: int) -> int:
    return 2 + c1 * (c1 + 3) // 2 - c2


def quadric_h0(c2: int) -> int:
    if not 0 <= c2 <= 2:
        raise BundleError("c2 must be 0, 1 or 2 for a spanned bundle with det O(1) on a quadric")
    return 5 - c2


# -- presentations on P^2 ---------------------------------------------------
#
# A presentation is either ("O", a), ("sum", [..]) or ("quot", sub, middle)
# for 0 -> sub -> middle -> E -> 0.  Chern classes live in Z[h]/h^3.

def _cmul(a, b):
    return (a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[0] * b[2] + a[1] * b[1] + a[2] * b[0])


def _cinv(a):
    # a[0] == 1 for total Chern classes
    return (1, -a[1], a[1] * a[1] - a[2])


def _h0_line_p2(a):
    # count monomials x^i y^j z^k with i+j+k = a
    if a < 0:
        return 0
    return sum(1 for i in range(a + 1) for j in range(a + 1 - i))


def pres_rank(p):
    kind = p[0]
    if kind == "O":
        return 1
    if kind == "sum":
        return sum(pres_rank(q) for q in p[1])
    return pres_rank(p[2]) - pres_rank(p[1])


def pres_chern(p):
    kind = p[0]
    if kind == "O":
        return (1, p[1], 0)
    if kind == "sum":
        c = (1, 0, 0)
        for q in p[1]:
            c = _cmul(c, pres_chern(q))
        return c
    return _cmul(pres_chern(p[2]), _cinv(pres_chern(p[1])))


def pres_h0(p):
    """h0 assuming H^1 of every subobject vanishes (true for all presentations used)."""
    kind = p[0]
    if kind == "O":
        return _h0_line_p2(p[1])
    if kind == "sum":
        return sum(pres_h0(q) for q in p[1])
    return pres_h0(p[2]) - pres_h0(p[1])


def O(a=0):
    return ("O", a)


def dsum(*ps):
    return ("sum", list(ps))


def quot(sub, middle):
    return ("quot", sub, middle)


TANGENT_M1 = quot(O(-1), dsum(O(), O(), O()))   # Euler sequence

TABLE1 = [
    # (c1, c2, name, presentation, description of the map to P(H^0))
    (0, 0, "O+O", dsum(O(), O()), "P2 x P1 -> P1"),
    (1, 0, "O+O(1)", dsum(O(), O(1)), "blow-up of a point in P3"),
    (1, 1, "T(-1)", TANGENT_M1, "P1-bundle over P2"),
    (2, 0, "O+O(2)", dsum(O(), O(2)), "blow-up of the vertex of a cone over P2 in P5"),
    (2, 2, "T(-1)+O(1)/O", quot(O(), dsum(TANGENT_M1, O(1))), "blow-up of a line in a smooth quadric"),
    (2, 3, "O^4/O(-1)^2", quot(dsum(O(-1), O(-1)), dsum(O(), O(), O(), O())),
     "blow-up of a twisted rational curve in P3"),
    (2, 4, "O^3/O(-2)", quot(O(-2), dsum(O(), O(), O())), "conic bundle over P2"),
]


@dataclass
class RowCheck:
    c1: int
    c2: int
    name: str
    h0: int
    chi: int
    s2: int
    ok: bool
    notes: list = field(default_factory=list)


def verify_table1():
    out = []
    for c1, c2, name, pres, _desc in TABLE1:
        notes = []
        ch = pres_chern(pres)
        if pres_rank(pres) != 2:
            notes.append("presentation is not rank 2")
        if (ch[1], ch[2]) != (c1, c2):
            notes.append(f"presentation gives (c1,c2)=({ch[1]},{ch[2]})")
        if not 0 <= c1 <= 2:
            notes.append("c1 out of range")
        if c2 < 0:
            notes.append("negative c2")
        s2 = c1 * c1 - c2
        if s2 < 0:
            notes.append("negative s2")
        h0 = pres_h0(pres)
        chi = chi_p2(c1, c2)
        if h0 != chi:
            notes.append(f"chi {chi} != h0 {h0}")
        out.append(RowCheck(c1, c2, name, h0, chi, s2, not notes, notes))
    return out


# -- splitting types --------------------------------------------------------

def enumerate_splittings(rank: int, degree_sum: int, strict_upper: int):
    """Nondecreasing integer tuples of the given length and sum, every part < strict_upper."""
    if rank < 1:
        raise BundleError("rank must be positive")
    hi = strict_upper - 1
    lo = degree_sum - (rank - 1) * hi
    out = []

    def rec(prefix, remaining, k, floor):
        if k == 0:
            if remaining == 0:
                out.append(SplittingType(tuple(prefix)))
            return
        for a in range(floor, hi + 1):
            rest = remaining - a
            # the other k-1 parts are each in [a, hi]
            if rest < a * (k - 1) or rest > hi * (k - 1):
                continue
            rec(prefix + [a], rest, k - 1, a)

    rec([], degree_sum, rank, lo)
    return out


def fibertype_threefold_normals():
    """Normal bundles of a line (-K.C = 1) or a conic fibre (-K.C = 2) in a
    conic-bundle 3-fold allowed by the vanishing bound, with the exclusion flag."""
    out = []
    for minus_kc in (2, 1):
        for st in enumerate_splittings(2, minus_kc - 2, 2):
            out.append((st, st.parts == (-1, 1)))
    return out


# -- catalog ---------------------------------------------------------------

@lru_cache(maxsize=None)
def load_catalog():
    text = resources.files("fibercalc.data").joinpath("conormal_catalog.json").read_text()
    return json.loads(text)


def catalog_entry(tag):
    for e in load_catalog()["entries"]:
        if e["id"] == tag or e.get("tag") == tag:
            return e
    raise BundleError(f"{tag!r} is not in the catalog")


def catalog_bundle(tag) -> RankTwoBundle:
    e = catalog_entry(tag)
    cn = e["conormal"]
    return RankTwoBundle(cn.get("base", e["fiber"]), cn["c1"], cn["c2"], e["tag"])


def blow_down_multiplicity(e: RankTwoBundle):
    """Multiplicity of the exceptional divisor along the fibre.

    c2 - 1 for a plane (c2 of the normal equals c2 of the conormal in rank 2),
    2 for an irreducible quadric.
    """
    if e.tag is not None:
        known = {x.get("tag") for x in load_catalog()["entries"]}
        if e.tag not in known:
            raise BundleError(f"{e.tag!r} is not a catalog conormal")
    if e.base in ("SmoothF0", "ConeS2"):
        return 2
    if e.base == "TwoPlanes":
        raise BundleError("use component_multiplicities for a reducible fibre")
    m = e.c2 - 1
    if m < 1:
        raise BundleError("this conormal has no divisorial contraction (small contraction)")
    return m


def component_multiplicities(tag):
    e = catalog_entry(tag)
    return [c2 - 1 for c2 in e["component_normal_c2"]]


# -- graded dimensions and the Castelnuovo test ----------------------------

_DESC = re.compile(r"^\s*(P2|F0)\s*:\s*(.+)$")
_LB = re.compile(r"^O(?:\((-?\d+)(?:,(-?\d+))?\))?$")


@dataclass(frozen=True)
class ConormalSpec:
    base: str                  # "P2", "F0" or "Q3cone"
    summands: tuple = ()

    def __str__(self):
        if self.base == "Q3cone":
            return "cone(Q3)"
        return f"{self.base}:" + "+".join(
            "O(" + ",".join(map(str, s)) + ")" if isinstance(s, tuple) else f"O({s})"
            for s in self.summands)


ALIASES = {
    "spinor(1)": "F0:O(1,0)+O(0,1)",
    "flip": "P2:O(1)+O(1)",
}


def parse_conormal(text) -> ConormalSpec:
    t = ALIASES.get(text.strip(), text.strip())
    if t.replace(" ", "") in ("cone(Q3)", "Q3cone", "Q3-cone"):
        return ConormalSpec("Q3cone")
    m = _DESC.match(t)
    if not m:
        raise BundleError(f"cannot parse conormal descriptor {text!r}")
    base = m.group(1)
    sums = []
    for piece in m.group(2).replace(" ", "").split("+"):
        lm = _LB.match(piece)
        if not lm:
            raise BundleError(f"bad summand {piece!r}")
        a = int(lm.group(1) or 0)
        if base == "P2":
            if lm.group(2) is not None:
                raise BundleError("P2 line bundles take one degree")
            sums.append(a)
        else:
            b = int(lm.group(2) or 0) if lm.group(1) is not None else 0
            if lm.group(1) is not None and lm.group(2) is None:
                raise BundleError("F0 line bundles take a bidegree O(a,b)")
            sums.append((a, b))
    return ConormalSpec(base, tuple(sums))


def _h0_line(base, deg):
    if base == "P2":
        return comb(deg + 2, 2) if deg >= 0 else 0
    a, b = deg
    return (a + 1) * (b + 1) if a >= 0 and b >= 0 else 0


def _add(base, x, y):
    if base == "P2":
        return x + y
    return (x[0] + y[0], x[1] + y[1])


def _zero(base):
    return 0 if base == "P2" else (0, 0)


def graded_dims(spec, k_max: int) -> GradedDims:
    if isinstance(spec, str):
        spec = parse_conormal(spec)
    if spec.base == "Q3cone":
        return GradedDims(tuple(comb(k + 4, 4) - comb(k + 2, 4) for k in range(k_max + 1)))
    if spec.base not in ("P2", "F0") or not spec.summands:
        raise BundleError("graded dimensions only for sums of line bundles on P2 or F0")
    dims = []
    idx = range(len(spec.summands))
    for k in range(k_max + 1):
        total = 0
        for combo in combinations_with_replacement(idx, k):
            d = _zero(spec.base)
            for i in combo:
                d = _add(spec.base, d, spec.summands[i])
            total += _h0_line(spec.base, d)
        dims.append(total)
    return GradedDims(tuple(dims))


@dataclass(frozen=True)
class Verdict:
    kind: str                  # "SmoothOfDim", "Hypersurface", "Fails"
    r: int
    d: int | None = None
    k: int | None = None
    expected: int | None = None
    got: int | None = None

    def __str__(self):
        if self.kind == "SmoothOfDim":
            return f"SmoothOfDim({self.r})"
        if self.kind == "Hypersurface":
            return f"Hypersurface(d={self.d}, embdim={self.r})"
        return f"Fails(k={self.k}: {self.got} != {self.expected})"


def _power_series(k, r):
    return comb(k + r - 1, r - 1) if k >= 0 else 0


def castelnuovo_test(g: GradedDims, r: int) -> Verdict:
    dims = list(g.dims)
    if not dims or dims[0] != 1:
        raise BundleError("dims[0] must be 1")
    first_bad = next((k for k, x in enumerate(dims) if x != _power_series(k, r)), None)
    if first_bad is None:
        return Verdict("SmoothOfDim", r)
    d = first_bad
    if dims[d] == _power_series(d, r) - 1:
        if all(x == _power_series(k, r) - _power_series(k - d, r) for k, x in enumerate(dims)):
            return Verdict("Hypersurface", r, d=d)
    return Verdict("Fails", r, k=first_bad, expected=_power_series(first_bad, r), got=dims[first_bad])
