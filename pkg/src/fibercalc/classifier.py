"""Deformation-bound rule engine for isolated 2-dimensional fibres.

The numbers all come from surface_pic: a test curve C on a component gives
(L.C, dim Hilb at [C]) and the ambient dimension n is bounded by the
threshold rules in max_ambient_dim.  The configuration enumerator then
glues components along lines or points and prunes with the same bounds
plus a handful of structural rules.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product

from . import surface_pic as sp
from .surface_pic import ConeS, Hirzebruch, ProjPlane, cls, cone_class, h, intersect

EXCLUDED = "Excluded"
BIRATIONAL = "birational"
FIBER = "fiber"


def deformation_lower_bound(minus_KC: int, n: int, chi: int) -> int:
    return minus_KC + (n - 3) * chi


def max_ambient_dim(hilb_dim: int, LC: int, kind: str):
    """Largest n allowed by a test curve, or None when the curve gives no constraint."""
    if LC < 1:
        raise ValueError("L.C must be positive")
    if kind == BIRATIONAL:
        return hilb_dim + 3 - LC if LC >= 2 else None
    if kind == FIBER:
        if LC >= 3:
            return hilb_dim + 3 - LC
        if LC == 2:
            return hilb_dim + 2
        return None
    raise ValueError(f"unknown contraction type {kind!r}")


# -- components --------------------------------------------------------------

@dataclass(frozen=True)
class FiberComponent:
    surface: sp.SurfaceModel
    polarization: sp.DivisorClass     # upstairs class for cones

    def __post_init__(self):
        if not sp.is_ample(self.surface, self.polarization):
            raise ValueError(f"{self.polarization} is not ample on {self.surface}")

    @property
    def name(self):
        s = self.surface
        if s.kind == "P2":
            return f"P2 {self.polarization}"
        if s.kind == "S":
            return f"S{s.r} O(1)"
        return f"F{s.r} {self.polarization}"

    @property
    def short(self):
        s = self.surface
        return "P2" if s.kind == "P2" else str(s)

    @property
    def degree(self):
        return intersect(self.polarization, self.polarization)

    @property
    def is_plane(self):
        return self.surface.kind == "P2" and self.degree == 1

    def curve(self, a, b=None):
        if self.surface.kind == "P2":
            return h(a)
        return cls(self.surface.r, a, b)

    def lines(self):
        """Classes of lines (L-degree 1 curves) usable as intersection curves."""
        s = self.surface
        if s.kind == "P2":
            return {"line": h(1)} if self.degree == 1 else {}
        if s.kind == "S":
            return {"ruling": cls(s.r, 0, 1)}
        out = {}
        L = self.polarization
        c0, f = cls(s.r, 1, 0), cls(s.r, 0, 1)
        if intersect(L, c0) == 1:
            out["C0"] = c0
        if intersect(L, f) == 1:
            out["f"] = f
        return out

    def symmetric_f0(self):
        return self.surface.kind == "F" and self.surface.r == 0 and \
            self.polarization.coefficients[0] == self.polarization.coefficients[1]

    def dim_linear_system(self, d):
        return sp.linear_system_dim(self.surface, d)


P2O1 = FiberComponent(ProjPlane(), h(1))
P2O2 = FiberComponent(ProjPlane(), h(2))
S3 = FiberComponent(ConeS(3), cone_class(3))
S2 = FiberComponent(ConeS(2), cone_class(2))
F2 = FiberComponent(Hirzebruch(2), cls(2, 1, 3))
F1 = FiberComponent(Hirzebruch(1), cls(1, 1, 2))
F0b = FiberComponent(Hirzebruch(0), cls(0, 1, 2))
F0a = FiberComponent(Hirzebruch(0), cls(0, 1, 1))

COMPONENTS = {"P2O1": P2O1, "P2O2": P2O2, "S3": S3, "S2": S2,
              "F2": F2, "F1": F1, "F0b": F0b, "F0a": F0a}


def vertex_lower_bound(c: FiberComponent):
    """Smallest n allowed: 3, or r+1 when the vertex of S_r must embed."""
    return max(3, c.surface.r + 1) if c.surface.kind == "S" else 3


# -- records -----------------------------------------------------------------

@dataclass
class ClassificationRecord:
    row: str
    component: FiberComponent
    curve: str
    LC: int
    hilb_dim: int
    max_n_birational: object = None
    max_n_fiber: object = None
    provenance: dict = field(default_factory=dict)
    paper: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def recompute(self):
        self.max_n_birational = max_ambient_dim(self.hilb_dim, self.LC, BIRATIONAL)
        self.max_n_fiber = max_ambient_dim(self.hilb_dim, self.LC, FIBER)
        return self


def _curve_record(row, comp, desc, d, paper=None, hilb_override=None):
    LC = intersect(comp.polarization, d)
    if hilb_override is None:
        hilb, hp = comp.dim_linear_system(d), "DERIVED"
    else:
        hilb, hp = hilb_override, "PAPER"
    rec = ClassificationRecord(row, comp, desc, LC, hilb,
                               provenance={"LC": "DERIVED", "hilb_dim": hp},
                               paper=paper or {})
    return rec.recompute()


# printed values, kept only for comparison
TABLE2_PAPER = {
    "1": (2, 2), "2": (2, 2), "3a": ("k-r+1", "<=2"), "3b": (3, 2), "4": (3, 3),
    "5a": (2, 2), "5b": (3, 4), "6a": (2, 1), "6b": (3, 3), "7a": (2, 3), "7b": (3, 5),
}


def row3a(r, k=None):
    k = r + 1 if k is None else k
    comp = FiberComponent(Hirzebruch(r), cls(r, 1, k))
    return _curve_record("3a", comp, "C0+f", cls(r, 1, 1))


def row3b(r):
    comp = FiberComponent(Hirzebruch(r), cls(r, 1, r + 1))
    return _curve_record("3b", comp, "C0+2f", cls(r, 1, 2))


def table2_rows():
    rows = [
        _curve_record("1", P2O2, "line", h(1)),
        _curve_record("2", S3, "two lines", cls(3, 0, 2)),
        row3a(1),
        row3b(3),
        _curve_record("4", F2, "C in |C0+2f|", cls(2, 1, 2)),
        _curve_record("5a", F1, "C in |C0+f|", cls(1, 1, 1)),
        _curve_record("5b", F1, "C in |C0+2f|", cls(1, 1, 2)),
        _curve_record("6a", F0b, "C0", cls(0, 1, 0)),
        _curve_record("6b", F0b, "C in |C0+f|", cls(0, 1, 1)),
        _curve_record("7a", F0a, "C in |C0+f|", cls(0, 1, 1)),
        _curve_record("7b", F0a, "C in |C0+2f|", cls(0, 1, 2)),
    ]
    for rec in rows:
        rec.paper = {"LC": TABLE2_PAPER[rec.row][0], "hilb_dim": TABLE2_PAPER[rec.row][1]}
    return rows


def _aux_curves():
    # test curves that are not rows of the printed table
    return {
        "conic on P2 O(1)": _curve_record("aux-P2-conic", P2O1, "conic", h(2)),
        "conic on S2": _curve_record("aux-S2-conic", S2, "conic", cone_class(2)),
        # the reducible conic+line on S2: its Hilbert dimension is taken as data
        "conic+line on S2": _curve_record("aux-S2-conic-line", S2, "conic + line",
                                          cls(2, 1, 3), hilb_override=4),
    }


TABLE3_PAPER = {
    # row: (component id, birational cell, fiber cell) as printed
    0: ("P2O1", ("<=", 6), ("<=", 7)),
    1: ("P2O2", ("<=", 3), ("<=", 4)),
    2: ("S3", None, ("=", 4)),
    3: ("S2", ("<=", 4), ("<=", 4)),
    4: ("F2", ("=", 3), ("=", 3)),
    5: ("F1", ("=", 3), ("<=", 4)),
    6: ("F0b", None, ("=", 3)),
    7: ("F0a", ("<=", 4), ("<=", 5)),
}

_TABLE3_CURVES = {
    0: ["conic on P2 O(1)"], 1: ["1"], 2: ["2"], 3: ["conic on S2", "conic+line on S2"],
    4: ["4"], 5: ["5a", "5b"], 6: ["6a", "6b"], 7: ["7a", "7b"],
}


@dataclass
class Table3Row:
    row: int
    component: FiberComponent
    curves: list
    lower: int
    birational: object      # int bound or EXCLUDED
    fiber: object
    paper_birational: object
    paper_fiber: object

    def cell(self, kind):
        v = self.birational if kind == BIRATIONAL else self.fiber
        if v == EXCLUDED:
            return "--------"
        return f"n = {v}" if v == self.lower else f"n <= {v}"

    def matches_paper(self):
        return _cell_value(self.paper_birational) == self.birational and \
            _cell_value(self.paper_fiber) == self.fiber


def _cell_value(cell):
    return EXCLUDED if cell is None else cell[1]


def _min_bound(records, kind):
    vals = [getattr(r, "max_n_birational" if kind == BIRATIONAL else "max_n_fiber") for r in records]
    vals = [v for v in vals if v is not None]
    return min(vals) if vals else None


def table3_derive(rows2=None):
    rows2 = rows2 if rows2 is not None else table2_rows()
    by_id = {r.row: r for r in rows2}
    by_id.update(_aux_curves())
    out = []
    for row, (cid, pb, pf) in TABLE3_PAPER.items():
        comp = COMPONENTS[cid]
        recs = [by_id[c] for c in _TABLE3_CURVES[row]]
        lower = vertex_lower_bound(comp)
        cells = []
        for kind in (BIRATIONAL, FIBER):
            b = _min_bound(recs, kind)
            cells.append(EXCLUDED if b is not None and b < lower else b)
        out.append(Table3Row(row, comp, recs, lower, cells[0], cells[1], pb, pf))
    return out


def table3_bounds():
    return {r.component: (r.birational, r.fiber, r.lower) for r in table3_derive()}


# -- Table IV: a pair of components glued along a line ----------------------

def _table4_curve(comp: FiberComponent, label):
    """Curve C1 on a non-planar component meeting the gluing line once."""
    s = comp.surface
    if s.kind == "S":
        return cls(s.r, 0, 1)
    if label == "C0":
        return cls(s.r, 0, 1)
    if label == "f":
        return cls(s.r, 1, s.r)
    raise ValueError(f"no Table IV curve for {label} on {comp.name}")


def table4_pair(comp: FiberComponent, label, other: FiberComponent):
    """(L.C, dim Hilb) for C = C1 + C2, C2 a general member of |L_other| through C1 meet l."""
    c1 = _table4_curve(comp, label)
    d2 = other.degree
    LC = intersect(comp.polarization, c1) + d2
    hilb = comp.dim_linear_system(c1) + d2
    return LC, hilb


def table4_rows(d2: int, r: int = 1):
    """Rows (A), (B), (C) with the second component of degree d2 (so dim|L2| = d2 + 1)."""
    if d2 < 1:
        raise ValueError("d2 must be positive")
    comps = {
        "A": (S2, "ruling", cone_class(2)),
        "B": (FiberComponent(Hirzebruch(r), cls(r, 1, r + 1)), "C0", None),
        "C": (FiberComponent(Hirzebruch(r), cls(r, 1, r + 1)), "f", None),
    }
    out = []
    for key, (comp, label, _) in comps.items():
        c1 = _table4_curve(comp, label)
        LC = intersect(comp.polarization, c1) + d2
        hilb = comp.dim_linear_system(c1) + d2
        out.append({"row": key, "S1": comp.name, "line": label, "LC": LC, "hilb_dim": hilb})
    return out


TABLE4_PAPER = {"A": ("1+d2", "1+d2"), "B": ("1+d2", "1+d2"), "C": ("r+1+d2", "r+1+d2")}


def table4_paper_values(row, d2, r):
    env = {"d2": d2, "r": r}
    return tuple(eval(expr, {}, env) for expr in TABLE4_PAPER[row])


# -- 3-fold reducible fibres --------------------------------------------------

def _k_dot_line(tag, r):
    if tag == "P2/line":
        return intersect(sp.canonical_class(ProjPlane()), h(1))
    kind = tag.split("/")[1]
    d = cls(r, 1, 0) if kind == "C0" else cls(r, 0, 1)
    return intersect(sp.canonical_class(Hirzebruch(r)), d)


def threefold_options(rmax=10):
    opts = [("P2/line", 0, _k_dot_line("P2/line", 0))]
    for r in range(rmax + 1):
        # C0 on F0 is a fibre of the other ruling
        if r > 0:
            opts.append((f"F{r}/C0", r, _k_dot_line("F/C0", r)))
        opts.append((f"F{r}/f", r, _k_dot_line("F/f", r)))
    return opts


def threefold_reducible_pairs(rmax=10):
    """All unordered (component/line) pairs with K1.R + K2.R = -3, r <= rmax."""
    opts = threefold_options(rmax)
    out = []
    for i, j in combinations_with_replacement(range(len(opts)), 2):
        a, b = opts[i], opts[j]
        if a[2] + b[2] == -3:
            out.append(tuple(sorted((a[0], b[0]))))
    return sorted(set(out))


def threefold_reducible_enumeration(rmax=10):
    """Collapse the brute-force list to families: {(P2/line, F2/C0), (F1/C0, Fr/f)}."""
    pairs = threefold_reducible_pairs(rmax)
    fam = set()
    f_partners = {b for a, b in pairs if a == "F1/C0" and b.endswith("/f")}
    f_partners |= {a for a, b in pairs if b == "F1/C0" and a.endswith("/f")}
    for a, b in pairs:
        if "F1/C0" in (a, b) and (a in f_partners or b in f_partners):
            if len(f_partners) == rmax + 1:
                fam.add(("F1/C0", "Fr/f"))
                continue
        fam.add((a, b))
    return sorted(fam)


def adjunction_ledger(pair, r=0):
    """F_i.R = K_i.R + 1 for both sides; their sum must be -1."""
    vals = []
    for tag in pair:
        rr = r if tag.startswith("Fr") else (0 if tag.startswith("P2") else int(tag[1:tag.index("/")]))
        vals.append(_k_dot_line(tag.replace("Fr", "F"), rr) + 1)
    return vals, sum(vals)


# -- configurations ----------------------------------------------------------

@dataclass(frozen=True)
class Intersection:
    i: int
    j: int
    kind: str              # "line" or "point"
    label_i: str = ""      # line class label on component i
    label_j: str = ""
    curve_i: int = 0       # distinguishes different curves of the same class
    curve_j: int = 0


@dataclass(frozen=True)
class FiberConfiguration:
    components: tuple
    intersections: tuple = ()

    def key(self):
        return canonical_key(self)

    def describe(self):
        return describe(self)


def _component_code(c: FiberComponent):
    return c.name


def _relabel(label, comp, swap):
    if swap and comp.symmetric_f0():
        return {"C0": "f", "f": "C0"}.get(label, label)
    return label


def canonical_key(cfg: FiberConfiguration):
    n = len(cfg.components)
    best = None
    f0_idx = [i for i, c in enumerate(cfg.components) if c.symmetric_f0()]
    for perm in permutations(range(n)):
        inv = {old: new for new, old in enumerate(perm)}
        for swaps in product((False, True), repeat=len(f0_idx)):
            sw = {i: s for i, s in zip(f0_idx, swaps)}
            comps = tuple(_component_code(cfg.components[p]) for p in perm)
            edges = []
            for e in cfg.intersections:
                a, b = inv[e.i], inv[e.j]
                la = _relabel(e.label_i, cfg.components[e.i], sw.get(e.i, False))
                lb = _relabel(e.label_j, cfg.components[e.j], sw.get(e.j, False))
                ca, cb = e.curve_i, e.curve_j
                if a > b:
                    a, b, la, lb, ca, cb = b, a, lb, la, cb, ca
                edges.append((a, b, e.kind, la, lb, ca, cb))
            edges = _normalize_curve_ids(edges, n)
            cand = (comps, tuple(sorted(edges)))
            if best is None or cand < best:
                best = cand
    return best


def _normalize_curve_ids(edges, n):
    # curve ids only matter as "same or different" per component and label
    out = []
    ids = {}
    for e in sorted(edges):
        a, b, kind, la, lb, ca, cb = e
        if kind == "line":
            ka = ids.setdefault((a, la, ca), len([k for k in ids if k[0] == a and k[1] == la]))
            kb = ids.setdefault((b, lb, cb), len([k for k in ids if k[0] == b and k[1] == lb]))
            out.append((a, b, kind, la, lb, ka, kb))
        else:
            out.append((a, b, kind, "", "", 0, 0))
    return out


def describe(cfg: FiberConfiguration):
    comps = cfg.components
    if len(comps) == 1:
        return comps[0].name
    lines = [e for e in cfg.intersections if e.kind == "line"]
    if not lines:
        return " • ".join(c.short for c in comps)
    deg = {i: 0 for i in range(len(comps))}
    for e in lines:
        deg[e.i] += 1
        deg[e.j] += 1
    ends = [i for i in deg if deg[i] <= 1] or [0]
    start = min(ends, key=lambda i: (comps[i].short != "P2", comps[i].short, i))
    order, seen = [start], {start}
    while True:
        nxt = [e.j if e.i == order[-1] else e.i for e in lines if order[-1] in (e.i, e.j)]
        nxt = [x for x in nxt if x not in seen]
        if not nxt:
            break
        order.append(nxt[0])
        seen.add(nxt[0])

    def label_on(idx, nb):
        e = _edge_between(cfg, idx, nb)
        return e.label_i if e.i == idx else e.label_j

    def ambiguous(c):
        return c.surface.kind == "F" and len(c.lines()) > 1

    out = comps[order[0]].short
    for pos in range(1, len(order)):
        a, b = order[pos - 1], order[pos]
        c = comps[b]
        lab = ""
        for idx, nb in ((a, b), (b, a)):
            if ambiguous(comps[idx]) and not comps[idx].symmetric_f0():
                lab = label_on(idx, nb)
        txt = c.short
        if c.symmetric_f0() and pos + 1 < len(order):
            left, right = label_on(b, a), label_on(b, order[pos + 1])
            if left != right:
                # the two rulings of F0 are interchangeable; print f first
                lab, txt = "f", f"({c.short})_C0"
        out += (f" ∪_{lab} " if lab else " ∪ ") + txt
    return out


# -- enumeration -----------------------------------------------------------

def _line_meet(comp: FiberComponent, la, ca, lb, cb):
    """Do two line-curves on comp meet?  Returns (same, meet)."""
    if la == lb and ca == cb:
        return True, True
    if comp.surface.kind == "S":
        return False, True          # rulings through the vertex
    lines = comp.lines()
    d1, d2 = lines[la], lines[lb]
    return False, intersect(d1, d2) > 0


def _rigid_duplicate(comp, label):
    # two different curves of class C0 only exist when C0 moves (r = 0)
    return comp.surface.kind == "F" and label == "C0" and comp.surface.r > 0


def _candidates(n, kind):
    out = []
    for row in table3_derive():
        b = row.birational if kind == BIRATIONAL else row.fiber
        if row.lower <= n and b not in (None, EXCLUDED) and b >= n:
            out.append(row.component)
    return out


def _edge_options(ci, cj):
    opts = [None, ("point",)]
    for la in ci.lines():
        for lb in cj.lines():
            opts.append(("line", la, lb))
    return opts


def _generate(comps):
    """All labelled gluings of the given components (before pruning)."""
    n = len(comps)
    pairs = list(combinations(range(n), 2))
    for choice in product(*[_edge_options(comps[i], comps[j]) for i, j in pairs]):
        base = []
        for (i, j), ch in zip(pairs, choice):
            if ch is None:
                continue
            if ch[0] == "point":
                base.append(Intersection(i, j, "point"))
            else:
                base.append(Intersection(i, j, "line", ch[1], ch[2]))
        if not _connected(n, base):
            continue
        # same-or-different curve choices on components with 2 line edges
        slots = []
        for k in range(n):
            ends = [(idx, e) for idx, e in enumerate(base) if e.kind == "line" and k in (e.i, e.j)]
            if len(ends) == 2:
                slots.append(k)
        for flags in product((0, 1), repeat=len(slots)):
            edges = list(base)
            ok = True
            for k, diff in zip(slots, flags):
                ends = [idx for idx, e in enumerate(edges) if e.kind == "line" and k in (e.i, e.j)]
                second = ends[1]
                e = edges[second]
                lab = e.label_i if e.i == k else e.label_j
                first = edges[ends[0]]
                lab0 = first.label_i if first.i == k else first.label_j
                if diff and lab == lab0 and _rigid_duplicate(comps[k], lab):
                    ok = False
                    break
                if not diff and lab != lab0:
                    ok = False      # different classes are different curves already
                    break
                if diff:
                    if e.i == k:
                        edges[second] = Intersection(e.i, e.j, e.kind, e.label_i, e.label_j, 1, e.curve_j)
                    else:
                        edges[second] = Intersection(e.i, e.j, e.kind, e.label_i, e.label_j, e.curve_i, 1)
            if ok:
                yield FiberConfiguration(tuple(comps), tuple(edges))


def _connected(n, edges):
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for e in edges:
            for a, b in ((e.i, e.j), (e.j, e.i)):
                if a == x and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return len(seen) == n


def _endpoint(e, k):
    return (e.label_i, e.curve_i, e.j) if e.i == k else (e.label_j, e.curve_j, e.i)


def _line_edges_at(cfg, k):
    return [e for e in cfg.intersections if e.kind == "line" and k in (e.i, e.j)]


def _edge_between(cfg, a, b):
    for e in cfg.intersections:
        if {e.i, e.j} == {a, b}:
            return e
    return None


@dataclass
class Verdict:
    ok: bool
    reason: str = ""


def _point_pair_test(ci, cj, n, kind):
    # a curve from |L| on each side through the common point
    d = ci.degree + cj.degree
    b = max_ambient_dim(d, d, kind)
    return b is None or b >= n


def _chain_curve(cfg, k, n, kind):
    """Center k meets two neighbours along disjoint lines: build a connected
    curve crossing both and compare with the deformation bound."""
    comp = cfg.components[k]
    e1, e2 = _line_edges_at(cfg, k)
    lab = _endpoint(e1, k)[0]
    D = _table4_curve(comp, lab) if comp.surface.kind != "P2" else h(1)
    LC = intersect(comp.polarization, D)
    hilb = comp.dim_linear_system(D)
    for e in (e1, e2):
        _, _, nb = _endpoint(e, k)
        other = cfg.components[nb]
        olab = e.label_i if e.i == nb else e.label_j
        if other.surface.kind == "P2":
            C = h(1)
        else:
            C = _table4_curve(other, olab)
        LC += intersect(other.polarization, C)
        hilb += other.dim_linear_system(C) - 1      # passes through a fixed point
    b = max_ambient_dim(hilb, LC, kind)
    return b is None or b >= n, (LC, hilb)


def check_configuration(cfg: FiberConfiguration, n: int, kind: str) -> Verdict:
    comps = cfg.components
    m = len(comps)
    if m == 1:
        return Verdict(True)
    if m > 3:
        return Verdict(False, "at most three components")
    # cones and reducible fibres (vertex embedding argument)
    for k, c in enumerate(comps):
        if c.surface.kind == "S":
            if n == 4 and c.surface.r >= 3:
                return Verdict(False, "S3 in a reducible fibre")
            if n == 3:
                return Verdict(False, "S2 in a reducible fibre of a 3-fold")
            nbrs = [e for e in cfg.intersections if k in (e.i, e.j)]
            if len(nbrs) > 1:
                return Verdict(False, "a cone meets at most one other component")
    for e in cfg.intersections:
        ci, cj = comps[e.i], comps[e.j]
        if e.kind == "line":
            if ci.lines().get(e.label_i) is None or cj.lines().get(e.label_j) is None:
                return Verdict(False, "intersection curve is not a line")
        else:
            if n < 4:
                return Verdict(False, "isolated common point needs n >= 4")
            if not _point_pair_test(ci, cj, n, kind):
                return Verdict(False, "isolated point between these components")
    # decomposition into parts meeting only in points
    line_only = [e for e in cfg.intersections if e.kind == "line"]
    if not _connected(m, line_only):
        total = sum(c.degree for c in comps)
        b = max_ambient_dim(total, total, kind)
        if b is not None and b < n:
            return Verdict(False, "splits at a point with total degree > 2")
    # three components sharing one line / line cycles / forced points
    for k in range(m):
        le = _line_edges_at(cfg, k)
        if len(le) == 2:
            (la, ca, na), (lb, cb, nb) = _endpoint(le[0], k), _endpoint(le[1], k)
            same, meet = _line_meet(comps[k], la, ca, lb, cb)
            if same:
                return Verdict(False, "three components along one line")
            between = _edge_between(cfg, na, nb)
            if meet:
                if between is None:
                    return Verdict(False, "forced common point missing")
                if between.kind == "line":
                    return Verdict(False, "cycle of lines")
                if n == 3:
                    return Verdict(False, "three components through a point")
            else:
                ok, _ = _chain_curve(cfg, k, n, kind)
                if not ok:
                    return Verdict(False, "chain curve across disjoint lines moves out")
    if len(line_only) == 3 and m == 3:
        return Verdict(False, "cycle of lines")
    if n == 4 and m >= 4:
        return Verdict(False, "four components through a point")
    # pair tests
    for e in line_only:
        ci, cj = comps[e.i], comps[e.j]
        if n == 4:
            for a, la, b in ((ci, e.label_i, cj), (cj, e.label_j, ci)):
                if a.surface.kind == "P2":
                    continue
                LC, hilb = table4_pair(a, la, b)
                bd = max_ambient_dim(hilb, LC, kind)
                if bd is not None and bd < n:
                    return Verdict(False, f"Table IV curve on {a.name} along {la}")
        elif n == 3:
            v = _threefold_pair(ci, e.label_i, cj, e.label_j, kind)
            if not v.ok:
                return v
    return Verdict(True)


def _k_dot(comp, label):
    return intersect(sp.canonical_class(comp.surface), comp.lines()[label])


def _threefold_pair(ci, la, cj, lb, kind):
    if _k_dot(ci, la) + _k_dot(cj, lb) != -3:
        return Verdict(False, "adjunction along the common line fails")
    for a, aa, b, bb in ((ci, la, cj, lb), (cj, lb, ci, la)):
        if a.surface.kind == "F" and a.surface.r == 1 and aa == "C0" and b.surface.kind == "F" and bb == "f":
            # f on F1 plus a member of |C0+f| on the other surface
            D = cls(b.surface.r, 1, 1)
            LC = 1 + intersect(b.polarization, D)
            hilb = b.dim_linear_system(D)
            bd = max_ambient_dim(hilb, LC, kind)
            if bd is not None and bd < 3:
                return Verdict(False, "f + (C0+f) curve moves out")
    return Verdict(True)


def _enumerate(n, kind, pool):
    seen = {}
    for size in (1, 2, 3):
        for combo in combinations_with_replacement(range(len(pool)), size):
            comps = [pool[i] for i in combo]
            for cfg in _generate(comps):
                key = cfg.key()
                if key in seen:
                    continue
                if check_configuration(cfg, n, kind).ok:
                    seen[key] = cfg
    return [seen[k] for k in sorted(seen)]


def fourfold_fiber_lists(kind):
    pool = _candidates(4, kind)
    return _enumerate(4, kind, pool)


# -- n = 3: the sign of O_F(-F) splits the two types ----------------------

def _minus_F(cfg: FiberConfiguration, k):
    c = cfg.components[k]
    D = -(sp.canonical_class(c.surface) + c.polarization)
    for e in cfg.intersections:
        if e.kind != "line" or k not in (e.i, e.j):
            continue
        lab = e.label_i if e.i == k else e.label_j
        D = D - c.lines()[lab]
    return D


def minus_F_type(cfg: FiberConfiguration):
    """BIRATIONAL, FIBER or EXCLUDED from the restrictions of -F to each component."""
    covered = []
    for k, c in enumerate(cfg.components):
        D = _minus_F(cfg, k)
        if not sp.is_nef(D):
            return EXCLUDED
        if sp.is_ample(c.surface, D):
            covered.append(False)
        else:
            # null curves sweep the surface iff D^2 = 0
            covered.append(intersect(D, D) == 0)
    return FIBER if all(covered) else BIRATIONAL


def threefold_fiber_lists(kind):
    pool = []
    for row in table3_derive():
        if row.lower > 3:
            continue
        if any(b not in (None, EXCLUDED) and b >= 3 for b in (row.birational, row.fiber)):
            pool.append(row)
    comps = [r.component for r in pool]
    bounds = {r.component: (r.birational, r.fiber) for r in pool}
    out = {}
    for size in (1, 2, 3):
        for combo in combinations_with_replacement(range(len(comps)), size):
            for cfg in _generate([comps[i] for i in combo]):
                if any(e.kind == "point" for e in cfg.intersections):
                    continue
                key = cfg.key()
                if key in out:
                    continue
                t = minus_F_type(cfg)
                if t != kind:
                    continue
                idx = 0 if kind == BIRATIONAL else 1
                if any(bounds[c][idx] in (None, EXCLUDED) or bounds[c][idx] < 3 for c in cfg.components):
                    continue
                if check_configuration(cfg, 3, kind).ok:
                    out[key] = cfg
    return [out[k] for k in sorted(out)]


def make_config(components, intersections=()):
    """Convenience builder: intersections as (i, j, 'line', la, lb[, ca, cb]) or (i, j, 'point')."""
    edges = []
    for t in intersections:
        if t[2] == "point":
            edges.append(Intersection(t[0], t[1], "point"))
        else:
            e = Intersection(*t)
            for idx, lab in ((e.i, e.label_i), (e.j, e.label_j)):
                if lab not in components[idx].lines():
                    raise ValueError(f"{lab!r} is not a line on {components[idx].name}")
            edges.append(e)
    return FiberConfiguration(tuple(components), tuple(edges))


# printed lists, as rendered by describe(); used only for comparison
PRINTED_FIBER_LISTS = {
    (4, BIRATIONAL): {"P2 O(1)", "F0 C0+f", "S2 O(1)", "P2 ∪ P2"},
    (4, FIBER): {"P2 O(1)", "P2 O(2)", "S3 O(1)", "S2 O(1)", "F1 C0+2f", "F0 C0+f",
                 "P2 ∪ P2", "P2 ∪ P2 ∪ P2", "P2 ∪ S2", "P2 ∪ F0", "P2 ∪_C0 F1",
                 "P2 ∪_f (F0)_C0 ∪ P2", "P2 • P2"},
    (3, BIRATIONAL): {"P2 O(1)", "P2 O(2)", "S2 O(1)", "F1 C0+2f", "F0 C0+f", "P2 ∪_C0 F2"},
    (3, FIBER): {"F0 C0+2f", "F0 ∪_C0 F1"},
}


def fiber_lists(n, kind):
    if kind not in (BIRATIONAL, FIBER):
        raise ValueError(f"type must be {BIRATIONAL!r} or {FIBER!r}")
    if n == 4:
        return fourfold_fiber_lists(kind)
    if n == 3:
        return threefold_fiber_lists(kind)
    raise ValueError("only n = 3 and n = 4 are classified")
