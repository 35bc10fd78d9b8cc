"""Rational polyhedral cones, fans and fan morphisms over Z^n.

Everything is exact. Cones are stored by primitive ray generators and
their facet inequalities are recomputed on demand by subset enumeration,
which is plenty at the sizes we care about (n <= 5, a dozen rays).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from . import _linalg as la


class ToricError(ValueError):
    pass


def _as_ray(vec, dim):
    v = tuple(int(x) for x in vec)
    if len(v) != dim:
        raise ToricError(f"ray {v} has dimension {len(v)}, expected {dim}")
    if not any(v):
        raise ToricError("the zero vector cannot be a ray")
    p = la.primitive(v)
    if p != v:
        warnings.warn(f"ray {v} scaled to primitive {p}", stacklevel=3)
    return p


@dataclass(frozen=True)
class Cone:
    rays: tuple
    ambient_dim: int

    def __init__(self, rays, ambient_dim=None):
        rays = list(rays)
        if ambient_dim is None:
            if not rays:
                raise ToricError("ambient_dim is required for the zero cone")
            ambient_dim = len(rays[0])
        seen = []
        for r in rays:
            p = _as_ray(r, ambient_dim)
            if p not in seen:
                seen.append(p)
        object.__setattr__(self, "rays", tuple(seen))
        object.__setattr__(self, "ambient_dim", int(ambient_dim))

    def __repr__(self):
        return f"Cone({[list(r) for r in self.rays]})"

    @cached_property
    def dim(self):
        return la.rank(self.rays) if self.rays else 0

    @cached_property
    def _span_basis(self):
        red, _ = la.rref(self.rays) if self.rays else ([], [])
        return red

    @cached_property
    def _span_equations(self):
        # functionals vanishing on the span
        if not self.rays:
            return [tuple(int(i == j) for j in range(self.ambient_dim))
                    for i in range(self.ambient_dim)]
        return [la.primitive(v) for v in la.nullspace(self.rays)]

    @cached_property
    def facets(self):
        """Primitive inner normals of the facets, chosen inside the span."""
        d = self.dim
        if d == 0:
            return ()
        basis = self._span_basis
        out = []
        for sub in combinations(self.rays, d - 1):
            if sub and la.rank(sub) != d - 1:
                continue
            # w = sum c_i basis_i, orthogonal to every ray in sub
            eqs = [[la.dot(b, r) for b in basis] for r in sub]
            sol = la.nullspace(eqs, ncols=len(basis)) if eqs else la.nullspace([], len(basis))
            if len(sol) != 1:
                continue
            c = sol[0]
            w = [sum(ci * b[k] for ci, b in zip(c, basis)) for k in range(self.ambient_dim)]
            vals = [la.dot(w, r) for r in self.rays]
            if all(x >= 0 for x in vals):
                pass
            elif all(x <= 0 for x in vals):
                w = [-x for x in w]
            else:
                continue
            n = la.primitive(w)
            if n not in out:
                out.append(n)
        return tuple(sorted(out))

    @property
    def is_pointed(self):
        if self.dim == 0:
            return True
        return bool(self.facets) and la.rank(self.facets) == self.dim

    @property
    def is_simplicial(self):
        return len(self.rays) == self.dim

    def in_span(self, p):
        return all(la.dot(e, p) == 0 for e in self._span_equations)

    def contains(self, p):
        return self.in_span(p) and all(la.dot(w, p) >= 0 for w in self.facets)

    def in_relint(self, p):
        return self.in_span(p) and all(la.dot(w, p) > 0 for w in self.facets)

    @cached_property
    def extremal_rays(self):
        out = []
        for r in self.rays:
            tight = [w for w in self.facets if la.dot(w, r) == 0]
            if self.dim == 1 or (tight and la.rank(tight) == self.dim - 1):
                out.append(r)
        return frozenset(out)

    def face_cut_by(self, normals):
        return Cone([r for r in self.rays if all(la.dot(w, r) == 0 for w in normals)],
                    self.ambient_dim)

    @cached_property
    def faces(self):
        """All faces, as frozensets of extremal rays (zero cone included)."""
        found = {self.extremal_rays}
        frontier = [self.extremal_rays]
        facet_sets = [frozenset(r for r in self.extremal_rays if la.dot(w, r) == 0)
                      for w in self.facets]
        while frontier:
            nxt = []
            for f in frontier:
                for fs in facet_sets:
                    g = f & fs
                    if g not in found:
                        found.add(g)
                        nxt.append(g)
            frontier = nxt
        found.add(frozenset())
        return found

    def key(self):
        return tuple(sorted(self.extremal_rays))

    def same_as(self, other):
        return self.ambient_dim == other.ambient_dim and self.extremal_rays == other.extremal_rays


def cone_of(rays, dim):
    return Cone(sorted(rays), dim)


def is_smooth_cone(c: Cone) -> bool:
    for r in c.rays:
        if len(r) != c.ambient_dim:
            raise ToricError("ray dimension mismatch")
    if not c.rays:
        return True
    if la.rank(c.rays) != len(c.rays):
        return False
    return la.maximal_minors_gcd([list(r) for r in c.rays]) == 1


def facets(c: Cone):
    return list(c.facets)


def is_face(k: Cone, sigma: Cone) -> bool:
    """True iff k is a face of sigma."""
    if not all(sigma.contains(r) for r in k.rays):
        return False
    tight = [w for w in sigma.facets if all(la.dot(w, r) == 0 for r in k.rays)]
    f = sigma.face_cut_by(tight)
    return all(k.contains(r) for r in f.rays)


def intersect_cones(a: Cone, b: Cone) -> Cone:
    n = a.ambient_dim
    eqs = list(a._span_equations) + list(b._span_equations)
    ineqs = list(a.facets) + list(b.facets)
    base_rank = la.rank(eqs) if eqs else 0
    if base_rank == n:
        return Cone([], n)
    need = n - 1 - base_rank
    rays = []
    for sub in combinations(ineqs, need):
        rows = eqs + list(sub)
        ns = la.nullspace(rows, ncols=n) if rows else la.nullspace([], n)
        if len(ns) != 1:
            continue
        x = ns[0]
        for cand in (x, [-t for t in x]):
            if all(la.dot(w, cand) >= 0 for w in ineqs):
                p = la.primitive(cand)
                if p not in rays:
                    rays.append(p)
                break
    return Cone(rays, n)


@dataclass(frozen=True)
class Fan:
    maximal_cones: tuple
    ambient_dim: int

    def __init__(self, cones, ambient_dim=None):
        cones = [c if isinstance(c, Cone) else Cone(c, ambient_dim) for c in cones]
        if ambient_dim is None:
            ambient_dim = cones[0].ambient_dim
        for c in cones:
            if c.ambient_dim != ambient_dim:
                raise ToricError("cones live in different lattices")
        object.__setattr__(self, "maximal_cones", tuple(cones))
        object.__setattr__(self, "ambient_dim", int(ambient_dim))

    @cached_property
    def cones(self):
        """Every cone of the fan, deduplicated, keyed by extremal ray set."""
        out = {}
        for c in self.maximal_cones:
            for f in c.faces:
                out.setdefault(f, Cone(sorted(f), self.ambient_dim))
        return out

    def rays(self):
        return sorted({r for c in self.maximal_cones for r in c.extremal_rays})

    def contains_point(self, p):
        return any(c.contains(p) for c in self.maximal_cones)

    def find_cone(self, c: Cone):
        return self.cones.get(c.extremal_rays)


def fan_diagnostics(f: Fan):
    """List of problems; empty means f is a fan."""
    problems = []
    for i, c in enumerate(f.maximal_cones):
        if not c.is_pointed:
            problems.append(f"cone {i} is not strongly convex")
    for (i, a), (j, b) in combinations(enumerate(f.maximal_cones), 2):
        if i >= j:
            continue
        meet = intersect_cones(a, b)
        if not (is_face(meet, a) and is_face(meet, b)):
            problems.append(f"cones {i} and {j} overlap outside a common face")
    return problems


def is_fan(f: Fan) -> bool:
    return not fan_diagnostics(f)


def star_subdivision(f: Fan, r) -> Fan:
    r = _as_ray(r, f.ambient_dim)
    if not f.contains_point(r):
        raise ToricError(f"{r} is outside the support of the fan")
    new = []
    for c in f.maximal_cones:
        if not c.contains(r):
            new.append(c)
            continue
        if c.in_span(r) and r in c.extremal_rays:
            new.append(c)
            continue
        for w in c.facets:
            if la.dot(w, r) == 0:
                continue
            face = c.face_cut_by([w])
            new.append(Cone(list(face.rays) + [r], f.ambient_dim))
    return Fan(new, f.ambient_dim)


@dataclass(frozen=True)
class FanMap:
    matrix: tuple
    source: Fan
    target: Fan

    def __init__(self, matrix, source, target):
        mat = tuple(tuple(int(x) for x in row) for row in matrix)
        if len(mat) != target.ambient_dim or any(len(row) != source.ambient_dim for row in mat):
            raise ToricError("matrix shape does not match the two lattices")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)

    def image(self, v):
        return la.matvec(self.matrix, v)


def _image_in_some(m: FanMap, rays, cones):
    imgs = [m.image(r) for r in rays]
    return any(all(t.contains(p) for p in imgs) for t in cones)


def check_fan_map(m: FanMap) -> bool:
    return all(_image_in_some(m, c.rays, m.target.maximal_cones)
               for c in m.source.maximal_cones)


def check_fan_map_all_faces(m: FanMap) -> bool:
    """Slow reference formulation over every source and target cone."""
    targets = list(m.target.cones.values())
    return all(_image_in_some(m, c.rays, targets) for c in m.source.cones.values())


def _maps_relint_into(m: FanMap, sigma: Cone, tau: Cone):
    imgs = [m.image(r) for r in sigma.rays]
    if not all(tau.contains(p) for p in imgs):
        return False
    pt = tuple(sum(col) for col in zip(*imgs)) if imgs else (0,) * tau.ambient_dim
    return tau.in_relint(pt)


def fiber_components(m: FanMap, tau: Cone):
    """Minimal source cones whose relative interior lands in relint(tau).

    Returns (cone, orbit closure dimension) pairs, sorted.
    """
    if m.target.find_cone(tau) is None:
        raise ToricError("tau is not a cone of the target fan")
    hits = [c for c in m.source.cones.values() if _maps_relint_into(m, c, tau)]
    minimal = []
    for c in hits:
        if any(o.extremal_rays < c.extremal_rays for o in hits):
            continue
        minimal.append(c)
    n = m.source.ambient_dim
    return sorted(((c, n - c.dim) for c in minimal), key=lambda t: t[0].key())


def meeting_cone(f: Fan, cones):
    """Smallest cone of f containing all given cones, or None if they are disjoint orbits."""
    want = set()
    for c in cones:
        want |= set(c.extremal_rays)
    best = None
    for key, c in f.cones.items():
        if want <= key and (best is None or len(key) < len(best.extremal_rays)):
            best = c
    return best


def orbit_dim(f: Fan, c: Cone):
    return f.ambient_dim - c.dim


# -- JSON helpers ---------------------------------------------------------

def fan_from_json(obj) -> Fan:
    n = obj["ambient_dim"]
    return Fan([Cone(rays, n) for rays in obj["cones"]], n)


def fan_to_json(f: Fan):
    return {"ambient_dim": f.ambient_dim,
            "cones": [[list(r) for r in c.rays] for c in f.maximal_cones]}


def fanmap_from_json(obj) -> FanMap:
    return FanMap(obj["matrix"], fan_from_json(obj["source"]), fan_from_json(obj["target"]))
