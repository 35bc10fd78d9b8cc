"""Intersection numbers and Riemann-Roch on P^2, Hirzebruch surfaces F_r and cones S_r.

Picard bases: {h} on P^2, {C0, f} on F_r.  A cone S_r is handled on its
resolution F_r; O_{S_r}(k) pulls back to k(C0 + r f).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceModel:
    kind: str          # "P2", "F" or "S"
    r: int = 0

    def __post_init__(self):
        if self.kind not in ("P2", "F", "S"):
            raise SurfaceError(f"unknown surface kind {self.kind!r}")
        if self.kind == "F" and self.r < 0:
            raise SurfaceError("F_r needs r >= 0")
        if self.kind == "S" and self.r < 2:
            raise SurfaceError("S_r needs r >= 2")

    @property
    def rank(self):
        return 1 if self.kind == "P2" else 2

    @property
    def upstairs(self):
        """Smooth model on which classes live (F_r for a cone)."""
        return Hirzebruch(self.r) if self.kind == "S" else self

    def __str__(self):
        return {"P2": "P2", "F": f"F{self.r}", "S": f"S{self.r}"}[self.kind]


def ProjPlane():
    return SurfaceModel("P2")


def Hirzebruch(r):
    return SurfaceModel("F", r)


def ConeS(r):
    return SurfaceModel("S", r)


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if self.surface.kind == "S":
            # a class on a cone is stored upstairs
            raise SurfaceError("use cone_class() for divisors on S_r")
        if len(coeffs) != self.surface.rank:
            raise SurfaceError("coefficient vector does not match the Picard basis")

    def _check(self, other):
        if not isinstance(other, DivisorClass) or other.surface != self.surface:
            raise SurfaceError("classes live on different surfaces")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

    def __rmul__(self, k):
        return DivisorClass(self.surface, tuple(k * a for a in self.coefficients))

    def __str__(self):
        if self.surface.kind == "P2":
            return f"O({self.coefficients[0]})"
        a, b = self.coefficients
        parts = []
        if a:
            parts.append("C0" if a == 1 else f"{a}C0")
        if b:
            s = "f" if b == 1 else f"{b}f"
            parts.append(s if not parts or b < 0 else "+" + s)
        return "".join(parts).replace("+-", "-") or "0"


def h(k=1):
    return DivisorClass(ProjPlane(), (k,))


def cls(r, a, b):
    """a*C0 + b*f on F_r."""
    return DivisorClass(Hirzebruch(r), (a, b))


def cone_class(r, k=1):
    """Pullback of O_{S_r}(k) to F_r."""
    return cls(r, k, k * r)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    d1._check(d2)
    s = d1.surface
    if s.kind == "P2":
        return d1.coefficients[0] * d2.coefficients[0]
    a1, b1 = d1.coefficients
    a2, b2 = d2.coefficients
    return -s.r * a1 * a2 + a1 * b2 + a2 * b1


def canonical_class(s: SurfaceModel) -> DivisorClass:
    s = s.upstairs
    if s.kind == "P2":
        return h(-3)
    return cls(s.r, -2, -(s.r + 2))


def _rr(d: DivisorClass):
    k = canonical_class(d.surface)
    return 1 + intersect(d, d - k) // 2


def fixed_part(d: DivisorClass):
    """Split D = m*C0 + movable on F_r by peeling C0 while D.C0 < 0."""
    if d.surface.kind == "P2":
        return 0, d
    c0 = cls(d.surface.r, 1, 0)
    m = 0
    while d.coefficients[0] > 0 and intersect(d, c0) < 0:
        d = d - c0
        m += 1
    return m, d


def is_effective(d: DivisorClass) -> bool:
    if d.surface.kind == "P2":
        return d.coefficients[0] >= 0
    a, b = d.coefficients
    return a >= 0 and b >= 0


def h0(s: SurfaceModel, d: DivisorClass) -> int:
    if d.surface != s.upstairs:
        raise SurfaceError("class does not live on this surface")
    if not is_effective(d):
        raise SurfaceError(f"{d} is not effective")
    if s.kind == "P2":
        return comb(d.coefficients[0] + 2, 2)
    _, mov = fixed_part(d)
    if not is_effective(mov):
        raise SurfaceError(f"{d} is not effective after removing C0")
    return _rr(mov)


def linear_system_dim(s, d):
    return h0(s, d) - 1


def is_nef(d: DivisorClass) -> bool:
    if d.surface.kind == "P2":
        return d.coefficients[0] >= 0
    r = d.surface.r
    return intersect(d, cls(r, 1, 0)) >= 0 and intersect(d, cls(r, 0, 1)) >= 0


def is_ample(s: SurfaceModel, d: DivisorClass) -> bool:
    if s.kind == "P2":
        return d.coefficients[0] > 0
    a, b = d.coefficients
    if s.kind == "F":
        return a > 0 and b > s.r * a
    # on S_r only multiples of the hyperplane class descend
    return a > 0 and b == s.r * a


def degree(s, d):
    return intersect(d, d)


def delta_genus(s: SurfaceModel, L: DivisorClass) -> int:
    if not is_ample(s, L):
        raise SurfaceError(f"{L} is not ample on {s}")
    return 2 + intersect(L, L) - h0(s, L)


def sectional_genus(s: SurfaceModel, L: DivisorClass) -> int:
    k = canonical_class(s)
    return 1 + intersect(k + L, L) // 2


# -- notation: "P2 O(2)", "F(2) C0+3f", "S(3) O(1)" ------------------------

_SURF = re.compile(r"^\s*(P2|P\^2|F\s*\(?\s*(\d+)\s*\)?|S\s*\(?\s*(\d+)\s*\)?)\s*(.*)$")
_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(C0|f)")


def parse_surface(text):
    m = _SURF.match(text)
    if not m:
        raise SurfaceError(f"cannot parse surface in {text!r}")
    head = m.group(1)
    if head.startswith("P"):
        return ProjPlane(), m.group(4)
    if head.startswith("F"):
        return Hirzebruch(int(m.group(2))), m.group(4)
    return ConeS(int(m.group(3))), m.group(4)


def parse_class(s: SurfaceModel, text):
    t = text.strip().replace(" ", "")
    om = re.fullmatch(r"O\((-?\d+)\)", t)
    if om:
        k = int(om.group(1))
        if s.kind == "P2":
            return h(k)
        if s.kind == "S":
            return cone_class(s.r, k)
        raise SurfaceError("O(k) notation is only defined on P2 and S_r")
    if s.kind == "P2":
        hm = re.fullmatch(r"(-?\d*)h", t)
        if hm:
            c = hm.group(1)
            return h(int(c) if c not in ("", "-") else (-1 if c == "-" else 1))
        raise SurfaceError(f"cannot parse class {text!r} on P2")
    a = b = 0
    pos = 0
    for tm in _TERM.finditer(t):
        if tm.start() != pos:
            break
        sign = -1 if tm.group(1) == "-" else 1
        coef = int(tm.group(2)) if tm.group(2) else 1
        if tm.group(3) == "C0":
            a += sign * coef
        else:
            b += sign * coef
        pos = tm.end()
    if pos != len(t) or not t:
        raise SurfaceError(f"cannot parse class {text!r}")
    return cls(s.upstairs.r, a, b)


def parse_polarized(text):
    """'F(2) C0+3f' -> (surface, class)."""
    s, rest = parse_surface(text)
    return s, parse_class(s, rest)
