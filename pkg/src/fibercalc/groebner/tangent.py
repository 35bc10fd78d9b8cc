"""Tangent cones by Lazard's homogenization trick, and a linear support check.

To get the ideal of lowest forms of an affine ideal I at the origin,
homogenize with a new variable h, take a Groebner basis for an order
that compares total degree first and then prefers higher powers of h,
set h = 1, and keep the lowest form of each element.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .buchberger import IdealBasis, groebner_basis, reduce_poly
from .polynomial import GREVLEX, MonomialOrder, Polynomial


class PointNotOnSchemeError(ValueError):
    pass


H = "_h"


def tangent_cone(basis: IdealBasis, point: str | None = None) -> IdealBasis:
    """Tangent cone at a point.

    With point=None the generators are affine and the point is the origin.
    Otherwise `point` names a coordinate; the ideal is projective and the
    point is the coordinate vertex where that variable is 1.
    """
    gens = [g for g in basis.generators if g]
    if point is not None:
        gens = [g.set_var_one(point) for g in gens]
        vars = tuple(v for v in basis.vars if v != point)
    else:
        vars = basis.vars
    origin = (0,) * len(vars)
    for g in gens:
        if g.evaluate(origin) != 0:
            raise PointNotOnSchemeError(f"{g} does not vanish at the point")
    if not gens:
        return groebner_basis([], GREVLEX, vars)
    n = len(vars)
    lazard = MonomialOrder("grevlex", weights=((1,) * (n + 1), (0,) * n + (1,)))
    hom = [g.homogenize(H) for g in gens]
    gb = groebner_basis(hom, lazard, vars + (H,))
    low = [g.set_var_one(H).lowest_form() for g in gb.generators]
    return groebner_basis(low, GREVLEX, vars)


@dataclass(frozen=True)
class LinearSupport:
    forms: tuple            # linear forms l with some power l^k in the ideal
    rank: int
    contained: bool         # ideal contained in the ideal of those forms
    dim: int                # projective dimension of the linear space they cut out

    def is_line(self):
        return self.contained and self.dim == 1


def linear_support(basis: IdealBasis, max_power=4) -> LinearSupport:
    """Brute-force the reduced linear space under a homogeneous ideal.

    Searches linear forms with coefficients in {-1, 0, 1}.
    """
    from .. import _linalg as la
    gb = basis if basis.groebner else groebner_basis(basis.generators, basis.order, basis.vars)
    vars = gb.vars
    n = len(vars)
    found = []
    for coeffs in product((-1, 0, 1), repeat=n):
        nz = [c for c in coeffs if c]
        if not nz or nz[0] < 0:
            continue
        form = Polynomial(vars, {tuple(int(j == i) for j in range(n)): c
                                 for i, c in enumerate(coeffs) if c})
        p = form
        for _ in range(max_power):
            if not reduce_poly(p, gb):
                found.append(coeffs)
                break
            p = p * form
    rows = [list(c) for c in found]
    red, piv = la.rref(rows) if rows else ([], [])
    rank = len(piv)
    lin = [Polynomial(vars, {tuple(int(j == i) for j in range(n)): c
                             for i, c in enumerate(r) if c}) for r in red[:rank]]
    if lin:
        jb = groebner_basis(lin, GREVLEX, vars)
        contained = all(not reduce_poly(g, jb) for g in gb.generators)
    else:
        contained = all(not g for g in gb.generators)
    return LinearSupport(tuple(found), rank, contained, n - 1 - rank)
