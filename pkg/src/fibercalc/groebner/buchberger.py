"""Buchberger's algorithm with the normal selection strategy.

Both classical criteria are used: coprime leading monomials, and the
chain criterion (skip (i, j) if some lead divides the lcm and the two
pairs through it are already gone).  Output is the reduced, monic basis
sorted by decreasing leading monomial, so it is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernel
from .polynomial import GREVLEX, MonomialOrder, Polynomial


class GroebnerLimitError(RuntimeError):
    pass


@dataclass
class GroebnerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    coprime_skipped: int = 0
    chain_skipped: int = 0


@dataclass
class IdealBasis:
    vars: tuple
    generators: list
    order: MonomialOrder = GREVLEX
    groebner: bool = False
    stats: GroebnerStats = field(default=None, repr=False)

    def leading_monomials(self):
        return [g.lead_monomial(self.order) for g in self.generators]

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def is_unit(self):
        return any(g.degree() == 0 for g in self.generators)


def _monic(d, key):
    lm = max(d, key=key)
    c = d[lm]
    return {e: v / c for e, v in d.items()}, lm


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def groebner_basis(polys, order: MonomialOrder = GREVLEX, vars=None, max_pairs=200000):
    """Reduced Groebner basis of the ideal generated by polys."""
    polys = list(polys)
    if vars is None:
        if not polys:
            raise ValueError("need variables for an empty generator list")
        vars = polys[0].vars
    vars = tuple(vars)
    for p in polys:
        if p.vars != vars:
            raise ValueError("generators live over different variables")
    key = order.key
    stats = GroebnerStats()

    G, L = [], []
    for p in polys:
        if p.terms:
            g, lm = _monic(p.terms, key)
            G.append(g)
            L.append(lm)

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(L[ij[0]], L[ij[1]])), ij))
        pairs.discard((i, j))
        stats.pairs_considered += 1
        if stats.pairs_considered > max_pairs:
            raise GroebnerLimitError(f"more than {max_pairs} S-pairs")
        lcm = _lcm(L[i], L[j])
        if all(a == 0 or b == 0 for a, b in zip(L[i], L[j])):
            stats.coprime_skipped += 1
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or not _divides(L[k], lcm):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            stats.chain_skipped += 1
            continue
        stats.pairs_reduced += 1
        s = _kernel.spoly(G[i], L[i], G[j], L[j])
        h = _kernel.normal_form(s, G, L, key)
        if h:
            h, lm = _monic(h, key)
            n = len(G)
            G.append(h)
            L.append(lm)
            pairs |= {(k, n) for k in range(n)}
            if not any(lm):
                break  # the unit ideal

    return IdealBasis(vars, _reduce(G, L, key, vars), order, True, stats)


def _reduce(G, L, key, vars):
    # minimal basis: drop anything whose lead is divisible by another lead
    keep = []
    for i, lm in enumerate(L):
        dominated = False
        for j, other in enumerate(L):
            if j == i or not _divides(other, lm):
                continue
            if other != lm or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    Gm = [G[i] for i in keep]
    Lm = [L[i] for i in keep]
    out = []
    for idx in range(len(Gm)):
        rest = Gm[:idx] + Gm[idx + 1:]
        rest_l = Lm[:idx] + Lm[idx + 1:]
        r = _kernel.normal_form(Gm[idx], rest, rest_l, key)
        out.append(Polynomial(vars, r))
    out.sort(key=lambda p: key(max(p.terms, key=key)), reverse=True)
    return out


def reduce_poly(p: Polynomial, basis: IdealBasis) -> Polynomial:
    """Normal form of p modulo a Groebner basis."""
    key = basis.order.key
    G = [g.terms for g in basis.generators]
    L = [max(g, key=key) for g in G]
    # basis elements are monic when they come out of groebner_basis
    G = [_monic(g, key)[0] for g in G]
    return Polynomial(basis.vars, _kernel.normal_form(p.terms, G, L, key))


def ideal_contains(basis: IdealBasis, p: Polynomial) -> bool:
    if not basis.groebner:
        basis = groebner_basis(basis.generators, basis.order, basis.vars)
    return not reduce_poly(p, basis)
