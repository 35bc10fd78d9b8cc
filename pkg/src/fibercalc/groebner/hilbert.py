"""Hilbert series of monomial ideals and of homogeneous ideals via a Groebner basis.

The numerator N(t) of HS = N(t)/(1-t)^n is computed by the standard
recursion N(I) = N(I') - t^deg(m) N(I' : m) on a minimal generator m.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .buchberger import IdealBasis, groebner_basis


class NonHomogeneousError(ValueError):
    pass


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _trim(a):
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda m: (sum(m), m))
    out = []
    for m in gens:
        if not any(all(x <= y for x, y in zip(o, m)) for o in out):
            out.append(m)
    return tuple(out)


@lru_cache(maxsize=4096)
def _numerator(gens):
    if not gens:
        return (1,)
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in gens]
    if all(not (supports[i] & supports[j]) for i in range(len(gens)) for j in range(i)):
        out = [1]
        for m in gens:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(_trim(out))
    m = max(gens, key=lambda g: (sum(g), g))
    rest = tuple(g for g in gens if g != m)
    colon = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in rest))
    left = _numerator(rest)
    right = [0] * sum(m) + list(_numerator(colon))
    return tuple(_trim(_poly_sub(list(left), right)))


def hilbert_numerator(monomials, nvars=None):
    """Numerator of the Hilbert series of S/(monomials)."""
    monomials = [tuple(m) for m in monomials]
    if any(not any(m) for m in monomials):
        return [0]
    return list(_numerator(_minimalize(tuple(monomials))))


@dataclass(frozen=True)
class HilbertData:
    nvars: int
    numerator: tuple          # raw N(t)
    reduced: tuple            # h(t) with N = h (1-t)^(n-d)
    krull_dim: int            # dimension of the affine cone

    @property
    def dim(self):
        """Projective dimension; -1 for the empty scheme."""
        return self.krull_dim - 1

    @property
    def degree(self):
        return sum(self.reduced) if self.krull_dim > 0 else 0

    def hilbert_function(self, k):
        if self.krull_dim == 0:
            return self.reduced[k] if 0 <= k < len(self.reduced) else 0
        d = self.krull_dim
        return sum(h * comb(k - i + d - 1, d - 1) for i, h in enumerate(self.reduced) if k - i >= 0)

    def hilbert_polynomial_coeffs(self):
        """Coefficients of the Hilbert polynomial in k, from k^0 upward, as Fractions."""
        from fractions import Fraction
        d = self.krull_dim
        if d == 0:
            return []
        # interpolate through d points far enough out
        start = len(self.reduced) + 1
        xs = list(range(start, start + d))
        ys = [self.hilbert_function(x) for x in xs]
        coeffs = [Fraction(0)] * d
        for i, (xi, yi) in enumerate(zip(xs, ys)):
            basis = [Fraction(1)]
            denom = Fraction(1)
            for j, xj in enumerate(xs):
                if j == i:
                    continue
                basis = [Fraction(0)] + basis
                for k in range(len(basis) - 1):
                    basis[k] -= xj * basis[k + 1]
                denom *= xi - xj
            for k in range(d):
                coeffs[k] += yi * basis[k] / denom
        return coeffs

    def leading_degree_check(self):
        """Degree recovered from the Hilbert polynomial's leading coefficient."""
        c = self.hilbert_polynomial_coeffs()
        if not c:
            return 0
        return c[-1] * factorial(self.krull_dim - 1)


def hilbert_from_numerator(num, nvars) -> HilbertData:
    num = list(num)
    if num == [0]:
        return HilbertData(nvars, (0,), (0,), 0)
    h = num
    k = nvars
    while k > 0 and sum(h) == 0:
        # divide by (1 - t)
        q, acc = [], 0
        for c in h[:-1]:
            acc += c
            q.append(acc)
        h = q
        k -= 1
    return HilbertData(nvars, tuple(num), tuple(h), k)


def hilbert_data(basis: IdealBasis) -> HilbertData:
    if not basis.is_homogeneous():
        raise NonHomogeneousError("Hilbert data needs homogeneous generators")
    gb = basis if basis.groebner else groebner_basis(basis.generators, basis.order, basis.vars)
    n = len(gb.vars)
    if gb.is_unit():
        return hilbert_from_numerator([0], n)
    return hilbert_from_numerator(hilbert_numerator(gb.leading_monomials(), n), n)


def dim_degree(basis: IdealBasis):
    hd = hilbert_data(basis)
    return hd.dim, hd.degree


# -- the resolution  0 -> O(-s-2) -> O(-s-1)^(s+2) -> O(-s)^(s+2) -> I_S -> 0 on P^4

EXPECTED_RESOLUTION_DEGREE = {2: 2, 3: 5, 4: 9}


def resolution_hilbert(s, k):
    """h^0(O_S(k)) for k >> 0, from the alternating sum of the resolution."""
    def o(a):
        return comb(k + a + 4, 4) if k + a + 4 >= 4 else 0
    ideal = (s + 2) * o(-s) - (s + 2) * o(-s - 1) + o(-s - 2)
    return o(0) - ideal


@dataclass(frozen=True)
class ResolutionCheck:
    s: int
    dim: int
    degree: int
    expected_degree: int

    @property
    def ok(self):
        return self.dim == 2 and self.degree == self.expected_degree


def resolution_hilbert_check(s) -> ResolutionCheck:
    """Finite differences of the alternating sum give dim and degree."""
    if s not in EXPECTED_RESOLUTION_DEGREE:
        raise ValueError("s must be 2, 3 or 4")
    vals = [resolution_hilbert(s, k) for k in range(s + 3, s + 12)]
    order = 0
    while any(v != vals[0] for v in vals):
        vals = [b - a for a, b in zip(vals, vals[1:])]
        order += 1
    return ResolutionCheck(s, order, vals[0], EXPECTED_RESOLUTION_DEGREE[s])
