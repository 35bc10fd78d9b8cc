"""Pure-Python reduction kernel.

Polynomials here are bare dicts {exponent tuple: Fraction}; the basis is
monic and `leads[i]` is the leading monomial of `basis[i]`.  `key` maps a
monomial to an integer tuple, larger meaning bigger in the order.
"""
from heapq import heappop, heappush

IMPLEMENTATION = "python"


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def normal_form(f, basis, leads, key):
    """Full reduction of f modulo basis; returns the remainder dict."""
    p = dict(f)
    rem = {}
    heap = []
    for m in p:
        heappush(heap, (tuple(-x for x in key(m)), m))
    nb = len(basis)
    while heap:
        _, m = heappop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        for i in range(nb):
            if _divides(leads[i], m):
                break
        else:
            rem[m] = c
            continue
        lm = leads[i]
        q = tuple(x - y for x, y in zip(m, lm))
        for mono, coeff in basis[i].items():
            if mono == lm:
                continue
            t = tuple(x + y for x, y in zip(mono, q))
            old = p.get(t)
            v = (old or 0) - c * coeff
            if v:
                p[t] = v
                if old is None:
                    heappush(heap, (tuple(-x for x in key(t)), t))
            elif old is not None:
                del p[t]
    return rem


def spoly(f, lf, g, lg):
    """S-polynomial of two monic dicts with leading monomials lf, lg."""
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    uf = tuple(a - b for a, b in zip(lcm, lf))
    ug = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for mono, c in f.items():
        out[tuple(a + b for a, b in zip(mono, uf))] = c
    for mono, c in g.items():
        t = tuple(a + b for a, b in zip(mono, ug))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out
