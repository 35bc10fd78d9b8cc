"""Exact linear algebra over Q on plain nested lists.

Small, dependency free, and good enough for the 4x4 and 5x5 matrices the
toric code throws at it.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd


def _frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Return (reduced row echelon form, pivot columns)."""
    m = _frac_matrix(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows):
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows, ncols=None):
    """Basis of {x : rows * x = 0} as lists of Fractions."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ncols = len(rows[0])
    red, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -red[i][fc]
        basis.append(v)
    return basis


def det(rows):
    """Integer determinant by Bareiss fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def maximal_minors_gcd(rows):
    """gcd of all k x k minors of a k x n integer matrix (k <= n)."""
    k = len(rows)
    n = len(rows[0])
    g = 0
    for cols in combinations(range(n), k):
        g = gcd(g, det([[r[c] for c in cols] for r in rows]))
        if g == 1:
            break
    return g


def primitive(vec):
    """Scale a rational vector to a primitive integer vector (same direction)."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in ints)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def matvec(mat, v):
    return tuple(sum(a * b for a, b in zip(row, v)) for row in mat)


def solve_in_span(gens, target):
    """Coefficients c with sum c_i gens_i == target, or None."""
    if not gens:
        return [] if all(x == 0 for x in target) else None
    n = len(target)
    aug = [[gens[j][i] for j in range(len(gens))] + [target[i]] for i in range(n)]
    red, piv = rref(aug)
    if len(gens) in piv:
        return None
    sol = [Fraction(0)] * len(gens)
    for i, pc in enumerate(piv):
        sol[pc] = red[i][-1]
    return sol
