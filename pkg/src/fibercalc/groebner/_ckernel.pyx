# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _pykernel; same algorithm with typed inner loops."""
from heapq import heappop, heappush

IMPLEMENTATION = "cython"


cdef inline bint _divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if <long>a[i] > <long>b[i]:
            return False
    return True


cdef inline tuple _shift(tuple a, tuple b, int sign):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = <long>a[i] + sign * <long>b[i]
    return tuple(out)


cdef inline tuple _negkey(object key, tuple m):
    cdef tuple k = key(m)
    cdef Py_ssize_t i, n = len(k)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = -<long>k[i]
    return tuple(out)


def normal_form(dict f, list basis, list leads, key):
    cdef dict p = dict(f)
    cdef dict rem = {}
    cdef list heap = []
    cdef Py_ssize_t i, nb = len(basis)
    cdef tuple m, lm, q, t, mono
    cdef dict g
    cdef bint found
    for m in p:
        heappush(heap, (_negkey(key, m), m))
    while heap:
        m = heappop(heap)[1]
        c = p.pop(m, None)
        if c is None:
            continue
        found = False
        for i in range(nb):
            if _divides(<tuple>leads[i], m):
                found = True
                break
        if not found:
            rem[m] = c
            continue
        lm = <tuple>leads[i]
        q = _shift(m, lm, -1)
        g = <dict>basis[i]
        for mono, coeff in g.items():
            if mono == lm:
                continue
            t = _shift(mono, q, 1)
            old = p.get(t)
            v = (0 if old is None else old) - c * coeff
            if v:
                p[t] = v
                if old is None:
                    heappush(heap, (_negkey(key, t), t))
            elif old is not None:
                del p[t]
    return rem


def spoly(dict f, tuple lf, dict g, tuple lg):
    cdef Py_ssize_t i, n = len(lf)
    cdef list lcm = [0] * n
    for i in range(n):
        lcm[i] = max(<long>lf[i], <long>lg[i])
    cdef tuple L = tuple(lcm)
    cdef tuple uf = _shift(L, lf, -1)
    cdef tuple ug = _shift(L, lg, -1)
    cdef dict out = {}
    cdef tuple mono, t
    for mono, c in f.items():
        out[_shift(mono, uf, 1)] = c
    for mono, c in g.items():
        t = _shift(mono, ug, 1)
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out
