import time
import warnings
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from fibercalc import _linalg as la
from fibercalc import fixtures
from fibercalc import lattice_toric as lt

E = [tuple(int(i == j) for j in range(4)) for i in range(4)]
e1, e2, e3, e4 = E
U = (1, 1, 0, 0)
V = (0, 0, 1, 1)
V1 = (-1, 0, -1, 0)
V2 = (0, -1, -1, -1)
M4 = (0, 0, 0, -1)


def two_planes():
    return lt.Fan([[U, V, e1, e3], [U, V, e1, e4], [U, V, e2, e3], [U, V, e2, e4]], 4)


def conic_fibration():
    return lt.Fan([[e1, V1, e2, e4], [e1, V1, V2, e4], [e1, V1, e2, V2],
                   [e1, e2, V2, M4], [V1, e2, V2, M4]], 4)


QUADRIC = lt.Cone([(1, 0, 0), (0, 1, 0), (-1, 0, -1), (0, -1, -1)], 3)


def test_smooth_cones():
    assert lt.is_smooth_cone(lt.Cone([e1, e2, e3, e4]))
    assert lt.is_smooth_cone(lt.Cone([(1, 0), (1, 2)])) is False
    assert lt.is_smooth_cone(lt.Cone([(1, 0), (0, 1), (1, 1)])) is False
    assert lt.is_smooth_cone(lt.Cone([], 3))


def test_nonprimitive_ray_warns_and_scales():
    with pytest.warns(UserWarning):
        c = lt.Cone([(2, 0), (0, 1)])
    assert c.rays == ((1, 0), (0, 1))


def test_bad_rays():
    with pytest.raises(lt.ToricError):
        lt.Cone([(0, 0)])
    with pytest.raises(lt.ToricError):
        lt.Cone([(1, 0), (1, 0, 0)])


def test_quadric_cone_facets():
    assert QUADRIC.dim == 3
    assert set(QUADRIC.facets) == {(0, 0, -1), (0, 1, -1), (1, 0, -1), (1, 1, -1)}
    assert not lt.is_smooth_cone(QUADRIC)


def _hull_facets(rays):
    """Inner facet normals from scipy, as primitive integer vectors."""
    pts = np.array([[0] * len(rays[0])] + [list(r) for r in rays], dtype=float)
    hull = ConvexHull(pts)
    out = set()
    for eq in hull.equations:
        if abs(eq[-1]) > 1e-9:
            continue
        top = max(abs(x) for x in eq[:-1])
        w = [Fraction(-x / top).limit_denominator(100) for x in eq[:-1]]
        out.add(la.primitive(w))
    return out


@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=3, max_size=6))
def test_facets_agree_with_convex_hull(rays):
    rays = [r for r in rays if any(r)]
    assume(len(rays) >= 3)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        c = lt.Cone(rays, 3)
    assume(c.dim == 3 and c.is_pointed)
    assert set(c.facets) == _hull_facets(list(c.rays))


def test_faces_of_simplex_and_quadric():
    assert len(lt.Cone([e1, e2, e3, e4]).faces) == 16
    # quadric cone: 0, 4 rays, 4 facets, itself
    assert len(QUADRIC.faces) == 10


def test_is_face():
    s = lt.Cone([e1, e2, e3])
    assert lt.is_face(lt.Cone([e1, e2]), s)
    assert not lt.is_face(lt.Cone([(1, 1, 0)]), s)
    assert lt.is_face(lt.Cone([], 3), s)


def test_intersection():
    a = lt.Cone([(1, 0), (0, 1)])
    b = lt.Cone([(1, 1), (-1, 1)])
    got = lt.intersect_cones(a, b)
    assert got.extremal_rays == {(1, 1), (0, 1)}


def test_two_planes_fan():
    f = two_planes()
    assert lt.is_fan(f)
    assert all(lt.is_smooth_cone(c) for c in f.maximal_cones)
    target = lt.Fan([[(1, 0), (0, 1)], [(1, 0), (0, -1)], [(-1, 0), (0, 1)], [(-1, 0), (0, -1)]], 2)
    m = lt.FanMap([[1, -1, 0, 0], [0, 0, 1, -1]], f, target)
    assert lt.check_fan_map(m)
    assert lt.check_fan_map_all_faces(m)


def test_two_planes_is_a_double_subdivision():
    f = lt.Fan([[e1, e2, e3, e4]], 4)
    f = lt.star_subdivision(lt.star_subdivision(f, U), V)
    assert {c.extremal_rays for c in f.maximal_cones} == \
        {c.extremal_rays for c in two_planes().maximal_cones}


def test_conic_fibration():
    t0 = time.perf_counter()
    f = conic_fibration()
    assert lt.is_fan(f)
    assert all(lt.is_smooth_cone(c) for c in f.maximal_cones)
    m = lt.FanMap([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], f, lt.Fan([QUADRIC], 3))
    assert lt.check_fan_map(m)
    comps = lt.fiber_components(m, QUADRIC)
    assert sorted((c.extremal_rays, d) for c, d in comps) == \
        sorted([(frozenset({V1, e1}), 2), (frozenset({V2, e2}), 2)])
    meet = lt.meeting_cone(f, [c for c, _ in comps])
    assert meet.extremal_rays == {e1, V1, e2, V2}
    assert lt.orbit_dim(f, meet) == 0
    assert time.perf_counter() - t0 < 1.0


def test_fiber_over_a_ray_is_a_curve():
    m = lt.FanMap([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], conic_fibration(), lt.Fan([QUADRIC], 3))
    tau = lt.Cone([(1, 0, 0)], 3)
    comps = lt.fiber_components(m, tau)
    # orbit of dim 3 over an orbit of dim 2: the fibres are curves
    assert comps and all(d - (3 - tau.dim) == 1 for _, d in comps)


def test_overlapping_cones_are_not_a_fan():
    f = lt.Fan([[(1, 0), (0, 1)], [(1, 1), (-1, 1)]], 2)
    assert not lt.is_fan(f)
    assert lt.fan_diagnostics(f)


def test_bad_map_is_rejected():
    f = lt.Fan([[(1, 0), (0, 1)]], 2)
    target = lt.Fan([[(1, 0), (0, 1)]], 2)
    assert not lt.check_fan_map(lt.FanMap([[-1, 0], [0, 1]], f, target))
    with pytest.raises(lt.ToricError):
        lt.FanMap([[1, 0, 0]], f, target)


def test_subdivision_outside_support():
    f = lt.Fan([[(1, 0), (0, 1)]], 2)
    with pytest.raises(lt.ToricError):
        lt.star_subdivision(f, (-1, 0))
    same = lt.star_subdivision(f, (1, 0))
    assert {c.extremal_rays for c in same.maximal_cones} == {c.extremal_rays for c in f.maximal_cones}


def test_json_round_trip():
    for name in fixtures.FANS:
        obj = fixtures.fan_json(name)
        f = lt.fan_from_json(obj["source"])
        assert lt.fan_from_json(lt.fan_to_json(f)).maximal_cones == f.maximal_cones


# -- properties ------------------------------------------------------------

@st.composite
def unimodular(draw, n):
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(0, 6))):
        i = draw(st.integers(0, n - 1))
        j = draw(st.integers(0, n - 1))
        if i == j:
            m[i] = [-x for x in m[i]]
        else:
            c = draw(st.integers(-2, 2))
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


@st.composite
def smooth_cones(draw):
    n = draw(st.integers(2, 4))
    k = draw(st.integers(1, n))
    u = draw(unimodular(n))
    return lt.Cone([tuple(r) for r in u[:k]], n), u


@given(smooth_cones(), st.data())
def test_smoothness_invariant_under_unimodular_change(cu, data):
    c, _ = cu
    g = data.draw(unimodular(c.ambient_dim))
    image = lt.Cone([la.matvec(g, r) for r in c.rays], c.ambient_dim)
    assert lt.is_smooth_cone(c) and lt.is_smooth_cone(image)


@given(smooth_cones(), st.data())
def test_star_subdivision_preserves_support(cu, data):
    c, _ = cu
    coeffs = data.draw(st.lists(st.integers(0, 2), min_size=len(c.rays), max_size=len(c.rays)))
    assume(any(coeffs))
    r = la.primitive([sum(a * ray[i] for a, ray in zip(coeffs, c.rays)) for i in range(c.ambient_dim)])
    f = lt.Fan([c], c.ambient_dim)
    g = lt.star_subdivision(f, r)
    assert lt.is_fan(g)
    pts = list(product(range(-2, 3), repeat=c.ambient_dim))
    for p in pts:
        assert f.contains_point(p) == g.contains_point(p)
    # sums of the rays land in the support too
    for sub in product((0, 1, 2), repeat=len(c.rays)):
        p = [sum(a * ray[i] for a, ray in zip(sub, c.rays)) for i in range(c.ambient_dim)]
        assert g.contains_point(p)
