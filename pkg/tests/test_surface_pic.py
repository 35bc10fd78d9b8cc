import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibercalc import surface_pic as sp
from fibercalc.surface_pic import ConeS, Hirzebruch, ProjPlane, cls, cone_class, h


def h0_by_counting(r, a, b):
    """Sections of aC0 + bf on F_r: sum over the fibre grading of h0(P1, O(b - i r))."""
    return sum(max(0, b - i * r + 1) for i in range(a + 1))


def test_intersection_numbers():
    assert sp.intersect(cls(0, 1, 2), cls(0, 3, 4)) == 10
    assert sp.intersect(cls(2, 1, 0), cls(2, 1, 0)) == -2
    assert sp.intersect(cls(5, 0, 1), cls(5, 0, 1)) == 0
    assert sp.intersect(h(2), h(3)) == 6


def test_canonical_classes():
    assert sp.canonical_class(ProjPlane()) == h(-3)
    assert sp.canonical_class(Hirzebruch(3)) == cls(3, -2, -5)
    assert sp.canonical_class(ConeS(2)) == cls(2, -2, -4)
    assert sp.intersect(sp.canonical_class(Hirzebruch(1)), sp.canonical_class(Hirzebruch(1))) == 8


def test_h0_examples():
    assert sp.h0(ProjPlane(), h(2)) == 6
    assert sp.h0(Hirzebruch(1), cls(1, 1, 2)) == 5
    assert sp.h0(Hirzebruch(2), cls(2, 1, 1)) == 2
    assert sp.h0(ConeS(3), cone_class(3)) == 5


@pytest.mark.parametrize("r", range(0, 7))
@pytest.mark.parametrize("a", range(0, 4))
@pytest.mark.parametrize("b", range(0, 9))
def test_h0_against_monomial_count(r, a, b):
    assert sp.h0(Hirzebruch(r), cls(r, a, b)) == h0_by_counting(r, a, b)


def test_pencil_of_c0_plus_f():
    assert [sp.linear_system_dim(Hirzebruch(r), cls(r, 1, 1)) for r in range(0, 9)] == \
        [3, 2, 1, 1, 1, 1, 1, 1, 1]


def test_not_effective():
    with pytest.raises(sp.SurfaceError):
        sp.h0(Hirzebruch(1), cls(1, -1, 3))


@pytest.mark.parametrize("s, L", [
    (ProjPlane(), h(1)), (ProjPlane(), h(2)), (ConeS(2), cone_class(2)), (ConeS(3), cone_class(3)),
    (Hirzebruch(0), cls(0, 1, 1)), (Hirzebruch(0), cls(0, 1, 2)), (Hirzebruch(1), cls(1, 1, 2)),
    (Hirzebruch(2), cls(2, 1, 3)),
])
def test_delta_genus_zero_pairs(s, L):
    assert sp.delta_genus(s, L) == 0
    assert sp.sectional_genus(s, L) == 0


def test_sectional_genus_of_cubic():
    assert sp.sectional_genus(ProjPlane(), h(3)) == 1
    assert sp.delta_genus(ProjPlane(), h(3)) == 1


def test_amplitude():
    assert sp.is_ample(Hirzebruch(1), cls(1, 1, 2))
    assert not sp.is_ample(Hirzebruch(1), cls(1, 1, 1))
    assert sp.is_nef(cls(1, 1, 1))
    assert not sp.is_nef(cls(2, 1, 1))
    with pytest.raises(sp.SurfaceError):
        sp.delta_genus(Hirzebruch(2), cls(2, 1, 2))


def test_parsing():
    assert sp.parse_polarized("P2 O(2)") == (ProjPlane(), h(2))
    assert sp.parse_polarized("F(2) C0+3f") == (Hirzebruch(2), cls(2, 1, 3))
    assert sp.parse_polarized("S(3) O(1)") == (ConeS(3), cone_class(3))
    assert sp.parse_class(Hirzebruch(1), "2C0-f") == cls(1, 2, -1)
    assert str(cls(0, 1, 2)) == "C0+2f"
    with pytest.raises(sp.SurfaceError):
        sp.parse_polarized("G(2) C0")
    with pytest.raises(sp.SurfaceError):
        sp.parse_class(Hirzebruch(1), "C0+x")
    with pytest.raises(sp.SurfaceError):
        sp.ConeS(1)


coef = st.integers(-5, 5)


@given(st.integers(0, 6), *[coef] * 6, st.integers(-3, 3))
def test_intersection_is_symmetric_and_bilinear(r, a1, b1, a2, b2, a3, b3, k):
    d1, d2, d3 = cls(r, a1, b1), cls(r, a2, b2), cls(r, a3, b3)
    assert sp.intersect(d1, d2) == sp.intersect(d2, d1)
    assert sp.intersect(d1 + d2, d3) == sp.intersect(d1, d3) + sp.intersect(d2, d3)
    assert sp.intersect(k * d1, d2) == k * sp.intersect(d1, d2)


@given(st.integers(0, 6), st.integers(0, 4), st.integers(0, 12))
def test_riemann_roch_for_nef_classes(r, a, b):
    d = cls(r, a, b)
    if sp.is_nef(d):
        k = sp.canonical_class(Hirzebruch(r))
        assert sp.h0(Hirzebruch(r), d) == 1 + sp.intersect(d, d - k) // 2
