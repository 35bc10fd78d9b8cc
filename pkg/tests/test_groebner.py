import os
import subprocess
import sys
import time
from fractions import Fraction
from itertools import product
from math import comb

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from fibercalc import fixtures
from fibercalc.groebner import _kernel, _pykernel
from fibercalc.groebner.buchberger import (GroebnerLimitError, IdealBasis, groebner_basis,
                                           ideal_contains, reduce_poly)
from fibercalc.groebner.hilbert import (NonHomogeneousError, dim_degree, hilbert_data,
                                        hilbert_numerator, resolution_hilbert,
                                        resolution_hilbert_check)
from fibercalc.groebner.ideal_file import parse_ideal_text
from fibercalc.groebner.polynomial import GREVLEX, GRLEX, LEX, ParseError, Polynomial, parse_polynomial
from fibercalc.groebner.tangent import PointNotOnSchemeError, linear_support, tangent_cone


def ideal(gens, vars):
    vars = tuple(vars)
    return IdealBasis(vars, [parse_polynomial(g, vars) for g in gens])


def sympy_gb(polys, order):
    vars = polys[0].vars
    gens = sympy.symbols(vars)
    exprs = [sympy.Add(*[sympy.Rational(c.numerator, c.denominator) *
                         sympy.Mul(*[g ** k for g, k in zip(gens, e)]) for e, c in p.terms.items()])
             for p in polys]
    G = sympy.groebner(exprs, *gens, order=order)
    out = set()
    for g in G.exprs:
        poly = sympy.Poly(g, *gens)
        p = Polynomial(vars, {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms()})
        # sympy keeps integer content over ZZ; compare monic bases
        out.add(p.monic({"grevlex": GREVLEX, "grlex": GRLEX, "lex": LEX}[order]))
    return out


# -- fixed examples --------------------------------------------------------

def test_two_skew_lines():
    assert dim_degree(ideal(["xz", "xt", "yz", "yt"], "xyzt")) == (1, 2)


def test_double_line():
    b = ideal(["x0^2", "x1^2", "x0x1", "x0x2+x1x3"], ("x0", "x1", "x2", "x3"))
    assert dim_degree(b) == (1, 2)
    sup = linear_support(b)
    assert sup.is_line() and sup.rank == 2


def test_twisted_cubic():
    b = ideal(["xz-y^2", "xt-yz", "yt-z^2"], "xyzt")
    assert dim_degree(b) == (1, 3)
    hd = hilbert_data(b)
    assert [hd.hilbert_function(k) for k in range(6)] == [3 * k + 1 for k in range(6)]
    assert hd.leading_degree_check() == 3


def test_complete_intersection_and_unit_ideal():
    assert dim_degree(ideal(["x^2+y^2+z^2", "xyz"], "xyzw")) == (1, 6)
    assert dim_degree(ideal(["x", "y", "z"], "xyz")) == (-1, 0)
    assert groebner_basis([parse_polynomial("x+1", "x"), parse_polynomial("x", "x")]).generators == \
        [Polynomial(("x",), {(0,): 1})]


def test_nonhomogeneous_has_no_hilbert_data():
    with pytest.raises(NonHomogeneousError):
        dim_degree(ideal(["x^2 - y"], "xy"))


def test_membership():
    b = groebner_basis(ideal(["xz-y^2", "xt-yz", "yt-z^2"], "xyzt").generators)
    assert ideal_contains(b, parse_polynomial("x*(yt-z^2) + z*(xz-y^2)", "xyzt"))
    assert not ideal_contains(b, parse_polynomial("x", "xyzt"))
    r = reduce_poly(parse_polynomial("y^2", "xyzt"), b)
    assert r == parse_polynomial("xz", "xyzt")


def test_limit():
    with pytest.raises(GroebnerLimitError):
        groebner_basis(ideal(["x^3-y z", "y^3 - x z", "z^3 - x y"], "xyz").generators, max_pairs=1)


@pytest.mark.parametrize("order, name", [(GREVLEX, "grevlex"), (GRLEX, "grlex"), (LEX, "lex")])
def test_is_corrected_against_sympy(order, name):
    idf = parse_ideal_text(fixtures.ideal_text("IS-corrected"))
    gb = groebner_basis(idf.basis.generators, order)
    assert set(gb.generators) == sympy_gb(idf.basis.generators, name)


def test_resolution_check():
    for s, deg in ((2, 2), (3, 5), (4, 9)):
        chk = resolution_hilbert_check(s)
        assert chk.ok and (chk.dim, chk.degree) == (2, deg)
    with pytest.raises(ValueError):
        resolution_hilbert_check(5)


def test_is_corrected_matches_resolution():
    idf = parse_ideal_text(fixtures.ideal_text("IS-corrected"))
    hd = hilbert_data(idf.basis)
    assert (hd.dim, hd.degree) == (2, 5)
    assert all(hd.hilbert_function(k) == resolution_hilbert(3, k) for k in range(15))
    # two planes: s = 2 agrees with two skew lines' cone (xz, xt, yz, yt) in P^4
    two = hilbert_data(ideal(["xz", "xt", "yz", "yt"], "xyztu"))
    assert all(two.hilbert_function(k) == resolution_hilbert(2, k) for k in range(12))


def test_tangent_cone_of_is():
    idf = parse_ideal_text(fixtures.ideal_text("IS-corrected"))
    tc = tangent_cone(idf.basis, idf.point)
    assert tc.vars == ("x", "y", "z", "t")
    assert dim_degree(tc) == (1, 2)
    assert linear_support(tc).is_line()
    lows = {str(g) for g in tc.generators}
    assert "t^2" in lows and "x*y - z*t" in lows


def test_tangent_cone_examples():
    cusp = tangent_cone(ideal(["y^2-x^3"], "xy"))
    assert [str(g) for g in cusp.generators] == ["y^2"]
    node = tangent_cone(ideal(["y^2-x^2-x^3"], "xy"))
    assert [str(g) for g in node.generators] == ["x^2 - y^2"]
    lines = ideal(["xz", "xt", "yz", "yt"], "xyzt")
    assert set(tangent_cone(lines).generators) == set(groebner_basis(lines.generators).generators)
    with pytest.raises(PointNotOnSchemeError):
        tangent_cone(ideal(["x-1"], "xy"))


def test_ideal_file_errors():
    with pytest.raises(ParseError) as info:
        parse_ideal_text("vars: x y\nx+\n")
    assert info.value.line == 2 and info.value.column == 3
    with pytest.raises(ParseError):
        parse_ideal_text("x+y\n")
    with pytest.raises(ParseError):
        parse_ideal_text("vars: x\norder: weird\nx\n")
    with pytest.raises(ParseError):
        parse_ideal_text("vars: x y\npoint: z\nx\n")


@pytest.mark.parametrize("name", sorted(fixtures.IDEALS))
def test_fixture_gb_time(name):
    idf = parse_ideal_text(fixtures.ideal_text(name))
    t0 = time.perf_counter()
    groebner_basis(idf.basis.generators, idf.basis.order)
    assert time.perf_counter() - t0 < 5.0


def test_printed_reading_is_not_homogeneous():
    idf = parse_ideal_text(fixtures.ideal_text("IS-printed"))
    assert not idf.basis.is_homogeneous()
    assert [g.degree() for g in idf.basis.generators] == [3, 3, 6, 3, 3]


# -- Hilbert numerators against brute force -------------------------------

def count_standard_monomials(gens, n, k):
    return sum(1 for e in product(range(k + 1), repeat=n)
               if sum(e) == k and not any(all(a <= b for a, b in zip(g, e)) for g in gens))


monomials = st.lists(st.tuples(*[st.integers(0, 3)] * 3).filter(any), min_size=1, max_size=4)


@given(monomials)
def test_numerator_against_counting(gens):
    from fibercalc.groebner.hilbert import hilbert_from_numerator
    hd = hilbert_from_numerator(hilbert_numerator(gens, 3), 3)
    for k in range(8):
        assert hd.hilbert_function(k) == count_standard_monomials(gens, 3, k)


# -- kernels ----------------------------------------------------------------

def test_kernel_selection_reports_an_implementation():
    assert _kernel.IMPLEMENTATION in ("python", "cython")


def test_pure_python_switch():
    code = "from fibercalc.groebner import IMPLEMENTATION; print(IMPLEMENTATION)"
    out = subprocess.run([sys.executable, "-c", code], env={**os.environ, "FIBERCALC_PURE": "1"},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_kernels_agree():
    idf = parse_ideal_text(fixtures.ideal_text("IS-corrected"))
    G = [g.terms for g in groebner_basis(idf.basis.generators).generators]
    L = [max(g, key=GREVLEX.key) for g in G]
    f = (parse_polynomial("x^3 y^2 + t^5 - u^2 x y z", idf.basis.vars)).terms
    assert _pykernel.normal_form(f, G, L, GREVLEX.key) == _kernel.normal_form(f, G, L, GREVLEX.key)
    assert _pykernel.spoly(G[0], L[0], G[1], L[1]) == _kernel.spoly(G[0], L[0], G[1], L[1])


# -- properties ---------------------------------------------------------------

@st.composite
def homogeneous_ideals(draw):
    n = draw(st.integers(2, 4))
    vars = ("a", "b", "c", "d")[:n]
    gens = []
    for _ in range(draw(st.integers(1, 3))):
        d = draw(st.integers(1, 3))
        monos = [e for e in product(range(d + 1), repeat=n) if sum(e) == d]
        chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=3, unique=True))
        terms = {e: draw(st.integers(-3, 3).filter(bool)) for e in chosen}
        gens.append(Polynomial(vars, terms))
    return gens


@given(homogeneous_ideals())
def test_buchberger_is_idempotent(gens):
    gb = groebner_basis(gens)
    again = groebner_basis(gb.generators)
    assert again.generators == gb.generators


@given(homogeneous_ideals())
def test_reduced_basis_matches_sympy(gens):
    assert set(groebner_basis(gens).generators) == sympy_gb(gens, "grevlex")


@given(homogeneous_ideals())
def test_hilbert_function_is_order_invariant(gens):
    vals = []
    for order in (GREVLEX, GRLEX, LEX):
        gb = groebner_basis(gens, order)
        hd = hilbert_data(gb)
        vals.append([hd.hilbert_function(k) for k in range(7)])
    assert vals[0] == vals[1] == vals[2]


@given(homogeneous_ideals())
def test_generators_reduce_to_zero(gens):
    gb = groebner_basis(gens)
    for g in gens:
        assert not reduce_poly(g, gb)
