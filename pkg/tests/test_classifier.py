import time

import pytest

from fibercalc import classifier as cf
from fibercalc.classifier import BIRATIONAL, EXCLUDED, FIBER, make_config


def test_threshold_rules():
    assert cf.max_ambient_dim(2, 2, BIRATIONAL) == 3
    assert cf.max_ambient_dim(2, 2, FIBER) == 4
    assert cf.max_ambient_dim(5, 3, FIBER) == 5
    assert cf.max_ambient_dim(3, 1, BIRATIONAL) is None
    assert cf.max_ambient_dim(3, 1, FIBER) is None
    with pytest.raises(ValueError):
        cf.max_ambient_dim(3, 0, FIBER)
    with pytest.raises(ValueError):
        cf.max_ambient_dim(3, 2, "flop")
    assert cf.deformation_lower_bound(2, 4, 1) == 3


def test_table2_full_linear_systems_match_printed_values():
    rows = {r.row: r for r in cf.table2_rows()}
    assert len(rows) == 11
    for key in ("4", "5a", "5b", "6b", "7a", "7b"):
        r = rows[key]
        assert (r.LC, r.hilb_dim) == tuple(cf.TABLE2_PAPER[key]), key
        assert r.provenance["hilb_dim"] == "DERIVED"
    for key in ("1", "2", "6a"):
        assert (rows[key].LC, rows[key].hilb_dim) == tuple(cf.TABLE2_PAPER[key])


@pytest.mark.parametrize("r", range(1, 9))
def test_row_3a_family(r):
    for k in range(r + 1, r + 5):
        rec = cf.row3a(r, k)
        assert rec.LC == k - r + 1
        assert rec.hilb_dim <= 2
    assert cf.row3a(r).hilb_dim == (2 if r == 1 else 1)


@pytest.mark.parametrize("r", range(3, 9))
def test_row_3b_family(r):
    rec = cf.row3b(r)
    assert (rec.LC, rec.hilb_dim) == (3, 2)


def test_table3_matches_all_sixteen_cells():
    t0 = time.perf_counter()
    rows = cf.table3_derive()
    assert time.perf_counter() - t0 < 1.0
    assert len(rows) == 8
    for row in rows:
        assert row.matches_paper(), row.row
    cells = {row.row: (row.cell(BIRATIONAL), row.cell(FIBER)) for row in rows}
    assert cells[2] == ("--------", "n = 4")
    assert cells[4] == ("n = 3", "n = 3")
    assert cells[0] == ("n <= 6", "n <= 7")


def test_table3_depends_on_table2_inputs():
    rows2 = cf.table2_rows()
    for r in rows2:
        if r.row == "6b":
            r.hilb_dim = 9
            r.recompute()
    row6 = [x for x in cf.table3_derive(rows2) if x.row == 6][0]
    # 6a alone still excludes the birational case
    assert row6.birational == EXCLUDED


@pytest.mark.parametrize("d2", [1, 2, 3])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_table4(d2, r):
    for rec in cf.table4_rows(d2, r):
        if rec["row"] == "A" and r > 1:
            continue
        assert (rec["LC"], rec["hilb_dim"]) == cf.table4_paper_values(rec["row"], d2, r)
    with pytest.raises(ValueError):
        cf.table4_rows(0)


def test_threefold_enumeration():
    assert cf.threefold_reducible_enumeration() == [("F1/C0", "Fr/f"), ("F2/C0", "P2/line")]
    # every brute-force pair belongs to one of the two families
    for a, b in cf.threefold_reducible_pairs(10):
        assert (a, b) == ("F2/C0", "P2/line") or "F1/C0" in (a, b)


@pytest.mark.parametrize("r", range(0, 11))
def test_adjunction_ledger(r):
    assert cf.adjunction_ledger(("F1/C0", "Fr/f"), r)[1] == -1
    assert cf.adjunction_ledger(("F2/C0", "P2/line"))[1] == -1


def _names(configs):
    return {c.describe() for c in configs}


@pytest.mark.parametrize("n, kind", sorted(cf.PRINTED_FIBER_LISTS))
def test_fiber_lists(n, kind):
    assert _names(cf.fiber_lists(n, kind)) == cf.PRINTED_FIBER_LISTS[(n, kind)]


def test_fiber_list_sizes():
    assert len(cf.PRINTED_FIBER_LISTS[(4, BIRATIONAL)]) == 4
    fib = cf.PRINTED_FIBER_LISTS[(4, FIBER)]
    assert len([x for x in fib if "∪" not in x and "•" not in x]) == 6
    assert len([x for x in fib if "∪" in x]) == 6 and "P2 • P2" in fib
    with pytest.raises(ValueError):
        cf.fiber_lists(5, FIBER)


def test_canonical_key_ignores_order_and_f0_rulings():
    a = make_config([cf.P2O1, cf.F0a, cf.P2O1], [(0, 1, "line", "line", "f"), (1, 2, "line", "C0", "line")])
    b = make_config([cf.F0a, cf.P2O1, cf.P2O1], [(0, 2, "line", "C0", "line"), (0, 1, "line", "f", "line")])
    assert a.key() == b.key()
    assert a.describe() == "P2 ∪_f (F0)_C0 ∪ P2"


def test_specific_configurations():
    two_points = make_config([cf.P2O1, cf.P2O1], [(0, 1, "point")])
    assert cf.check_configuration(two_points, 4, FIBER).ok
    assert not cf.check_configuration(two_points, 4, BIRATIONAL).ok
    # a pair along a line without a plane is ruled out
    s2s2 = make_config([cf.S2, cf.S2], [(0, 1, "line", "ruling", "ruling")])
    assert not cf.check_configuration(s2s2, 4, FIBER).ok
    # three planes around a cycle
    cyc = make_config([cf.P2O1] * 3, [(0, 1, "line", "line", "line", 0, 0),
                                      (1, 2, "line", "line", "line", 1, 0),
                                      (0, 2, "line", "line", "line", 1, 1)])
    assert not cf.check_configuration(cyc, 4, FIBER).ok


def test_minus_f_type_in_dimension_three():
    assert cf.minus_F_type(make_config([cf.F0b])) == FIBER
    assert cf.minus_F_type(make_config([cf.P2O1])) == BIRATIONAL
    glued = make_config([cf.F0a, cf.F1], [(0, 1, "line", "C0", "C0")])
    assert cf.minus_F_type(glued) == FIBER
    # the same pair glued along f of F1 is not even nef
    assert cf.minus_F_type(make_config([cf.F0a, cf.F1], [(0, 1, "line", "C0", "f")])) == EXCLUDED
    with pytest.raises(ValueError):
        make_config([cf.F0b, cf.F1], [(0, 1, "line", "C0", "C0")])
