from collections import Counter

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from ramapoly.polynomials import (IntPoly, check_sums, f, psi_bew, psi_ramanujan,
                                  q_from_psi, q_shor, q_shor_alt, q_zeng_a,
                                  q_zeng_b, poly_table)
from ramapoly.trees import enumerate_rooted
from ramapoly.verify import PSI_TABLE, Q_TABLE

small_polys = st.builds(IntPoly, st.lists(st.integers(-50, 50), max_size=6))


# -- IntPoly ring behaviour -----------------------------------------------------

def test_normalization():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).is_zero()
    assert IntPoly().degree == -1


@settings(max_examples=150, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + IntPoly() == a
    assert a * IntPoly.constant(1) == a


@settings(max_examples=100, deadline=None)
@given(small_polys, st.integers(-5, 5), st.integers(-5, 5))
def test_shift_compose_and_evaluate(p, a, b):
    assert p.shift(a).shift(b) == p.shift(a + b)
    for x in (-2, 0, 3):
        assert p.shift(a)(x) == p(x + a)


def test_str_format():
    assert str(q_shor(5, 2)) == "45x^2+195x+190"
    assert str(psi_bew(4, 1)) == "x^4-10x^3+35x^2-50x+24"
    assert str(IntPoly()) == "0"
    assert str(IntPoly((0, 1))) == "x"
    assert str(IntPoly((1, 0, -1))) == "-x^2+1"
    assert str(IntPoly((-3,))) == "-3"


def test_pow():
    assert IntPoly((1, 1)) ** 3 == IntPoly((1, 3, 3, 1))
    assert IntPoly((2,)) ** 0 == IntPoly.constant(1)


# -- table cells ------------------------------------------------------------------

@pytest.mark.parametrize("cell,coeffs", sorted(PSI_TABLE.items()))
def test_psi_cells_both_routes(cell, coeffs):
    r, k = cell
    assert psi_bew(r, k) == IntPoly(coeffs)
    assert psi_ramanujan(r, k) == IntPoly(coeffs)


@pytest.mark.parametrize("cell,coeffs", sorted(Q_TABLE.items()))
def test_q_cells_all_routes(cell, coeffs):
    n, k = cell
    want = IntPoly(coeffs)
    assert q_shor(n, k) == want
    assert q_shor_alt(n, k) == want
    assert q_zeng_a(n, k) == want
    assert q_zeng_b(n, k) == want
    assert q_from_psi(n, k) == want


def test_out_of_range_is_zero():
    assert psi_bew(2, 5).is_zero()
    assert psi_bew(3, 0).is_zero()
    assert q_shor(2, 2).is_zero()
    assert q_shor(0, 0).is_zero()
    assert q_shor_alt(1, 0) == IntPoly.constant(1)
    assert q_zeng_b(2, 1) == IntPoly.constant(1)
    assert f(3, -1) == 0 and f(3, 3) == 0


def test_substitution_link():
    # psi_2(2, x+3) = 3(x+3) - 5 = 3x + 4
    assert psi_bew(2, 2).shift(3) == IntPoly((4, 3))
    assert q_from_psi(3, 1) == IntPoly((4, 3))
    assert q_from_psi(1, 0) == IntPoly.constant(1)


def test_five_way_agreement_through_twelve():
    for n in range(13):
        for k in range(-1, n + 1):
            base = q_shor(n, k)
            assert base == q_shor_alt(n, k) == q_zeng_a(n, k) \
                == q_zeng_b(n, k) == q_from_psi(n, k)
    for r in range(13):
        for k in range(r + 3):
            assert psi_bew(r, k) == psi_ramanujan(r, k)


def test_degree_and_leading():
    for n in range(1, 13):
        for k in range(n):
            poly = q_shor(n, k)
            assert poly.degree == n - 1 - k
            assert poly.leading > 0


def test_f_values():
    assert f(1, 0) == 1
    assert f(3, 1) == 4
    assert f(4, 3) == 15
    assert f(5, 2) == 190
    for n in range(1, 13):
        for k in range(n):
            assert f(n, k) == q_shor(n, k)(0)


def test_f_counts_trees_by_improper_edges():
    for n in range(1, 6):
        counts = Counter(t.improper_count() for t in enumerate_rooted(n))
        for k in range(n):
            assert counts.get(k, 0) == f(n, k)
        assert sum(counts.values()) == n ** (n - 1)


def test_check_sums():
    assert all(ok for _, ok in check_sums(8))
    with pytest.raises(ValueError):
        check_sums(0)


def test_poly_table():
    cells = poly_table("q", 5)
    assert cells[(5, 2)] == IntPoly((190, 195, 45))
    assert set(poly_table("psi", 2)) == {(0, 1), (1, 1), (1, 2), (2, 1), (2, 2), (2, 3)}
    with pytest.raises(ValueError):
        poly_table("nope", 3)
