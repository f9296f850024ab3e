"""Tests for the generating-function identity checks."""

import pytest

from qhilb.fountains import build_table, series_F, series_G
from qhilb.identities import (
    F_via_functional_equation,
    check_G_definition,
    check_T_product_form,
    jacobi_triple_product_check,
    ramanujan_check,
)
from qhilb.series import QZSeries, WindowError


def test_functional_equation_p1_small():
    got = F_via_functional_equation(1, 3)
    assert got.coeff(0, 0) == 1
    assert got.coeff(1, 1) == 1
    assert got.coeff(2, 2) == 1
    assert got.coeff(3, 2) == 1
    assert got.coeff(3, 3) == 1
    assert got.coeff(2, 1) == 0  # one coin cannot sit on a single support


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_functional_equation_leading_segment(p):
    got = F_via_functional_equation(p, 8)
    assert got.coeff(0, 0) == 1
    for j in range(1, min(p, 9)):
        assert got.coeff(j, j) == 1
        assert got.coeff(j, j - 1) == 0


def test_functional_equation_p2_coefficient():
    assert F_via_functional_equation(2, 4).coeff(3, 3) == 1


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_functional_equation_matches_tables(p):
    order = 12
    assert F_via_functional_equation(p, order) == series_F(
        build_table(p, order, order), order
    )


@pytest.mark.parametrize("p", [1, 3])
def test_G_definition(p):
    assert check_G_definition(p, 10)


def test_G_comparison_detects_mutation():
    order = 8
    p = 2
    table = build_table(p, order, order)
    table.g[4][2] += 1  # corrupt one primitive count
    mutated = series_G(table, order)
    prefix = QZSeries.monomial(1, p, p, order, 0, order)
    shifted = prefix.mul(series_F(table, order).subst_z_scale(1))
    assert mutated != shifted


def test_jacobi_order_zero():
    assert jacobi_triple_product_check(0)
    # only the n = 1 factor survives at q^0: both sides are 1 + 1/z
    window = (0, -1, 0)
    lhs = QZSeries.one(*window).add(QZSeries.monomial(1, 0, -1, *window))
    theta = QZSeries(0, -1, 0, {(0, 0): 1, (0, -1): 1})
    assert lhs == theta


def test_jacobi_midsize_with_explicit_window():
    assert jacobi_triple_product_check(12, (-5, 5))


def test_jacobi_narrow_window_rejected():
    with pytest.raises(WindowError):
        jacobi_triple_product_check(12, (-2, 2))


def test_jacobi_default_window():
    assert jacobi_triple_product_check(16)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_T_product_form(p):
    assert check_T_product_form(p, 24)


def test_T_substitution_exponents():
    # at p = 3 the j = 1 theta term z^1 q^1 lands on q^5 z^4, the l = 1
    # triangle term; at p = 1 the j = -1 term lands on q^0 z^0
    assert check_T_product_form(3, 5)
    assert check_T_product_form(1, 0)


def test_ramanujan_order_zero():
    assert ramanujan_check(0)


def test_ramanujan_midsize():
    assert ramanujan_check(12)
