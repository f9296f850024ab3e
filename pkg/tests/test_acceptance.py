"""Acceptance criteria, one test per criterion, each printing a verdict line.

All comparisons are exact integer equality; the runtime ceilings below are
part of the criteria.  Run with `pytest tests/test_acceptance.py -v -s` to
see the per-criterion lines as they pass.
"""

import time

from qhilb.fountains import (
    build_table,
    is_primitive,
    iter_fountains,
)
from qhilb.hilbert import (
    triangle_weight,
    zeta_closed_p1,
    zeta_closed_p2,
    zeta_oracle,
    zeta_theorem,
)
from qhilb.identities import (
    F_via_functional_equation,
    check_G_definition,
    check_T_product_form,
    jacobi_triple_product_check,
    ramanujan_check,
)
from qhilb.fountains import series_F, series_G
from qhilb.series import QZSeries
from qhilb.verification import check_refinement

PARTITION_NUMBERS_21 = (
    1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
    56, 77, 101, 135, 176, 231, 297, 385, 490, 627,
)


def _verdict(name, ok, elapsed=None, budget=None):
    timing = ""
    if elapsed is not None:
        timing = f" [{elapsed:.2f}s" + (f" < {budget}s]" if budget else "]")
    print(f"[{'PASS' if ok else 'FAIL'}] {name}{timing}")
    assert ok, name


def test_criterion_1_p1_euler_product():
    started = time.monotonic()
    theorem = zeta_theorem(1, 20).coefficients
    ok = theorem == zeta_closed_p1(20).coefficients == PARTITION_NUMBERS_21
    elapsed = time.monotonic() - started
    _verdict(
        "criterion 1: p=1 series equals the Euler-product expansion to order 20",
        ok and elapsed < 10, elapsed, 10,
    )


def test_criterion_2_p2_closed_form():
    started = time.monotonic()
    theorem = zeta_theorem(2, 20).coefficients
    ok = theorem == zeta_closed_p2(20).coefficients
    ok = ok and theorem[:4] == (1, 1, 3, 5) == zeta_oracle(2, 3).coefficients
    elapsed = time.monotonic() - started
    _verdict(
        "criterion 2: p=2 series equals the theta-corrected closed form to order 20",
        ok and elapsed < 30, elapsed, 30,
    )


def test_criterion_3_theorem_equals_diagram_oracle():
    started = time.monotonic()
    ok = True
    for p in (1, 2, 3, 4):
        m_max = 12 if p <= 2 else 8
        if zeta_theorem(p, m_max).coefficients != zeta_oracle(p, m_max).coefficients:
            ok = False
            break
    elapsed = time.monotonic() - started
    _verdict(
        "criterion 3: pairing formula equals diagram enumeration "
        "(p=1..4, m<=8; m<=12 for p<=2)",
        ok and elapsed < 300, elapsed, 300,
    )


def test_criterion_4_tables_match_exhaustive_enumeration():
    started = time.monotonic()
    ok = True
    n_max = 12
    for p in (1, 2, 3):
        table = build_table(p, n_max, n_max)
        all_counts = {}
        primitive_counts = {}
        for fountain in iter_fountains(p, n_max):
            shape = fountain.shape()
            all_counts[shape] = all_counts.get(shape, 0) + 1
            if is_primitive(fountain):
                primitive_counts[shape] = primitive_counts.get(shape, 0) + 1
        for n in range(n_max + 1):
            for k in range(n_max + 1):
                if table.f[n][k] != all_counts.get((n, k), 0):
                    ok = False
                if table.g[n][k] != primitive_counts.get((n, k), 0):
                    ok = False
    elapsed = time.monotonic() - started
    _verdict(
        "criterion 4: f/g tables match exhaustive enumeration (p=1,2,3, n<=12)",
        ok and elapsed < 60, elapsed, 60,
    )


def test_criterion_5_identity_suite():
    ok = True
    for p in (1, 2, 3, 4):
        order = 20
        table = build_table(p, order, order)
        f = series_F(table, order)
        shifted = QZSeries.monomial(1, p, p, order, 0, order).mul(f.subst_z_scale(1))
        ok = ok and series_G(table, order) == shifted
        ok = ok and F_via_functional_equation(p, order) == f
        ok = ok and check_G_definition(p, 12)
        ok = ok and check_T_product_form(p, 20)
    ok = ok and jacobi_triple_product_check(24)
    ok = ok and ramanujan_check(16)
    _verdict(
        "criterion 5: shift identity, functional equation (p<=4, N=20), "
        "Jacobi triple product (N=24), triangle substitution (N=20), "
        "Ramanujan quotient (N=16)",
        ok,
    )


def test_criterion_6_bijection_refinement():
    ok = True
    for p in (1, 2, 3):
        result = check_refinement(p, 6, l_slack=5)
        if not result.passed:
            ok = False
            print(result.details)
    _verdict(
        "criterion 6: per-l diagram counts equal h(w(l)-m, lp+1) "
        "(p<=3, m<=6, l scanned to m+5)",
        ok,
    )


def test_criterion_7_degenerate_anchors():
    ok = all(zeta_theorem(p, 1).coefficients == (1, 1) for p in range(1, 7))
    # regression: dropping the l = -1 triangle term must break the p = 1
    # constant term, which only that term supplies
    table = build_table(1, triangle_weight(1, 1), 2)
    z0_without_l_minus_1 = table.h_at(triangle_weight(1, 0) - 0, 1)
    ok = ok and z0_without_l_minus_1 == 0 and zeta_theorem(1, 0).coefficients == (1,)
    _verdict(
        "criterion 7: Z_0 = Z_1 = 1 for p=1..6, and the l=-1 term is "
        "required for the p=1 constant term",
        ok,
    )
