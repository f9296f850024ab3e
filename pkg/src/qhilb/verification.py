"""Cross-checks between independent computation routes, as reportable results.

Every check compares two exact integer computations and, on failure,
records the first differing index together with both values, so a report
line is enough to localize a regression.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import fountains, hilbert, identities
from .fountains import FountainTable
from .series import QZSeries


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""


def _result(name: str, mismatch: str | None, ok_note: str = "") -> CheckResult:
    if mismatch is None:
        return CheckResult(name, True, ok_note)
    return CheckResult(name, False, mismatch)


def _series_mismatch(a, b) -> str | None:
    if a == b:
        return None
    keys = sorted(set(a.terms) | set(b.terms))
    for nk in keys:
        ca = a.terms.get(nk, 0)
        cb = b.terms.get(nk, 0)
        if ca != cb:
            return f"first difference at q^{nk[0]} z^{nk[1]}: {ca} != {cb}"
    return f"windows differ: {a.window()} != {b.window()}"


def _sequence_mismatch(a, b, index_name: str = "m") -> str | None:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return f"first difference at {index_name}={i}: {x} != {y}"
    if len(a) != len(b):
        return f"lengths differ: {len(a)} != {len(b)}"
    return None


def check_tables_vs_enumeration(p: int, n_max: int) -> CheckResult:
    """f and g tables against the exhaustive fountain search."""
    name = f"tables_vs_enumeration(p={p}, n<={n_max})"
    table = fountains.build_table(p, n_max, n_max)
    all_counts: dict[tuple[int, int], int] = {}
    primitive_counts: dict[tuple[int, int], int] = {}
    for fountain in fountains.iter_fountains(p, n_max):
        shape = fountain.shape()
        all_counts[shape] = all_counts.get(shape, 0) + 1
        if fountains.is_primitive(fountain):
            primitive_counts[shape] = primitive_counts.get(shape, 0) + 1
    for n in range(n_max + 1):
        for k in range(n_max + 1):
            expected_f = all_counts.get((n, k), 0)
            expected_g = primitive_counts.get((n, k), 0)
            if table.f[n][k] != expected_f:
                return CheckResult(
                    name, False,
                    f"f({n},{k}): table {table.f[n][k]} != enumeration {expected_f}",
                )
            if table.g[n][k] != expected_g:
                return CheckResult(
                    name, False,
                    f"g({n},{k}): table {table.g[n][k]} != enumeration {expected_g}",
                )
    return CheckResult(name, True, f"{sum(all_counts.values())} fountains compared")


def check_shift_identity(p: int, order: int) -> CheckResult:
    """series_G == (qz)^p * F(q, qz) coefficientwise."""
    name = f"primitive_shift(p={p}, N={order})"
    table = fountains.build_table(p, order, order)
    lhs = fountains.series_G(table, order)
    prefix = QZSeries.monomial(1, p, p, order, 0, order)
    rhs = prefix.mul(fountains.series_F(table, order).subst_z_scale(1))
    return _result(name, _series_mismatch(lhs, rhs))


def check_functional_equation(p: int, order: int) -> CheckResult:
    """Continued-fraction unrolling against the table-built series."""
    name = f"functional_equation_F(p={p}, N={order})"
    via_cf = identities.F_via_functional_equation(p, order)
    via_table = fountains.series_F(fountains.build_table(p, order, order), order)
    return _result(name, _series_mismatch(via_cf, via_table))


def check_g_continued_fraction(p: int, order: int) -> CheckResult:
    name = f"continued_fraction_G(p={p}, N={order})"
    ok = identities.check_G_definition(p, order)
    return CheckResult(name, ok, "" if ok else "three-way G comparison differs")


def check_jacobi(order: int) -> CheckResult:
    name = f"jacobi_triple_product(N={order})"
    ok = identities.jacobi_triple_product_check(order)
    return CheckResult(name, ok, "" if ok else "product and theta sum differ")


def check_t_product(p: int, order: int) -> CheckResult:
    name = f"triangle_series_product(p={p}, N={order})"
    ok = identities.check_T_product_form(p, order)
    return CheckResult(name, ok, "" if ok else "substituted sum differs from triangle terms")


def check_ramanujan(order: int) -> CheckResult:
    name = f"ramanujan_quotient(N={order})"
    ok = identities.ramanujan_check(order)
    return CheckResult(name, ok, "" if ok else "F*B != A")


def check_closed_form(p: int, order: int, table: FountainTable | None = None) -> CheckResult:
    """Pairing formula against the closed form (p = 1 or 2 only)."""
    name = f"closed_form(p={p}, order={order})"
    if p == 1:
        closed = hilbert.zeta_closed_p1(order)
    elif p == 2:
        closed = hilbert.zeta_closed_p2(order)
    else:
        raise ValueError(f"no closed form for p={p}")
    theorem = hilbert.zeta_theorem(p, order, table)
    return _result(
        name, _sequence_mismatch(theorem.coefficients, closed.coefficients)
    )


def check_theorem_vs_oracle(
    p: int, m_max: int, table: FountainTable | None = None
) -> CheckResult:
    name = f"pairing_vs_diagram_enumeration(p={p}, m<={m_max})"
    theorem = hilbert.zeta_theorem(p, m_max, table)
    oracle = hilbert.zeta_oracle(p, m_max)
    return _result(
        name, _sequence_mismatch(theorem.coefficients, oracle.coefficients)
    )


def check_refinement(p: int, m_max: int, l_slack: int = 5) -> CheckResult:
    """Per-l diagram counts against h, plus the l > m cutoff.

    Stronger than comparing coefficients: for each weight m and triangle
    index l, the diagrams mapping to index l must number exactly
    h(w(l) - m, lp + 1), and indices beyond m must contribute nothing.
    Every augmented fountain is also re-validated structurally.
    """
    name = f"augmentation_refinement(p={p}, m<={m_max}, l<=m+{l_slack})"
    l_top = m_max + l_slack
    table = fountains.build_table(
        p, hilbert.triangle_weight(p, l_top), p * l_top + 1
    )
    for m in range(m_max + 1):
        by_l: dict[int, int] = {}
        for diagram in hilbert.enumerate_P0(p, m):
            fountain, l = hilbert.diagram_to_fountain(diagram, p)
            if not fountains.is_valid_fountain(fountain):
                return CheckResult(
                    name, False, f"invalid fountain from {diagram.parts} (m={m})"
                )
            if fountains.is_primitive(fountain):
                return CheckResult(
                    name, False, f"primitive fountain from {diagram.parts} (m={m})"
                )
            if fountain.coins + m != hilbert.triangle_weight(p, l):
                return CheckResult(
                    name, False,
                    f"coin count mismatch for {diagram.parts} (m={m}, l={l})",
                )
            by_l[l] = by_l.get(l, 0) + 1
        for l in range(-1, l_top + 1):
            expected = table.h_at(hilbert.triangle_weight(p, l) - m, l * p + 1)
            got = by_l.get(l, 0)
            if got != expected:
                return CheckResult(
                    name, False,
                    f"m={m}, l={l}: {got} diagrams != h-count {expected}",
                )
            if l > m and expected != 0:
                return CheckResult(
                    name, False, f"cutoff violated: h-count {expected} at l={l} > m={m}"
                )
    return CheckResult(name, True)


def run_checks(
    p_values: list[int],
    order: int,
    cache_dir: str | Path | None = None,
) -> list[CheckResult]:
    """The full verification battery, sized from `order` at desk scale."""
    results = [check_jacobi(max(order, 8))]
    for p in p_values:
        n_enum = min(12, order + 4)
        m_oracle = min(order, 12 if p <= 2 else 8)
        m_refine = min(order, 6)
        theorem_table = _theorem_table(p, order, m_oracle, cache_dir)
        results.append(check_tables_vs_enumeration(p, n_enum))
        results.append(check_shift_identity(p, order))
        results.append(check_functional_equation(p, order))
        results.append(check_g_continued_fraction(p, order))
        results.append(check_t_product(p, max(order, 8)))
        if p == 1:
            results.append(check_ramanujan(order))
        if p <= 2:
            results.append(check_closed_form(p, order, theorem_table))
        results.append(check_theorem_vs_oracle(p, m_oracle, theorem_table))
        results.append(check_refinement(p, m_refine))
    return results


def _theorem_table(
    p: int, order: int, m_oracle: int, cache_dir: str | Path | None
) -> FountainTable:
    m_top = max(order, m_oracle)
    return fountains.load_or_build(
        p, hilbert.triangle_weight(p, m_top), p * m_top + 1, cache_dir
    )
