"""Independent checks of the generating-function identities.

Each check recomputes one side of an identity by a route disjoint from the
count tables (continued-fraction unrolling, explicit theta products, the
Ramanujan quotient) and compares exactly.  A boolean result keeps the
checks composable; all comparisons are exact integer equality.
"""

from __future__ import annotations

from .fountains import build_table, series_F, series_G
from .series import QZSeries, WindowError
from .hilbert import triangle_weight

__all__ = [
    "F_via_functional_equation",
    "check_G_definition",
    "jacobi_triple_product_check",
    "check_T_product_form",
    "ramanujan_check",
]


def _unroll_continued_fraction(p: int, order: int, top_depth: int) -> QZSeries:
    """Evaluate F(q, q^top_depth * z) by unrolling its self-substitution.

    Writing Phi_d = F(q, q^d z), the functional equation gives

        Phi_d = (q^(d+1) z)^(p-1) / (1 - q^(d+1) z Phi_(d+1))
              + (1 - (q^(d+1) z)^(p-1)) / (1 - q^(d+1) z),

    where the second summand is the finite sum of (q^(d+1) z)^j for
    j < p - 1.  At depth `order` the inner Phi is multiplied by q^(order+1),
    past the truncation order, so the unrolling may start from any series;
    termination is exact, not a convergence heuristic.
    """
    window = (order, 0, order)
    phi = QZSeries.one(*window)
    for d in range(order, top_depth - 1, -1):
        step = QZSeries.monomial(1, d + 1, 1, *window)  # q^(d+1) z
        inverse = step.mul(phi).geom_inverse()
        head = QZSeries.monomial(1, (d + 1) * (p - 1), p - 1, *window)
        phi = head.mul(inverse)
        for j in range(p - 1):
            phi = phi.add(QZSeries.monomial(1, (d + 1) * j, j, *window))
    return phi


def F_via_functional_equation(p: int, order: int) -> QZSeries:
    """The fountain series F(q, z) from the continued fraction alone."""
    return _unroll_continued_fraction(p, order, 0)


def check_G_definition(p: int, order: int) -> bool:
    """Primitive-fountain series three ways: tables, shift of F, and the
    continued fraction unrolled one level deeper.  All must agree."""
    window = (order, 0, order)
    table = build_table(p, order, order)
    g_tables = series_G(table, order)
    qz_p = QZSeries.monomial(1, p, p, *window)
    g_shift = qz_p.mul(series_F(table, order).subst_z_scale(1))
    g_unrolled = qz_p.mul(_unroll_continued_fraction(p, order, 1))
    return g_tables == g_shift == g_unrolled


def _jacobi_z_bounds(order: int) -> tuple[int, int]:
    """Smallest z-window that keeps the triple-product expansion exact.

    A term of (any partial) product with q-exponent <= order picks the
    z-factor from a set A of indices n (costing n each) and the 1/z-factor
    from a set B (costing n - 1 each), so |A|(|A|+1)/2 <= order and
    |B|(|B|-1)/2 <= order.  Any term outside the resulting z-range is
    already beyond the q-order, hence dropping it is harmless in every
    multiplication order.
    """
    a = 0
    while (a + 1) * (a + 2) // 2 <= order:
        a += 1
    b = 0
    while (b + 1) * b // 2 <= order:
        b += 1
    return (-b, a)


def jacobi_triple_product_check(
    order: int, z_window: tuple[int, int] | None = None
) -> bool:
    """Expand prod (1 + z q^n)(1 + z^-1 q^(n-1))(1 - q^n) against its theta sum.

    The product is truncated at n = order + 1; later factors only touch
    q-exponents beyond the order.  The sum side is sum over j of
    z^j q^(j(j+1)/2).
    """
    need_min, need_max = _jacobi_z_bounds(order)
    if z_window is None:
        z_window = (need_min, need_max)
    z_min, z_max = z_window
    if z_min > need_min or z_max < need_max:
        raise WindowError(
            f"z-window {z_window} too narrow for order {order}: "
            f"need [{need_min}, {need_max}]"
        )
    window = (order, z_min, z_max)
    one = QZSeries.one(*window)
    product = one
    for n in range(1, order + 2):
        factor = one.add(QZSeries.monomial(1, n, 1, *window))
        factor = factor.mul(one.add(QZSeries.monomial(1, n - 1, -1, *window)))
        factor = factor.mul(one.add(QZSeries.monomial(-1, n, 0, *window)))
        product = product.mul(factor)
    theta_terms = {}
    for j in range(z_min, z_max + 1):
        q_exp = j * (j + 1) // 2
        if 0 <= q_exp <= order:
            theta_terms[(q_exp, j)] = 1
    return product == QZSeries(order, z_min, z_max, theta_terms)


def check_T_product_form(p: int, order: int) -> bool:
    """Match the triangle series against the substituted triple-product sum.

    Substituting q -> q^p, z -> q z^p into the theta sum and multiplying by
    qz sends the term z^j q^(j(j+1)/2) to q^(p j(j+1)/2 + j + 1) z^(jp + 1),
    which must reproduce the triangle term at l = j, term by term for every
    l whose q-exponent stays within the order.  Combined with the generic
    triple-product check this validates the product form of the triangle
    series without ever expanding its q^(-1)-bearing first factor.
    """
    substituted = {}
    triangle = {}
    for j in range(-(order + 2), order + 3):
        q_sub = p * (j * (j + 1) // 2) + j + 1
        if 0 <= q_sub <= order:
            substituted[j] = (q_sub, p * j + 1)
        q_tri = triangle_weight(p, j)
        if 0 <= q_tri <= order:
            triangle[j] = (q_tri, j * p + 1)
    return substituted == triangle


def _euler_factor_inverses(order: int, count: int) -> list[QZSeries]:
    """Partial products of 1/(1-q) ... 1/(1-q^i) for i = 0..count."""
    window = (order, 0, order)
    partials = [QZSeries.one(*window)]
    for i in range(1, count + 1):
        inv = QZSeries.monomial(1, i, 0, *window).geom_inverse()
        partials.append(partials[-1].mul(inv))
    return partials


def ramanujan_check(order: int) -> bool:
    """Verify F(q,z) * B(q,z) == A(q,z) for the p = 1 fountain series, where

        A = sum (-qz)^n q^(n^2) / ((1-q)...(1-q^n)),
        B = sum  (-z)^n q^(n^2) / ((1-q)...(1-q^n)).

    This is the continued-fraction quotient stated multiplicatively, so no
    series division is needed.  Both sums terminate on their own: the n-th
    numerator terms carry q^(n^2+n) and q^(n^2).
    """
    window = (order, 0, order)
    n_terms = 0
    while (n_terms + 1) ** 2 <= order:
        n_terms += 1
    partials = _euler_factor_inverses(order, n_terms)
    a = QZSeries.zero(*window)
    b = QZSeries.zero(*window)
    for n in range(n_terms + 1):
        sign = -1 if n % 2 else 1
        a_head = QZSeries.monomial(sign, n * n + n, n, *window)
        b_head = QZSeries.monomial(sign, n * n, n, *window)
        a = a.add(a_head.mul(partials[n]))
        b = b.add(b_head.mul(partials[n]))
    f = series_F(build_table(1, order, order), order)
    return f.mul(b) == a
