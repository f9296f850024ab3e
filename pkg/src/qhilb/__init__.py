"""Exact generating series for Hilbert schemes of points on (p,1) quotient
singularities, computed through fountain-of-coins combinatorics with
brute-force oracles for every route."""

from .series import QZSeries, WindowError, SupportError, make_monomial
from .fountains import (
    CacheError,
    Fountain,
    FountainShape,
    FountainTable,
    build_table,
    enumerate_fountains,
    is_primitive,
    is_valid_fountain,
    iter_fountains,
    load_or_build,
    load_table,
    max_coins,
    save_table,
    series_F,
    series_G,
    series_H,
    shift_g,
    table_f,
    table_h,
)
from .hilbert import (
    TriangleTerm,
    YoungDiagram,
    ZetaSeries,
    diagram_to_fountain,
    enumerate_P0,
    generator_blocks,
    is_zero_generated,
    triangle_terms,
    triangle_weight,
    zero_weight,
    zeta_closed_p1,
    zeta_closed_p2,
    zeta_oracle,
    zeta_theorem,
)
from .identities import (
    F_via_functional_equation,
    check_G_definition,
    check_T_product_form,
    jacobi_triple_product_check,
    ramanujan_check,
)

__version__ = "0.1.0"
