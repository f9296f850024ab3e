"""Counting monomial ideals of the plane-quotient invariant ring.

The invariant ring of the cyclic group acting on the plane with equal
weights is spanned by the monomials x^i y^j with i + j divisible by p.
Its finite-colength monomial ideals correspond to Young diagrams whose
ideal generators all sit on those "0-blocks", graded by how many 0-blocks
the diagram contains.  This module enumerates such diagrams directly (the
oracle), and also evaluates the coefficient formula that pairs triangle
weights against non-primitive fountain counts, so the two routes can be
compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .fountains import Fountain, FountainTable, build_table

__all__ = [
    "YoungDiagram",
    "ZetaSeries",
    "TriangleTerm",
    "zero_weight",
    "generator_blocks",
    "is_zero_generated",
    "enumerate_P0",
    "triangle_weight",
    "triangle_terms",
    "diagram_to_fountain",
    "zeta_theorem",
    "zeta_oracle",
    "zeta_closed_p1",
    "zeta_closed_p2",
]


@dataclass(frozen=True)
class YoungDiagram:
    """Partition as weakly decreasing positive parts; () is the empty diagram.

    Block (i, j) lies in the diagram iff 0 <= i < parts[j]: j indexes rows,
    i columns.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        prev = None
        for part in self.parts:
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if prev is not None and part > prev:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")
            prev = part

    def contains(self, i: int, j: int) -> bool:
        return 0 <= j < len(self.parts) and 0 <= i < self.parts[j]

    def size(self) -> int:
        return sum(self.parts)

    def blocks(self) -> Iterator[tuple[int, int]]:
        for j, part in enumerate(self.parts):
            for i in range(part):
                yield (i, j)


def _row_zero_blocks(part: int, j: int, p: int) -> int:
    """Number of i in [0, part) with i + j divisible by p."""
    residue = (-j) % p
    if part <= residue:
        return 0
    return (part - residue + p - 1) // p


def zero_weight(diagram: YoungDiagram, p: int) -> int:
    """Count blocks (i, j) of the diagram with i + j divisible by p."""
    return sum(
        _row_zero_blocks(part, j, p) for j, part in enumerate(diagram.parts)
    )


def _generators_of_parts(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    if not parts:
        return [(0, 0)]
    gens = [(parts[0], 0)]
    for j in range(1, len(parts)):
        if parts[j] < parts[j - 1]:
            gens.append((parts[j], j))
    gens.append((0, len(parts)))
    return gens


def generator_blocks(diagram: YoungDiagram) -> set[tuple[int, int]]:
    """Minimal generators of the monomial ideal complementary to the diagram.

    These are the blocks (i, j) outside the diagram whose left and lower
    neighbours are inside it (or on the axes): the inner corners of the
    complement.
    """
    return set(_generators_of_parts(diagram.parts))


def is_zero_generated(diagram: YoungDiagram, p: int) -> bool:
    """True iff every generator block (i, j) has i + j divisible by p."""
    return all((i + j) % p == 0 for i, j in _generators_of_parts(diagram.parts))


def _scan_diagrams(p: int, m_max: int) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield (parts, weight) for every 0-generated diagram of weight <= m_max.

    Exhaustive search over partitions with largest part and row count at
    most p*m_max, pruned only on the running 0-weight (rows never decrease
    it).  The box bound is safe: a 0-generated diagram with largest part a
    has a generator at (a, 0), so p divides a and the first row alone
    already carries a/p of the weight; columns are symmetric.
    """
    if m_max < 0:
        return
    yield ((), 0)
    box = p * m_max
    parts: list[int] = []

    def rec(j: int, prev: int, weight: int) -> Iterator[tuple[tuple[int, ...], int]]:
        for part in range(prev, 0, -1):
            w = weight + _row_zero_blocks(part, j, p)
            if w > m_max:
                continue
            parts.append(part)
            if is_zero_generated(YoungDiagram(tuple(parts)), p):
                yield (tuple(parts), w)
            if j + 1 < box:
                yield from rec(j + 1, part, w)
            parts.pop()

    yield from rec(0, box, 0)


def enumerate_P0(p: int, m: int) -> list[YoungDiagram]:
    """All 0-generated Young diagrams with 0-weight exactly m (sorted)."""
    found = [
        YoungDiagram(parts)
        for parts, weight in _scan_diagrams(p, m)
        if weight == m
    ]
    return sorted(found, key=lambda d: d.parts)


def triangle_weight(p: int, l: int) -> int:
    """0-blocks in the staircase triangle with l*p + 1 blocks on the hypotenuse.

    The triangle {(i, j) : i + j <= l*p} has l + 1 full antidiagonals of
    0-blocks, of sizes 1, p+1, ..., lp+1, totalling p*l*(l+1)/2 + l + 1.
    """
    return p * l * (l + 1) // 2 + l + 1


@dataclass(frozen=True)
class TriangleTerm:
    """One term q^(w(l)) z^(l*p+1) of the triangle generating series."""

    l: int
    q_exp: int
    z_exp: int

    @classmethod
    def at(cls, p: int, l: int) -> TriangleTerm:
        return cls(l=l, q_exp=triangle_weight(p, l), z_exp=l * p + 1)


def triangle_terms(p: int, m_max: int) -> list[TriangleTerm]:
    """Terms for l in [-1, m_max], the range that can hit the z^0 pairing."""
    return [TriangleTerm.at(p, l) for l in range(-1, m_max + 1)]


def diagram_to_fountain(diagram: YoungDiagram, p: int) -> tuple[Fountain, int]:
    """Augment a 0-generated diagram into its pairing triangle's fountain.

    The triangle index l is fixed by the deepest antidiagonal of 0-blocks
    the diagram owns: the diagram has a 0-block at depth (l-1)*p but none
    at depth l*p.  Fountain row r then collects the depth-(l-r)*p 0-blocks
    missing from the diagram, indexed by their x-coordinate; a coin's p+1
    descendants are exactly the next-deeper 0-blocks it dominates.  The
    empty diagram needs no triangle: it gets the single-coin fountain,
    except for p = 1 where that fountain is primitive and the empty (0,0)
    fountain with l = -1 is the non-primitive partner instead.
    """
    if not is_zero_generated(diagram, p):
        raise ValueError(f"diagram {diagram.parts} is not 0-generated for p={p}")
    deepest = -1
    for j, part in enumerate(diagram.parts):
        residue = (-j) % p
        if part > residue:
            # deepest 0-block in row j sits at column residue + p*floor(...)
            i = part - 1 - ((part - 1 - residue) % p)
            deepest = max(deepest, i + j)
    if deepest < 0:
        l = -1 if p == 1 else 0
    else:
        l = deepest // p + 1
    rows = []
    for r in range(l + 1):
        depth = (l - r) * p
        row = frozenset(
            i for i in range(depth + 1) if not diagram.contains(i, depth - i)
        )
        rows.append(row)
    while rows and not rows[-1]:
        rows.pop()
    return Fountain(p, tuple(rows)), l


@dataclass(frozen=True)
class ZetaSeries:
    """Euler-characteristic generating series coefficients, index 0..order."""

    p: int
    order: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError(
                f"need {self.order + 1} coefficients, got {len(self.coefficients)}"
            )


def zeta_theorem(
    p: int, m_max: int, table: FountainTable | None = None
) -> ZetaSeries:
    """Coefficients via the z^0 pairing of triangle terms against h-counts.

    Z_m = sum over l in [-1, m] of h(w(l) - m, l*p + 1), with h taken as 0
    outside 0 <= k <= n: pairing the triangle term z^(lp+1) against the
    z^(-k) part of the reversed fountain series picks out the fountains
    whose bottom row matches the triangle hypotenuse.  The l = -1 term
    only ever contributes h(0, 0) = 1 for p = 1 at m = 0.
    """
    if p < 1 or m_max < 0:
        raise ValueError("need p >= 1 and m_max >= 0")
    n_need = triangle_weight(p, m_max)
    k_need = p * m_max + 1
    if table is None:
        table = build_table(p, n_need, k_need)
    elif table.p != p or table.n_max < n_need or table.k_max < k_need:
        raise ValueError(
            f"table bounds ({table.n_max}, {table.k_max}) insufficient: "
            f"need ({n_need}, {k_need}) for p={p}, order {m_max}"
        )
    coeffs = []
    for m in range(m_max + 1):
        total = 0
        for l in range(-1, m + 1):
            total += table.h_at(triangle_weight(p, l) - m, l * p + 1)
        coeffs.append(total)
    return ZetaSeries(p, m_max, tuple(coeffs))


def zeta_oracle(p: int, m_max: int) -> ZetaSeries:
    """Coefficients by brute force: Z_m = #{0-generated diagrams of weight m}."""
    if p < 1 or m_max < 0:
        raise ValueError("need p >= 1 and m_max >= 0")
    coeffs = [0] * (m_max + 1)
    for _, weight in _scan_diagrams(p, m_max):
        coeffs[weight] += 1
    return ZetaSeries(p, m_max, tuple(coeffs))


def zeta_closed_p1(m_max: int) -> ZetaSeries:
    """Partition numbers: expansion of the Euler product of 1/(1 - q^m)."""
    coeffs = [0] * (m_max + 1)
    coeffs[0] = 1
    for m in range(1, m_max + 1):
        for j in range(m, m_max + 1):
            coeffs[j] += coeffs[j - m]
    return ZetaSeries(1, m_max, tuple(coeffs))


def _theta_cube_root(m_max: int) -> list[int]:
    """Coefficients of sum over all integers m of xi^m q^(m^2), xi = exp(2*pi*i/3).

    The m and -m terms pair up to xi^m + xi^-m, which is exactly 2 when 3
    divides m and -1 otherwise, so the series is integral: it starts
    1 - q - q^4 + 2q^9 - q^16.
    """
    theta = [0] * (m_max + 1)
    theta[0] = 1
    m = 1
    while m * m <= m_max:
        theta[m * m] = 2 if m % 3 == 0 else -1
        m += 1
    return theta


def zeta_closed_p2(m_max: int) -> ZetaSeries:
    """Squared Euler product times the cube-root-of-unity theta series."""
    part = zeta_closed_p1(m_max).coefficients
    squared = [0] * (m_max + 1)
    for i, a in enumerate(part):
        for j in range(m_max + 1 - i):
            squared[i + j] += a * part[j]
    theta = _theta_cube_root(m_max)
    coeffs = [0] * (m_max + 1)
    for i, a in enumerate(squared):
        if a:
            for j in range(m_max + 1 - i):
                if theta[j]:
                    coeffs[i + j] += a * theta[j]
    return ZetaSeries(2, m_max, tuple(coeffs))
