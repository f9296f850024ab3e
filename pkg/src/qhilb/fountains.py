"""Fountains of coins with p+1 descendants per coin, and their count tables.

A fountain is built from a contiguous bottom row of k coins; every coin in
a higher row must rest on p+1 consecutive coins of the row below, so two
horizontally adjacent coins share p supports.  The classic fountains of
coins are the p = 1 case.

The module provides both an exhaustive enumeration (the oracle, trusted
because it implements nothing but the definition) and a dynamic program
filling the triangular count tables

    f[n][k]  all fountains with n coins and bottom row k,
    g[n][k]  primitive ones (second row completely full),
    h[n][k]  the rest, h = f - g.

The recurrence behind f splits a fountain at the first gap of its second
row into a primitive fountain and a smaller arbitrary one; that splitting
is unique, which is what makes the convolution below count correctly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .series import QZSeries

CACHE_FORMAT = "qhilb-fountain-table"
CACHE_VERSION = 1


class CacheError(ValueError):
    """A cached table file is malformed or violates the table invariants."""


@dataclass(frozen=True)
class Fountain:
    """Rows of coin positions; rows[0] is the bottom row anchored at 0."""

    p: int
    rows: tuple[frozenset[int], ...]

    @property
    def coins(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def bottom_width(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def shape(self) -> tuple[int, int]:
        """(n, k) = (total coins, bottom-row length)."""
        return (self.coins, self.bottom_width)


@dataclass(frozen=True)
class FountainShape:
    """A realizable (n, k) pair for a given p, validated on construction."""

    p: int
    n: int
    k: int

    def __post_init__(self):
        if self.p < 1:
            raise ValueError(f"p must be >= 1, got {self.p}")
        if not 0 <= self.k <= self.n:
            raise ValueError(f"need 0 <= k <= n, got (n={self.n}, k={self.k})")
        ceiling = max_coins(self.k, self.p)
        if self.n > ceiling:
            raise ValueError(
                f"n={self.n} exceeds the {ceiling}-coin triangle over k={self.k}"
            )

    @classmethod
    def of(cls, fountain: Fountain) -> FountainShape:
        n, k = fountain.shape()
        return cls(fountain.p, n, k)


def max_coins(k: int, p: int) -> int:
    """Coins in the full triangle over a width-k bottom row.

    Row widths shrink by p going up, so this is k + (k-p) + (k-2p) + ...
    down to the last positive width; no (n, k) fountain can exceed it.
    """
    total = 0
    width = k
    while width >= 1:
        total += width
        width -= p
    return total


def is_valid_fountain(fountain: Fountain) -> bool:
    """Check the defining conditions; the empty row list is the (0,0) fountain."""
    rows = fountain.rows
    p = fountain.p
    if not rows:
        return True
    if rows[-1] == frozenset():
        return False  # no trailing empty rows
    if rows[0] != frozenset(range(len(rows[0]))):
        return False  # bottom row must be contiguous from position 0
    for lower, upper in zip(rows, rows[1:]):
        for i in upper:
            if any(i + d not in lower for d in range(p + 1)):
                return False
    return True


def is_primitive(fountain: Fountain) -> bool:
    """True iff the next-to-bottom row is completely full (k - p coins).

    A bare bottom row of exactly p coins counts as primitive (its second
    row is vacuously full); bottom rows shorter than p never do.
    """
    k = fountain.bottom_width
    p = fountain.p
    if k < p:
        return False
    row1 = fountain.rows[1] if len(fountain.rows) > 1 else frozenset()
    return row1 == frozenset(range(k - p))


def iter_fountains(p: int, n_max: int) -> Iterator[Fountain]:
    """Yield every valid fountain with at most n_max coins, exactly once.

    Pure depth-first search over the definition: the bottom row is fixed,
    and each higher row ranges over all subsets of the supported positions
    of the row below it.  Exponential; meant for desk-scale oracles.
    """
    yield Fountain(p, ())
    for k in range(1, n_max + 1):
        bottom = frozenset(range(k))
        stack: list[tuple[tuple[frozenset[int], ...], int]] = [((bottom,), k)]
        while stack:
            rows, coins = stack.pop()
            yield Fountain(p, rows)
            top = rows[-1]
            supported = sorted(
                i for i in top if all(i + d in top for d in range(1, p + 1))
            )
            budget = n_max - coins
            for size in range(1, min(len(supported), budget) + 1):
                for chosen in combinations(supported, size):
                    stack.append((rows + (frozenset(chosen),), coins + size))


def enumerate_fountains(p: int, n_max: int) -> dict[tuple[int, int], int]:
    """Exhaustive (n, k) -> count map for all fountains with n <= n_max."""
    counts: dict[tuple[int, int], int] = {}
    for fountain in iter_fountains(p, n_max):
        shape = fountain.shape()
        counts[shape] = counts.get(shape, 0) + 1
    return counts


@dataclass
class FountainTable:
    """Dense count tables for one p, indexed as table.f[n][k] etc."""

    p: int
    n_max: int
    k_max: int
    f: list[list[int]]
    g: list[list[int]]
    h: list[list[int]]

    def h_at(self, n: int, k: int) -> int:
        """h[n][k] extended by its structural zeros (k < 0 or k > n)."""
        if k < 0 or n < k:
            return 0
        if n > self.n_max or k > self.k_max:
            raise ValueError(
                f"(n={n}, k={k}) outside table bounds "
                f"({self.n_max}, {self.k_max})"
            )
        return self.h[n][k]


def _empty_table(p: int, n_max: int, k_max: int) -> FountainTable:
    def zeros() -> list[list[int]]:
        return [[0] * (k_max + 1) for _ in range(n_max + 1)]

    return FountainTable(p, n_max, k_max, zeros(), zeros(), zeros())


def table_f(p: int, n_max: int, k_max: int) -> FountainTable:
    """Fill f by increasing n, then k, from the splitting convolution.

    For n, k >= p the count satisfies

        f(n, k) = sum over m, r >= 1 of g(m+p-1, r+p-1) * f(n-m, k-r)

    with g read off as g(a, b) = f(a-b, b-p): removing the bottom row of a
    primitive fountain leaves an arbitrary one.  Every g-factor used at row
    n only involves f-rows below n, so the fill is well-founded.  Bottom
    rows of width k <= p support nothing, giving the base f(n, k) = [n == k]
    for k < p (the k = p column comes out of the convolution itself).  The
    inner loops skip index regions where either factor is structurally zero.
    """
    if n_max < 0 or k_max < 0:
        raise ValueError("table bounds must be nonnegative")
    table = _empty_table(p, n_max, k_max)
    f = table.f
    mc = [min(max_coins(k, p), n_max) for k in range(k_max + 1)]
    for k in range(min(p - 1, k_max, n_max) + 1):
        f[k][k] = 1
    for n in range(p, n_max + 1):
        for k in range(p, min(n, k_max) + 1):
            if n > mc[k]:
                continue
            acc = 0
            for b in range(p, k + 1):
                j = b - p  # bottom width of the primitive part, after the shift
                c = k - b + p - 1  # bottom width of the remaining part
                lo = max(b + j, n + p - 1 - mc[c])
                hi = min(b + mc[j], n + p - 1 - c, n)
                for a in range(lo, hi + 1):
                    acc += f[a - b][j] * f[n - a + p - 1][c]
            f[n][k] = acc
    return table


def shift_g(table: FountainTable) -> FountainTable:
    """Fill g from f via g(n, k) = f(n-k, k-p); zero for k < p."""
    p = table.p
    for n in range(table.n_max + 1):
        for k in range(p, min(n, table.k_max) + 1):
            table.g[n][k] = table.f[n - k][k - p]
    return table


def table_h(table: FountainTable) -> FountainTable:
    """Fill h = f - g entrywise."""
    for n in range(table.n_max + 1):
        row_f, row_g, row_h = table.f[n], table.g[n], table.h[n]
        for k in range(table.k_max + 1):
            row_h[k] = row_f[k] - row_g[k]
    return table


def build_table(p: int, n_max: int, k_max: int) -> FountainTable:
    """table_f, shift_g and table_h in sequence."""
    return table_h(shift_g(table_f(p, n_max, k_max)))


def _series_from(table: FountainTable, which: str, order: int) -> QZSeries:
    if table.n_max < order or table.k_max < order:
        raise ValueError(
            f"table bounds ({table.n_max}, {table.k_max}) insufficient "
            f"for series order {order}"
        )
    array = getattr(table, which)
    terms = {}
    for n in range(order + 1):
        row = array[n]
        for k in range(min(n, order) + 1):
            if row[k]:
                terms[(n, k)] = row[k]
    return QZSeries(order, 0, order, terms)


def series_F(table: FountainTable, order: int) -> QZSeries:
    """sum f(n,k) q^n z^k truncated at q-order `order`, z-window [0, order]."""
    return _series_from(table, "f", order)


def series_G(table: FountainTable, order: int) -> QZSeries:
    return _series_from(table, "g", order)


def series_H(table: FountainTable, order: int) -> QZSeries:
    return _series_from(table, "h", order)


# -- optional table cache ---------------------------------------------------

def table_cache_path(cache_dir: str | Path, p: int, n_max: int, k_max: int) -> Path:
    return Path(cache_dir) / (
        f"fountains_p{p}_n{n_max}_k{k_max}_v{CACHE_VERSION}.json"
    )


def save_table(table: FountainTable, path: str | Path) -> None:
    """Write a table as versioned JSON; counts as decimal strings."""
    payload = {
        "format": CACHE_FORMAT,
        "version": CACHE_VERSION,
        "p": table.p,
        "n_max": table.n_max,
        "k_max": table.k_max,
        "f": [[str(v) for v in row] for row in table.f],
        "g": [[str(v) for v in row] for row in table.g],
        "h": [[str(v) for v in row] for row in table.h],
    }
    Path(path).write_text(json.dumps(payload), encoding="utf-8")


def validate_table(table: FountainTable) -> None:
    """Check the structural table invariants; raises CacheError on failure."""
    p, n_max, k_max = table.p, table.n_max, table.k_max
    for name in ("f", "g", "h"):
        array = getattr(table, name)
        if len(array) != n_max + 1 or any(len(row) != k_max + 1 for row in array):
            raise CacheError(f"{name} has wrong shape")
    for k in range(min(n_max, k_max) + 1):
        if table.f[k][k] != 1:
            raise CacheError(f"f({k},{k}) != 1")
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            if table.h[n][k] != table.f[n][k] - table.g[n][k]:
                raise CacheError(f"h != f - g at ({n},{k})")
            if (k > n or n > max_coins(k, p)) and table.f[n][k] != 0:
                raise CacheError(f"f({n},{k}) nonzero outside the fountain region")
            if k < p and table.g[n][k] != 0:
                raise CacheError(f"g({n},{k}) nonzero with bottom row < p")


def load_table(path: str | Path) -> FountainTable:
    """Load a cached table, validating format tag and invariants before use."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"unreadable table cache {path}: {exc}") from exc
    if not isinstance(payload, dict) or payload.get("format") != CACHE_FORMAT:
        raise CacheError(f"{path} is not a fountain table cache")
    if payload.get("version") != CACHE_VERSION:
        raise CacheError(f"unsupported cache version {payload.get('version')!r}")
    try:
        table = FountainTable(
            p=int(payload["p"]),
            n_max=int(payload["n_max"]),
            k_max=int(payload["k_max"]),
            f=[[int(v) for v in row] for row in payload["f"]],
            g=[[int(v) for v in row] for row in payload["g"]],
            h=[[int(v) for v in row] for row in payload["h"]],
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"malformed table cache {path}: {exc}") from exc
    validate_table(table)
    return table


def load_or_build(
    p: int, n_max: int, k_max: int, cache_dir: str | Path | None = None
) -> FountainTable:
    """Build a table, or reuse/populate the cache directory if one is given."""
    if cache_dir is None:
        return build_table(p, n_max, k_max)
    path = table_cache_path(cache_dir, p, n_max, k_max)
    if path.exists():
        return load_table(path)
    table = build_table(p, n_max, k_max)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_table(table, path)
    return table
