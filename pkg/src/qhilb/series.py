"""Exact truncated bivariate series in q and z over Python's big integers.

A QZSeries stores finitely many terms c * q^n * z^k with 0 <= n <= q_order
and z_min <= k <= z_max.  Terms pushed outside the window by an operation
are discarded; everything kept is exact.  All values are immutable and all
operations are pure, so series can be shared freely between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class WindowError(ValueError):
    """Invalid exponent window, or an access outside the declared window."""


class SupportError(ValueError):
    """Operand support violates an operation's precondition."""


class QZSeries:
    """Truncated series sum(c * q^n * z^k) with integer coefficients.

    The window is part of the value: binary operations intersect the
    operands' windows and truncate the result to the intersection, so a
    narrow window can only ever lose high-order information, never
    corrupt what is kept.  Zero coefficients are never stored.
    """

    __slots__ = ("q_order", "z_min", "z_max", "terms")

    def __init__(
        self,
        q_order: int,
        z_min: int,
        z_max: int,
        terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = (),
    ):
        if q_order < 0:
            raise WindowError(f"q_order must be >= 0, got {q_order}")
        if z_min > z_max:
            raise WindowError(f"empty z-window [{z_min}, {z_max}]")
        self.q_order = q_order
        self.z_min = z_min
        self.z_max = z_max
        items = terms.items() if isinstance(terms, Mapping) else terms
        kept: dict[tuple[int, int], int] = {}
        for (n, k), c in items:
            if n < 0:
                raise WindowError(f"negative q-exponent {n}")
            if c == 0 or n > q_order or not z_min <= k <= z_max:
                continue
            kept[(n, k)] = kept.get((n, k), 0) + c
        self.terms = {nk: c for nk, c in kept.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q_order: int, z_min: int, z_max: int) -> QZSeries:
        return cls(q_order, z_min, z_max)

    @classmethod
    def one(cls, q_order: int, z_min: int, z_max: int) -> QZSeries:
        return cls.monomial(1, 0, 0, q_order, z_min, z_max)

    @classmethod
    def monomial(
        cls, c: int, n: int, k: int, q_order: int, z_min: int, z_max: int
    ) -> QZSeries:
        """c * q^n * z^k, truncated to the window (possibly the zero series)."""
        return cls(q_order, z_min, z_max, {(n, k): c})

    # -- inspection --------------------------------------------------------

    def coeff(self, n: int, k: int) -> int:
        """Stored coefficient of q^n z^k; raises outside the window.

        The error distinguishes a genuine zero from a truncated-away term.
        """
        if not (0 <= n <= self.q_order and self.z_min <= k <= self.z_max):
            raise WindowError(
                f"({n}, {k}) outside window q<={self.q_order}, "
                f"z in [{self.z_min}, {self.z_max}]"
            )
        return self.terms.get((n, k), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Terms in (n, k) lexicographic order."""
        return iter(sorted(self.terms.items()))

    def window(self) -> tuple[int, int, int]:
        return (self.q_order, self.z_min, self.z_max)

    # -- arithmetic --------------------------------------------------------

    def _intersect(self, other: QZSeries) -> tuple[int, int, int]:
        q_order = min(self.q_order, other.q_order)
        z_min = max(self.z_min, other.z_min)
        z_max = min(self.z_max, other.z_max)
        if z_min > z_max:
            raise WindowError(
                f"disjoint z-windows [{self.z_min}, {self.z_max}] and "
                f"[{other.z_min}, {other.z_max}]"
            )
        return q_order, z_min, z_max

    def add(self, other: QZSeries) -> QZSeries:
        q_order, z_min, z_max = self._intersect(other)
        acc = dict(self.terms)
        for nk, c in other.terms.items():
            acc[nk] = acc.get(nk, 0) + c
        return QZSeries(q_order, z_min, z_max, acc)

    def neg(self) -> QZSeries:
        return QZSeries(
            self.q_order, self.z_min, self.z_max,
            {nk: -c for nk, c in self.terms.items()},
        )

    def sub(self, other: QZSeries) -> QZSeries:
        return self.add(other.neg())

    def mul(self, other: QZSeries) -> QZSeries:
        """Cauchy product truncated to the intersected window."""
        q_order, z_min, z_max = self._intersect(other)
        a = sorted(self.terms.items())
        b = sorted(other.terms.items())
        acc: dict[tuple[int, int], int] = {}
        for (n1, k1), c1 in a:
            if n1 > q_order:
                break
            for (n2, k2), c2 in b:
                n = n1 + n2
                if n > q_order:
                    break
                k = k1 + k2
                if z_min <= k <= z_max:
                    acc[(n, k)] = acc.get((n, k), 0) + c1 * c2
        return QZSeries(q_order, z_min, z_max, acc)

    def scale(self, c: int) -> QZSeries:
        return QZSeries(
            self.q_order, self.z_min, self.z_max,
            {nk: c * v for nk, v in self.terms.items()},
        )

    def subst_z_scale(self, a: int) -> QZSeries:
        """Substitute z -> q^a z, i.e. map each term (n, k) to (n + a*k, k).

        Only supported for series without negative z-exponents: a negative k
        would lower q-exponents and let terms already truncated away re-enter
        the window, silently corrupting the result.
        """
        if a < 1:
            raise ValueError(f"substitution exponent must be >= 1, got {a}")
        bad = [nk for nk in self.terms if nk[1] < 0]
        if bad:
            raise SupportError(
                f"subst_z_scale requires nonnegative z-exponents, found {min(bad)}"
            )
        mapped = {(n + a * k, k): c for (n, k), c in self.terms.items()}
        return QZSeries(self.q_order, self.z_min, self.z_max, mapped)

    def geom_inverse(self) -> QZSeries:
        """(1 - self)^-1 = sum of self^j, for series with q-valuation >= 1.

        The precondition makes the geometric sum terminate at j = q_order;
        mul(result, 1 - self) == 1 on the window.
        """
        bad = [nk for nk in self.terms if nk[0] < 1]
        if bad:
            raise SupportError(
                f"geom_inverse requires every q-exponent >= 1, found term {min(bad)}"
            )
        acc = QZSeries.one(self.q_order, self.z_min, self.z_max)
        power = self
        while not power.is_zero():
            acc = acc.add(power)
            power = power.mul(self)
        return acc

    def restrict(self, q_order: int, z_min: int, z_max: int) -> QZSeries:
        """Truncate to a sub-window of the current one."""
        if q_order > self.q_order or z_min < self.z_min or z_max > self.z_max:
            raise WindowError("restrict target must be contained in the window")
        return QZSeries(q_order, z_min, z_max, self.terms)

    # -- operators ---------------------------------------------------------

    __add__ = add
    __sub__ = sub
    __mul__ = mul
    __neg__ = neg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QZSeries):
            return NotImplemented
        return self.window() == other.window() and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.window(), frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            body = "0"
        else:
            parts = []
            for (n, k), c in sorted(self.terms.items()):
                parts.append(f"{c}*q^{n}*z^{k}")
            body = " + ".join(parts)
        return f"QZSeries[q<={self.q_order}, z in [{self.z_min},{self.z_max}]]({body})"


def make_monomial(
    c: int, n: int, k: int, q_order: int, z_min: int, z_max: int
) -> QZSeries:
    """Module-level alias for QZSeries.monomial."""
    return QZSeries.monomial(c, n, k, q_order, z_min, z_max)
