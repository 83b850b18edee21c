"""Closed-form distance-matrix determinants for trees, unicyclic graphs and
bicyclic graphs whose two cycles share no edge.

Everything is evaluated in exact rationals and converted to ``int`` at the
end, with an assertion that the conversion is lossless.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction


class DegenerateCycleWarning(UserWarning):
    """A cycle length of 2 was passed to a formula; it has no graph meaning."""


def _to_int(x: Fraction) -> int:
    assert x.denominator == 1, f"formula produced non-integral value {x}"
    return x.numerator


def _check_cycle(name: str, length: int) -> None:
    if length < 1:
        raise ValueError(f"{name} must be >= 1, got {length}")
    if length == 2:
        warnings.warn(f"{name}=2 is not a simple cycle; returning 0", DegenerateCycleWarning,
                      stacklevel=3)


def tree_det(n: int) -> int:
    """Determinant of the distance matrix of any tree on ``n`` vertices."""
    if n < 1:
        raise ValueError(f"tree order must be >= 1, got {n}")
    # n == 1: the (n-1) factor is zero, so skip the 2^-1
    if n == 1:
        return 0
    return (-1) ** (n - 1) * (n - 1) * 2 ** (n - 2)


def bicyclic_det(p: int, q: int, n: int) -> int:
    """Determinant for a bicyclic graph of order ``p+q-1+n`` with edge-disjoint
    cycles of lengths ``p`` and ``q``.

    Length-1 cycles are allowed and stand for a single vertex, which turns this
    into the unicyclic (one of them 1) or tree (both 1) formula.
    """
    _check_cycle("p", p)
    _check_cycle("q", q)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if p % 2 == 0 or q % 2 == 0:
        return 0
    bracket = Fraction((p * q - 1) * (p + q), 4) + Fraction(n, 2) * p * q
    return _to_int(bracket * (-2) ** n)


def unicyclic_det(p: int, n: int) -> int:
    """Determinant for a unicyclic graph of order ``p+n`` whose cycle has length ``p``."""
    _check_cycle("p", p)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if p % 2 == 0:
        return 0
    bracket = Fraction((p - 1) * (p + 1), 4) + Fraction(n, 2) * p
    return _to_int(bracket * (-2) ** n)


def base_values(p: int, q: int) -> tuple[int, int]:
    """``(det D_0, det D_1)``: the shared-vertex graph with no pendant path, and with one pendant."""
    if p < 3 or q < 3:
        raise ValueError(f"base values need real cycles (>= 3), got p={p}, q={q}")
    if p % 2 == 0 or q % 2 == 0:
        return 0, 0
    d0 = Fraction((p * q - 1) * (p + q), 4)
    d1 = -Fraction(1, 2) * (p + q) * (p * q - 1) - p * q
    return _to_int(d0), _to_int(d1)


@dataclass(frozen=True)
class RecurrenceSeed:
    f0: Fraction
    f1: Fraction

    @property
    def coefficients(self) -> tuple[Fraction, Fraction]:
        """``(c1, c2)`` in ``f(n) = (c1 + n c2) (-2)^n``."""
        return Fraction(self.f0), -Fraction(self.f1) / 2 - self.f0


def solve_recurrence(seed: RecurrenceSeed, n: int) -> Fraction:
    """Closed solution of ``f(n) = -4 f(n-1) - 4 f(n-2)`` from ``f(0), f(1)``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    f0, f1 = Fraction(seed.f0), Fraction(seed.f1)
    return (f0 - Fraction(n, 2) * (f1 + 2 * f0)) * (-2) ** n


def iterate_recurrence(seed: RecurrenceSeed, n: int) -> Fraction:
    a, b = Fraction(seed.f0), Fraction(seed.f1)
    if n == 0:
        return a
    for _ in range(n - 1):
        a, b = b, -4 * b - 4 * a
    return b


def recurrence_residual(p: int, q: int, n: int, oracle: tuple[int, int, int]) -> int:
    """``det D_n + 4 det D_{n-1} + 4 det D_{n-2}`` for brute-force determinants
    of the pendant-path graphs at ``n-2, n-1, n``. Zero when the recurrence holds.
    """
    if n < 2:
        raise ValueError(f"recurrence needs n >= 2, got {n}")
    prev2, prev1, cur = oracle
    return cur + 4 * prev1 + 4 * prev2


def formula_for(family: str, *params: int) -> int:
    """Dispatch by family name: ``tree n``, ``unicyclic p n``, ``bicyclic p q n``."""
    table = {"tree": (tree_det, 1), "unicyclic": (unicyclic_det, 2), "bicyclic": (bicyclic_det, 3)}
    if family not in table:
        raise ValueError(f"unknown family {family!r}")
    fn, arity = table[family]
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
