"""Exact integer and rational matrices.

Two independent determinant kernels live here: fraction-free (Bareiss)
elimination for production use and cofactor expansion as a small-size
oracle. The remaining helpers build the tridiagonal auxiliaries used in the
odd-cycle determinant computation and the centred cycle block ``D^p``.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

ExactScalar = Fraction

NAIVE_MAX_DIM = 12


class SingularMatrixError(ArithmeticError):
    pass


class _Matrix:
    __slots__ = ("rows",)
    _coerce = staticmethod(int)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(self._coerce(x) for x in r) for r in rows)
        if not rows:
            raise ValueError("zero-dimensional matrices are not supported")
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, _Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}({[list(r) for r in self.rows]!r})"

    def tolist(self) -> list[list]:
        return [list(r) for r in self.rows]

    def transpose(self):
        return type(self)(zip(*self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == tuple(zip(*self.rows))

    def to_text(self) -> str:
        """Debug dump: a dimension line, then one row per line."""
        lines = [str(self.dim)]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        dim = int(lines[0])
        rows = [ln.split() for ln in lines[1:]]
        if len(rows) != dim:
            raise ValueError(f"expected {dim} rows, got {len(rows)}")
        return cls(rows)


class IntMatrix(_Matrix):
    __slots__ = ()
    _coerce = staticmethod(int)


class RationalMatrix(_Matrix):
    """Square matrix of :class:`fractions.Fraction` entries."""

    __slots__ = ()
    _coerce = staticmethod(Fraction)


def identity(k: int) -> IntMatrix:
    return IntMatrix([[int(i == j) for j in range(k)] for i in range(k)])


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    """Product of two rectangular row-major arrays (lists or matrix rows)."""
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_bareiss(m: _Matrix) -> int:
    """Exact determinant by fraction-free elimination.

    Each division by the previous pivot is exact, so entries stay integral and
    bounded by minors of ``m``. A zero pivot is fixed by swapping in a lower
    row with a nonzero entry in the pivot column.
    """
    n = m.dim
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_naive(m: _Matrix) -> int:
    """Cofactor expansion along the first row. Oracle only; ``dim <= 12``."""
    if m.dim > NAIVE_MAX_DIM:
        raise ValueError(f"det_naive refuses dim {m.dim} > {NAIVE_MAX_DIM}")

    def rec(rows: list[tuple], cols: tuple[int, ...]):
        if len(cols) == 1:
            return rows[0][cols[0]]
        total = 0
        head, rest = rows[0], rows[1:]
        for idx, c in enumerate(cols):
            if head[c]:
                minor = rec(rest, cols[:idx] + cols[idx + 1:])
                total += -head[c] * minor if idx % 2 else head[c] * minor
        return total

    return rec(list(m.rows), tuple(range(m.dim)))


def det_rational(m: _Matrix) -> Fraction:
    """Gaussian elimination over the rationals with largest-magnitude pivoting."""
    a = [[Fraction(x) for x in r] for r in m.rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[piv][k] == 0:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def solve_rational(m: _Matrix, rhs: Sequence) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly, partial pivoting on magnitude."""
    n = m.dim
    a = [[Fraction(x) for x in r] + [Fraction(b)] for r, b in zip(m.rows, rhs)]
    for k in range(n):
        piv = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[piv][k] == 0:
            raise SingularMatrixError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n + 1):
                    a[i][j] -= f * a[k][j]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        s = a[i][n] - sum(a[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / a[i][i]
    return x


def hadamard_bound_sq(m: _Matrix) -> Fraction:
    """Square of the Hadamard bound, so the comparison stays exact."""
    return Fraction(prod(sum(Fraction(x) ** 2 for x in r) for r in m.rows))


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def build_B(k: int) -> IntMatrix:
    """Lower bidiagonal ``k x k`` matrix with -1 on the diagonal and subdiagonal."""
    _check_k(k)
    return IntMatrix([[-1 if j in (i, i - 1) else 0 for j in range(k)] for i in range(k)])


def build_C(k: int) -> RationalMatrix:
    """``B B^T / 2 - 2 I`` computed from ``build_B`` rather than from its closed shape."""
    _check_k(k)
    b = build_B(k).rows
    bbt = matmul(b, list(zip(*b)))
    half = Fraction(1, 2)
    return RationalMatrix([[half * bbt[i][j] - 2 * (i == j) for j in range(k)] for i in range(k)])


def build_H(k: int) -> IntMatrix:
    """Tridiagonal matrix with -2 on the diagonal and 1 beside it."""
    _check_k(k)
    return IntMatrix([[-2 if i == j else (1 if abs(i - j) == 1 else 0) for j in range(k)]
                      for i in range(k)])


def det_H_closed(k: int) -> int:
    _check_k(k)
    return (-1) ** k * (k + 1)


def build_F(k: int) -> list[Fraction]:
    """Row vector ``1 B^T / 2 + 1``; works out to ``(1/2, 0, ..., 0)``."""
    _check_k(k)
    b = build_B(k).rows
    col_sums = [sum(b[i][j] for j in range(k)) for i in range(k)]  # (1 B^T)_i
    return [Fraction(s, 2) + 1 for s in col_sums]


def check_lemma_a0(k: int) -> tuple[Fraction, Fraction]:
    """Return ``(det C_k, F_k C_k^{-1} F_k^T)`` by exact elimination.

    Nothing here uses the closed forms; callers compare against
    ``(-1)^k (2k+1) / 2^k`` and ``-k / (2(2k+1))``.
    """
    c = build_C(k)
    f = build_F(k)
    det_c = det_rational(c)
    if det_c == 0:
        raise SingularMatrixError(f"C_{k} is singular")
    x = solve_rational(c, f)
    return det_c, sum(fi * xi for fi, xi in zip(f, x))


def lemma_a0_closed(k: int) -> tuple[Fraction, Fraction]:
    _check_k(k)
    return Fraction((-1) ** k * (2 * k + 1), 2 ** k), Fraction(-k, 2 * (2 * k + 1))


def cycle_schur_entries(p: int) -> IntMatrix:
    """Entrywise ``D^p`` for a ``p``-cycle, rows/cols indexed by vertices 2..p.

    ``d(i, j) = min(p-|i-j|, |i-j|) - min(p-i+1, i-1) - min(p-j+1, j-1)``
    with 1-based cycle labels.
    """
    if p < 3:
        raise ValueError(f"cycle length must be >= 3, got {p}")

    def entry(i: int, j: int) -> int:
        return (min(p - abs(i - j), abs(i - j))
                - min(p - i + 1, i - 1) - min(p - j + 1, j - 1))

    return IntMatrix([[entry(i, j) for j in range(2, p + 1)] for i in range(2, p + 1)])


def centered_block(dist: _Matrix, root: int = 0) -> IntMatrix:
    """``D* - d 1^T - 1 d^T`` where ``d`` is the root's distance row and
    ``D*`` the distance block on the remaining vertices."""
    others = [v for v in range(dist.dim) if v != root]
    d = dist.rows[root]
    return IntMatrix([[dist[i, j] - d[i] - d[j] for j in others] for i in others])
