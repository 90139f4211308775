"""Exact dense linear algebra over the rationals, plus small integer-lattice
basis computation.

Determinants use Bareiss fraction-free elimination on a row-scaled integer
copy of the matrix, so no rounding can occur anywhere and intermediate
fractions never blow up. Solving uses exact Gaussian elimination and verifies
A*x = b by substitution before returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    ConsistencyError,
    DimensionError,
    RankDeficiencyError,
    SingularMatrixError,
)
from .rational import as_rational


@dataclass(frozen=True)
class RationalMatrix:
    """Dense row-major matrix of Fractions."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[Fraction] = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            flat.extend(as_rational(v) for v in row)
        return cls(nrows, ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        ent = [Fraction(0)] * (n * n)
        for i in range(n):
            ent[i * n + i] = Fraction(1)
        return cls(n, n, tuple(ent))

    def get(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def matmul(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions differ")
        out: list[Fraction] = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.get(k, j) for k in range(self.cols)),
                               Fraction(0)))
        return RationalMatrix(self.rows, other.cols, tuple(out))


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense row-major matrix of Python ints (arbitrary precision)."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )
        for e in self.entries:
            if not isinstance(e, int):
                raise DimensionError("IntegerMatrix entries must be int")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntegerMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            flat.extend(int(v) for v in row)
        return cls(nrows, ncols, tuple(flat))

    def get(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))


def _bareiss_det_int(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix (Bareiss).

    Every division below is exact by the Sylvester identity; all values stay
    integers of modest size."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    m = [r[:] for r in rows]
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot_row = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot_row is None:
                return 0
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i = m[i]
            row_k = m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def mat_determinant(a: RationalMatrix) -> Fraction:
    """Exact determinant of a square rational matrix.

    Rows are scaled to integers (lcm of denominators), Bareiss runs on the
    integer copy, and the row scales are divided back out. The empty 0x0
    matrix has determinant 1."""
    if a.rows != a.cols:
        raise DimensionError(f"determinant of non-square {a.rows}x{a.cols} matrix")
    scale = 1
    int_rows: list[list[int]] = []
    for i in range(a.rows):
        row = a.row(i)
        denom_lcm = 1
        for v in row:
            denom_lcm = denom_lcm * v.denominator // math.gcd(denom_lcm, v.denominator)
        int_rows.append([int(v * denom_lcm) for v in row])
        scale *= denom_lcm
    return Fraction(_bareiss_det_int(int_rows), scale)


def mat_solve(a: RationalMatrix, b: Sequence) -> tuple[Fraction, ...]:
    """Solve A*x = b exactly.

    Gaussian elimination with exact pivoting (first nonzero pivot); the
    result is substituted back into A before returning, so a wrong answer is
    structurally impossible."""
    if a.rows != a.cols:
        raise DimensionError(f"solve with non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    rhs = [as_rational(v) for v in b]
    if len(rhs) != n:
        raise DimensionError(f"rhs length {len(rhs)} != {n}")
    aug = [list(a.row(i)) + [rhs[i]] for i in range(n)]
    for k in range(n):
        pivot_row = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            factor = aug[i][k] / pivot
            if factor:
                row_i = aug[i]
                row_k = aug[k]
                for j in range(k, n + 1):
                    row_i[j] -= factor * row_k[j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    for i in range(n):
        row = a.row(i)
        if sum((row[j] * x[j] for j in range(n)), Fraction(0)) != rhs[i]:
            raise ConsistencyError("back-substitution check failed")  # pragma: no cover
    return tuple(x)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def lattice_basis(vectors: Iterable[Sequence[int]]) -> IntegerMatrix:
    """Basis (as matrix columns) of the integer lattice generated by the
    given vectors in Z^s, s in {1, 2}.

    Hermite-style integer reduction: vectors are folded into a triangular
    basis one at a time using extended-gcd row operations, so the output
    spans exactly the same lattice. Raises RankDeficiencyError when the
    vectors do not span R^s."""
    vecs = [tuple(int(c) for c in v) for v in vectors]
    if not vecs:
        raise RankDeficiencyError("empty vector list")
    s = len(vecs[0])
    if s not in (1, 2):
        raise RankDeficiencyError(f"ambient dimension {s} not supported (s <= 2)")
    for v in vecs:
        if len(v) != s:
            raise DimensionError("mixed vector dimensions")

    if s == 1:
        g = 0
        for (c,) in vecs:
            g = math.gcd(g, c)
        if g == 0:
            raise RankDeficiencyError("vectors do not span R^1")
        return IntegerMatrix.from_rows([[g]])

    # s == 2: maintain up to two basis rows (b0 with pivot in coord 0,
    # b1 = (0, d)); fold each vector in with xgcd combinations.
    b0: list[int] | None = None
    b1: list[int] | None = None

    def reduce_second(vec: list[int]) -> None:
        nonlocal b1
        if vec[1] == 0:
            return
        if b1 is None:
            b1 = [0, abs(vec[1])]
        else:
            g = math.gcd(b1[1], vec[1])
            b1 = [0, g]

    for v in vecs:
        vec = list(v)
        if vec == [0, 0]:
            continue
        if b0 is None:
            if vec[0] != 0:
                b0 = vec if vec[0] > 0 else [-vec[0], -vec[1]]
            else:
                reduce_second(vec)
            continue
        if vec[0] != 0:
            g, u, w = _xgcd(b0[0], vec[0])
            # new pivot row spans the same first-coordinate multiples
            new_b0 = [g, u * b0[1] + w * vec[1]]
            # leftovers have zero first coordinate
            left_a = [0, (b0[0] // g) * vec[1] - (vec[0] // g) * b0[1]]
            reduce_second(left_a)
            b0 = new_b0
        else:
            reduce_second(vec)

    if b0 is None or b1 is None or b1[1] == 0:
        raise RankDeficiencyError("vectors do not span R^2")
    # canonical form: 0 <= b0[1] < b1[1]
    b0[1] %= b1[1]
    return IntegerMatrix.from_rows([[b0[0], 0], [b0[1], b1[1]]])


def lattice_determinant(basis: IntegerMatrix) -> int:
    """|det| of a (square) lattice basis; the lattice covolume."""
    if basis.rows != basis.cols:
        raise DimensionError("lattice basis not square")
    rows = [list(basis.row(i)) for i in range(basis.rows)]
    return abs(_bareiss_det_int(rows))


def in_lattice(basis: IntegerMatrix, point: Sequence[Fraction]) -> bool:
    """Whether `point` is an integer combination of the basis columns."""
    if basis.rows != len(point):
        raise DimensionError("point dimension mismatch")
    if basis.rows == 1:
        q = Fraction(point[0]) / basis.get(0, 0)
        return q.denominator == 1
    # solve basis * k = point over Q, check integrality
    a = RationalMatrix.from_rows([[Fraction(basis.get(i, j)) for j in range(basis.cols)]
                                  for i in range(basis.rows)])
    try:
        k = mat_solve(a, [Fraction(p) for p in point])
    except SingularMatrixError:  # pragma: no cover - bases are nonsingular
        return False
    return all(c.denominator == 1 for c in k)
