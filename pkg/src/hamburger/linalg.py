"""Exact dense matrices over the rationals.

Entries are stored as :class:`fractions.Fraction`; integer-valued matrices
simply have every denominator equal to 1.  Everything here is immutable and
side-effect free.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionError, StructureError

Number = int | Fraction | str


def _frac(x: Number) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


class Matrix:
    """Immutable row-major matrix of Fractions."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[Number]], ncols: int | None = None):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged rows")
        else:
            width = ncols or 0
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    # -- constructors -----------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        """Parse whitespace-separated rows of integers or ``p/q`` fractions."""
        rows = [line.split() for line in text.strip().splitlines() if line.strip()]
        return cls([[Fraction(tok) for tok in row] for row in rows])

    # -- access -----------------------------------------------------------
    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self._rows[i][j]

    def __iter__(self):
        return iter(self._rows)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return self.shape == other.shape and self._rows == other._rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in r] for r in self._rows]!r})"

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def to_int_lists(self) -> list[list[int]]:
        if not self.is_integer():
            raise StructureError("matrix has non-integer entries")
        return [[int(x) for x in r] for r in self._rows]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self._rows)

    # -- arithmetic -------------------------------------------------------
    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self._rows), ncols=self.nrows) if self.nrows else Matrix([], ncols=0)

    def __neg__(self) -> "Matrix":
        return Matrix(([-x for x in r] for r in self._rows), ncols=self.ncols)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(([a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)),
                      ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return matmul(self, other)

    def scale(self, c: Number) -> "Matrix":
        c = _frac(c)
        return Matrix(([c * x for x in r] for r in self._rows), ncols=self.ncols)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    cols = b.T.rows if b.nrows else tuple(() for _ in range(b.ncols))
    return Matrix(([sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in a.rows),
                  ncols=b.ncols)


def block_assemble(a: Matrix, upper_right: Matrix, lower_left: Matrix, b: Matrix) -> Matrix:
    """Return the block matrix ``[[a, upper_right], [lower_left, b]]``."""
    if a.nrows != upper_right.nrows or lower_left.nrows != b.nrows:
        raise DimensionError("block rows do not line up")
    if a.ncols != lower_left.ncols or upper_right.ncols != b.ncols:
        raise DimensionError("block columns do not line up")
    top = [ra + ru for ra, ru in zip(a.rows, upper_right.rows)]
    bottom = [rl + rb for rl, rb in zip(lower_left.rows, b.rows)]
    return Matrix(top + bottom, ncols=a.ncols + b.ncols)


def det(m: Matrix) -> Fraction:
    """Exact determinant.

    Each row is scaled by the lcm of its denominators so the elimination runs
    over plain ints (Bareiss fraction-free scheme); the scale factors are
    divided back out at the end.  The empty matrix has determinant 1.
    """
    if not m.is_square:
        raise DimensionError(f"determinant of non-square {m.shape} matrix")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    scale = 1
    rows: list[list[int]] = []
    for r in m.rows:
        d = lcm(*(x.denominator for x in r))
        scale *= d
        rows.append([x.numerator * (d // x.denominator) for x in r])
    return Fraction(bareiss_det(rows), scale)


def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix (consumes ``rows``)."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for p in range(k + 1, n):
                if rows[p][k] != 0:
                    rows[k], rows[p] = rows[p], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            lead = ri[k]
            for j in range(k + 1, n):
                num = pivot * ri[j] - lead * rk[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "inexact Bareiss division"
                ri[j] = q
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _unit_triangular_kind(m: Matrix) -> str:
    if not m.is_square:
        raise StructureError("unitriangular matrix must be square")
    n = m.nrows
    if any(m[i, i] != 1 for i in range(n)):
        raise StructureError("diagonal entries must all be 1")
    upper = all(m[i, j] == 0 for i in range(n) for j in range(i))
    if upper:
        return "upper"
    lower = all(m[i, j] == 0 for i in range(n) for j in range(i + 1, n))
    if lower:
        return "lower"
    raise StructureError("matrix is neither upper nor lower triangular")


def invert_unitriangular(m: Matrix) -> Matrix:
    """Inverse of an upper or lower unitriangular matrix by back substitution."""
    kind = _unit_triangular_kind(m)
    if kind == "lower":
        return invert_unitriangular(m.T).T
    n = m.nrows
    a = m.rows
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # Row i of the inverse: x_ij = -sum_{i<t<=j} a_it x_tj for j > i.
    for i in range(n - 1, -1, -1):
        xi = inv[i]
        for j in range(i + 1, n):
            xi[j] = -sum((a[i][t] * inv[t][j] for t in range(i + 1, j + 1)), Fraction(0))
    return Matrix(inv, ncols=n)


def schur_complement(a: Matrix, upper_right: Matrix, lower_left: Matrix, b: Matrix) -> Matrix:
    """``a - upper_right · b⁻¹ · lower_left`` for unitriangular ``b``.

    With det b = 1 this has the same determinant as the full block matrix.
    """
    if not (a.is_square and b.is_square):
        raise DimensionError("diagonal blocks must be square")
    if upper_right.shape != (a.nrows, b.ncols) or lower_left.shape != (b.nrows, a.ncols):
        raise DimensionError("off-diagonal blocks do not conform")
    return a - upper_right @ invert_unitriangular(b) @ lower_left


def _require_diagonal(m: Matrix, name: str) -> None:
    if not m.is_square or any(m[i, j] != 0 for i in range(m.nrows) for j in range(m.ncols) if i != j):
        raise StructureError(f"{name} must be a square diagonal matrix")


def schur_reduce(a: Matrix, b: Matrix, d1: Matrix, d2: Matrix) -> Matrix:
    """Reduced hamburger matrix ``A + D1 B⁻¹ D2``."""
    k = a.nrows
    for name, blk in (("A", a), ("B", b), ("D1", d1), ("D2", d2)):
        if blk.shape != (k, k):
            raise DimensionError(f"{name} has shape {blk.shape}, expected {(k, k)}")
    _require_diagonal(d1, "D1")
    _require_diagonal(d2, "D2")
    return schur_complement(a, d1, -d2, b)


def exchange_matrix(n: int) -> Matrix:
    return Matrix([[int(i + j == n - 1) for j in range(n)] for i in range(n)], ncols=n)


def exchange_conjugate(m: Matrix) -> Matrix:
    """``J·M·J``: reverse the row order and the column order."""
    if not m.is_square:
        raise DimensionError("exchange conjugation needs a square matrix")
    return Matrix((r[::-1] for r in m.rows[::-1]), ncols=m.ncols)
