"""Scalar and dense-matrix kernel used by every other module.

Two computation modes, never mixed inside one object or operation:

* ``"exact"`` -- entries are :class:`fractions.Fraction`; arithmetic is
  closed and roundoff-free.  Determinants use fraction-free (Bareiss)
  elimination, which keeps intermediate values as subdeterminants and in
  particular returns an exact integer for integer input.
* ``"float"`` -- entries are finite 64-bit floats; NaN/inf is rejected at
  construction.  Determinants and solves use partially pivoted elimination.

Everything here is a pure function on immutable data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionError,
    ModeMismatchError,
    NonFiniteError,
    SingularMatrixError,
    ValidationError,
)

Scalar = Union[Fraction, float]

EXACT = "exact"
FLOAT = "float"

#: Relative pivot threshold below which a float solve is declared singular.
DEFAULT_PIVOT_TOL = 1e-12


def as_exact(value) -> Fraction:
    """Coerce an int/Fraction to Fraction; floats are rejected (no silent rounding)."""
    if isinstance(value, bool):
        raise ValidationError("booleans are not scalars")
    if isinstance(value, Rational):
        return Fraction(value)
    raise ModeMismatchError(f"cannot use {value!r} in exact mode")


def as_float(value) -> float:
    """Coerce to a finite float; NaN/inf is an error, never a stored value."""
    if isinstance(value, bool):
        raise ValidationError("booleans are not scalars")
    x = float(value)
    if not math.isfinite(x):
        raise NonFiniteError(f"non-finite value {value!r} in float mode")
    return x


def coerce(value, mode: str) -> Scalar:
    return as_exact(value) if mode == EXACT else as_float(value)


def infer_mode(values: Iterable) -> str:
    """Mode of a homogeneous collection: any float makes it float, else exact.

    Mixing floats with non-integer rationals raises, since that almost always
    signals an accidental loss of exactness.
    """
    saw_float = False
    saw_fraction = False
    for v in values:
        if isinstance(v, float):
            saw_float = True
        elif isinstance(v, Rational):
            if not isinstance(v, Integral):
                saw_fraction = True
        else:
            raise ValidationError(f"{v!r} is not a scalar")
    if saw_float and saw_fraction:
        raise ModeMismatchError("cannot mix floats and fractions in one computation")
    return FLOAT if saw_float else EXACT


def coerce_vector(values: Sequence, mode: str | None = None) -> tuple[Scalar, ...]:
    if mode is None:
        mode = infer_mode(values)
    return tuple(coerce(v, mode) for v in values)


@dataclass(frozen=True)
class Matrix:
    """Immutable dense row-major matrix with a uniform scalar mode."""

    rows: int
    cols: int
    data: tuple[Scalar, ...]
    mode: str

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.data) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.data)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], mode: str | None = None) -> "Matrix":
        if not rows or not rows[0]:
            raise DimensionError("matrix needs at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        if mode is None:
            mode = infer_mode(v for r in rows for v in r)
        data = tuple(coerce(v, mode) for r in rows for v in r)
        return cls(len(rows), ncols, data, mode)

    @classmethod
    def identity(cls, n: int, mode: str = EXACT) -> "Matrix":
        one = Fraction(1) if mode == EXACT else 1.0
        zero = Fraction(0) if mode == EXACT else 0.0
        data = tuple(one if i == j else zero for i in range(n) for j in range(n))
        return cls(n, n, data, mode)

    @classmethod
    def diagonal(cls, entries: Sequence, mode: str | None = None) -> "Matrix":
        entries = coerce_vector(entries, mode)
        mode = infer_mode(entries)
        zero = Fraction(0) if mode == EXACT else 0.0
        n = len(entries)
        data = tuple(
            entries[i] if i == j else zero for i in range(n) for j in range(n)
        )
        return cls(n, n, data, mode)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> Scalar:
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return self.data[j :: self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        data = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.cols, self.rows, data, self.mode)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.mode != other.mode:
            raise ModeMismatchError("matrix product across modes")
        if self.cols != other.rows:
            raise DimensionError(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.data, other.data
        out = []
        for i in range(n):
            arow = a[i * k : (i + 1) * k]
            for j in range(m):
                acc = arow[0] * b[j]
                for t in range(1, k):
                    acc += arow[t] * b[t * m + j]
                out.append(acc)
        return Matrix(n, m, tuple(out), self.mode)

    def mat_vec(self, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match matrix columns")
        return tuple(
            sum(self.at(i, j) * v[j] for j in range(self.cols))
            for i in range(self.rows)
        )

    def scaled(self, factor: Scalar) -> "Matrix":
        factor = coerce(factor, self.mode)
        return Matrix(self.rows, self.cols, tuple(x * factor for x in self.data), self.mode)


def _require_square(m: Matrix) -> int:
    if not m.is_square:
        raise DimensionError(f"matrix is {m.rows}x{m.cols}, not square")
    return m.rows


def determinant(m: Matrix) -> Scalar:
    """Determinant of a square matrix.

    Exact mode runs fraction-free (Bareiss) elimination: every intermediate
    entry is a subdeterminant of the input, so integer matrices stay integer
    throughout and denominators never blow up.  Float mode runs elimination
    with partial pivoting.
    """
    n = _require_square(m)
    if m.mode == EXACT:
        return _bareiss_determinant(m)
    return _float_determinant(m)


def _bareiss_determinant(m: Matrix) -> Fraction:
    n = m.rows
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - aik * rowk[j]) / prev
            rowi[k] = Fraction(0)
        prev = pivot
    return Fraction(sign) * a[n - 1][n - 1]


def _float_determinant(m: Matrix) -> float:
    n = m.rows
    a = [list(map(float, m.row(i))) for i in range(n)]
    det = 1.0
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[pivot_row][k] == 0.0:
            return 0.0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f == 0.0:
                continue
            for j in range(k + 1, n):
                a[i][j] -= f * a[k][j]
            a[i][k] = 0.0
    return det


def linear_solve(
    a: Matrix, b: Sequence[Scalar], *, pivot_tol: float = DEFAULT_PIVOT_TOL
) -> tuple[Scalar, ...]:
    """Solve ``a @ x = b`` for x.

    Exact mode eliminates with exact rationals and raises
    :class:`SingularMatrixError` when a pivot column is identically zero.
    Float mode uses partial pivoting and declares singularity when the best
    available pivot falls below ``pivot_tol`` times the largest entry of
    ``a`` (threshold overridable per call).
    """
    n = _require_square(a)
    if len(b) != n:
        raise DimensionError("right-hand side length does not match matrix")
    rhs = coerce_vector(b, a.mode)
    if a.mode == EXACT:
        return _exact_solve(a, rhs)
    return _float_solve(a, rhs, pivot_tol)


def _exact_solve(a: Matrix, b: tuple[Scalar, ...]) -> tuple[Fraction, ...]:
    n = a.rows
    aug = [list(a.row(i)) + [b[i]] for i in range(n)]
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("zero pivot column in exact elimination")
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            f = aug[i][k] / pivot
            if f == 0:
                continue
            for j in range(k, n + 1):
                aug[i][j] -= f * aug[k][j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return tuple(x)


def _float_solve(a: Matrix, b: tuple[Scalar, ...], pivot_tol: float) -> tuple[float, ...]:
    n = a.rows
    scale = max((abs(x) for x in a.data), default=0.0)
    threshold = pivot_tol * max(scale, 1e-300)
    aug = [list(map(float, a.row(i))) + [float(b[i])] for i in range(n)]
    for k in range(n):
        pivot_row = max(range(k, n), key=lambda i: abs(aug[i][k]))
        if abs(aug[pivot_row][k]) < threshold:
            raise SingularMatrixError(
                f"pivot {abs(aug[pivot_row][k]):.3e} below {threshold:.3e}"
            )
        if pivot_row != k:
            aug[k], aug[pivot_row] = aug[pivot_row], aug[k]
        pivot = aug[k][k]
        for i in range(k + 1, n):
            f = aug[i][k] / pivot
            if f == 0.0:
                continue
            for j in range(k, n + 1):
                aug[i][j] -= f * aug[k][j]
    x = [0.0] * n
    for i in range(n - 1, -1, -1):
        acc = aug[i][n]
        for j in range(i + 1, n):
            acc -= aug[i][j] * x[j]
        x[i] = acc / aug[i][i]
    return tuple(x)
