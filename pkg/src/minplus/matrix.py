"""Dense matrices over tropical scalars and their min-plus operations.

A :class:`Matrix` stores an int64 value array plus a boolean finite-mask;
masked-out entries are ε and their stored value is normalised to 0, so
equality is exact array equality.  Matrices are immutable and all
operations are pure functions.
"""

from __future__ import annotations

import operator
from typing import List, Optional, Tuple

import numpy as np

from . import _backend
from .errors import DimensionMismatch, NotSquare, Overflow
from .semiring import EPSILON, INT64_MAX, INT64_MIN, ScalarLike, TropicalScalar, as_scalar


class Matrix:
    """An immutable m×n matrix of tropical scalars."""

    __slots__ = ("_values", "_finite")

    def __init__(self, values, finite_mask):
        try:
            values = np.array(values, dtype=np.int64)
        except OverflowError as exc:
            raise Overflow(str(exc)) from None
        finite = np.array(finite_mask, dtype=bool)
        if values.ndim != 2:
            raise ValueError("values must be two-dimensional")
        if values.shape != finite.shape:
            raise ValueError("values and finite_mask shapes differ")
        if min(values.shape) < 1:
            raise ValueError("matrix dimensions must be at least 1x1")
        values[~finite] = 0
        values.flags.writeable = False
        finite.flags.writeable = False
        self._values = values
        self._finite = finite

    @classmethod
    def _wrap(cls, values: np.ndarray, finite: np.ndarray) -> "Matrix":
        # trusted canonical arrays from our own kernels; adopted, not copied
        obj = cls.__new__(cls)
        values.flags.writeable = False
        finite.flags.writeable = False
        obj._values = values
        obj._finite = finite
        return obj

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        """Build from nested values: ints, TropicalScalar, or None for ε."""
        grid = [[as_scalar(x) for x in row] for row in rows]
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise ValueError("rows have unequal lengths")
        values = np.array(
            [[s.value if s.is_finite else 0 for s in row] for row in grid], dtype=np.int64
        )
        finite = np.array([[s.is_finite for s in row] for row in grid], dtype=bool)
        return cls._wrap(values, finite)

    @property
    def rows(self) -> int:
        return self._values.shape[0]

    @property
    def cols(self) -> int:
        return self._values.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._values.shape

    @property
    def values(self) -> np.ndarray:
        """Read-only int64 entries; 0 wherever the finite mask is False."""
        return self._values

    @property
    def finite_mask(self) -> np.ndarray:
        """Read-only bool mask: True for finite entries, False for ε."""
        return self._finite

    def entry(self, i: int, j: int) -> TropicalScalar:
        if self._finite[i, j]:
            return TropicalScalar(int(self._values[i, j]))
        return EPSILON

    def to_rows(self) -> List[List[TropicalScalar]]:
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix._wrap(self._values.T.copy(), self._finite.T.copy())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Matrix):
            return np.array_equal(self._values, other._values) and np.array_equal(
                self._finite, other._finite
            )
        return NotImplemented

    def __repr__(self) -> str:
        return f"<Matrix {self.rows}x{self.cols}>"


def add(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise tropical sum (minimum); shapes must match."""
    if a.shape != b.shape:
        raise DimensionMismatch(
            f"cannot add a {a.rows}x{a.cols} matrix and a {b.rows}x{b.cols} matrix"
        )
    av, am = a.values, a.finite_mask
    bv, bm = b.values, b.finite_mask
    finite = am | bm
    # INT64_MAX stands in for ε during the min; the mask keeps the truth
    values = np.minimum(np.where(am, av, INT64_MAX), np.where(bm, bv, INT64_MAX))
    return Matrix._wrap(np.where(finite, values, 0), finite)


def mul(a: Matrix, b: Matrix) -> Matrix:
    """Tropical matrix product: C_ik = min_j (A_ij + B_jk), ε absorbing per term."""
    if a.cols != b.rows:
        raise DimensionMismatch(
            f"cannot multiply a {a.rows}x{a.cols} matrix by a {b.rows}x{b.cols} matrix"
        )
    cv, cm, ok = _backend.active.matmul(a.values, a.finite_mask, b.values, b.finite_mask)
    if not ok:
        raise Overflow("matrix product: a term left the signed 64-bit range")
    return Matrix._wrap(cv, cm)


def scalar_mul(alpha: ScalarLike, a: Matrix) -> Matrix:
    """Tropical scalar product: alpha added to every finite entry."""
    alpha = as_scalar(alpha)
    if alpha.is_epsilon:
        return zero_matrix(a.rows, a.cols)
    shift = alpha.value
    av, am = a.values, a.finite_mask
    if shift > 0:
        if bool((am & (av > INT64_MAX - shift)).any()):
            raise Overflow(
                f"scalar product by {shift}: an entry left the signed 64-bit range"
            )
    elif shift < 0:
        if bool((am & (av < INT64_MIN - shift)).any()):
            raise Overflow(
                f"scalar product by {shift}: an entry left the signed 64-bit range"
            )
    values = np.where(am, av + np.int64(shift), 0)
    return Matrix._wrap(values, am.copy())


def identity(n: int) -> Matrix:
    """The n×n tropical identity: finite 0 on the diagonal, ε elsewhere."""
    n = operator.index(n)
    if n < 1:
        raise ValueError("identity size must be at least 1")
    return Matrix._wrap(np.zeros((n, n), dtype=np.int64), np.eye(n, dtype=bool))


def zero_matrix(m: int, n: int) -> Matrix:
    """The m×n all-ε matrix: neutral for add, absorbing for mul."""
    m = operator.index(m)
    n = operator.index(n)
    if m < 1 or n < 1:
        raise ValueError("zero matrix dimensions must be at least 1")
    return Matrix._wrap(np.zeros((m, n), dtype=np.int64), np.zeros((m, n), dtype=bool))


def power(a: Matrix, k: int) -> Matrix:
    """The k-th tropical power of a square matrix; k=0 gives the identity."""
    if a.rows != a.cols:
        raise NotSquare(f"power requires a square matrix, got {a.rows}x{a.cols}")
    k = operator.index(k)
    if k < 0:
        raise ValueError("exponent must be non-negative")
    result = identity(a.rows)
    for _ in range(k):
        result = mul(result, a)
    return result


def stabilized_power(a: Matrix, max_k: int = 64) -> Tuple[Matrix, Optional[int]]:
    """Iterate powers of a square matrix until two consecutive ones agree.

    Returns (last power, k) where k is the least index with the (k+1)-th
    power equal to the k-th, or (the max_k-th power, None) when no such
    index shows up while computing powers 1..max_k.
    """
    if a.rows != a.cols:
        raise NotSquare(f"stabilized power requires a square matrix, got {a.rows}x{a.cols}")
    max_k = operator.index(max_k)
    if max_k < 1:
        raise ValueError("max_k must be at least 1")
    current = a
    for k in range(1, max_k):
        nxt = mul(current, a)
        if nxt == current:
            return current, k
        current = nxt
    return current, None
