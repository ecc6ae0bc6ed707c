"""Bideterminant and permanent via permutation enumeration split by parity.

The bideterminant of a square matrix is the pair (delta1, delta2): the
minimum assignment sum over even permutations and over odd ones.  The
permanent is the minimum over all permutations, i.e. delta1 ⊕ delta2.
Enumeration is exact and bounded at n = 10 (about 3.6M terms).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple, Sequence, Tuple

from . import _backend
from .errors import NotSquare, Overflow, TooLarge
from .matrix import Matrix
from .semiring import EPSILON, TropicalScalar, oplus

#: Enumeration refuses above this size; 10! ≈ 3.6M terms is the practical bound.
MAX_PERMUTATION_SIZE = 10


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1} with its parity.

    ``mapping[i]`` is the image of i.  Construct through
    :func:`enumerate_permutations` or :meth:`from_mapping`; both guarantee
    the parity matches the inversion count of the mapping.
    """

    mapping: Tuple[int, ...]
    parity: Parity

    def __post_init__(self):
        n = len(self.mapping)
        if n < 1 or set(self.mapping) != set(range(n)):
            raise ValueError(f"mapping {self.mapping!r} is not a bijection on 0..n-1")

    @property
    def is_even(self) -> bool:
        return self.parity is Parity.EVEN

    @classmethod
    def from_mapping(cls, mapping: Sequence[int]) -> "Permutation":
        """Build a permutation, classifying parity by inversion count."""
        m = tuple(mapping)
        inversions = sum(
            1 for i in range(len(m)) for j in range(i + 1, len(m)) if m[i] > m[j]
        )
        return cls(m, Parity.EVEN if inversions % 2 == 0 else Parity.ODD)


class Bideterminant(NamedTuple):
    delta1: TropicalScalar
    delta2: TropicalScalar


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """Return an iterator over all n! permutations of {0..n-1} with parity.

    Uses Heap's order, where consecutive permutations differ by one
    transposition, so parity is tracked in O(1) per step instead of being
    recounted.  Refuses n > MAX_PERMUTATION_SIZE up front.
    """
    n = operator.index(n)
    if n < 1:
        raise ValueError("permutation size must be at least 1")
    if n > MAX_PERMUTATION_SIZE:
        raise TooLarge(
            f"permutation enumeration is capped at n={MAX_PERMUTATION_SIZE}, got n={n}"
        )
    return _heap_order(n)


def _heap_order(n: int) -> Iterator[Permutation]:
    mapping = list(range(n))
    even = True
    yield Permutation(tuple(mapping), Parity.EVEN)
    counts = [0] * n
    i = 0
    while i < n:
        if counts[i] < i:
            if i % 2 == 0:
                mapping[0], mapping[i] = mapping[i], mapping[0]
            else:
                c = counts[i]
                mapping[c], mapping[i] = mapping[i], mapping[c]
            even = not even
            yield Permutation(tuple(mapping), Parity.EVEN if even else Parity.ODD)
            counts[i] += 1
            i = 0
        else:
            counts[i] = 0
            i += 1


def _require_small_square(matrix: Matrix) -> int:
    if matrix.rows != matrix.cols:
        raise NotSquare(
            f"bideterminant requires a square matrix, got {matrix.rows}x{matrix.cols}"
        )
    n = matrix.rows
    if n > MAX_PERMUTATION_SIZE:
        raise TooLarge(
            f"bideterminant enumeration is capped at n={MAX_PERMUTATION_SIZE}, got n={n}"
        )
    return n


def bideterminant(matrix: Matrix) -> Bideterminant:
    """The pair (delta1, delta2) of minimum even/odd assignment sums.

    A term with any ε factor is absorbed (contributes nothing); if a parity
    class has no finite term its component is ε.  For n=1 there are no odd
    permutations, so delta2 is ε.
    """
    _require_small_square(matrix)
    d1, have1, d2, have2, ok = _backend.active.bidet_scan(matrix.values, matrix.finite_mask)
    if not ok:
        raise Overflow("bideterminant: an assignment sum left the signed 64-bit range")
    return Bideterminant(
        TropicalScalar(int(d1)) if have1 else EPSILON,
        TropicalScalar(int(d2)) if have2 else EPSILON,
    )


def permanent(matrix: Matrix) -> TropicalScalar:
    """The minimum assignment sum over all permutations: delta1 ⊕ delta2."""
    delta1, delta2 = bideterminant(matrix)
    return oplus(delta1, delta2)
