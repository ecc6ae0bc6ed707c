"""Scalar arithmetic of the min-plus (tropical) semiring.

A scalar is either a finite signed 64-bit integer or the absorbing
infinity, printed as ``E``.  ``E`` is the neutral element of ``oplus``
(minimum) and absorbs in ``otimes`` (addition).  It is kept as a distinct
tag rather than a sentinel integer, so absorption is structural and no
guard arithmetic can overflow.

The operations are bundled into :class:`Semiring` so the same axiom suite
can be run against other idempotent instantiations (the max-plus dual is
built this way in the tests); :data:`MIN_PLUS` is the shipped instance.
"""

from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .errors import BadToken, Overflow

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

_INT_TOKEN = re.compile(r"-?[0-9]+\Z")


class TropicalScalar:
    """An element of R ∪ {ε}: a finite 64-bit integer or the infinity ε.

    Instances are immutable values, freely shareable across threads.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Optional[int] = None):
        if value is not None:
            if isinstance(value, bool):
                raise TypeError("scalar value must be an integer, not bool")
            try:
                value = operator.index(value)
            except TypeError:
                raise TypeError(
                    f"scalar value must be an integer or None, got {type(value).__name__}"
                ) from None
            if not INT64_MIN <= value <= INT64_MAX:
                raise Overflow(f"{value} is outside the signed 64-bit range")
        self._value = value

    @property
    def is_epsilon(self) -> bool:
        return self._value is None

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> Optional[int]:
        """The finite payload, or None for ε."""
        return self._value

    @classmethod
    def parse(cls, token: str) -> "TropicalScalar":
        """Parse the text form: ``E`` (case-sensitive) or a signed decimal integer."""
        if token == "E":
            return EPSILON
        if _INT_TOKEN.match(token):
            value = int(token)
            if INT64_MIN <= value <= INT64_MAX:
                return cls(value)
            raise BadToken(f"integer {token} is outside the signed 64-bit range")
        raise BadToken(f"expected E or a signed decimal integer, got {token!r}")

    def __str__(self) -> str:
        return "E" if self._value is None else str(self._value)

    def __repr__(self) -> str:
        return f"TropicalScalar({self._value!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TropicalScalar):
            return self._value == other._value
        return NotImplemented

    def __hash__(self) -> int:
        return hash((TropicalScalar, self._value))


#: The ⊕-neutral, ⊗-absorbing infinity.
EPSILON = TropicalScalar(None)
#: The ⊗-neutral element (finite 0).
ONE = TropicalScalar(0)

ScalarLike = Union[TropicalScalar, int, None]


def as_scalar(x: ScalarLike) -> TropicalScalar:
    """Coerce an int, None (meaning ε), or scalar to a TropicalScalar."""
    if isinstance(x, TropicalScalar):
        return x
    if x is None:
        return EPSILON
    return TropicalScalar(x)


def oplus(a: ScalarLike, b: ScalarLike) -> TropicalScalar:
    """Tropical sum: the minimum, with ε acting as +∞ (neutral)."""
    a = as_scalar(a)
    b = as_scalar(b)
    if a._value is None:
        return b
    if b._value is None:
        return a
    return a if a._value <= b._value else b


def otimes(a: ScalarLike, b: ScalarLike) -> TropicalScalar:
    """Tropical product: checked integer addition, with ε absorbing.

    Raises Overflow when a finite sum leaves the signed 64-bit range;
    it never wraps.
    """
    a = as_scalar(a)
    b = as_scalar(b)
    if a._value is None or b._value is None:
        return EPSILON
    total = a._value + b._value
    if not INT64_MIN <= total <= INT64_MAX:
        raise Overflow(
            f"scalar product {a._value} + {b._value} is outside the signed 64-bit range"
        )
    return TropicalScalar(total)


def zero() -> TropicalScalar:
    """The neutral element of ⊕ (and absorber of ⊗): ε."""
    return EPSILON


def one() -> TropicalScalar:
    """The neutral element of ⊗: finite 0."""
    return ONE


ScalarOp = Callable[[TropicalScalar, TropicalScalar], TropicalScalar]


@dataclass(frozen=True)
class Semiring:
    """An idempotent semiring over :class:`TropicalScalar` values.

    ``plus`` must be idempotent, commutative, and associative with ``zero``
    neutral; ``times`` associative with ``one`` neutral and ``zero``
    absorbing, distributing over ``plus`` on both sides.
    """

    name: str
    plus: ScalarOp
    times: ScalarOp
    zero: TropicalScalar
    one: TropicalScalar


#: The shipped concrete instance: ⊕ = min, ⊗ = +, ε = +∞, e = 0.
MIN_PLUS = Semiring("min-plus", oplus, otimes, EPSILON, ONE)
