"""Recurrent linear systems X(k+1) = A ⊗ X(k) over the min-plus semiring.

States are n×1 column matrices.  Iterating the map costs n² per step and
yields the whole trajectory; forming matrix powers would cost n³ per step
and is kept as a cross-check in the tests.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DimensionMismatch
from .matrix import Matrix, mul


@dataclass(frozen=True)
class Trajectory:
    """A finite prefix X(0)..X(K) of the iteration, plus stabilization info.

    ``stabilized_at`` is the least s with X(s+1) = X(s) inside the computed
    prefix, or None.  Once the map hits a fixed point every later state is
    that same value; the constructor asserts this structurally.
    """

    states: Tuple[Matrix, ...]
    stabilized_at: Optional[int]

    def __post_init__(self):
        if not self.states:
            raise ValueError("a trajectory needs at least the initial state")
        n = self.states[0].rows
        for state in self.states:
            if state.cols != 1 or state.rows != n:
                raise ValueError("every state must be an n x 1 column of the same n")
        s = self.stabilized_at
        if s is not None:
            if not 0 <= s < len(self.states) - 1:
                raise ValueError("stabilization index outside the computed prefix")
            fixed = self.states[s]
            if any(state != fixed for state in self.states[s + 1 :]):
                raise ValueError("states after the stabilization index must repeat it")


def _check_system(a: Matrix, x: Matrix) -> None:
    if a.rows != a.cols:
        raise DimensionMismatch(
            f"system matrix must be square, got {a.rows}x{a.cols}"
        )
    if x.cols != 1 or x.rows != a.cols:
        raise DimensionMismatch(
            f"state must be a {a.cols}x1 column, got {x.rows}x{x.cols}"
        )


def step(a: Matrix, x: Matrix) -> Matrix:
    """One application of the map: A ⊗ x."""
    _check_system(a, x)
    return mul(a, x)


def solve(a: Matrix, x0: Matrix, k: int) -> Trajectory:
    """Iterate X(j+1) = A ⊗ X(j) from x0, materialising X(0)..X(k).

    The trajectory always holds k+1 states; after a fixed point is reached
    the remaining entries repeat it without further multiplication.
    """
    _check_system(a, x0)
    k = operator.index(k)
    if k < 0:
        raise ValueError("step count must be non-negative")
    states = [x0]
    stabilized: Optional[int] = None
    current = x0
    for j in range(k):
        if stabilized is not None:
            states.append(current)
            continue
        nxt = mul(a, current)
        if nxt == current:
            stabilized = j
            states.append(current)
        else:
            states.append(nxt)
            current = nxt
    return Trajectory(tuple(states), stabilized)
