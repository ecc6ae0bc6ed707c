"""Exact linear algebra over the min-plus (tropical) semiring.

Scalars are finite 64-bit integers or the absorbing infinity ε; ⊕ is
minimum and ⊗ is checked addition.  The package provides dense matrices
with sums, products, scalar products and powers, the bideterminant and
permanent via parity-split permutation enumeration, solvers for recurrent
systems X(k+1) = A ⊗ X(k), a text/JSON serialisation, and the ``minplus``
command-line front-end.

Hot kernels run through numba when available; set ``MINPLUS_BACKEND=numpy``
for the pure-numpy fallback.
"""

from ._backend import backend_name
from .bidet import (
    MAX_PERMUTATION_SIZE,
    Bideterminant,
    Parity,
    Permutation,
    bideterminant,
    enumerate_permutations,
    permanent,
)
from .errors import (
    BadToken,
    DimensionMismatch,
    Empty,
    MinPlusError,
    NotSquare,
    Overflow,
    RaggedRows,
    TooLarge,
)
from .io import MatrixDocument, format_matrix, load_matrix, matrix_json_obj, parse_matrix
from .matrix import (
    Matrix,
    add,
    identity,
    mul,
    power,
    scalar_mul,
    stabilized_power,
    zero_matrix,
)
from .recurrence import Trajectory, solve, step
from .semiring import (
    EPSILON,
    INT64_MAX,
    INT64_MIN,
    MIN_PLUS,
    ONE,
    Semiring,
    TropicalScalar,
    as_scalar,
    one,
    oplus,
    otimes,
    zero,
)

__version__ = "0.1.0"

__all__ = [
    "BadToken",
    "Bideterminant",
    "DimensionMismatch",
    "EPSILON",
    "Empty",
    "INT64_MAX",
    "INT64_MIN",
    "MAX_PERMUTATION_SIZE",
    "MIN_PLUS",
    "Matrix",
    "MatrixDocument",
    "MinPlusError",
    "NotSquare",
    "ONE",
    "Overflow",
    "Parity",
    "Permutation",
    "RaggedRows",
    "Semiring",
    "TooLarge",
    "Trajectory",
    "TropicalScalar",
    "add",
    "as_scalar",
    "backend_name",
    "bideterminant",
    "enumerate_permutations",
    "format_matrix",
    "identity",
    "load_matrix",
    "matrix_json_obj",
    "mul",
    "one",
    "oplus",
    "otimes",
    "parse_matrix",
    "permanent",
    "power",
    "scalar_mul",
    "solve",
    "stabilized_power",
    "step",
    "zero",
    "zero_matrix",
]
