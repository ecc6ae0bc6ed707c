"""Kernel backend selection.

The hot kernels (matrix product, bideterminant scan) exist twice: jitted
with numba and as pure numpy.  Set ``MINPLUS_BACKEND=numpy`` to force the
fallback, ``=numba`` to require the jitted kernels, or leave it unset
(``auto``) to use numba whenever it is importable.  The choice is read
once, at import time.
"""

from __future__ import annotations

import os

ENV_VAR = "MINPLUS_BACKEND"


def load_backend(choice: str | None = None):
    """Return the kernel module for *choice* (environment variable when None)."""
    if choice is None:
        choice = os.environ.get(ENV_VAR, "auto")
    choice = choice.strip().lower() or "auto"
    if choice == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    if choice == "numba":
        try:
            from . import _kernels_numba
        except ImportError as exc:
            raise ImportError(
                f"{ENV_VAR}=numba but numba is not installed; "
                "pip install minplus[jit] or unset the variable"
            ) from exc
        return _kernels_numba
    if choice == "auto":
        try:
            from . import _kernels_numba

            return _kernels_numba
        except ImportError:
            from . import _kernels_numpy

            return _kernels_numpy
    raise ValueError(f"{ENV_VAR} must be 'numba', 'numpy', or 'auto', got {choice!r}")


active = load_backend()


def backend_name() -> str:
    """Name of the kernel backend in use: 'numba' or 'numpy'."""
    return active.NAME
