"""Exception types shared across the package."""


class MinPlusError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(MinPlusError):
    """Matrix operands have incompatible shapes."""


class NotSquare(MinPlusError):
    """A square matrix was required."""


class Overflow(MinPlusError, OverflowError):
    """A finite result fell outside the signed 64-bit range.

    Also an ``OverflowError`` so generic numeric handlers catch it.
    """


class TooLarge(MinPlusError):
    """Permutation enumeration refused: size exceeds the factorial guard."""


class RaggedRows(MinPlusError):
    """Parsed matrix rows have unequal lengths."""


class BadToken(MinPlusError):
    """A token is neither ``E`` nor a signed 64-bit decimal integer."""


class Empty(MinPlusError):
    """The input contains no rows."""
