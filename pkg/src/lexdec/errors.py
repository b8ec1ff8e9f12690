"""Exception types shared across the package."""

from __future__ import annotations

import enum


class ParseError(ValueError):
    """Raised for text that is not a well-formed decimal numeral.

    ``position`` is the character offset of the first offending character.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentLimitError(ValueError):
    """Raised when a numeral's exponent exceeds the configured safety limit.

    The data model itself places no bound on exponents; this guard exists so
    that absurd inputs fail loudly instead of being truncated.
    """

    def __init__(self, exponent: int, limit: int):
        super().__init__(f"exponent magnitude {exponent} exceeds limit {limit}")
        self.exponent = exponent
        self.limit = limit


class KeyWidthError(ValueError):
    """Raised when a value's sign and exponent fields cannot fit a fixed-width key."""


class DecodeErrorKind(enum.Enum):
    """The closed set of ways a bit sequence can fail to decode."""

    INVALID_HEADER = "invalid header"
    NEGATIVE_ZERO_EXPONENT = "negative zero exponent"
    DIGIT_OUT_OF_RANGE = "digit out of range"
    SIGNIFICAND_OUT_OF_RANGE = "significand out of range"
    TRUNCATED_INPUT = "truncated input"


class DecodeError(Exception):
    """Raised when a bit sequence is not a valid encoding.

    ``kind`` classifies the failure; ``position`` is the bit offset at which
    the problem was detected (for truncation, the offset where the failed
    read started).
    """

    def __init__(self, kind: DecodeErrorKind, position: int, detail: str = ""):
        message = f"{kind.value} at bit {position}"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)
        self.kind = kind
        self.position = position
