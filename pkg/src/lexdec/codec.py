"""The canonical encoder and decoder.

Layout of a finite value, left to right:

* a 2-bit sign header: ``00`` negative, ``10`` positive;
* the exponent field, bit-flipped exactly when the overall sign and the
  exponent sign differ, so that larger numbers always get lexicographically
  larger encodings;
* the significand: the leading digit on 4 bits (tetrade), then the remaining
  digits in groups of three, each group on 10 bits (declet), the last group
  zero-padded to three digits. A negative value stores the digits of
  ``10 - m`` instead of ``m``, which reverses the significand order exactly
  where it must.

Special values: ``00`` negative infinity, ``01`` negative zero, ``10``
positive zero, ``11`` positive infinity, ``111`` NaN. Sorting the encodings
with :func:`lexdec.bits.lex_compare` therefore matches numeric order, with
negative zero immediately below positive zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .bits import BitCursor, BitString
from .decimal_values import (
    NAN,
    NEGATIVE_INFINITY,
    NEGATIVE_ZERO,
    POSITIVE_INFINITY,
    POSITIVE_ZERO,
    DecimalValue,
    ExponentSign,
    Kind,
    ScientificForm,
    Sign,
)
from .errors import DecodeError, DecodeErrorKind
from .gamma import decode_exponent, encode_exponent, exponent_field_length

__all__ = [
    "Variant",
    "CodecOptions",
    "DecodeError",
    "DecodeErrorKind",
    "encode",
    "decode",
    "encode_significand",
    "decode_significand",
    "complement_to_ten",
    "canonical_bit_length",
    "SPECIAL_ENCODINGS",
]

TETRADE_BITS = 4
DECLET_BITS = 10
DECLET_DIGITS = 3

SPECIAL_ENCODINGS: dict[Kind, BitString] = {
    Kind.NEGATIVE_INFINITY: BitString("00"),
    Kind.NEGATIVE_ZERO: BitString("01"),
    Kind.POSITIVE_ZERO: BitString("10"),
    Kind.POSITIVE_INFINITY: BitString("11"),
    Kind.NAN: BitString("111"),
}

_HEADER_NEGATIVE = 0b00
_HEADER_NEGATIVE_ZERO = 0b01
_HEADER_POSITIVE = 0b10
_HEADER_POSITIVE_OR_INF = 0b11


class Variant(enum.Enum):
    CANONICAL = "canonical"
    PREFIX_FREE = "prefix-free"
    FIXED_WIDTH = "fixed-width"


@dataclass(frozen=True, slots=True)
class CodecOptions:
    """Variant selection for the command-line tool and embedding code."""

    trim_trailing_zero_bits: bool = False
    variant: Variant = Variant.CANONICAL
    width_bits: int | None = None

    def __post_init__(self):
        if self.variant is Variant.FIXED_WIDTH:
            if self.width_bits is None or self.width_bits < 8:
                raise ValueError("fixed-width variant needs width_bits >= 8")
        elif self.width_bits is not None:
            raise ValueError("width_bits only applies to the fixed-width variant")


def complement_to_ten(digits: Sequence[int]) -> tuple[int, ...]:
    """Digit sequence of ``10 - m``, same digit count as ``m``; self-inverse.

    Nines' complement on every digit except the last, tens' complement on the
    last. The input's last digit must be non-zero (canonical significands
    never end in zero), which keeps the operation an involution.
    """
    ds = tuple(digits)
    if not ds or not 1 <= ds[-1] <= 9:
        raise ValueError("last digit must be in 1..9")
    return tuple(9 - d for d in ds[:-1]) + (10 - ds[-1],)


def encode_significand(digits: Sequence[int], negative: bool) -> BitString:
    """Pack canonical significand digits into a tetrade plus declets.

    For negative values the digits of ``10 - m`` are stored instead (their
    leading digit may then be zero).
    """
    ds = complement_to_ten(digits) if negative else tuple(digits)
    bits = BitString.from_int(ds[0], TETRADE_BITS)
    rest = ds[1:]
    for i in range(0, len(rest), DECLET_DIGITS):
        group = rest[i : i + DECLET_DIGITS]
        group += (0,) * (DECLET_DIGITS - len(group))
        bits += BitString.from_int(group[0] * 100 + group[1] * 10 + group[2], DECLET_BITS)
    return bits


def encode(value: DecimalValue, *, trim: bool = False) -> BitString:
    """Encode any value; with ``trim``, trailing zero bits of finite
    encodings are removed (the decoder re-pads them)."""
    if value.kind is not Kind.FINITE:
        return SPECIAL_ENCODINGS[value.kind]
    form = value.form
    negative = form.sign is Sign.NEGATIVE
    invert = form.sign.value != form.exponent_sign.value
    bits = (
        BitString("00" if negative else "10")
        + encode_exponent(form.exponent, invert).bits
        + encode_significand(form.digits, negative)
    )
    if trim:
        # Safe: the significand always contains a one bit, so the header and
        # exponent field are never touched.
        bits = bits.strip_trailing_zeros()
    return bits


def decode(bits: BitString, *, trim: bool = False) -> DecimalValue:
    """Exact inverse of :func:`encode` over its image; consumes the whole input.

    With ``trim`` the last tetrade or declet may arrive shortened and is
    zero-extended before reading. Without it, only an all-zero partial tail
    is tolerated (byte-alignment padding); any other mid-field end raises a
    truncation error. Raises :class:`DecodeError` for anything outside the
    valid forms.
    """
    cursor = BitCursor(bits)
    header = cursor.read_bits(2)

    if header == _HEADER_NEGATIVE_ZERO:
        if cursor.at_end():
            return NEGATIVE_ZERO
        raise DecodeError(DecodeErrorKind.INVALID_HEADER, 0)
    if header == _HEADER_POSITIVE_OR_INF:
        if cursor.at_end():
            return POSITIVE_INFINITY
        if len(bits) == 3 and bits[2] == 1:
            return NAN
        raise DecodeError(DecodeErrorKind.INVALID_HEADER, 0)
    if cursor.at_end():
        return POSITIVE_ZERO if header == _HEADER_POSITIVE else NEGATIVE_INFINITY

    sign = Sign.NEGATIVE if header == _HEADER_NEGATIVE else Sign.POSITIVE
    field = decode_exponent(cursor)
    exponent_sign = (
        ExponentSign(-sign.value) if field.inverted else ExponentSign(sign.value)
    )
    if field.exponent == 0 and exponent_sign is ExponentSign.NEGATIVE:
        raise DecodeError(DecodeErrorKind.NEGATIVE_ZERO_EXPONENT, 2)

    digits = decode_significand(cursor, negative=sign is Sign.NEGATIVE, repad=trim)
    form = ScientificForm(
        sign=sign,
        exponent_sign=exponent_sign,
        exponent=field.exponent,
        digits=digits,
    )
    return DecimalValue.finite(form)


def decode_significand(
    cursor: BitCursor, negative: bool, *, repad: bool = False
) -> tuple[int, ...]:
    """Read the significand through the end of the input and re-normalize it.

    Declet zero-padding is stripped; for negative values the complement to
    ten is taken back. Validates every tetrade/declet range and that the
    decoded significand lies in [1, 10).
    """
    start = cursor.position
    if cursor.at_end():
        raise DecodeError(DecodeErrorKind.TRUNCATED_INPUT, start)

    if repad:
        width = min(TETRADE_BITS, cursor.remaining)
        first = cursor.read_bits(width) << (TETRADE_BITS - width)
    else:
        first = cursor.read_bits(TETRADE_BITS)
    if first > 9:
        raise DecodeError(DecodeErrorKind.DIGIT_OUT_OF_RANGE, start)

    stored = [first]
    while not cursor.at_end():
        group_start = cursor.position
        if repad:
            width = min(DECLET_BITS, cursor.remaining)
            declet = cursor.read_bits(width) << (DECLET_BITS - width)
        elif cursor.remaining < DECLET_BITS:
            # A short all-zero tail is byte-alignment padding; anything else
            # means the input was cut mid-declet.
            if cursor.read_bits(cursor.remaining) != 0:
                raise DecodeError(DecodeErrorKind.TRUNCATED_INPUT, group_start)
            break
        else:
            declet = cursor.read_bits(DECLET_BITS)
        if declet > 999:
            raise DecodeError(DecodeErrorKind.DIGIT_OUT_OF_RANGE, group_start)
        stored += [declet // 100, declet // 10 % 10, declet % 10]

    return _normalize_stored(stored, negative, start)


def _normalize_stored(stored: list[int], negative: bool, position: int) -> tuple[int, ...]:
    while len(stored) > 1 and stored[-1] == 0:
        stored.pop()
    if negative:
        # Stored value must be in (0, 9] so that 10 - stored is in [1, 10).
        if stored == [0] or (stored[0] == 9 and len(stored) > 1):
            raise DecodeError(DecodeErrorKind.SIGNIFICAND_OUT_OF_RANGE, position)
        return complement_to_ten(stored)
    if stored[0] == 0:
        raise DecodeError(DecodeErrorKind.SIGNIFICAND_OUT_OF_RANGE, position)
    return tuple(stored)


def canonical_bit_length(value: DecimalValue) -> int:
    """Length of the untrimmed encoding without building it.

    For finite values this is ``2 + (2*floor(log2(e+2)) + 1) + 4 + 10*ceil((n-1)/3)``
    with ``n`` the significand digit count.
    """
    if value.kind is not Kind.FINITE:
        return len(SPECIAL_ENCODINGS[value.kind])
    form = value.form
    declets = (len(form.digits) - 1 + DECLET_DIGITS - 1) // DECLET_DIGITS
    return 2 + exponent_field_length(form.exponent) + TETRADE_BITS + DECLET_BITS * declets
