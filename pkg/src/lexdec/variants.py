"""Self-delimiting and fixed-width forms of the core encoding.

The prefix-free form inserts a continuation bit after the tetrade and after
each declet (1: more groups follow, 0: done), so concatenated encodings split
apart again without a length prefix. The fixed-width form truncates or
zero-pads the canonical encoding to a fixed number of bits so that plain
bytewise comparison of the keys reproduces numeric order on stores that only
compare equal-length binaries.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import BitCursor, BitString
from .codec import (
    DECLET_BITS,
    DECLET_DIGITS,
    TETRADE_BITS,
    SPECIAL_ENCODINGS,
    _normalize_stored,
    complement_to_ten,
    encode,
)
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
from .errors import DecodeError, DecodeErrorKind, KeyWidthError
from .gamma import decode_exponent, encode_exponent, exponent_field_length

__all__ = [
    "FixedWidthKey",
    "encode_prefix_free",
    "decode_prefix_free_stream",
    "fixed_width_key",
]

_ONE = BitString("1")
_ZERO = BitString("0")


def encode_prefix_free(value: DecimalValue) -> BitString:
    """Canonical encoding with continuation bits in the significand.

    Special values carry no significand and are emitted unchanged; within a
    stream they are recognised by their short headers (see
    :func:`decode_prefix_free_stream` for the exact rules).
    """
    if value.kind is not Kind.FINITE:
        return SPECIAL_ENCODINGS[value.kind]
    form = value.form
    negative = form.sign is Sign.NEGATIVE
    invert = form.sign.value != form.exponent_sign.value
    bits = BitString("00" if negative else "10") + encode_exponent(form.exponent, invert).bits

    stored = complement_to_ten(form.digits) if negative else form.digits
    groups = []
    rest = stored[1:]
    for i in range(0, len(rest), DECLET_DIGITS):
        g = rest[i : i + DECLET_DIGITS]
        g += (0,) * (DECLET_DIGITS - len(g))
        groups.append(g[0] * 100 + g[1] * 10 + g[2])

    bits += BitString.from_int(stored[0], TETRADE_BITS)
    bits += _ONE if groups else _ZERO
    for index, declet in enumerate(groups):
        bits += BitString.from_int(declet, DECLET_BITS)
        bits += _ONE if index + 1 < len(groups) else _ZERO
    return bits


def decode_prefix_free_stream(bits: BitString) -> list[DecimalValue]:
    """Split a concatenation of prefix-free encodings back into values.

    Finite values, negative zero and NaN are self-delimiting anywhere in the
    stream. The two-bit headers of the remaining specials collide with the
    headers of finite values, so the decoder resolves them as follows:

    * ``11`` is read as NaN when the next bit is a 1, as positive infinity
      when the next bit is a 0 or the input ends;
    * ``00`` and ``10`` followed by anything are read as the start of a
      finite value, so negative infinity and positive zero can only stand at
      the end of a stream.
    """
    cursor = BitCursor(bits)
    values = []
    while not cursor.at_end():
        values.append(_decode_prefix_free_value(cursor))
    return values


def _decode_prefix_free_value(cursor: BitCursor) -> DecimalValue:
    header_start = cursor.position
    header = cursor.read_bits(2)
    if header == 0b01:
        return NEGATIVE_ZERO
    if header == 0b11:
        if cursor.peek_bit() == 1:
            cursor.read_bit()
            return NAN
        return POSITIVE_INFINITY
    if cursor.at_end():
        return POSITIVE_ZERO if header == 0b10 else NEGATIVE_INFINITY

    sign = Sign.NEGATIVE if header == 0b00 else Sign.POSITIVE
    field = decode_exponent(cursor)
    exponent_sign = (
        ExponentSign(-sign.value) if field.inverted else ExponentSign(sign.value)
    )
    if field.exponent == 0 and exponent_sign is ExponentSign.NEGATIVE:
        raise DecodeError(DecodeErrorKind.NEGATIVE_ZERO_EXPONENT, header_start + 2)

    digits = _decode_significand_prefix_free(cursor, sign is Sign.NEGATIVE)
    form = ScientificForm(
        sign=sign,
        exponent_sign=exponent_sign,
        exponent=field.exponent,
        digits=digits,
    )
    return DecimalValue.finite(form)


def _decode_significand_prefix_free(cursor: BitCursor, negative: bool) -> tuple[int, ...]:
    start = cursor.position
    first = cursor.read_bits(TETRADE_BITS)
    if first > 9:
        raise DecodeError(DecodeErrorKind.DIGIT_OUT_OF_RANGE, start)
    stored = [first]
    more = cursor.read_bit()
    while more:
        group_start = cursor.position
        declet = cursor.read_bits(DECLET_BITS)
        if declet > 999:
            raise DecodeError(DecodeErrorKind.DIGIT_OUT_OF_RANGE, group_start)
        stored += [declet // 100, declet // 10 % 10, declet % 10]
        more = cursor.read_bit()
    return _normalize_stored(stored, negative, start)


@dataclass(frozen=True, slots=True)
class FixedWidthKey:
    """A fixed-width, bytewise-comparable key."""

    data: bytes
    width_bits: int

    def __post_init__(self):
        if self.width_bits < 8 or self.width_bits % 8:
            raise ValueError("width_bits must be a positive multiple of 8")
        if len(self.data) * 8 != self.width_bits:
            raise ValueError("data length inconsistent with width_bits")


def fixed_width_key(value: DecimalValue, width_bits: int) -> FixedWidthKey:
    """Truncate or zero-pad the canonical encoding to exactly ``width_bits``.

    Truncation loses significand detail (neighbouring values may collapse)
    but never reorders keys. The sign header, exponent field and tetrade must
    fit entirely, otherwise a :class:`KeyWidthError` is raised: that is the
    range limit a given key width imposes.

    Padding is with trailing zeros. Leading padding would shift the sign
    header and destroy the bytewise order.
    """
    if width_bits < 8 or width_bits % 8:
        raise ValueError("width_bits must be a positive multiple of 8")
    if value.kind is Kind.FINITE:
        fixed_fields = 2 + exponent_field_length(value.form.exponent) + TETRADE_BITS
        if fixed_fields > width_bits:
            raise KeyWidthError(
                f"sign, exponent and leading digit need {fixed_fields} bits, "
                f"key width is {width_bits}"
            )
    bits = encode(value)
    if len(bits) > width_bits:
        bits = bits[:width_bits]
    else:
        bits = bits + BitString.from_int(0, width_bits - len(bits))
    data, _ = bits.to_bytes()
    return FixedWidthKey(data=data, width_bits=width_bits)
