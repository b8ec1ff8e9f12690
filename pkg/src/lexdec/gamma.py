"""Order-preserving variable-length integer code and the exponent field built on it.

The code for ``k >= 1`` with ``N = k.bit_length()`` is ``N-1`` one bits, a
zero, then the binary digits of ``k`` without their leading one: ``2N-1`` bits
total. Unlike the classic run-of-zeros form, these codewords sort
lexicographically in the same order as their values, and each family (plain
or bit-flipped) remains a prefix code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import BitCursor, BitString

__all__ = [
    "EXPONENT_OFFSET",
    "ExponentField",
    "modified_gamma_encode",
    "modified_gamma_decode",
    "exponent_field_length",
    "encode_exponent",
    "decode_exponent",
]

# The exponent is coded offset by 2 so the length-discriminating run is never
# empty; without it the field could not carry both its length and its sign.
EXPONENT_OFFSET = 2


@dataclass(frozen=True, slots=True)
class ExponentField:
    """An encoded exponent: the bits, the exponent, and whether bits were flipped."""

    bits: BitString
    exponent: int
    inverted: bool

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        n = (self.exponent + EXPONENT_OFFSET).bit_length()
        if len(self.bits) != 2 * n - 1:
            raise ValueError(f"field must be {2 * n - 1} bits, got {len(self.bits)}")
        if self.bits[0] != (0 if self.inverted else 1):
            raise ValueError("leading bit inconsistent with inversion flag")


def modified_gamma_encode(k: int) -> BitString:
    """Codeword for ``k >= 1``."""
    if k < 1:
        raise ValueError("modified gamma code is defined for integers >= 1")
    n = k.bit_length()
    prefix = (1 << (n - 1)) - 1
    payload = k & ((1 << (n - 1)) - 1)
    return BitString.from_int((prefix << n) | payload, 2 * n - 1)


def modified_gamma_decode(cursor: BitCursor) -> int:
    """Read one codeword, advancing the cursor exactly its length."""
    ones = 0
    while cursor.peek_bit() == 1:
        cursor.read_bit()
        ones += 1
    cursor.read_bit()  # the zero terminator; raises on truncation
    payload = cursor.read_bits(ones)
    return (1 << ones) | payload


def exponent_field_length(exponent: int) -> int:
    """Bit length of the encoded exponent field, 2*floor(log2(e+2)) + 1."""
    return 2 * (exponent + EXPONENT_OFFSET).bit_length() - 1


def encode_exponent(exponent: int, invert: bool) -> ExponentField:
    """Encode a non-negative exponent, flipping every bit when ``invert``.

    The caller decides ``invert`` (from the decimal's sign pair); flipped
    fields sort in reverse, which is what descending-exponent ranges need.
    """
    bits = modified_gamma_encode(exponent + EXPONENT_OFFSET)
    if invert:
        bits = bits.invert()
    return ExponentField(bits=bits, exponent=exponent, inverted=invert)


def decode_exponent(cursor: BitCursor) -> ExponentField:
    """Read an exponent field, un-flipping it when its leading bit is 0.

    The run of identical leading bits determines the field length: a run of
    R bits means the field spans 2R+1 bits in total.
    """
    start = cursor.position
    first = cursor.read_bit()
    run = 1
    while cursor.peek_bit() == first:
        cursor.read_bit()
        run += 1
    cursor.read_bit()  # terminator, the opposite bit
    payload = cursor.read_bits(run)
    if first == 0:
        payload ^= (1 << run) - 1
    exponent = ((1 << run) | payload) - EXPONENT_OFFSET
    bits = cursor.source[start : cursor.position]
    return ExponentField(bits=bits, exponent=exponent, inverted=first == 0)
