"""Immutable bit sequences, read cursors, and the two bit-string total orders.

A :class:`BitString` is an ordered sequence of bits with no implicit padding;
the logical length in bits always travels with the value. Two total orders are
provided as module functions:

* :func:`lex_compare`: full lexicographic order. Bits are compared left to
  right, and a sequence that is a strict prefix of another sorts first.
* :func:`shortlex_compare`: order by length first, then lexicographically
  within a length.

Byte packing is most-significant-bit first with trailing zero padding, so a
plain bytewise comparison of equal-length packed strings agrees with
:func:`lex_compare`.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DecodeError, DecodeErrorKind

__all__ = [
    "BitString",
    "BitCursor",
    "lex_compare",
    "shortlex_compare",
]


class BitString:
    """An immutable sequence of bits; index 0 is the leftmost bit.

    Instances are hashable, comparable for equality, and safe to share
    between threads. Concatenation with ``+`` returns a new value.
    """

    __slots__ = ("_value", "_length")

    def __init__(self, text: str = ""):
        """Build from a string of ``0``/``1`` characters.

        Spaces and underscores are ignored so that grouped renderings can be
        pasted back in unchanged.
        """
        value = 0
        length = 0
        for ch in text:
            if ch in " _":
                continue
            if ch == "1":
                value = (value << 1) | 1
            elif ch == "0":
                value = value << 1
            else:
                raise ValueError(f"invalid bit character {ch!r}")
            length += 1
        self._value = value
        self._length = length

    @classmethod
    def _raw(cls, value: int, length: int) -> "BitString":
        bs = object.__new__(cls)
        bs._value = value
        bs._length = length
        return bs

    @classmethod
    def from_int(cls, value: int, width: int) -> "BitString":
        """The ``width``-bit natural binary representation of ``value``."""
        if width < 0:
            raise ValueError("width must be non-negative")
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        return cls._raw(value, width)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitString":
        """Build from an iterable of 0/1 integers."""
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"invalid bit {b!r}")
            value = (value << 1) | b
            length += 1
        return cls._raw(value, length)

    @classmethod
    def from_bytes(cls, data: bytes, bit_length: int) -> "BitString":
        """Inverse of :meth:`to_bytes`.

        ``bit_length`` must not exceed ``8 * len(data)`` and every padding bit
        beyond it must be zero; otherwise the packed form is malformed.
        """
        if bit_length < 0:
            raise ValueError("bit_length must be non-negative")
        pad = 8 * len(data) - bit_length
        if pad < 0:
            raise ValueError(
                f"bit_length {bit_length} exceeds {8 * len(data)} available bits"
            )
        value = int.from_bytes(data, "big")
        if value & ((1 << pad) - 1):
            raise ValueError("nonzero padding bits")
        return cls._raw(value >> pad, bit_length)

    def to_bytes(self) -> tuple[bytes, int]:
        """Pack MSB-first into bytes, zero-padding the final partial byte.

        Returns ``(data, bit_length)``; the length is needed to undo the
        padding, which is not self-delimiting.
        """
        nbytes = (self._length + 7) // 8
        padded = self._value << (nbytes * 8 - self._length)
        return padded.to_bytes(nbytes, "big"), self._length

    def to_text(self) -> str:
        """Render as ``0``/``1`` characters."""
        if self._length == 0:
            return ""
        return format(self._value, f"0{self._length}b")

    def startswith(self, prefix: "BitString") -> bool:
        if prefix._length > self._length:
            return False
        return self._value >> (self._length - prefix._length) == prefix._value

    def strip_trailing_zeros(self) -> "BitString":
        """Drop every trailing zero bit (the empty string if all bits are zero)."""
        if self._value == 0:
            return BitString._raw(0, 0)
        trailing = (self._value & -self._value).bit_length() - 1
        return BitString._raw(self._value >> trailing, self._length - trailing)

    def invert(self) -> "BitString":
        """Flip every bit."""
        return BitString._raw(self._value ^ ((1 << self._length) - 1), self._length)

    def __len__(self) -> int:
        return self._length

    def __bool__(self) -> bool:
        return self._length > 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._length == other._length and self._value == other._value

    def __hash__(self) -> int:
        return hash((self._length, self._value))

    def __iter__(self) -> Iterator[int]:
        for i in range(self._length - 1, -1, -1):
            yield (self._value >> i) & 1

    def __getitem__(self, index):
        if isinstance(index, slice):
            start, stop, step = index.indices(self._length)
            if step != 1:
                raise ValueError("only contiguous slices are supported")
            if stop <= start:
                return BitString._raw(0, 0)
            length = stop - start
            value = (self._value >> (self._length - stop)) & ((1 << length) - 1)
            return BitString._raw(value, length)
        if index < 0:
            index += self._length
        if not 0 <= index < self._length:
            raise IndexError("bit index out of range")
        return (self._value >> (self._length - index - 1)) & 1

    def __add__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString._raw(
            (self._value << other._length) | other._value,
            self._length + other._length,
        )

    def __repr__(self) -> str:
        return f"BitString({self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


def lex_compare(a: BitString, b: BitString) -> int:
    """Full lexicographic comparison; a strict prefix sorts before its extensions.

    Returns -1, 0 or 1.
    """
    width = max(a._length, b._length)
    av = a._value << (width - a._length)
    bv = b._value << (width - b._length)
    if av != bv:
        return -1 if av < bv else 1
    if a._length != b._length:
        return -1 if a._length < b._length else 1
    return 0


def shortlex_compare(a: BitString, b: BitString) -> int:
    """Compare by length first, then lexicographically within a length."""
    if a._length != b._length:
        return -1 if a._length < b._length else 1
    if a._value != b._value:
        return -1 if a._value < b._value else 1
    return 0


class BitCursor:
    """A read position over a :class:`BitString`.

    Cursors are cheap, independent per reader, and mutate only their own
    position. Reads past the end raise a truncation :class:`DecodeError`
    carrying the position at which the failed read started.
    """

    __slots__ = ("source", "position")

    def __init__(self, source: BitString, position: int = 0):
        if not 0 <= position <= len(source):
            raise ValueError("cursor position out of range")
        self.source = source
        self.position = position

    @property
    def remaining(self) -> int:
        return len(self.source) - self.position

    def at_end(self) -> bool:
        return self.position >= len(self.source)

    def peek_bit(self) -> int | None:
        """The next bit without advancing, or ``None`` at the end."""
        if self.at_end():
            return None
        return self.source[self.position]

    def read_bit(self) -> int:
        if self.at_end():
            raise DecodeError(DecodeErrorKind.TRUNCATED_INPUT, self.position)
        bit = self.source[self.position]
        self.position += 1
        return bit

    def read_bits(self, count: int) -> int:
        """Read ``count`` bits as an unsigned integer, MSB first."""
        if count < 0:
            raise ValueError("count must be non-negative")
        if count > self.remaining:
            raise DecodeError(DecodeErrorKind.TRUNCATED_INPUT, self.position)
        if count == 0:
            return 0
        value = self.source[self.position : self.position + count]._value
        self.position += count
        return value
