"""lexdec: a lossless, order-preserving binary encoding for decimals.

Any decimal, arbitrarily large, small or precise, is encoded into a bit
string such that comparing two encodings lexicographically (with the
convention that a strict prefix sorts first) gives the same answer as
comparing the numbers. Decoding loses nothing, including the distinction
between positive and negative zero.
"""

from .bits import BitCursor, BitString, lex_compare, shortlex_compare
from .codec import (
    CodecOptions,
    Variant,
    canonical_bit_length,
    complement_to_ten,
    decode,
    decode_significand,
    encode,
    encode_significand,
)
from .decimal_values import (
    DEFAULT_MAX_EXPONENT,
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
    compare_numeric,
    parse_decimal,
    render_decimal,
)
from .errors import (
    DecodeError,
    DecodeErrorKind,
    ExponentLimitError,
    KeyWidthError,
    ParseError,
)
from .gamma import (
    ExponentField,
    decode_exponent,
    encode_exponent,
    exponent_field_length,
    modified_gamma_decode,
    modified_gamma_encode,
)
from .variants import (
    FixedWidthKey,
    decode_prefix_free_stream,
    encode_prefix_free,
    fixed_width_key,
)

__version__ = "0.1.0"

__all__ = [
    "BitCursor",
    "BitString",
    "CodecOptions",
    "DEFAULT_MAX_EXPONENT",
    "DecimalValue",
    "DecodeError",
    "DecodeErrorKind",
    "ExponentField",
    "ExponentLimitError",
    "ExponentSign",
    "FixedWidthKey",
    "Kind",
    "KeyWidthError",
    "NAN",
    "NEGATIVE_INFINITY",
    "NEGATIVE_ZERO",
    "POSITIVE_INFINITY",
    "POSITIVE_ZERO",
    "ParseError",
    "ScientificForm",
    "Sign",
    "Variant",
    "canonical_bit_length",
    "compare_numeric",
    "complement_to_ten",
    "decode",
    "decode_exponent",
    "decode_prefix_free_stream",
    "decode_significand",
    "encode",
    "encode_exponent",
    "encode_prefix_free",
    "encode_significand",
    "exponent_field_length",
    "fixed_width_key",
    "lex_compare",
    "modified_gamma_decode",
    "modified_gamma_encode",
    "parse_decimal",
    "render_decimal",
    "shortlex_compare",
]
