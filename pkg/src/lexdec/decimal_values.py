"""Arbitrary-precision decimal values in canonical scientific form.

Every finite, non-zero decimal has exactly one representation here: an overall
sign, an exponent sign, a non-negative exponent, and a significand written as
its decimal digits with the first digit in 1..9 and no trailing zero digits.
Zero, the infinities and NaN are modelled as separate variants, with negative
zero kept distinct from positive zero so that both round-trip.

All values are immutable and all operations are pure functions, safe to call
concurrently and to pass between threads.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import ExponentLimitError, ParseError

__all__ = [
    "Sign",
    "ExponentSign",
    "ScientificForm",
    "Kind",
    "DecimalValue",
    "POSITIVE_ZERO",
    "NEGATIVE_ZERO",
    "POSITIVE_INFINITY",
    "NEGATIVE_INFINITY",
    "NAN",
    "DEFAULT_MAX_EXPONENT",
    "parse_decimal",
    "render_decimal",
    "compare_numeric",
]

#: Safety limit on exponent magnitude accepted by :func:`parse_decimal`.
DEFAULT_MAX_EXPONENT = 2**32


class Sign(enum.IntEnum):
    NEGATIVE = -1
    POSITIVE = 1


class ExponentSign(enum.IntEnum):
    NEGATIVE = -1
    NON_NEGATIVE = 1


@dataclass(frozen=True, slots=True)
class ScientificForm:
    """The decomposition ``sign * significand * 10 ** (exponent_sign * exponent)``.

    ``digits`` holds the significand's decimal digits, the first of which sits
    before the decimal point, so the significand is always in [1, 10).
    """

    sign: Sign
    exponent_sign: ExponentSign
    exponent: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise ValueError("significand must have at least one digit")
        if any(not isinstance(d, int) or not 0 <= d <= 9 for d in self.digits):
            raise ValueError("significand digits must be integers in 0..9")
        if not 1 <= self.digits[0] <= 9:
            raise ValueError("leading significand digit must be in 1..9")
        if len(self.digits) > 1 and self.digits[-1] == 0:
            raise ValueError("significand must not have trailing zero digits")
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        if self.exponent == 0 and self.exponent_sign is ExponentSign.NEGATIVE:
            raise ValueError("zero exponent must carry the non-negative sign")

    @property
    def signed_exponent(self) -> int:
        return int(self.exponent_sign) * self.exponent


class Kind(enum.Enum):
    FINITE = "finite"
    POSITIVE_ZERO = "positive zero"
    NEGATIVE_ZERO = "negative zero"
    POSITIVE_INFINITY = "positive infinity"
    NEGATIVE_INFINITY = "negative infinity"
    NAN = "nan"


@dataclass(frozen=True, slots=True)
class DecimalValue:
    """A finite decimal in canonical form, or one of the special values."""

    kind: Kind
    form: ScientificForm | None = None

    def __post_init__(self):
        if (self.kind is Kind.FINITE) != (self.form is not None):
            raise ValueError("exactly the finite variant carries a form")

    @classmethod
    def finite(cls, form: ScientificForm) -> "DecimalValue":
        return cls(Kind.FINITE, form)

    def is_finite(self) -> bool:
        return self.kind is Kind.FINITE

    def is_zero(self) -> bool:
        return self.kind in (Kind.POSITIVE_ZERO, Kind.NEGATIVE_ZERO)


POSITIVE_ZERO = DecimalValue(Kind.POSITIVE_ZERO)
NEGATIVE_ZERO = DecimalValue(Kind.NEGATIVE_ZERO)
POSITIVE_INFINITY = DecimalValue(Kind.POSITIVE_INFINITY)
NEGATIVE_INFINITY = DecimalValue(Kind.NEGATIVE_INFINITY)
NAN = DecimalValue(Kind.NAN)


def parse_decimal(text: str, *, max_exponent: int = DEFAULT_MAX_EXPONENT) -> DecimalValue:
    """Parse a decimal numeral into its unique canonical value.

    Grammar: ``sign? digits ('.' digits)? ([eE] sign? digits)?`` plus the
    special tokens ``INF``, ``+INF``, ``-INF`` and ``NaN`` (case-insensitive).
    All spellings of the same number yield a structurally identical value;
    zero with an explicit minus sign parses to negative zero.

    Raises :class:`ParseError` naming the offending position, or
    :class:`ExponentLimitError` when the exponent magnitude exceeds
    ``max_exponent``.
    """
    upper = text.upper()
    if upper in ("INF", "+INF"):
        return POSITIVE_INFINITY
    if upper == "-INF":
        return NEGATIVE_INFINITY
    if upper == "NAN":
        return NAN

    n = len(text)
    if n == 0:
        raise ParseError("empty input", 0)
    i = 0
    negative = False
    if text[i] in "+-":
        negative = text[i] == "-"
        i += 1

    start = i
    while i < n and text[i].isdigit() and text[i].isascii():
        i += 1
    if i == start:
        raise ParseError("expected digit", i)
    int_part = text[start:i]

    frac_part = ""
    if i < n and text[i] == ".":
        i += 1
        start = i
        while i < n and text[i].isdigit() and text[i].isascii():
            i += 1
        if i == start:
            raise ParseError("expected digit after decimal point", i)
        frac_part = text[start:i]

    exp = 0
    if i < n and text[i] in "eE":
        i += 1
        exp_negative = False
        if i < n and text[i] in "+-":
            exp_negative = text[i] == "-"
            i += 1
        start = i
        while i < n and text[i].isdigit() and text[i].isascii():
            i += 1
        if i == start:
            raise ParseError("expected digit in exponent", i)
        exp = int(text[start:i])
        if exp_negative:
            exp = -exp

    if i != n:
        raise ParseError("unexpected character", i)

    return _canonicalize(negative, int_part + frac_part, exp - len(frac_part), max_exponent)


def _canonicalize(
    negative: bool, digit_text: str, point_exp: int, max_exponent: int
) -> DecimalValue:
    # value = int(digit_text) * 10**point_exp
    stripped = digit_text.strip("0")
    if not stripped:
        return NEGATIVE_ZERO if negative else POSITIVE_ZERO
    leading = len(digit_text) - len(digit_text.lstrip("0"))
    trailing = len(digit_text) - len(digit_text.rstrip("0"))
    significant = digit_text[leading : len(digit_text) - trailing]

    signed_exponent = (len(significant) - 1) + point_exp + trailing
    if abs(signed_exponent) > max_exponent:
        raise ExponentLimitError(signed_exponent, max_exponent)

    form = ScientificForm(
        sign=Sign.NEGATIVE if negative else Sign.POSITIVE,
        exponent_sign=(
            ExponentSign.NEGATIVE if signed_exponent < 0 else ExponentSign.NON_NEGATIVE
        ),
        exponent=abs(signed_exponent),
        digits=tuple(int(c) for c in significant),
    )
    return DecimalValue.finite(form)


def render_decimal(value: DecimalValue, *, scientific_threshold: int = 20) -> str:
    """Render a value as text that :func:`parse_decimal` maps back to it.

    Finite values use plain positional notation while the signed exponent
    stays within ``scientific_threshold``, and scientific notation beyond it.
    """
    match value.kind:
        case Kind.POSITIVE_ZERO:
            return "0"
        case Kind.NEGATIVE_ZERO:
            return "-0"
        case Kind.POSITIVE_INFINITY:
            return "INF"
        case Kind.NEGATIVE_INFINITY:
            return "-INF"
        case Kind.NAN:
            return "NaN"

    form = value.form
    prefix = "-" if form.sign is Sign.NEGATIVE else ""
    digits = "".join(str(d) for d in form.digits)
    exponent = form.signed_exponent

    if abs(exponent) > scientific_threshold:
        if len(digits) == 1:
            return f"{prefix}{digits}E{exponent}"
        return f"{prefix}{digits[0]}.{digits[1:]}E{exponent}"

    if exponent >= len(digits) - 1:
        return prefix + digits + "0" * (exponent - (len(digits) - 1))
    if exponent >= 0:
        return f"{prefix}{digits[: exponent + 1]}.{digits[exponent + 1 :]}"
    return prefix + "0." + "0" * (-exponent - 1) + digits


def compare_numeric(a: DecimalValue, b: DecimalValue) -> int | None:
    """Numeric three-way comparison: -1, 0 or 1, or ``None`` if NaN is involved.

    This is the encoding-independent ordering oracle: a total order over all
    non-NaN values with negative infinity least, positive infinity greatest,
    and both zeros equal.
    """
    if a.kind is Kind.NAN or b.kind is Kind.NAN:
        return None
    ra, rb = _rank(a), _rank(b)
    if ra != rb:
        return -1 if ra < rb else 1
    if ra == 0 or a.form is None:
        return 0
    magnitude = _compare_magnitude(a.form, b.form)
    return magnitude if ra > 0 else -magnitude


def _rank(value: DecimalValue) -> int:
    # -2: -INF, -1: negative finite, 0: zeros, 1: positive finite, 2: +INF
    match value.kind:
        case Kind.NEGATIVE_INFINITY:
            return -2
        case Kind.POSITIVE_INFINITY:
            return 2
        case Kind.POSITIVE_ZERO | Kind.NEGATIVE_ZERO:
            return 0
    return -1 if value.form.sign is Sign.NEGATIVE else 1


def _compare_magnitude(a: ScientificForm, b: ScientificForm) -> int:
    if a.signed_exponent != b.signed_exponent:
        return -1 if a.signed_exponent < b.signed_exponent else 1
    for da, db in itertools.zip_longest(a.digits, b.digits, fillvalue=0):
        if da != db:
            return -1 if da < db else 1
    return 0
