"""Parsing, rendering, and the numeric comparison oracle."""

from fractions import Fraction

import pytest
from hypothesis import given

from lexdec import (
    NAN,
    NEGATIVE_INFINITY,
    NEGATIVE_ZERO,
    POSITIVE_INFINITY,
    POSITIVE_ZERO,
    DecimalValue,
    ExponentLimitError,
    ExponentSign,
    Kind,
    ParseError,
    ScientificForm,
    Sign,
    compare_numeric,
    parse_decimal,
    render_decimal,
)

from strategies import decimal_values, finite_values


def form(sign, exponent_sign, exponent, digits):
    return DecimalValue.finite(
        ScientificForm(sign, exponent_sign, exponent, tuple(digits))
    )


def as_fraction(value):
    """Exact rational magnitude oracle, independent of the comparison code."""
    f = value.form
    mantissa = int("".join(str(d) for d in f.digits))
    scale = f.signed_exponent - (len(f.digits) - 1)
    base = Fraction(mantissa) * Fraction(10) ** scale
    return base if f.sign is Sign.POSITIVE else -base


class TestParse:
    def test_worked_examples(self):
        assert parse_decimal("-103.2") == form(
            Sign.NEGATIVE, ExponentSign.NON_NEGATIVE, 2, [1, 0, 3, 2]
        )
        assert parse_decimal("-0.0405") == form(
            Sign.NEGATIVE, ExponentSign.NEGATIVE, 2, [4, 0, 5]
        )
        assert parse_decimal("0") == POSITIVE_ZERO
        assert parse_decimal("1.500") == form(
            Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, [1, 5]
        )
        assert parse_decimal("4.05E-2") == form(
            Sign.POSITIVE, ExponentSign.NEGATIVE, 2, [4, 0, 5]
        )
        assert parse_decimal("4005012345") == form(
            Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 9, [4, 0, 0, 5, 0, 1, 2, 3, 4, 5]
        )

    def test_specials(self):
        assert parse_decimal("INF") == POSITIVE_INFINITY
        assert parse_decimal("+INF") == POSITIVE_INFINITY
        assert parse_decimal("-INF") == NEGATIVE_INFINITY
        assert parse_decimal("inf") == POSITIVE_INFINITY
        assert parse_decimal("NaN") == NAN
        assert parse_decimal("nan") == NAN

    def test_signed_zeros(self):
        assert parse_decimal("-0") == NEGATIVE_ZERO
        assert parse_decimal("-0.00") == NEGATIVE_ZERO
        assert parse_decimal("-0e99") == NEGATIVE_ZERO
        assert parse_decimal("+0") == POSITIVE_ZERO
        assert parse_decimal("0.000") == POSITIVE_ZERO

    def test_canonical_uniqueness(self):
        spellings = ["103.2", "1.032e2", "0.0001032E6", "10.32e1", "1032e-1"]
        values = {parse_decimal(s) for s in spellings}
        assert len(values) == 1

    @pytest.mark.parametrize(
        "text,position",
        [
            ("", 0),
            ("abc", 0),
            (".5", 0),
            ("1.", 2),
            ("1e", 2),
            ("1e+", 3),
            ("--1", 1),
            ("1.2.3", 3),
            ("1 ", 1),
            ("-NaN", 1),
        ],
    )
    def test_errors_name_position(self, text, position):
        with pytest.raises(ParseError) as exc:
            parse_decimal(text)
        assert exc.value.position == position

    def test_exponent_limit(self):
        with pytest.raises(ExponentLimitError):
            parse_decimal("1e99999999999")
        with pytest.raises(ExponentLimitError):
            parse_decimal("1e-99999999999")
        assert parse_decimal("1e99", max_exponent=100).form.exponent == 99
        with pytest.raises(ExponentLimitError):
            parse_decimal("1e101", max_exponent=100)


class TestRender:
    def test_examples(self):
        assert render_decimal(
            form(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 9, [4, 0, 0, 5, 0, 1, 2, 3, 4, 5])
        ) == "4005012345"
        assert render_decimal(POSITIVE_ZERO) == "0"
        assert render_decimal(NEGATIVE_ZERO) == "-0"
        assert render_decimal(form(Sign.NEGATIVE, ExponentSign.NEGATIVE, 2, [4, 0, 5])) == "-0.0405"
        assert render_decimal(form(Sign.NEGATIVE, ExponentSign.NON_NEGATIVE, 2, [1, 0, 3, 2])) == "-103.2"

    def test_scientific_beyond_threshold(self):
        assert render_decimal(form(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 21, [1])) == "1E21"
        assert (
            render_decimal(form(Sign.NEGATIVE, ExponentSign.NEGATIVE, 30, [4, 0, 5]))
            == "-4.05E-30"
        )
        assert (
            render_decimal(
                form(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 21, [1]),
                scientific_threshold=25,
            )
            == "1" + "0" * 21
        )

    def test_positional_edges(self):
        assert render_decimal(form(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 1, [5])) == "50"
        assert render_decimal(form(Sign.POSITIVE, ExponentSign.NEGATIVE, 1, [5])) == "0.5"
        assert render_decimal(form(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, [5, 5])) == "5.5"

    @given(decimal_values())
    def test_parse_render_identity(self, value):
        assert parse_decimal(render_decimal(value)) == value

    @given(finite_values(max_digits=40))
    def test_identity_with_small_threshold(self, value):
        text = render_decimal(value, scientific_threshold=0)
        assert parse_decimal(text) == value


class TestCompare:
    def test_examples(self):
        assert compare_numeric(parse_decimal("-103.2"), parse_decimal("-0.0405")) == -1
        assert compare_numeric(parse_decimal("0.707106"), parse_decimal("4005012345")) == -1
        assert compare_numeric(NEGATIVE_ZERO, POSITIVE_ZERO) == 0

    def test_nan_is_incomparable(self):
        assert compare_numeric(NAN, POSITIVE_ZERO) is None
        assert compare_numeric(parse_decimal("1"), NAN) is None
        assert compare_numeric(NAN, NAN) is None

    def test_infinities(self):
        one = parse_decimal("1")
        assert compare_numeric(NEGATIVE_INFINITY, one) == -1
        assert compare_numeric(POSITIVE_INFINITY, one) == 1
        assert compare_numeric(NEGATIVE_INFINITY, POSITIVE_INFINITY) == -1
        assert compare_numeric(POSITIVE_INFINITY, POSITIVE_INFINITY) == 0

    def test_zeros_against_signed_values(self):
        assert compare_numeric(POSITIVE_ZERO, parse_decimal("0.0001")) == -1
        assert compare_numeric(NEGATIVE_ZERO, parse_decimal("-0.0001")) == 1

    @given(finite_values(max_digits=12, max_exponent=30), finite_values(max_digits=12, max_exponent=30))
    def test_against_fraction_oracle(self, a, b):
        fa, fb = as_fraction(a), as_fraction(b)
        expected = -1 if fa < fb else (1 if fa > fb else 0)
        assert compare_numeric(a, b) == expected

    @given(decimal_values())
    def test_reflexive(self, value):
        if value.kind is Kind.NAN:
            assert compare_numeric(value, value) is None
        else:
            assert compare_numeric(value, value) == 0

    def test_total_order_on_small_grid(self):
        values = [NEGATIVE_INFINITY, POSITIVE_INFINITY, POSITIVE_ZERO]
        for sign in (Sign.NEGATIVE, Sign.POSITIVE):
            for exponent in range(0, 4):
                for t in (ExponentSign.NEGATIVE, ExponentSign.NON_NEGATIVE):
                    if exponent == 0 and t is ExponentSign.NEGATIVE:
                        continue
                    for d in range(1, 10):
                        values.append(form(sign, t, exponent, [d]))
        for a in values:
            for b in values:
                ab = compare_numeric(a, b)
                assert ab == -compare_numeric(b, a)
        for a in values:
            for b in values:
                for c in values:
                    if compare_numeric(a, b) == -1 and compare_numeric(b, c) == -1:
                        assert compare_numeric(a, c) == -1


class TestInvariants:
    def test_form_validation(self):
        with pytest.raises(ValueError):
            ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, ())
        with pytest.raises(ValueError):
            ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, (0, 5))
        with pytest.raises(ValueError):
            ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, (1, 5, 0))
        with pytest.raises(ValueError):
            ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, -1, (1,))
        with pytest.raises(ValueError):
            ScientificForm(Sign.POSITIVE, ExponentSign.NEGATIVE, 0, (1,))
        # single zero-free digit and lone trailing digit rules
        ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, (1,))

    def test_value_validation(self):
        with pytest.raises(ValueError):
            DecimalValue(Kind.FINITE, None)
        with pytest.raises(ValueError):
            DecimalValue(
                Kind.POSITIVE_ZERO,
                ScientificForm(Sign.POSITIVE, ExponentSign.NON_NEGATIVE, 0, (1,)),
            )
