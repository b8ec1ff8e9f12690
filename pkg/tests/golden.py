"""Pinned reference values shared between the module tests and the acceptance suite.

Bit strings are written spaced as sign / exponent field / tetrade / declets;
the spacing is ignored when parsed.
"""

# The four worked examples. The second declet of 0.707106 holds the digit
# group 060, value 60: the digits after the tetrade are 07106 -> 071, 060.
WORKED_EXAMPLES = [
    ("-103.2", "00 00111 1000 1111001000"),
    ("-0.0405", "00 11000 0101 1110110110"),
    ("0.707106", "10 010 0111 0001000111 0000111100"),
    ("4005012345", "10 1110011 0100 0000000101 0000001100 0101011001"),
]

# Every integer in [-15, 15]. Derivations for the two rows a reader might
# trip over: -14 stores 10 - 1.4 = 8.600, so its declet is 600 (1001011000);
# -9 stores 10 - 9 = 1, tetrade 0001.
SMALL_INTEGER_TABLE = [
    ("-15", "00 010 1000 0111110100"),
    ("-14", "00 010 1000 1001011000"),
    ("-13", "00 010 1000 1010111100"),
    ("-12", "00 010 1000 1100100000"),
    ("-11", "00 010 1000 1110000100"),
    ("-10", "00 010 1001"),
    ("-9", "00 011 0001"),
    ("-8", "00 011 0010"),
    ("-7", "00 011 0011"),
    ("-6", "00 011 0100"),
    ("-5", "00 011 0101"),
    ("-4", "00 011 0110"),
    ("-3", "00 011 0111"),
    ("-2", "00 011 1000"),
    ("-1", "00 011 1001"),
    ("0", "10"),
    ("1", "10 100 0001"),
    ("2", "10 100 0010"),
    ("3", "10 100 0011"),
    ("4", "10 100 0100"),
    ("5", "10 100 0101"),
    ("6", "10 100 0110"),
    ("7", "10 100 0111"),
    ("8", "10 100 1000"),
    ("9", "10 100 1001"),
    ("10", "10 101 0001"),
    ("11", "10 101 0001 0001100100"),
    ("12", "10 101 0001 0011001000"),
    ("13", "10 101 0001 0100101100"),
    ("14", "10 101 0001 0110010000"),
    ("15", "10 101 0001 0111110100"),
]

# (exponent, plain field, flipped field) for the ten smallest exponents.
EXPONENT_FIELD_TABLE = [
    (0, "100", "011"),
    (1, "101", "010"),
    (2, "11000", "00111"),
    (3, "11001", "00110"),
    (4, "11010", "00101"),
    (5, "11011", "00100"),
    (6, "1110000", "0001111"),
    (7, "1110001", "0001110"),
    (8, "1110010", "0001101"),
    (9, "1110011", "0001100"),
]

# A 43-bit encoding whose exponent field is 7 bits wide (run of three ones).
DECODE_WORKED_EXAMPLE = "1011100110100000000010100000011000101011001"
DECODE_WORKED_EXAMPLE_VALUE = "4005012345"
