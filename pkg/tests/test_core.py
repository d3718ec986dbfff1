from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from susa.core import (
    NotationConfig,
    Ordering,
    SexDigits,
    binop,
    compare,
    divide,
    format_sex,
    is_regular,
    parse,
    reciprocal_digits,
    reciprocal_exact,
    sign,
    square,
    terminating_places,
    to_digits,
    to_significant,
)
from susa.errors import DivisionByZero, MalformedDigit, NotationSyntaxError, ZeroInput

from conftest import SMT1_REVERSE, rationals
from oracles import cross_compare, five_smooth, long_division_digits, positional_value, render


@pytest.mark.parametrize(
    "text, value",
    [
        ("1;25", F(17, 12)),
        ("0", F(0)),
        ("2,36;15", positional_value("2,36;15")),
        ("0;0,45", F(1, 80)),
        ("31;15", F(125, 4)),
        ("9;10,2,46,40", F(11881, 1296)),
        ("-0;30", F(-1, 2)),
        ("12.5", F(25, 2)),
        ("2500", F(2500)),
        ("  1,20 ", F(80)),
    ],
)
def test_parse(text, value):
    assert parse(text) == value


def test_parse_value_of_positional_oracle():
    assert positional_value("2,36;15") == F(625, 4)


@pytest.mark.parametrize("text", SMT1_REVERSE)
def test_reverse_numbers_parse(text):
    assert parse(text) == positional_value(text)


@pytest.mark.parametrize(
    "text, exc, offset",
    [
        ("1,75", MalformedDigit, 2),
        ("1;60", MalformedDigit, 2),
        ("1,123", MalformedDigit, 2),
        ("1,,2", NotationSyntaxError, 2),
        ("1;", NotationSyntaxError, 2),
        (";30", NotationSyntaxError, 0),
        ("1;2;3", NotationSyntaxError, 3),
        ("", NotationSyntaxError, 0),
        ("-", NotationSyntaxError, 1),
        ("1,2x", NotationSyntaxError, 3),
        ("1.", NotationSyntaxError, 1),
    ],
)
def test_parse_errors(text, exc, offset):
    with pytest.raises(exc) as info:
        parse(text)
    assert info.value.offset == offset


def test_decimal_input_can_be_disabled():
    cfg = NotationConfig(allow_decimal_input=False)
    assert parse("59", cfg) == 59
    with pytest.raises(MalformedDigit):
        parse("75", cfg)
    with pytest.raises(NotationSyntaxError):
        parse("1.5", cfg)


def test_custom_notation():
    cfg = NotationConfig(digit_separator=" ", radix_mark=".")
    assert parse("2 36.15", cfg) == F(625, 4)
    assert format_sex(F(625, 4), cfg=cfg) == "2 36.15"


def test_notation_config_rejects_clash():
    with pytest.raises(ValueError):
        NotationConfig(digit_separator=";", radix_mark=";")


@pytest.mark.parametrize(
    "x, places, text, exact",
    [
        (F(125, 4), 6, "31;15", True),
        (F(1), 6, "1", True),
        (F(1296, 11881), 4, "0;6,32,41,39", False),
        (F(1, 80), 6, "0;0,45", True),
        (F(3600), 0, "1,0,0", True),
        (F(-3, 4), 6, "-0;45", True),
        (F(0), 3, "0", True),
        (F(1, 7), 6, render(*long_division_digits(1, 7, 6)[:2]), False),
    ],
)
def test_to_digits(x, places, text, exact):
    d = to_digits(x, places)
    assert str(d) == text
    assert d.exact is exact


def test_to_digits_structure():
    d = to_digits(F(-625, 4))
    assert d == SexDigits(-1, (2, 36), (15,), True)
    assert d.value() == F(-625, 4)


def test_rounding_mode():
    nearest = NotationConfig(rounding="nearest")
    # 1/7 = 0;8,34,17,8,34,17,...: third place rounds up
    assert format_sex(F(1, 7), 2, nearest) == "0;8,34"
    assert format_sex(F(1, 7), 3, nearest) == "0;8,34,17"
    assert format_sex(F(37152, 11881), 3, nearest) == "3;7,37,14"
    # 0;59,59,59,50... carries into the integer digit
    x = 1 - F(1, 60**3 * 7)
    assert format_sex(x, 2, nearest) == "1;0,0"
    assert format_sex(x, 2) == "0;59,59"


def test_significant_digits():
    assert str(to_significant(F(37152, 11881), 4)) == "3;7,37,14"
    assert str(to_significant(F(1296, 11881), 4)) == "0;6,32,41,39"
    assert str(to_significant(F(1, 80), 1)) == "0;0,45"
    assert str(to_significant(3600, 2)) == "1,0,0"


def test_terminating_places():
    assert terminating_places(F(1, 80)) == 2
    assert terminating_places(F(11881, 1296)) == 4
    assert terminating_places(F(1, 7)) is None
    assert terminating_places(F(5)) == 0


def test_binop_examples():
    assert binop("add", 1, parse("0;33,45")) == F(25, 16)
    assert format_sex(binop("add", 1, parse("0;33,45"))) == "1;33,45"
    assert binop("mul", F(4, 5), 40) == 32
    with pytest.raises(ValueError):
        binop("pow", 1, 2)


@given(rationals())
def test_sub_self_is_zero(x):
    assert binop("sub", x, x) == 0


@pytest.mark.parametrize(
    "x, sq",
    [(F(25, 2), F(625, 4)), (F(3, 4), F(9, 16)), (F(0), F(0))],
)
def test_square(x, sq):
    assert square(x) == sq


def test_square_renderings():
    assert format_sex(square(parse("12;30"))) == "2,36;15"
    assert format_sex(square(parse("0;45"))) == "0;33,45"


@given(rationals())
def test_square_is_self_product(x):
    assert square(x) == binop("mul", x, x)


@pytest.mark.parametrize("x, expected", [(80, True), (7, False), (1, True), (F(5, 4), True), (F(1, 7), False)])
def test_is_regular(x, expected):
    assert is_regular(x) is expected


def test_seven_is_not_regular_by_digit_extraction():
    assert long_division_digits(1, 7, 20)[2] is False


def test_zero_inputs():
    for fn in (is_regular, reciprocal_exact):
        with pytest.raises(ZeroInput):
            fn(0)
    with pytest.raises(ZeroInput):
        reciprocal_digits(0, 3)
    with pytest.raises(DivisionByZero):
        divide(1, 0)


@pytest.mark.parametrize("x, recip, text", [(5, F(1, 5), "0;12"), (F(5, 4), F(4, 5), "0;48"), (80, F(1, 80), "0;0,45")])
def test_reciprocal_exact(x, recip, text):
    assert reciprocal_exact(x) == recip
    assert format_sex(recip) == text


@pytest.mark.parametrize(
    "x, places, text, exact",
    [
        (F(11881, 1296), 4, "0;6,32,41,39", False),
        (2, 1, "0;30", True),
        (7, 6, render(*long_division_digits(1, 7, 6)[:2]), False),
    ],
)
def test_reciprocal_digits(x, places, text, exact):
    d = reciprocal_digits(x, places)
    assert (str(d), d.exact) == (text, exact)


def test_reciprocal_of_seven_oracle():
    assert render(*long_division_digits(1, 7, 6)[:2]) == "0;8,34,17,8,34,17"


def test_divide():
    assert divide(2500, 80) == F(125, 4)
    assert format_sex(divide(2500, 80)) == "31;15"
    q = divide(F(86, 3), F(11881, 1296))
    assert q == F(37152, 11881)
    assert str(to_significant(q, 4)) == "3;7,37,14"


@given(rationals(nonzero=True))
def test_divide_self(x):
    assert divide(x, x) == 1


def test_compare_examples():
    assert compare(F(17, 12), F(3, 2)) is Ordering.LT
    assert compare(F(24, 25), F(7, 25)) is Ordering.GT
    assert cross_compare(F(24, 25), F(7, 25)) == 1


@given(rationals(), rationals())
def test_compare_matches_cross_multiplication(x, y):
    assert compare(x, y) == cross_compare(x, y)
    assert compare(x, x) is Ordering.EQ


# -- properties ---------------------------------------------------------------

finite_sex = st.builds(
    lambda n, k, s: s * F(n, 60**k),
    st.integers(0, 10**12),
    st.integers(0, 8),
    st.sampled_from([1, -1]),
)


@given(finite_sex)
def test_round_trip(x):
    d = to_digits(x, 8)
    assert d.exact
    assert parse(str(d)) == x
    assert all(0 <= v < 60 for v in d.int_digits + d.frac_digits)
    assert d.int_digits == (0,) or d.int_digits[0] != 0


@given(st.integers(1, 10**6 - 1))
def test_regular_integer_iff_reciprocal_terminates(n):
    assert is_regular(n) == to_digits(reciprocal_exact(n), 20).exact


@given(rationals(), rationals(), rationals())
def test_ring_laws(x, y, z):
    add = lambda a, b: binop("add", a, b)
    mul = lambda a, b: binop("mul", a, b)
    assert add(x, y) == add(y, x)
    assert mul(x, y) == mul(y, x)
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))


@given(rationals(nonzero=True))
def test_reciprocal_times_self(x):
    assert reciprocal_exact(x) * x == 1


@given(st.integers(1, 10**6 - 1), st.integers(1, 10**6 - 1))
def test_regular_iff_reciprocal_terminates(n, d):
    x = F(n, d)
    both_terminate = to_digits(x, 20).exact and to_digits(reciprocal_exact(x), 20).exact
    assert is_regular(x) == both_terminate
    assert is_regular(x) == (five_smooth(x.numerator) and five_smooth(x.denominator))


@given(rationals().filter(lambda x: x > 0), st.integers(0, 12))
def test_truncation_brackets_value(x, k):
    v = to_digits(x, k).value()
    assert v <= x < v + F(1, 60**k)


@given(rationals().filter(lambda x: x > 0), st.integers(0, 12))
def test_digits_agree_with_long_division(x, k):
    ints, fracs, _ = long_division_digits(x.numerator, x.denominator, k)
    d = to_digits(x, k)
    assert list(d.int_digits) == ints
    # long division stops early on termination; to_digits does the same
    assert list(d.frac_digits) == fracs + [0] * (len(d.frac_digits) - len(fracs))


@given(rationals())
def test_sign(x):
    assert sign(x) == (x > 0) - (x < 0)
