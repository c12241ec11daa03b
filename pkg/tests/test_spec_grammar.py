from fractions import Fraction

import pytest

from hankel_shift.errors import SpecParseError
from hankel_shift.sequences import Family, Scale, format_spec, parse_spec


@pytest.mark.parametrize(
    "text",
    [
        "B[k]",
        "B[2k+2]",
        "E1[2k+1]",
        "E[2k]",
        "(2k+1)*E[2k]",
        "(2k+3)*B[2k+2]",
        "E1[k]/k!",
        "E1[k+1]/(k+1)!",
        "E1[2k+1]/(2k+1)!",
        "(2^(2k)-1)*B[2k]",
        "(2^(2k+2)-1)*B[2k+2]",
        "shift0:B[k-1]",
        "shift0:E1[2k-1]",
        "shift0:(2k-1)*E[2k-2]",
        "shift0:E1[2k-1]/(2k-1)!",
        "shiftA=1:B[2k]",
        "shiftA=-1/2:E1[k-1]",
        "Ehalf[2k+1]",
        "Bhalf[2k+1]",
        "Bx[k]",
        "Ex[3k+1]",
    ],
)
def test_format_inverts_parse(text):
    assert format_spec(parse_spec(text)) == text


def test_whitespace_is_ignored():
    assert parse_spec(" B[ 2k + 2 ] ") == parse_spec("B[2k+2]")
    assert parse_spec("shift0: (2k+1)*E[ 2k ]") == parse_spec("shift0:(2k+1)*E[2k]")


def test_longest_family_token_wins():
    assert parse_spec("E1[k]").family == Family.EULER_AT_ONE
    assert parse_spec("Ehalf[k]").family == Family.EULER_SHIFTED_HALF
    assert parse_spec("Ex[k]").family == Family.EULER_POLY
    assert parse_spec("E[k]").family == Family.EULER_NUMBER


def test_parsed_fields():
    spec = parse_spec("shift0:E1[2k-1]/(2k-1)!")
    assert spec.multiplier == 2
    assert spec.offset == 1
    assert spec.scale == Scale.DIV_FACTORIAL
    assert spec.head_override == 0
    assert parse_spec("shiftA=3/4:B[k-1]").head_override == Fraction(3, 4)


@pytest.mark.parametrize(
    "text, position",
    [
        ("Q[k]", 0),
        ("B[k", 3),
        ("B[k-1]", 2),
        ("B[k]x", 4),
        ("B[0k]", 2),
        ("(2k+2)*E[2k]", 0),
        ("(2^(2k+1)-1)*B[2k]", 0),
        ("E1[k]/(k+1)!", 5),
        ("shiftA=1/0:B[k-1]", 7),
        ("B[-k]", 2),
    ],
)
def test_parse_errors_carry_position(text, position):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == position
    assert info.value.text == text
    assert f"at position {position}" in str(info.value)


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_spec("")


def test_at_most_one_scaling_rule():
    with pytest.raises(SpecParseError, match="at most one scaling rule"):
        parse_spec("(k+1)*E1[k]/k!")
