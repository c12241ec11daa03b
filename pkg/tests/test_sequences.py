from fractions import Fraction

import pytest

from hankel_shift.errors import MalformedSpecError
from hankel_shift.exact import Poly
from hankel_shift.sequences import (
    Family,
    SequenceSpec,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_shifted_half,
    euler_at_one,
    euler_number,
    euler_poly,
    euler_shifted_half,
    parse_spec,
    term,
)

F = Fraction


# --- Generators ---


def test_bernoulli_numbers():
    assert [bernoulli_number(n) for n in range(7)] == [
        F(1), F(-1, 2), F(1, 6), F(0), F(-1, 30), F(0), F(1, 42)
    ]
    assert bernoulli_number(12) == F(-691, 2730)


def test_euler_numbers():
    assert [euler_number(n) for n in range(7)] == [1, 0, -1, 0, 5, 0, -61]
    assert euler_number(10) == -50521


def test_euler_at_one():
    assert [euler_at_one(n) for n in range(7)] == [
        F(1), F(1, 2), F(0), F(-1, 4), F(0), F(1, 2), F(0)
    ]


@pytest.mark.parametrize("j", range(1, 21))
def test_odd_indexed_numbers_vanish(j):
    assert bernoulli_number(2 * j + 1) == 0
    assert euler_number(2 * j + 1) == 0
    assert euler_number(2 * j) != 0


@pytest.mark.parametrize("j", range(1, 16))
def test_even_indexed_values_at_one_vanish(j):
    assert euler_at_one(2 * j) == 0
    assert euler_at_one(2 * j - 1) != 0


def test_bernoulli_polynomials():
    assert bernoulli_poly(0) == 1
    assert bernoulli_poly(1) == Poly([F(-1, 2), 1])
    assert bernoulli_poly(2) == Poly([F(1, 6), -1, 1])
    assert bernoulli_poly(3) == Poly([0, F(1, 2), F(-3, 2), 1])
    assert bernoulli_poly(2, "y").variable == "y"


def test_euler_polynomials():
    assert euler_poly(1) == Poly([F(-1, 2), 1])
    assert euler_poly(2) == Poly([0, -1, 1])
    assert euler_poly(3) == Poly([F(1, 4), 0, F(-3, 2), 1])


@pytest.mark.parametrize("n", range(21))
def test_polynomials_specialize_to_numbers(n):
    assert bernoulli_poly(n)(0) == bernoulli_number(n)
    assert euler_poly(n)(1) == euler_at_one(n)
    assert 2**n * euler_poly(n)(F(1, 2)) == euler_number(n)


def test_shifted_half_polynomials():
    assert euler_shifted_half(0) == 1
    assert euler_shifted_half(1) == Poly([0, F(1, 2)])
    assert euler_shifted_half(2) == Poly([F(-1, 4), 0, F(1, 4)])
    assert bernoulli_shifted_half(1) == Poly([0, F(1, 2)])
    # x = 1 gives the values at one
    assert euler_shifted_half(5)(1) == euler_at_one(5)


@pytest.mark.parametrize(
    "generator", [bernoulli_number, euler_number, euler_at_one, bernoulli_poly, euler_poly]
)
def test_negative_index_raises(generator):
    with pytest.raises(ValueError, match="negative index"):
        generator(-1)


# --- SequenceSpec ---


@pytest.mark.parametrize(
    "text, expected",
    [
        ("B[2k+2]", [F(1, 6), F(-1, 30), F(1, 42)]),
        ("shift0:B[k-1]", [F(0), F(1), F(-1, 2), F(1, 6)]),
        ("(2k+1)*E[2k]", [F(1), F(-3), F(25)]),
        ("E1[k]/k!", [F(1), F(1, 2), F(0), F(-1, 24)]),
        ("(2^(2k)-1)*B[2k]", [F(0), F(1, 2), F(-1, 2)]),
        ("shiftA=1/2:E1[k-1]", [F(1, 2), F(1), F(1, 2), F(0)]),
        ("shift0:(2k-1)*E[2k-2]", [F(0), F(1), F(-3), F(25)]),
        ("E1[2k+1]/(2k+1)!", [F(1, 2), F(-1, 24), F(1, 240)]),
    ],
)
def test_terms(text, expected):
    spec = parse_spec(text)
    assert spec.terms(len(expected)) == expected
    assert [term(spec, k) for k in range(len(expected))] == expected


def test_polynomial_spec_terms_are_homogeneous():
    spec = parse_spec("shift0:Ehalf[2k-2]")
    assert spec.is_polynomial
    first, second = spec.terms(2)
    assert isinstance(first, Poly) and first.is_zero()
    assert isinstance(second, Poly) and second == 1
    assert spec.term(2) == Poly([F(-1, 4), 0, F(1, 4)])


def test_left_shift():
    spec = parse_spec("B[k]")
    assert spec.left_shift(2).term(0) == F(1, 6)
    assert spec.left_shift(0) is spec
    shifted = parse_spec("shift0:B[k-1]")
    assert shifted.left_shift(1) == spec
    assert shifted.left_shift(3) == spec.left_shift(2)
    with pytest.raises(ValueError):
        spec.left_shift(-1)


def test_shift_roundtrip():
    spec = parse_spec("B[2k]")
    shifted = spec.left_shift().shifted(1)
    assert shifted == parse_spec("shiftA=1:B[2k]")
    assert shifted.base() == parse_spec("B[2k+2]")
    assert shifted.terms(3) == [F(1), F(1, 6), F(-1, 30)]


def test_malformed_specs():
    with pytest.raises(MalformedSpecError, match="multiplier"):
        SequenceSpec(Family.BERNOULLI_NUMBER, multiplier=0)
    with pytest.raises(MalformedSpecError, match="negative"):
        SequenceSpec(Family.BERNOULLI_NUMBER, offset=-1)
    with pytest.raises(MalformedSpecError):
        parse_spec("B[k]").term(-1)


def test_family_tokens():
    assert Family.from_token("Ehalf") == Family.EULER_SHIFTED_HALF
    assert Family.EULER_POLY.is_polynomial
    assert not Family.EULER_AT_ONE.is_polynomial
    with pytest.raises(ValueError, match="Invalid family token"):
        Family.from_token("Q")


def test_str_uses_spec_syntax():
    assert str(parse_spec("(2k+3)*B[2k+2]")) == "(2k+3)*B[2k+2]"
