import random
from fractions import Fraction

import pytest

from hankel_shift.errors import InexactDivisionError
from hankel_shift.exact import (
    Poly,
    as_rational,
    binom,
    factorial,
    format_rational,
    parse_rational,
    poly_eval,
    sign_power,
)

F = Fraction
X = Poly.gen("x")


def random_rational(rng: random.Random) -> Fraction:
    return F(rng.randint(-9, 9), rng.randint(1, 6))


def random_poly(rng: random.Random, max_degree: int = 4) -> Poly:
    return Poly([random_rational(rng) for _ in range(rng.randint(0, max_degree + 1))])


# --- Rationals ---


@pytest.mark.parametrize(
    "value, expected",
    [
        (F(-1, 2), "-1/2"),
        (F(6, 4), "3/2"),
        (3, "3"),
        (F(0), "0"),
        (F(-12, 156065), "-12/156065"),
    ],
)
def test_format_rational(value, expected):
    assert format_rational(value) == expected


@pytest.mark.parametrize(
    "text, expected",
    [("1/6", F(1, 6)), ("-1/30", F(-1, 30)), ("6/4", F(3, 2)), (" 7 ", F(7)), ("+2/3", F(2, 3))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "1/-2", ""])
def test_parse_rational_rejects_bad_literals(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError, match="exact rational"):
        as_rational(0.5)
    assert as_rational(3) == F(3)


def test_factorial_and_binom():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert binom(5, 2) == 10
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_sign_power():
    assert [sign_power(e) for e in range(-2, 3)] == [1, -1, 1, -1, 1]


# --- Poly basics ---


def test_trailing_zeros_are_stripped():
    p = Poly([1, 2, 0, 0])
    assert p.coefficients == (F(1), F(2))
    assert p.degree == 1
    assert Poly([0, 0]).degree == -1
    assert Poly().is_zero()
    assert not Poly()


def test_invalid_variable():
    with pytest.raises(ValueError, match="Invalid polynomial variable"):
        Poly([1], "z")


def test_wire_format_and_pretty():
    p = Poly([-13, 0, 1])
    assert str(p) == "[-13, 0, 1]"
    assert p.pretty() == "x^2 - 13"
    assert Poly.parse("[-13, 0, 1]") == p
    assert Poly.parse("[]") == Poly()
    assert Poly([13, 0, -1]).pretty() == "-x^2 + 13"
    assert Poly([0, 2]).pretty() == "2*x"
    assert Poly().pretty() == "0"
    assert Poly([F(1, 4), 0, 1], "y").pretty() == "y^2 + 1/4"


def test_parse_rejects_non_lists():
    with pytest.raises(ValueError):
        Poly.parse("x^2 - 13")


def test_arithmetic():
    assert (X + 1) * (X - 1) == X**2 - 1
    assert 2 - X == Poly([2, -1])
    assert -X == Poly([0, -1])
    assert (X**2 - 1) / (X - 1) == X + 1
    assert (X**2 + 3 * X) / 3 == Poly([0, 1, F(1, 3)])
    quotient, remainder = divmod(X**3 + 1, X - 1)
    assert quotient == X**2 + X + 1
    assert remainder == 2


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        (X**2 + 1) / (X - 1)
    with pytest.raises(ZeroDivisionError):
        X / 0


def test_evaluation_and_composition():
    p = X**2 - 13
    assert p(2) == -9
    assert poly_eval(p, F(1, 2)) == F(-51, 4)
    half = Poly([F(1, 2), F(1, 2)])
    assert p.compose(half) == Poly([F(-51, 4), F(1, 2), F(1, 4)])


def test_gcd():
    assert (X**2 - 1).gcd(X**2 + 2 * X + 1) == X + 1
    assert (X**2 + 1).gcd(X - 1) == 1
    assert (2 * X**2 - 2).gcd(F(1, 3) * X - F(1, 3)) == X - 1
    assert Poly().gcd(3 * X + 6) == X + 2
    assert Poly().gcd(Poly()).is_zero()


def test_sympy_round_trip_keeps_variable():
    p = Poly([F(-1, 2), 0, 3], "y")
    assert Poly.from_sympy(p.to_sympy(), "y") == p
    assert Poly.from_sympy(Poly().to_sympy()).is_zero()


def test_constant_polys_compare_with_scalars():
    assert Poly([3]) == 3
    assert F(3) == Poly([3])
    assert Poly() == 0
    assert hash(Poly([F(1, 2)])) == hash(F(1, 2))
    assert Poly([3], "x") == Poly([3], "y")
    assert X != Poly.gen("y")


def test_variables_do_not_mix():
    y = Poly.gen("y")
    with pytest.raises(ValueError, match="different variables"):
        X + y
    assert (Poly([2]) * y).variable == "y"


def test_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        X ** -1


# --- Poly properties ---


def test_division_inverts_multiplication():
    """(p*q)/q == p and divmod reconstructs its dividend, over random polynomials."""
    rng = random.Random(20240611)
    for _ in range(150):
        p = random_poly(rng)
        q = random_poly(rng)
        if q.is_zero():
            continue
        assert (p * q) / q == p
        quotient, remainder = divmod(p, q)
        assert quotient * q + remainder == p
        assert remainder.degree < q.degree


def test_evaluation_is_a_ring_homomorphism():
    rng = random.Random(7)
    for _ in range(120):
        p, q = random_poly(rng), random_poly(rng)
        v = random_rational(rng)
        assert poly_eval(p * q, v) == poly_eval(p, v) * poly_eval(q, v)
        assert poly_eval(p + q, v) == poly_eval(p, v) + poly_eval(q, v)
        assert p.compose(q)(v) == p(q(v))
