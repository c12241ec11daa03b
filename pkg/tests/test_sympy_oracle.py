"""Cross-checks against sympy."""

import random
from fractions import Fraction

import pytest
import sympy

from hankel_shift.exact import SquareMatrix, det
from hankel_shift.hankel import hankel_det
from hankel_shift.sequences import (
    bernoulli_number,
    bernoulli_poly,
    euler_number,
    euler_poly,
    parse_spec,
)

X = sympy.Symbol("x")


def to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def coefficients(expr):
    """Ascending coefficients of a sympy polynomial in x."""
    return [to_fraction(c) for c in reversed(sympy.Poly(expr, X).all_coeffs())]


@pytest.mark.parametrize("n", [0] + list(range(2, 25)))
def test_bernoulli_numbers(n):
    # sympy's B_1 convention differs; B_1 = -1/2 is covered elsewhere
    assert bernoulli_number(n) == to_fraction(sympy.bernoulli(n))


@pytest.mark.parametrize("n", range(25))
def test_euler_numbers(n):
    assert euler_number(n) == int(sympy.euler(n))


@pytest.mark.parametrize("n", range(2, 12))
def test_polynomials(n):
    assert list(bernoulli_poly(n).coefficients) == coefficients(sympy.bernoulli(n, X))
    assert list(euler_poly(n).coefficients) == coefficients(sympy.euler(n, X))


@pytest.mark.parametrize("text", ["B[k]", "E1[2k+1]", "(2k+3)*B[2k+2]"])
def test_hankel_determinants(text):
    spec = parse_spec(text)
    for n in range(5):
        terms = spec.terms(2 * n + 1)
        matrix = sympy.Matrix(
            n + 1,
            n + 1,
            lambda i, j: sympy.Rational(terms[i + j].numerator, terms[i + j].denominator),
        )
        assert hankel_det(spec, n) == to_fraction(matrix.det())


def test_random_determinants():
    rng = random.Random(99)
    for trial in range(100):
        size = 1 + trial % 6
        rows = [[Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(size)] for _ in range(size)]
        expected = sympy.Matrix(
            [[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows]
        ).det()
        assert det(SquareMatrix(rows)) == to_fraction(expected)
