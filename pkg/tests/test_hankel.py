import random
from fractions import Fraction

import pytest

from hankel_shift.errors import CheckerboardPatternError, ConsistencyError
from hankel_shift.exact import Poly, SquareMatrix, det
from hankel_shift.hankel import (
    Parity,
    ScalingMode,
    binomial_transform,
    checkerboard_split,
    hankel_det,
    hankel_det_of_terms,
    hankel_dets,
    hankel_matrix,
    scaled_hankel_det,
    scaled_hankel_det_of_terms,
)
from hankel_shift.identities import closed_form
from hankel_shift.sequences import parse_spec

F = Fraction


def random_terms(rng: random.Random, count: int):
    return [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(count)]


# --- Determinants of sequences ---


def test_bernoulli_even_factorizations():
    """H_1..H_4 of B_{2k} as quoted with their prime factorizations."""
    spec = parse_spec("B[2k]")
    assert hankel_dets(spec, 4)[1:] == [
        F(-11, 180),
        F(137, 110250),
        F(-12, 5 * 7**4 * 13),
        F(2**10 * 7129, 5 * 7**2 * 11**4 * 13**3 * 17),
    ]


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("B[k]", 0, F(1)),
        ("B[k]", 1, F(-1, 12)),
        ("E[2k]", 1, F(4)),
        ("E1[k]", 1, F(-1, 4)),
        ("B[2k]", 2, F(137, 110250)),
    ],
)
def test_hankel_det_values(text, n, expected):
    assert hankel_det(parse_spec(text), n) == expected


def test_hankel_det_conventions():
    spec = parse_spec("B[k]")
    assert hankel_det(spec, -1) == 1
    with pytest.raises(ValueError):
        hankel_det(spec, -2)
    poly_spec = parse_spec("Ehalf[2k]")
    assert isinstance(hankel_det(poly_spec, -1), Poly)
    assert hankel_det_of_terms([F(3)], 0) == 3


def test_hankel_det_over_polynomials():
    value = hankel_det(parse_spec("Ehalf[2k]"), 1)
    # det [[1, (x^2-1)/4], [(x^2-1)/4, E_4((x+1)/2)]]
    assert isinstance(value, Poly)
    assert value(1) == hankel_det(parse_spec("E1[2k]"), 1)


@pytest.mark.parametrize("n", range(6))
def test_polynomial_families_keep_number_determinants(n):
    bernoulli = hankel_det(parse_spec("Bx[k]"), n)
    euler = hankel_det(parse_spec("Ex[k]"), n)
    assert isinstance(bernoulli, Poly) and bernoulli.is_constant()
    assert bernoulli == hankel_det(parse_spec("B[k]"), n)
    assert euler == F(1, 2 ** (n * (n + 1))) * hankel_det(parse_spec("E[k]"), n)


def test_hankel_matrix_shape():
    m = hankel_matrix(parse_spec("B[k]"), 3)
    assert m.order == 4
    assert m.is_hankel
    assert m[0, 3] == m[1, 2] == m[3, 0] == 0
    with pytest.raises(ValueError):
        hankel_matrix(parse_spec("B[k]"), -1)


# --- Checkerboard ---


@pytest.mark.parametrize("n", range(7))
def test_euler_hankel_matrices_split(n):
    m = hankel_matrix(parse_spec("E[k]"), n)
    split = checkerboard_split(m, Parity.ODD)
    assert split.sign == 1
    assert split.determinant == det(m)


@pytest.mark.parametrize("n", range(5))
def test_shifted_euler_values_split_three_ways(n):
    m = hankel_matrix(parse_spec("E1[k+3]"), 2 * n)
    split = checkerboard_split(m, Parity.ODD)
    assert split.first == hankel_matrix(parse_spec("E1[2k+3]"), n)
    blocks = hankel_det(parse_spec("E1[2k+3]"), n) * hankel_det(parse_spec("E1[2k+5]"), n - 1)
    closed = closed_form("5.2", n) * (closed_form("5.4", n - 1) if n else 1)
    assert det(m) == split.determinant == blocks == closed
    assert det(m) != 0


def random_checkerboard(rng: random.Random, size: int, vanishing: Parity) -> SquareMatrix:
    rows = [
        [F(0) if vanishing.holds_zero(i, j) else F(rng.randint(-6, 6), rng.randint(1, 3)) for j in range(size)]
        for i in range(size)
    ]
    return SquareMatrix(rows)


def test_checkerboard_split_property():
    """det(M) equals the signed product of the two blocks, both parities, random orders 1..5."""
    rng = random.Random(4242)
    for trial in range(120):
        vanishing = Parity.ODD if trial % 2 else Parity.EVEN
        size = 1 + trial % 5
        m = random_checkerboard(rng, size, vanishing)
        split = checkerboard_split(m, vanishing)
        assert split.determinant == det(m)
        if vanishing == Parity.EVEN and size % 2:
            assert split.forced_zero
            assert det(m) == 0


def test_even_vanishing_sign():
    m = SquareMatrix([[0, 2], [3, 0]])
    split = checkerboard_split(m, "even")
    assert split.sign == -1
    assert split.determinant == -6


def test_forced_zero_keeps_entry_type():
    x = Poly.gen("x")
    m = SquareMatrix([[0, x, 0], [x, 0, x + 1], [0, x**2, 0]])
    split = checkerboard_split(m, Parity.EVEN)
    assert split.forced_zero
    value = split.determinant
    assert isinstance(value, Poly)
    assert value.is_zero()
    assert value.variable == "x"
    assert isinstance(det(m), Poly)
    assert value == det(m)
    scalar = checkerboard_split(SquareMatrix([[0, 1, 0], [2, 0, 3], [0, 4, 0]]), Parity.EVEN)
    assert scalar.determinant == 0
    assert isinstance(scalar.determinant, Fraction)


def test_checkerboard_violation_reports_position():
    with pytest.raises(CheckerboardPatternError) as info:
        checkerboard_split(SquareMatrix([[1, 1], [0, 1]]), Parity.ODD)
    assert info.value.position == (0, 1)


# --- Scaling laws ---


def test_scaled_values():
    assert scaled_hankel_det(parse_spec("E[2k]"), F(1, 4), ScalingMode.GEOMETRIC, 1) == F(1, 4)
    assert scaled_hankel_det(parse_spec("B[k]"), F(2), "constant", 1) == F(-1, 3)


def test_scaling_laws_property():
    rng = random.Random(31337)
    for trial in range(120):
        n = trial % 5
        terms = random_terms(rng, 2 * n + 1)
        x = F(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
        for mode in ScalingMode:
            value = scaled_hankel_det_of_terms(terms, x, mode, n)
            exponent = n * (n + 1) if mode == ScalingMode.GEOMETRIC else n + 1
            assert value == x**exponent * hankel_det_of_terms(terms, n)


def test_scaling_with_polynomial_factor():
    x = Poly.gen("x")
    value = scaled_hankel_det(parse_spec("B[k]"), x, ScalingMode.GEOMETRIC, 2)
    assert value == x**6 * hankel_det(parse_spec("B[k]"), 2)


def test_scaling_mismatch_is_reported():
    class Broken(Fraction):
        def __pow__(self, exponent):
            return Fraction(7)

    with pytest.raises(ConsistencyError):
        scaled_hankel_det_of_terms([F(1), F(2), F(5)], Broken(2), ScalingMode.CONSTANT, 1)


# --- Binomial transform ---


def test_binomial_transform_keeps_hankel_determinants():
    rng = random.Random(2718)
    for trial in range(110):
        n = trial % 5
        values = random_terms(rng, 2 * n + 1)
        x = F(rng.randint(-5, 5), rng.randint(1, 3))
        transformed = binomial_transform(values, x)
        assert hankel_det_of_terms(transformed, n) == hankel_det_of_terms(values, n)


def test_binomial_transform_of_euler_numbers():
    """E_k((x+1)/2) comes from E_k / 2^k by a binomial transform with x/2."""
    x = Poly.gen("x")
    values = [F(euler, 2**k) for k, euler in enumerate([1, 0, -1, 0, 5])]
    transformed = binomial_transform(values, x / 2)
    assert transformed == parse_spec("Ehalf[k]").terms(5)
