"""
Hankel matrices and determinants of sequence specs, and the structural
determinant rules: checkerboard factorization, scaling laws and the
binomial-transform invariance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .errors import CheckerboardPatternError, ConsistencyError
from .exact.matrix import Entry, SquareMatrix, det, format_entry, is_zero
from .exact.poly import Poly
from .exact.rational import binom, sign_power
from .sequences.spec import SequenceSpec

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction, Poly]


def _one_like(value: Entry) -> Entry:
    if isinstance(value, Poly):
        return Poly([1], value.variable)
    return Fraction(1)


def hankel_matrix_from_terms(terms: Sequence[Entry], n: int) -> SquareMatrix:
    """The (n+1)x(n+1) matrix (terms[i+j])."""
    return SquareMatrix.hankel_of(terms, n)


def hankel_matrix(spec: SequenceSpec, n: int) -> SquareMatrix:
    """The (n+1)x(n+1) Hankel matrix (term(spec, i+j))_{0<=i,j<=n}."""
    if n < 0:
        raise ValueError(f"Hankel matrix index must be >= 0 (got {n})")
    return hankel_matrix_from_terms(spec.terms(2 * n + 1), n)


def hankel_det_of_terms(terms: Sequence[Entry], n: int) -> Entry:
    """
    H_n of an explicit list of terms.

    H_{-1} is 1 by convention.
    """
    if n == -1:
        return _one_like(terms[0]) if terms else Fraction(1)
    return det(hankel_matrix_from_terms(terms, n))


def hankel_det(spec: SequenceSpec, n: int) -> Entry:
    """
    H_n(spec) = det(hankel_matrix(spec, n)), exact.

    Args:
        spec: The sequence.
        n: Index, >= -1 (H_{-1} = 1).
    """
    if n < -1:
        raise ValueError(f"Hankel determinant index must be >= -1 (got {n})")
    return hankel_det_of_terms(spec.terms(max(2 * n + 1, 1)), n)


def hankel_dets(spec: SequenceSpec, n_max: int) -> List[Entry]:
    """[H_0, ..., H_{n_max}], sharing one list of terms."""
    terms = spec.terms(2 * n_max + 1)
    return [hankel_det_of_terms(terms, n) for n in range(n_max + 1)]


# === Checkerboard matrices


class Parity(Enum):
    """Which class of positions (by parity of i+j) is asserted zero."""

    ODD = "odd"
    EVEN = "even"

    def holds_zero(self, i: int, j: int) -> bool:
        return (i + j) % 2 == (1 if self == Parity.ODD else 0)


@dataclass(frozen=True)
class CheckerboardSplit:
    """
    A checkerboard matrix decomposed into two blocks.

    The determinant of the original matrix is `sign * det(first) * det(second)`,
    an absent block counting as 1. A forced zero (even-vanishing pattern of odd
    order) has no blocks and sign 0. `unit` is 1 in the entry type of the
    matrix.
    """

    vanishing: Parity
    order: int
    first: Optional[SquareMatrix]
    second: Optional[SquareMatrix]
    sign: int
    unit: Entry = Fraction(1)

    @property
    def forced_zero(self) -> bool:
        return self.sign == 0

    @property
    def determinant(self) -> Entry:
        value: Entry = self.unit * self.sign
        if self.forced_zero:
            return value
        for block in (self.first, self.second):
            if block is not None:
                value = value * det(block)
        return value


def checkerboard_split(m: SquareMatrix, vanishing: Union[Parity, str] = Parity.ODD) -> CheckerboardSplit:
    """
    Split a checkerboard matrix into its two nonvanishing blocks.

    With zeros wherever i+j is odd, det(M) = det(M_{2i,2j}) det(M_{2i+1,2j+1}).
    With zeros wherever i+j is even and N even, det(M) is (-1)^{N/2} times
    det(M_{2i+1,2j}) det(M_{2i,2j+1}); for N odd it is 0.

    Raises:
        CheckerboardPatternError: If an entry declared zero is not.
    """
    vanishing = Parity(vanishing)
    size = m.order
    for i in range(size):
        for j in range(size):
            if vanishing.holds_zero(i, j) and not is_zero(m[i, j]):
                raise CheckerboardPatternError((i, j))

    unit = next((_one_like(v) for v in m.grid.flat if isinstance(v, Poly)), Fraction(1))
    evens = list(range(0, size, 2))
    odds = list(range(1, size, 2))
    if vanishing == Parity.ODD:
        first = m.submatrix(evens, evens)
        second = m.submatrix(odds, odds) if odds else None
        return CheckerboardSplit(vanishing, size, first, second, 1, unit)
    if size % 2:
        return CheckerboardSplit(vanishing, size, None, None, 0, unit)
    return CheckerboardSplit(
        vanishing,
        size,
        m.submatrix(odds, evens),
        m.submatrix(evens, odds),
        sign_power(size // 2),
        unit,
    )


# === Scaling laws and binomial transform


class ScalingMode(Enum):
    GEOMETRIC = "geometric"
    CONSTANT = "constant"


def scaled_hankel_det_of_terms(
    terms: Sequence[Entry], x: Scalar, mode: Union[ScalingMode, str], n: int
) -> Entry:
    """
    H_n of x^k c_k (geometric) or of x c_k (constant), computed directly and
    checked against x^{n(n+1)} H_n(c) or x^{n+1} H_n(c).

    Raises:
        ConsistencyError: If the two evaluations disagree.
    """
    mode = ScalingMode(mode)
    terms = list(terms[: 2 * n + 1])
    if mode == ScalingMode.GEOMETRIC:
        scaled = [x**k * c for k, c in enumerate(terms)]
        exponent = n * (n + 1)
    else:
        scaled = [x * c for c in terms]
        exponent = n + 1
    direct = hankel_det_of_terms(scaled, n)
    expected = x**exponent * hankel_det_of_terms(terms, n)
    if direct != expected:
        raise ConsistencyError(
            f"Scaling law ({mode.value}) failed at n={n}: "
            f"{format_entry(direct)} != {format_entry(expected)}",
            n,
        )
    return direct


def scaled_hankel_det(spec: SequenceSpec, x: Scalar, mode: Union[ScalingMode, str], n: int) -> Entry:
    """`scaled_hankel_det_of_terms` over the terms of a spec."""
    return scaled_hankel_det_of_terms(spec.terms(2 * n + 1), x, mode, n)


def binomial_transform(values: Sequence[Entry], x: Scalar) -> List[Entry]:
    """
    c_k(x) = sum_j C(k, j) c_j x^{k-j} for every k < len(values).

    The Hankel determinants of the result equal those of `values`.
    """
    result = []
    for k in range(len(values)):
        total: Entry = Fraction(0)
        for j in range(k + 1):
            total = total + binom(k, j) * values[j] * x ** (k - j)
        result.append(total)
    return result
