"""
Auxiliary sequences: harmonic-type numbers, the recurrence sequence h_n, the
constants K_n, the rational functions K_n(x) and the polynomials p_n(x).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Tuple, Union

from ..errors import UnknownIdentifierError
from ..exact.matrix import Entry
from ..exact.poly import Poly
from ..exact.rational import binom, factorial


class AuxKind(Enum):
    HARMONIC = "harmonic"
    ALT1 = "alt1"
    ALT2 = "alt2"
    ODD_HARMONIC = "odd_harmonic"
    H_REC = "h_rec"
    K_CONST = "K_const"


def _check(kind: str, n: int, least: int = 0) -> None:
    if n < least:
        raise ValueError(f"{kind} is defined for n >= {least} (got {n})")


def harmonic(n: int) -> Fraction:
    """H_n = sum_{j=1}^{n} 1/j (H_0 = 0)."""
    _check("harmonic", n)
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def alt1(n: int) -> Fraction:
    """sum_{j=1}^{n} (-1)^{j-1} / j."""
    _check("alt1", n)
    return sum((Fraction((-1) ** (j - 1), j) for j in range(1, n + 1)), Fraction(0))


def alt2(n: int) -> Fraction:
    """sum_{j=1}^{n} (-1)^{j-1} / j^2."""
    _check("alt2", n)
    return sum((Fraction((-1) ** (j - 1), j * j) for j in range(1, n + 1)), Fraction(0))


def odd_harmonic(n: int) -> Fraction:
    """sum_{j=0}^{n} 1/(2j+1)."""
    _check("odd_harmonic", n)
    return sum((Fraction(1, 2 * j + 1) for j in range(n + 1)), Fraction(0))


def h_rec(n: int) -> Fraction:
    """h_0 = 0, h_1 = 1, h_{n+1} = (8n^2+8n+3) h_n - (2n)^4 h_{n-1}."""
    _check("h_rec", n)
    previous, current = 0, 1
    if n == 0:
        return Fraction(0)
    for k in range(1, n):
        previous, current = current, (8 * k * k + 8 * k + 3) * current - (2 * k) ** 4 * previous
    return Fraction(current)


def k_const(n: int) -> Fraction:
    """K_n = sum_{j=0}^{n-1} 16^j / ((2j+1)^2 C(2j, j)^2), n >= 1."""
    _check("K_const", n, 1)
    return sum(
        (Fraction(16**j) / ((2 * j + 1) ** 2 * binom(2 * j, j) ** 2) for j in range(n)),
        Fraction(0),
    )


_AUX: Dict[AuxKind, Callable[[int], Fraction]] = {
    AuxKind.HARMONIC: harmonic,
    AuxKind.ALT1: alt1,
    AuxKind.ALT2: alt2,
    AuxKind.ODD_HARMONIC: odd_harmonic,
    AuxKind.H_REC: h_rec,
    AuxKind.K_CONST: k_const,
}


def aux_sequence(kind: Union[AuxKind, str], n: int) -> Fraction:
    """
    Value of an auxiliary sequence.

    Raises:
        UnknownIdentifierError: For an unknown kind.
        ValueError: For an index outside the domain.
    """
    if not isinstance(kind, AuxKind):
        try:
            kind = AuxKind(kind)
        except ValueError:
            raise UnknownIdentifierError(
                "auxiliary sequence", kind, [k.value for k in AuxKind]
            ) from None
    return _AUX[kind](n)


# === Polynomial side


X = Poly.gen("x")


@dataclass(frozen=True)
class RationalFunction:
    """numerator / denominator in x, reduced, with a monic denominator."""

    numerator: Poly
    denominator: Poly

    @classmethod
    def reduced(cls, numerator: Poly, denominator: Poly) -> RationalFunction:
        common = numerator.gcd(denominator)
        if not common.is_zero() and common.degree > 0:
            numerator = numerator / common
            denominator = denominator / common
        lead = denominator.leading_coefficient
        return cls(numerator / lead, denominator / lead)

    def evaluate(self, x) -> Fraction:
        return self.numerator.evaluate(x) / self.denominator.evaluate(x)

    __call__ = evaluate

    def __str__(self) -> str:
        return f"({self.numerator.pretty()}) / ({self.denominator.pretty()})"


def K_rational(n: int) -> RationalFunction:
    """
    K_n(x) = 1 + sum_{j=1}^{n-1} prod_{i=1}^{j} (2i)^2 / ((2i+1)^2 - x^2).

    K_1 = 1, K_2 = (13 - x^2) / (9 - x^2), and K_n(0) is the constant K_n.
    """
    _check("K_rational", n, 1)
    numerator, denominator = Poly([1]), Poly([1])
    for j in range(1, n):
        factor = (2 * j + 1) ** 2 - X**2
        numerator = numerator * factor + (2**j * factorial(j)) ** 2
        denominator = denominator * factor
    return RationalFunction.reduced(numerator, denominator)


def p_poly(n: int) -> Poly:
    """p_0 = 1, p_n(x) = (x^2 - (2n+1)^2) p_{n-1}(x) + (-4)^n (n!)^2."""
    _check("p_poly", n)
    value = Poly([1])
    for k in range(1, n + 1):
        value = (X**2 - (2 * k + 1) ** 2) * value + (-4) ** k * factorial(k) ** 2
    return value


# === Recurrences satisfied by the correction factors


def _alt2_recurrence(n: int) -> Tuple[Entry, Entry]:
    return (
        (n + 1) ** 2 * alt2(n + 1),
        (2 * n + 1) * alt2(n) + n**2 * alt2(n - 1),
    )


def _alt1_recurrence(n: int) -> Tuple[Entry, Entry]:
    return (n + 1) * alt1(n + 1), alt1(n) + n * alt1(n - 1)


def _odd_harmonic_identity(n: int) -> Tuple[Entry, Entry]:
    return odd_harmonic(n), harmonic(2 * n + 2) - harmonic(n + 1) / 2


def _odd_index_harmonic_recurrence(n: int) -> Tuple[Entry, Entry]:
    def h(m):
        return harmonic(2 * m + 1)

    return (
        (n + 1) * (2 * n + 3) * (4 * n + 1) * h(n + 1),
        (4 * n + 3) * (4 * n * n + 6 * n + 1) * h(n) - n * (2 * n + 1) * (4 * n + 5) * h(n - 1),
    )


def _harmonic_pair_recurrence(n: int) -> Tuple[Entry, Entry]:
    def h(m):
        return harmonic(m) + harmonic(m + 1)

    return (
        Fraction((n + 1) * (n + 2), 2 * n + 3) * h(n + 1),
        Fraction(2 * (n + 1) * (2 * n * n + 4 * n + 1), (2 * n + 1) * (2 * n + 3)) * h(n)
        - Fraction(n * (n + 1), 2 * n + 1) * h(n - 1),
    )


def _p_three_term(n: int) -> Tuple[Entry, Entry]:
    return (
        p_poly(n),
        (X**2 - (8 * n * n + 4 * n + 1)) * p_poly(n - 1)
        + 4 * n * n * (X**2 - (2 * n - 1) ** 2) * p_poly(n - 2),
    )


# id -> (least n, n -> (lhs, rhs))
RECURRENCE_IDENTITIES: Dict[str, Tuple[int, Callable[[int], Tuple[Entry, Entry]]]] = {
    "alt2": (1, _alt2_recurrence),
    "alt1": (1, _alt1_recurrence),
    "odd_harmonic": (0, _odd_harmonic_identity),
    "harmonic_odd_index": (1, _odd_index_harmonic_recurrence),
    "harmonic_pair": (1, _harmonic_pair_recurrence),
    "p_three_term": (2, _p_three_term),
}


def shift_recurrence_targets(identifier: str, n: int) -> Tuple[Entry, Entry]:
    """
    Both sides of one of the recurrences obeyed by the correction factors.

    Raises:
        UnknownIdentifierError: For an unknown identifier.
        ValueError: If n is below the identity's range.
    """
    if identifier not in RECURRENCE_IDENTITIES:
        raise UnknownIdentifierError("recurrence identity", identifier, RECURRENCE_IDENTITIES)
    least, sides = RECURRENCE_IDENTITIES[identifier]
    _check(identifier, n, least)
    return sides(n)
