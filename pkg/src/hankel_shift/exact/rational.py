"""
Exact scalars.

`fractions.Fraction` is the Rational type of this package: it is always stored
with a positive denominator and coprime numerator/denominator, and its
arithmetic never rounds. This module adds the conversions and the canonical
"p/q" wire format used throughout.
"""

import math
import re
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(value: RationalLike) -> Fraction:
    """
    Coerce an exact scalar to a Fraction.

    Args:
        value: An int or a Fraction. Floats are refused on purpose.

    Raises:
        TypeError: If the value is not exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Expected an exact rational (int or Fraction), got {type(value).__name__}")


def format_rational(value: RationalLike) -> str:
    """Canonical text form: "p/q", or "p" when q = 1."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """
    Parse the canonical text form back into a Fraction.

    Raises:
        ValueError: If the text is not of the form "p" or "p/q".
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"Invalid rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in rational literal: {text!r}")
    return Fraction(numerator, denominator)


def factorial(n: int) -> Fraction:
    """Exact n! for n >= 0."""
    if n < 0:
        raise ValueError(f"factorial is undefined for negative n (got {n})")
    return Fraction(math.factorial(n))


def binom(n: int, k: int) -> Fraction:
    """Exact binomial coefficient; 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom requires n >= 0 (got {n})")
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def sign_power(exponent: int) -> int:
    """(-1)**exponent for any integer exponent."""
    return -1 if exponent % 2 else 1
