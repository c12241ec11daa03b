"""
Dense univariate polynomials with exact rational coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import sympy

from ..errors import InexactDivisionError
from .rational import as_rational, format_rational, parse_rational

VARIABLES = ("x", "y")

_LIST_RE = re.compile(r"^\s*\[(.*)\]\s*$")


class Poly:
    """
    A polynomial in one variable (`x` or `y`) over the rationals.

    Coefficients are stored lowest degree first, with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple. Instances are
    immutable.
    """

    __slots__ = ("_coeffs", "_var")

    def __init__(self, coefficients: Iterable = (), variable: str = "x"):
        if variable not in VARIABLES:
            raise ValueError(
                f"Invalid polynomial variable '{variable}'. Valid values are: {', '.join(VARIABLES)}"
            )
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(coeffs)
        self._var = variable

    # === Constructors

    @classmethod
    def constant(cls, value, variable: str = "x") -> Poly:
        return cls([value], variable)

    @classmethod
    def gen(cls, variable: str = "x") -> Poly:
        """The polynomial `x` (or `y`) itself."""
        return cls([0, 1], variable)

    @classmethod
    def parse(cls, text: str, variable: str = "x") -> Poly:
        """
        Parse the wire format, e.g. "[-13, 0, 1]" for x^2 - 13.

        Raises:
            ValueError: If the text is not a bracketed list of rationals.
        """
        match = _LIST_RE.match(text)
        if not match:
            raise ValueError(f"Invalid polynomial literal: {text!r}")
        body = match.group(1).strip()
        if not body:
            return cls((), variable)
        return cls([parse_rational(part) for part in body.split(",")], variable)

    # === Properties

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def variable(self) -> str:
        return self._var

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial."""
        if not self.is_constant():
            raise ValueError(f"Polynomial {self} is not constant")
        return self.coefficient(0)

    # === Arithmetic helpers

    def _coerce(self, other) -> Optional[Poly]:
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly([other], self._var)
        return None

    def _join_variable(self, other: Poly) -> str:
        if other._var == self._var or other.is_constant():
            return self._var
        if self.is_constant():
            return other._var
        raise ValueError(
            f"Cannot combine polynomials in different variables ({self._var} and {other._var})"
        )

    # === Arithmetic

    def __neg__(self) -> Poly:
        return Poly([-c for c in self._coeffs], self._var)

    def __pos__(self) -> Poly:
        return self

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._join_variable(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return Poly(
            [self.coefficient(i) + other.coefficient(i) for i in range(size)], var
        )

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        var = self._join_variable(other)
        if not self._coeffs or not other._coeffs:
            return Poly((), var)
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return Poly(product, var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Polynomial powers need an integer exponent >= 0 (got {exponent})")
        result = Poly([1], self._var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __divmod__(self, other) -> Tuple[Poly, Poly]:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        var = self._join_variable(other)
        remainder: List[Fraction] = list(self._coeffs)
        divisor_degree = other.degree
        lead = other.leading_coefficient
        quotient_size = max(len(remainder) - divisor_degree, 0)
        quotient = [Fraction(0)] * quotient_size
        for shift in range(quotient_size - 1, -1, -1):
            factor = remainder[shift + divisor_degree] / lead
            quotient[shift] = factor
            if factor:
                for i, c in enumerate(other._coeffs):
                    remainder[shift + i] -= factor * c
        return Poly(quotient, var), Poly(remainder[:divisor_degree], var)

    def __floordiv__(self, other) -> Poly:
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[0]

    def __mod__(self, other) -> Poly:
        result = self.__divmod__(other)
        if result is NotImplemented:
            return NotImplemented
        return result[1]

    def __truediv__(self, other) -> Poly:
        """
        Exact division.

        Division by a scalar always succeeds (unless the scalar is zero);
        division by a polynomial must leave no remainder.

        Raises:
            InexactDivisionError: If the divisor does not divide `self`.
        """
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_constant():
            value = other.constant_value()
            if value == 0:
                raise ZeroDivisionError("Polynomial division by zero")
            return Poly([c / value for c in self._coeffs], self._var)
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero():
            raise InexactDivisionError(f"{other} does not divide {self} exactly")
        return quotient

    def __rtruediv__(self, other) -> Poly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    # === Evaluation

    def evaluate(self, value: Union[int, Fraction, Poly]) -> Union[Fraction, Poly]:
        """
        Horner evaluation.

        Args:
            value: A rational (returns a Fraction) or a polynomial (returns the
                composition `self(value)`).
        """
        if isinstance(value, Poly):
            result: Union[Fraction, Poly] = Poly((), value.variable)
        else:
            value = as_rational(value)
            result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    __call__ = evaluate

    def compose(self, inner: Poly) -> Poly:
        """`self(inner(t))` as a polynomial in the variable of `inner`."""
        return self.evaluate(inner)

    def gcd(self, other: Poly) -> Poly:
        """Monic greatest common divisor (zero if both are zero)."""
        common = sympy.gcd(self.to_sympy(), other.to_sympy(self._var))
        if common.is_zero:
            return Poly((), self._var)
        return Poly.from_sympy(common.monic(), self._var)

    def to_sympy(self, variable: Optional[str] = None) -> sympy.Poly:
        return sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self._coeffs)] or [0],
            sympy.Symbol(variable or self._var),
            domain=sympy.QQ,
        )

    @classmethod
    def from_sympy(cls, poly: sympy.Poly, variable: str = "x") -> Poly:
        return cls(
            [Fraction(int(c.p), int(c.q)) for c in reversed(poly.all_coeffs())],
            variable,
        )

    # === Comparison and display

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            if self._coeffs != other._coeffs:
                return False
            return self._var == other._var or self.is_constant()
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.coefficient(0) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.coefficient(0))
        return hash((self._var, self._coeffs))

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        return "[" + ", ".join(format_rational(c) for c in self._coeffs) + "]"

    def __repr__(self) -> str:
        return f"Poly({self}, {self._var!r})"

    def pretty(self) -> str:
        """Human-readable form such as `x^2 - 13`."""
        if not self._coeffs:
            return "0"
        terms: List[str] = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = format_rational(magnitude)
            else:
                monomial = self._var if power == 1 else f"{self._var}^{power}"
                body = monomial if magnitude == 1 else f"{format_rational(magnitude)}*{monomial}"
            terms.append(f"{sign} {body}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_eval(p: Poly, v) -> Fraction:
    """Exact value of `p` at the rational `v`."""
    return p.evaluate(as_rational(v))


def product(factors: Sequence[Poly], variable: str = "x") -> Poly:
    result = Poly([1], variable)
    for factor in factors:
        result = result * factor
    return result
