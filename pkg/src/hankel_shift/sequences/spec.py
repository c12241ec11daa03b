from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import List, Optional

from ..errors import MalformedSpecError
from ..exact.matrix import Entry, to_entry
from ..exact.poly import Poly
from ..exact.rational import factorial
from .numbers import (
    bernoulli_number,
    bernoulli_poly,
    bernoulli_shifted_half,
    euler_at_one,
    euler_number,
    euler_poly,
    euler_shifted_half,
)


class Family(Enum):
    """The base sequences; the value is the token used in spec strings."""

    BERNOULLI_NUMBER = "B"
    BERNOULLI_POLY = "Bx"
    EULER_NUMBER = "E"
    EULER_POLY = "Ex"
    EULER_AT_ONE = "E1"
    EULER_SHIFTED_HALF = "Ehalf"
    BERNOULLI_SHIFTED_HALF = "Bhalf"

    @property
    def is_polynomial(self) -> bool:
        return self in _POLY_FAMILIES

    def value_at(self, i: int, variable: str = "x") -> Entry:
        """The i-th member of the family."""
        if self == Family.BERNOULLI_NUMBER:
            return bernoulli_number(i)
        elif self == Family.EULER_NUMBER:
            return euler_number(i)
        elif self == Family.EULER_AT_ONE:
            return euler_at_one(i)
        elif self == Family.BERNOULLI_POLY:
            return bernoulli_poly(i, variable)
        elif self == Family.EULER_POLY:
            return euler_poly(i, variable)
        elif self == Family.EULER_SHIFTED_HALF:
            return euler_shifted_half(i, variable)
        return bernoulli_shifted_half(i, variable)

    @staticmethod
    def from_token(token: str) -> Family:
        for family in Family:
            if family.value == token:
                return family
        raise ValueError(
            f"Invalid family token '{token}'. Valid values are: {', '.join(f.value for f in Family)}"
        )


_POLY_FAMILIES = frozenset(
    {
        Family.BERNOULLI_POLY,
        Family.EULER_POLY,
        Family.EULER_SHIFTED_HALF,
        Family.BERNOULLI_SHIFTED_HALF,
    }
)


class Scale(Enum):
    """Per-term multipliers, all functions of the family index i."""

    NONE = "none"
    TIMES_INDEX_PLUS_ONE = "times(i+1)"
    TIMES_TWO_POWER_MINUS_ONE = "times(2^i-1)"
    DIV_FACTORIAL = "div(i!)"

    def apply(self, value: Entry, i: int) -> Entry:
        if self == Scale.TIMES_INDEX_PLUS_ONE:
            return value * (i + 1)
        elif self == Scale.TIMES_TWO_POWER_MINUS_ONE:
            return value * (2**i - 1)
        elif self == Scale.DIV_FACTORIAL:
            return value / factorial(i)
        return value


@dataclass(frozen=True)
class SequenceSpec:
    """
    One of the Bernoulli/Euler sequences, described without materializing it.

    The k-th term of the base sequence is `scale(family[m*k + c])` where the
    scale acts on the family index i = m*k + c. With a head override α, the
    described sequence is the shifted one: term(0) = α and term(k) = base(k-1).

    Attributes:
        family: The base family.
        multiplier: m >= 1 of the index map.
        offset: c >= 0 of the index map.
        scale: The multiplier rule.
        head_override: α, or None for an unshifted sequence.
        variable: Variable of polynomial families.
    """

    family: Family
    multiplier: int = 1
    offset: int = 0
    scale: Scale = Scale.NONE
    head_override: Optional[Entry] = None
    variable: str = "x"

    def __post_init__(self):
        if self.multiplier < 1:
            raise MalformedSpecError(
                f"Index map multiplier must be >= 1 (got {self.multiplier})"
            )
        if self.offset < 0:
            raise MalformedSpecError(
                f"Index map {self.multiplier}k{self.offset:+d} reaches negative indices"
            )
        if self.head_override is not None:
            object.__setattr__(self, "head_override", to_entry(self.head_override))

    @property
    def is_polynomial(self) -> bool:
        return self.family.is_polynomial or isinstance(self.head_override, Poly)

    @property
    def is_shifted(self) -> bool:
        return self.head_override is not None

    def index(self, k: int) -> int:
        """Family index of the k-th term of the base sequence."""
        return self.multiplier * k + self.offset

    def base_term(self, k: int) -> Entry:
        i = self.index(k)
        return self.scale.apply(self.family.value_at(i, self.variable), i)

    def term(self, k: int) -> Entry:
        if k < 0:
            raise MalformedSpecError(f"Term index must be >= 0 (got {k})")
        if self.head_override is not None:
            if k == 0:
                return self._homogeneous(self.head_override)
            return self._homogeneous(self.base_term(k - 1))
        return self._homogeneous(self.base_term(k))

    def terms(self, count: int) -> List[Entry]:
        return [self.term(k) for k in range(count)]

    def _homogeneous(self, value: Entry) -> Entry:
        if self.is_polynomial and not isinstance(value, Poly):
            return Poly([value], self.variable)
        return value

    def base(self) -> SequenceSpec:
        """The unshifted sequence c behind a shifted one."""
        return replace(self, head_override=None)

    def shifted(self, alpha) -> SequenceSpec:
        """b_0 = alpha, b_k = c_{k-1}."""
        return replace(self, head_override=alpha)

    def left_shift(self, steps: int = 1) -> SequenceSpec:
        """The sequence k -> term(k + steps)."""
        if steps < 0:
            raise ValueError(f"Left shift needs steps >= 0 (got {steps})")
        if steps == 0:
            return self
        if self.head_override is not None:
            return self.base().left_shift(steps - 1)
        return replace(self, offset=self.offset + steps * self.multiplier)

    def __str__(self) -> str:
        from .grammar import format_spec

        try:
            return format_spec(self)
        except ValueError:
            # polynomial head overrides have no text form
            return repr(self)


def term(spec: SequenceSpec, k: int) -> Entry:
    """The k-th term of the described sequence."""
    return spec.term(k)
