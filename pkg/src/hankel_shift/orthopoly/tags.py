"""
Closed-form recurrence coefficients for the Bernoulli/Euler families.

Each tag names a sequence (given as a spec string) together with explicit
formulas for its s_n and t_n. x-dependent families have Poly-valued
coefficients in x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict

from ..errors import UnknownIdentifierError
from ..exact.matrix import Entry
from ..exact.poly import Poly
from ..exact.rational import binom
from ..sequences.grammar import parse_spec
from ..sequences.spec import SequenceSpec
from .recurrence import ThreeTermRecurrence

F = Fraction
X2 = Poly([0, 0, 1])  # x^2


@dataclass(frozen=True)
class RecurrenceTag:
    """
    Attributes:
        tag: Stable identifier.
        spec_text: The sequence the coefficients belong to.
        s: n -> s_n for n >= 0.
        t: n -> t_n for n >= 1.
        s_initial: Values of s_n that do not follow the general formula.
    """

    tag: str
    spec_text: str
    s: Callable[[int], Entry]
    t: Callable[[int], Entry]
    description: str = ""
    s_initial: Dict[int, Entry] = field(default_factory=dict)

    @property
    def spec(self) -> SequenceSpec:
        return parse_spec(self.spec_text)

    @property
    def is_polynomial(self) -> bool:
        return self.spec.is_polynomial

    def s_at(self, n: int) -> Entry:
        if n in self.s_initial:
            return self.s_initial[n]
        return self.s(n)

    def recurrence(self, n_max: int) -> ThreeTermRecurrence:
        return ThreeTermRecurrence(
            tuple(self.s_at(n) for n in range(n_max + 1)),
            tuple(self.t(n) for n in range(1, n_max + 1)),
            f"closed-form:{self.tag}",
        )


def _tag(*args, **kwargs) -> RecurrenceTag:
    entry = RecurrenceTag(*args, **kwargs)
    TAGS[entry.tag] = entry
    return entry


TAGS: Dict[str, RecurrenceTag] = {}

_tag(
    "B",
    "B[k]",
    lambda n: F(1, 2),
    lambda n: F(-(n**4), 4 * (2 * n + 1) * (2 * n - 1)),
    "Bernoulli numbers B_k",
)
_tag(
    "E1",
    "E1[k]",
    lambda n: F(-1, 2),
    lambda n: F(-(n**2), 4),
    "Euler polynomials at one, E_k(1)",
)
_tag(
    "E1odd",
    "E1[2k+1]",
    lambda n: F((2 * n + 1) ** 2, 2),
    lambda n: F(n**2 * (2 * n + 1) * (2 * n - 1), 4),
    "E_{2k+1}(1)",
)
_tag(
    "B2k2m",
    "(2^(2k+2)-1)*B[2k+2]",
    lambda n: F((2 * n + 1) * (n + 1)),
    lambda n: F(n**3 * (n + 1)),
    "(2^{2k+2}-1) B_{2k+2}",
)
_tag(
    "Eodd_half",
    "Ehalf[2k+1]",
    lambda n: F((2 * n + 1) ** 2, 2) + F(1, 4) - X2 / 4,
    lambda n: F(n**2, 4) * (4 * n**2 - X2),
    "E_{2k+1}((x+1)/2)",
)
_tag(
    "Eeven2_half",
    "Ehalf[2k+2]",
    lambda n: F((2 * n + 1) * (n + 1)) + F(1, 4) - X2 / 4,
    lambda n: F(n**2, 4) * ((2 * n + 1) ** 2 - X2),
    "E_{2k+2}((x+1)/2)",
)
_tag(
    "B2k2",
    "B[2k+2]",
    lambda n: F((n + 1) * (2 * n + 1) * (4 * n**2 + 6 * n + 1), (4 * n + 1) * (4 * n + 5)),
    lambda n: F(
        n**3 * (n + 1) * (2 * n - 1) * (2 * n + 1) ** 3,
        (4 * n - 1) * (4 * n + 1) ** 2 * (4 * n + 3),
    ),
    "B_{2k+2}",
)
_tag(
    "B2k2w",
    "(2k+3)*B[2k+2]",
    lambda n: F((n + 1) ** 2 * (2 * n**2 + 4 * n + 1), (2 * n + 1) * (2 * n + 3)),
    lambda n: F(n**3 * (n + 1) ** 3, 4 * (2 * n + 1) ** 2),
    "(2k+3) B_{2k+2}",
)
_tag(
    "E1odd_fact",
    "E1[2k+1]/(2k+1)!",
    lambda n: F(1, 2 * (4 * n - 1) * (4 * n + 3)),
    lambda n: F(1, 16 * (4 * n - 3) * (4 * n - 1) ** 2 * (4 * n + 1)),
    "E_{2k+1}(1)/(2k+1)!",
    # the general formula does not hold at n = 0
    s_initial={0: F(1, 12)},
)
_tag(
    "Eeven_half",
    "Ehalf[2k]",
    lambda n: F(2 * n**2 + n) + F(1, 4) - X2 / 4,
    lambda n: F(n**2, 4) * ((2 * n - 1) ** 2 - X2),
    "E_{2k}((x+1)/2)",
)
_tag(
    "E1_fact_shift",
    "E1[k+1]/(k+1)!",
    lambda n: F(0),
    lambda n: F(-1, 4 * (2 * n - 1) * (2 * n + 1)),
    "E_{k+1}(1)/(k+1)!",
)
_tag(
    "Bodd_half",
    "Bhalf[2k+1]",
    lambda n: binom(n + 1, 2) + F(1, 4) - X2 / 4,
    lambda n: F(n**4, 4 * (2 * n + 1) * (2 * n - 1)) * (n**2 - X2),
    "B_{2k+1}((x+1)/2)",
)


def tagged_recurrence(tag: str, n_max: int = 10) -> ThreeTermRecurrence:
    """
    The closed-form recurrence of a tagged family, materialized up to n_max.

    Raises:
        UnknownIdentifierError: If the tag is not known.
    """
    if tag not in TAGS:
        raise UnknownIdentifierError("recurrence tag", tag, TAGS)
    return TAGS[tag].recurrence(n_max)


def tag_spec(tag: str) -> SequenceSpec:
    if tag not in TAGS:
        raise UnknownIdentifierError("recurrence tag", tag, TAGS)
    return TAGS[tag].spec
