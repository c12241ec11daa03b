from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..exact.matrix import Entry
from ..exact.rational import sign_power


def no_sign(n: int) -> int:
    return 0


def sign_n_plus_one(n: int) -> int:
    return n + 1


def sign_triangular(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class StandardForm:
    """
    (-1)^{epsilon(n)} * a^{n+1} * prod_{l=1}^{n} b(l)^{n+1-l}.

    `a` and the values of `b` are Fractions, or Polys in x for the
    polynomial families.
    """

    a: Entry
    b: Callable[[int], Entry]
    epsilon: Callable[[int], int] = no_sign

    def __call__(self, n: int) -> Entry:
        if n < 0:
            raise ValueError(f"Standard form is evaluated at n >= 0 (got {n})")
        value = sign_power(self.epsilon(n)) * self.a ** (n + 1)
        for ell in range(1, n + 1):
            value = value * self.b(ell) ** (n + 1 - ell)
        return value

