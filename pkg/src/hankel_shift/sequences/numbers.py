"""
Bernoulli and Euler numbers and polynomials.

The numbers are produced by their convolution recurrences and kept in
append-only tables guarded by a lock, so concurrent callers always observe the
same values.
"""

import logging
import threading
from fractions import Fraction
from functools import lru_cache
from typing import List

from ..exact.poly import Poly
from ..exact.rational import binom

logger = logging.getLogger(__name__)

_lock = threading.Lock()
_bernoulli: List[Fraction] = [Fraction(1)]
_euler: List[Fraction] = [Fraction(1)]


def _check_index(name: str, n: int) -> None:
    if n < 0:
        raise ValueError(f"{name} is undefined for negative index (got {n})")


def bernoulli_number(n: int) -> Fraction:
    """
    The Bernoulli number B_n (with B_1 = -1/2).

    Uses sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
    """
    _check_index("bernoulli_number", n)
    with _lock:
        if len(_bernoulli) <= n:
            logger.debug("Extending Bernoulli table from %d to %d", len(_bernoulli), n + 1)
        while len(_bernoulli) <= n:
            m = len(_bernoulli)
            if m > 1 and m % 2 == 1:
                _bernoulli.append(Fraction(0))
                continue
            total = sum((binom(m + 1, j) * _bernoulli[j] for j in range(m)), Fraction(0))
            _bernoulli.append(-total / (m + 1))
        return _bernoulli[n]


def euler_number(n: int) -> Fraction:
    """
    The Euler number E_n (E_0 = 1, E_2 = -1, E_4 = 5, odd ones vanish).

    Uses sum_{j even} C(n, j) E_{n-j} = 0 for n >= 1.
    """
    _check_index("euler_number", n)
    with _lock:
        if len(_euler) <= n:
            logger.debug("Extending Euler table from %d to %d", len(_euler), n + 1)
        while len(_euler) <= n:
            m = len(_euler)
            if m % 2 == 1:
                _euler.append(Fraction(0))
                continue
            total = sum(
                (binom(m, j) * _euler[m - j] for j in range(2, m + 1, 2)), Fraction(0)
            )
            _euler.append(-total)
        return _euler[n]


@lru_cache(maxsize=None)
def bernoulli_poly(n: int, variable: str = "x") -> Poly:
    """B_n(x) = sum_j C(n, j) B_j x^{n-j}."""
    _check_index("bernoulli_poly", n)
    coefficients = [binom(n, n - power) * bernoulli_number(n - power) for power in range(n + 1)]
    return Poly(coefficients, variable)


@lru_cache(maxsize=None)
def euler_poly(n: int, variable: str = "x") -> Poly:
    """E_n(x), from 2^n E_n(x) = sum_j C(n, j) E_j (2x - 1)^{n-j}."""
    _check_index("euler_poly", n)
    two_x_minus_one = Poly([-1, 2], variable)
    total = Poly((), variable)
    power = Poly([1], variable)
    for j in range(n, -1, -1):
        # power == (2x - 1)^{n-j}
        total = total + binom(n, j) * euler_number(j) * power
        power = power * two_x_minus_one
    return total / Fraction(2**n)


def euler_at_one(k: int) -> Fraction:
    """E_k(1) = (2 / (k+1)) (2^{k+1} - 1) B_{k+1} for k >= 1, and E_0(1) = 1."""
    _check_index("euler_at_one", k)
    if k == 0:
        return Fraction(1)
    return Fraction(2, k + 1) * (2 ** (k + 1) - 1) * bernoulli_number(k + 1)


_HALF_SHIFT = (Fraction(1, 2), Fraction(1, 2))


@lru_cache(maxsize=None)
def euler_shifted_half(n: int, variable: str = "x") -> Poly:
    """E_n((x+1)/2) as a polynomial in x."""
    return euler_poly(n, variable).compose(Poly(_HALF_SHIFT, variable))


@lru_cache(maxsize=None)
def bernoulli_shifted_half(n: int, variable: str = "x") -> Poly:
    """B_n((x+1)/2) as a polynomial in x."""
    return bernoulli_poly(n, variable).compose(Poly(_HALF_SHIFT, variable))
