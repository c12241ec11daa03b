"""
Three-term recurrences of monic orthogonal polynomials and their extraction
from Hankel determinants.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from ..errors import HankelDegeneracyError, InsufficientCoefficientsError
from ..exact.matrix import Entry, det, entry_at, is_zero
from ..exact.poly import Poly
from ..exact.rational import sign_power
from ..hankel import hankel_det_of_terms
from ..sequences.spec import SequenceSpec

logger = logging.getLogger(__name__)

EXTRACTED = "extracted-from-moments"


@dataclass(frozen=True)
class ThreeTermRecurrence:
    """
    Coefficients (s_n), (t_n) of P_{n+1}(y) = (y + s_n) P_n(y) - t_n P_{n-1}(y).

    `s` holds s_0, s_1, ... and `t` holds t_1, t_2, ...; use `s_at` / `t_at`
    for 1-based t indexing. Entries are Fractions or, for x-dependent families,
    Polys in x.

    Attributes:
        s: s_0 .. s_N.
        t: t_1 .. t_M.
        source: "extracted-from-moments" or "closed-form:<tag>".
    """

    s: Tuple[Entry, ...]
    t: Tuple[Entry, ...]
    source: str = EXTRACTED

    @property
    def s_max(self) -> int:
        return len(self.s) - 1

    @property
    def t_max(self) -> int:
        return len(self.t)

    @property
    def is_polynomial(self) -> bool:
        return any(isinstance(v, Poly) for v in self.s + self.t)

    def s_at(self, n: int) -> Entry:
        if not 0 <= n < len(self.s):
            raise InsufficientCoefficientsError(
                f"s_{n} requested but only s_0..s_{self.s_max} are available ({self.source})"
            )
        return self.s[n]

    def t_at(self, n: int) -> Entry:
        if not 1 <= n <= len(self.t):
            raise InsufficientCoefficientsError(
                f"t_{n} requested but only t_1..t_{self.t_max} are available ({self.source})"
            )
        return self.t[n - 1]

    def specialize(self, x) -> ThreeTermRecurrence:
        """Evaluate every polynomial coefficient at x."""
        return ThreeTermRecurrence(
            tuple(entry_at(v, x) for v in self.s),
            tuple(entry_at(v, x) for v in self.t),
            f"{self.source}@x={x}",
        )


def _bordered_coefficient(terms: Sequence[Entry], n: int) -> Entry:
    # det of rows 0..n-1 and columns {0..n-2, n} of the Hankel array
    cols = list(range(n - 1)) + [n]
    return det([[terms[i + j] for j in cols] for i in range(n)])


def _subleading(terms: Sequence[Entry], dets: Sequence[Entry], n: int) -> Entry:
    """Coefficient of y^{n-1} in the monic P_n; dets[n] is H_{n-1}."""
    if n == 0:
        return Fraction(0)
    return -_bordered_coefficient(terms, n) / dets[n]


def extract_recurrence(spec: SequenceSpec, n_max: int) -> ThreeTermRecurrence:
    """
    Recurrence coefficients s_0..s_{n_max}, t_1..t_{n_max} of a sequence.

    t_n = H_n H_{n-2} / H_{n-1}^2 (H_{-1} = 1). s_n follows from the Hankel
    determinants of the sequence and of its left shift; when the left shift is
    degenerate or the entries are polynomials, s_n is read off the subleading
    coefficients of the bordered-determinant polynomials instead.

    Raises:
        HankelDegeneracyError: If some H_n, n <= n_max, vanishes.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0 (got {n_max})")
    terms = spec.terms(2 * n_max + 3)
    name = str(spec)
    # h[n + 1] == H_n, so h[0] == H_{-1}
    h: List[Entry] = [hankel_det_of_terms(terms, n) for n in range(-1, n_max + 1)]
    for n in range(n_max + 1):
        if is_zero(h[n + 1]):
            raise HankelDegeneracyError(n, name)

    t = tuple(h[n + 1] * h[n - 1] / (h[n] * h[n]) for n in range(1, n_max + 1))

    polynomial = any(isinstance(v, Poly) for v in terms)
    shifted = terms[1:]
    # g[n + 2] == H_n(c_{k+1}), g[0] == H_{-2} == 0
    g: List[Entry] = [Fraction(0), Fraction(1)] + [
        hankel_det_of_terms(shifted, n) for n in range(n_max + 1)
    ]
    s: List[Entry] = []
    for n in range(n_max + 1):
        if polynomial or is_zero(g[n + 1]):
            if not polynomial:
                logger.debug("Left shift of %s degenerate at n=%d, using bordered determinants", name, n - 1)
            a_next = _subleading(terms, h, n + 1)
            a_here = _subleading(terms, h, n)
            s.append(a_next - a_here)
            continue
        h_n, h_prev = h[n + 1], h[n]
        s.append(-(h_prev * g[n + 2] / h_n + h_n * g[n] / h_prev) / g[n + 1])
    logger.debug("Extracted recurrence of %s up to n=%d", name, n_max)
    return ThreeTermRecurrence(tuple(s), t, EXTRACTED)


def bordered_polynomial(spec: SequenceSpec, n: int, variable: str = "y") -> Poly:
    """
    P_n(y) = det(bordered Hankel matrix) / H_{n-1}, for a scalar sequence.

    The bordered matrix has rows (c_{i}, ..., c_{i+n}) for i < n and a last
    row (1, y, ..., y^n).

    Raises:
        HankelDegeneracyError: If H_{n-1} vanishes.
    """
    if spec.is_polynomial:
        raise ValueError("bordered_polynomial needs a scalar sequence")
    if n == 0:
        return Poly([1], variable)
    terms = spec.terms(2 * n)
    normalizer = hankel_det_of_terms(terms, n - 1)
    if is_zero(normalizer):
        raise HankelDegeneracyError(n - 1, str(spec))
    rows = [[terms[i + j] for j in range(n + 1)] for i in range(n)]
    coefficients = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1 :] for row in rows]
        coefficients.append(sign_power(n + j) * det(minor) / normalizer)
    return Poly(coefficients, variable)


def monic_op(rec: ThreeTermRecurrence, n: int, variable: str = "y") -> Poly:
    """
    Monic P_n(y) from the three-term recurrence, P_0 = 1, P_1 = y + s_0.

    Raises:
        InsufficientCoefficientsError: If the recurrence stops short of n.
    """
    if rec.is_polynomial:
        raise ValueError("monic_op needs scalar coefficients; specialize the recurrence at x first")
    if n < 0:
        raise ValueError(f"n must be >= 0 (got {n})")
    y = Poly.gen(variable)
    previous, current = Poly((), variable), Poly([1], variable)
    for k in range(n):
        step = (y + rec.s_at(k)) * current
        if k > 0:
            step = step - rec.t_at(k) * previous
        previous, current = current, step
    return current
