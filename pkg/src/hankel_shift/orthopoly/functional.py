from __future__ import annotations

from fractions import Fraction
from typing import List

from ..exact.matrix import Entry
from ..exact.poly import Poly
from ..hankel import hankel_det
from ..sequences.spec import SequenceSpec


class MomentFunctional:
    """
    The linear functional L on polynomials in y with L(y^k) = c_k.

    Moments are fetched from the sequence on demand and kept per instance.
    """

    def __init__(self, spec: SequenceSpec):
        self._spec = spec
        self._moments: List[Entry] = []

    @property
    def spec(self) -> SequenceSpec:
        return self._spec

    def moment(self, k: int) -> Entry:
        while len(self._moments) <= k:
            self._moments.append(self._spec.term(len(self._moments)))
        return self._moments[k]

    def __call__(self, p: Poly) -> Entry:
        total: Entry = Fraction(0)
        for k, coefficient in enumerate(p.coefficients):
            if coefficient:
                total = total + coefficient * self.moment(k)
        return total


def apply_moment_functional(spec: SequenceSpec, p: Poly) -> Entry:
    """L(p): replace y^k by term(spec, k) and sum."""
    return MomentFunctional(spec)(p)


def norm_ratio(spec: SequenceSpec, n: int) -> Entry:
    """zeta_n = H_n / H_{n-1}, the value of L(P_n^2)."""
    return hankel_det(spec, n) / hankel_det(spec, n - 1)
