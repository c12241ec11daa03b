"""
Left-shift calculus (band-matrix determinants d_n and D_n) and the shifted
Hankel engine for sequences b_0 = α, b_k = c_{k-1}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..errors import ConsistencyError, HankelDegeneracyError
from ..exact.matrix import Entry, format_entry, is_zero
from ..hankel import hankel_det_of_terms
from ..sequences.spec import SequenceSpec
from .recurrence import ThreeTermRecurrence, extract_recurrence

logger = logging.getLogger(__name__)

D_MINUS_ONE = Fraction(1)


def jacobi_ds(rec: ThreeTermRecurrence, n: int) -> List[Entry]:
    """[d_{-1}, d_0, ..., d_n]."""
    if n < -1:
        raise ValueError(f"d_n is defined for n >= -1 (got {n})")
    values: List[Entry] = [D_MINUS_ONE]
    if n >= 0:
        values.append(-rec.s_at(0))
    for k in range(1, n + 1):
        values.append(-rec.s_at(k) * values[-1] - rec.t_at(k) * values[-2])
    return values


def jacobi_d(rec: ThreeTermRecurrence, n: int) -> Entry:
    """
    d_n, the determinant of the leading (n+1)x(n+1) block of the band matrix
    with diagonal -s_k, superdiagonal 1 and subdiagonal t_k.

    d_{-1} = 1, d_0 = -s_0, d_{n+1} = -s_{n+1} d_n - t_{n+1} d_{n-1}.
    Satisfies H_n(c_{k+1}) = H_n(c_k) d_n.
    """
    return jacobi_ds(rec, n)[-1]


def double_shift_D(rec: ThreeTermRecurrence, n: int) -> Entry:
    """
    D_n with H_n(c_{k+2}) = H_n(c_k) D_n.

    Evaluated as sum_{l=-1}^{n} d_l^2 prod_{j=l+2}^{n+1} t_j, which avoids
    dividing by the t_j.

    Raises:
        HankelDegeneracyError: If one of t_1..t_{n+1} vanishes.
    """
    if n < 0:
        raise ValueError(f"D_n is defined for n >= 0 (got {n})")
    t = [rec.t_at(j) for j in range(1, n + 2)]
    for j, value in enumerate(t, start=1):
        if is_zero(value):
            raise HankelDegeneracyError(j, rec.source)
    ds = jacobi_ds(rec, n)
    total: Entry = Fraction(0)
    for offset, d in enumerate(ds):
        # d_l with l = offset - 1; the product runs over t_{l+2} .. t_{n+1}
        weight: Entry = Fraction(1)
        for value in t[offset:]:
            weight = weight * value
        total = total + d * d * weight
    return total


@dataclass(frozen=True)
class ShiftEngineState:
    """
    Result of the shifted Hankel engine.

    Attributes:
        alpha: Head term of b.
        r: r_0 .. r_{n_max}, with r_n = H_n(b) / H_{n-1}(c).
        direct: H_0(b) .. H_{n_max}(b) by determinant.
        base_dets: H_{-1}(c) .. H_{n_max-1}(c).
        recurrence: The coefficients that drove r_{n+1} = -s_n r_n - t_n r_{n-1}.
    """

    alpha: Entry
    r: Tuple[Entry, ...]
    direct: Tuple[Entry, ...]
    base_dets: Tuple[Entry, ...]
    recurrence: ThreeTermRecurrence

    @property
    def n_max(self) -> int:
        return len(self.direct) - 1

    @property
    def values(self) -> Dict[int, Entry]:
        """n -> H_n(b) for 1 <= n <= n_max."""
        return {n: self.direct[n] for n in range(1, self.n_max + 1)}

    def via_recurrence(self, n: int) -> Entry:
        """H_n(b) = r_n H_{n-1}(c)."""
        return self.r[n] * self.base_dets[n]


def shifted_hankel(
    spec: SequenceSpec, n_max: int, recurrence: Optional[ThreeTermRecurrence] = None
) -> ShiftEngineState:
    """
    H_n(b) for 1 <= n <= n_max, computed by determinant and by the ratio
    recurrence, which must agree.

    r_1 and r_2 are seeded from direct determinants; for n >= 2 the engine
    uses r_{n+1} = -s_n r_n - t_n r_{n-1} with the recurrence of the base
    sequence c (extracted from c unless one is passed in).

    Raises:
        HankelDegeneracyError: If the base sequence has a vanishing H_n.
        ConsistencyError: If the two computations differ at some n.
    """
    if not spec.is_shifted:
        raise ValueError(f"{spec} has no head override")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1 (got {n_max})")
    base = spec.base()
    if recurrence is None:
        recurrence = extract_recurrence(base, n_max)

    b_terms = spec.terms(2 * n_max + 1)
    c_terms = base.terms(2 * n_max + 1)
    direct = [hankel_det_of_terms(b_terms, n) for n in range(n_max + 1)]
    base_dets = [hankel_det_of_terms(c_terms, n) for n in range(-1, n_max)]
    for n in range(n_max):
        if is_zero(base_dets[n + 1]):
            raise HankelDegeneracyError(n, str(base))

    r: List[Entry] = [direct[0] / base_dets[0]]
    for n in range(1, n_max + 1):
        if n <= 2:
            r.append(direct[n] / base_dets[n])
        else:
            k = n - 1
            r.append(-recurrence.s_at(k) * r[k] - recurrence.t_at(k) * r[k - 1])

    state = ShiftEngineState(
        spec.term(0), tuple(r), tuple(direct), tuple(base_dets), recurrence
    )
    for n in range(1, n_max + 1):
        computed = state.via_recurrence(n)
        if computed != direct[n]:
            raise ConsistencyError(
                f"Shifted Hankel engine disagrees at n={n} for {spec}: "
                f"recurrence gives {format_entry(computed)}, determinant gives {format_entry(direct[n])}",
                n,
            )
    logger.debug("Shift engine agrees with determinants for %s up to n=%d", spec, n_max)
    return state
