"""
Verifiers for the shifted-sequence Hankel identities.

Each proposition compares H_n of a sequence, computed by brute-force
determinant, with a right-hand side assembled from closed forms, auxiliary
sequences and factorials. A mismatch is reported, never raised.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from ..errors import UnknownIdentifierError
from ..exact.matrix import Entry
from ..exact.poly import Poly
from ..exact.rational import factorial, sign_power
from ..hankel import hankel_dets
from ..sequences.grammar import parse_spec
from .aux import K_rational, alt1, alt2, h_rec, harmonic, k_const, odd_harmonic, p_poly
from .closed_forms import closed_form
from .report import VerificationRecord, VerificationReport

logger = logging.getLogger(__name__)

F = Fraction
fact = factorial
X = Poly.gen("x")

# rational points avoiding the poles x = ±1, ±3, ...
SPOT_CHECK_POINTS = (F(0), F(2), F(4))


@dataclass(frozen=True)
class Proposition:
    """
    Attributes:
        id: "P3.1" ... "P7.3".
        spec_text: The sequence on the left-hand side.
        least_n: First n the identity is stated for.
        rhs: n -> right-hand side, for the plain propositions.
        records: Custom record builder (n_max -> records) for P5.2 and P7.2.
    """

    id: str
    spec_text: str
    least_n: int = 1
    rhs: Optional[Callable[[int], Entry]] = None
    records: Optional[Callable[["Proposition", int], List[VerificationRecord]]] = None
    description: str = ""

    def build_records(self, n_max: int) -> List[VerificationRecord]:
        if self.records is not None:
            return self.records(self, n_max)
        dets = hankel_dets(parse_spec(self.spec_text), n_max)
        return [
            VerificationRecord(self.id, n, dets[n], self.rhs(n))
            for n in range(self.least_n, n_max + 1)
        ]


def _p52_records(prop: Proposition, n_max: int) -> List[VerificationRecord]:
    dets = hankel_dets(parse_spec(prop.spec_text), 2 * n_max)

    def product(n):
        value = F(1)
        for ell in range(1, n + 1):
            value *= F(ell**3 * (ell + 1) * (2 * ell + 1) ** 3 * (2 * ell - 1), 16) ** (n + 1 - ell)
        return value

    records = []
    for n in range(prop.least_n, n_max + 1):
        even, odd = dets[2 * n], dets[2 * n - 1]
        records.append(
            VerificationRecord(
                prop.id, n, even / odd, -F((n + 1) * fact(2 * n + 1) ** 2, 2 ** (4 * n + 2)), "ratio"
            )
        )
        records.append(
            VerificationRecord(
                prop.id,
                n,
                even,
                sign_power(n + 1) * odd_harmonic(n) / 2 ** (3 * n + 2) * product(n),
                "even",
            )
        )
        records.append(
            VerificationRecord(
                prop.id,
                n,
                odd,
                sign_power(n) * 2**n * odd_harmonic(n) / ((n + 1) * fact(2 * n + 1) ** 2) * product(n),
                "odd",
            )
        )
    return records


def _p72_records(prop: Proposition, n_max: int) -> List[VerificationRecord]:
    dets = hankel_dets(parse_spec(prop.spec_text), n_max)
    records = []
    for n in range(prop.least_n, n_max + 1):
        poles = Poly([1])
        for ell in range(1, n + 1):
            poles = poles * (X**2 - (2 * ell - 1) ** 2)
        base = closed_form("7.10", n, X)
        records.append(
            VerificationRecord(
                prop.id,
                n,
                dets[n] * fact(n) ** 2 * poles,
                sign_power(n - 1) * 4 * p_poly(n - 1) * base,
                "cleared",
            )
        )
        k_n = K_rational(n)
        for x in SPOT_CHECK_POINTS:
            rhs = (
                sign_power(n - 1)
                * F(4)
                / (fact(n) ** 2 * (x * x - 1))
                * k_n(x)
                * closed_form("7.10", n, x)
            )
            records.append(VerificationRecord(prop.id, n, dets[n].evaluate(x), rhs, f"x={x}"))
    return records


PROPOSITIONS: Dict[str, Proposition] = {}


def _proposition(*args, **kwargs) -> None:
    prop = Proposition(*args, **kwargs)
    PROPOSITIONS[prop.id] = prop


_proposition(
    "P3.1",
    "shift0:B[k-1]",
    rhs=lambda n: 2 * fact(2 * n + 1) / fact(n) ** 3 * alt2(n) * closed_form("3.7", n),
    description="b_0 = 0, b_k = B_{k-1}",
)
_proposition(
    "P3.2",
    "shift0:E1[k-1]",
    rhs=lambda n: sign_power(n - 1) * F(2 ** (n + 1)) / fact(n) * alt1(n) * closed_form("3.12", n),
    description="b_0 = 0, b_k = E_{k-1}(1)",
)
_proposition(
    "P3.3",
    "shift0:E1[2k-1]",
    rhs=lambda n: sign_power(n)
    * F(2 ** (2 * n + 1))
    / fact(2 * n + 1)
    * harmonic(n)
    * closed_form("3.15", n),
    description="b_0 = 0, b_k = E_{2k-1}(1)",
)
_proposition(
    "P3.4",
    "(2^(2k)-1)*B[2k]",
    rhs=lambda n: sign_power(n) / (fact(n) * fact(n + 1)) * harmonic(n) * closed_form("3.16", n),
    description="(2^{2k}-1) B_{2k}",
)
_proposition(
    "P3.5",
    "shift0:(2k-1)*E[2k-2]",
    rhs=lambda n: sign_power(n) / (2**n * fact(n)) ** 4 * h_rec(n) * closed_form("cor52", n),
    description="b_0 = 0, b_k = (2k-1) E_{2k-2}",
)
_proposition(
    "P3.6",
    "E1[k]/k!",
    rhs=lambda n: fact(2 * n + 2) / fact(n + 1) * closed_form("3.25", n),
    description="E_k(1)/k!",
)
_proposition(
    "P5.1",
    "E1[2k+5]",
    least_n=0,
    rhs=lambda n: closed_form("5.4", n),
    description="E_{2k+5}(1)",
)
_proposition(
    "P5.2",
    "E1[k+3]",
    records=_p52_records,
    description="E_{k+3}(1), checkerboard type",
)
_proposition(
    "P6.1",
    "B[2k]",
    least_n=0,
    rhs=lambda n: sign_power(n)
    * fact(4 * n + 3)
    / ((n + 1) * fact(2 * n + 1) ** 3)
    * harmonic(2 * n + 1)
    * closed_form("1.6", n),
    description="B_{2k}",
)
_proposition(
    "P6.2",
    "(2k+1)*B[2k]",
    least_n=0,
    rhs=lambda n: sign_power(n)
    * fact(2 * n + 2)
    / (fact(n) * fact(n + 1) ** 3)
    * (harmonic(n) + harmonic(n + 1))
    * closed_form("6.3", n),
    description="(2k+1) B_{2k}",
)
_proposition(
    "P6.3",
    "shift0:E1[2k-1]/(2k-1)!",
    rhs=lambda n: sign_power(n) * fact(4 * n + 2) / fact(2 * n - 1) * closed_form("6a.7a", n),
    description="b_0 = 0, b_k = E_{2k-1}(1)/(2k-1)!",
)
_proposition(
    "P7.2",
    "shift0:Ehalf[2k-2]",
    records=_p72_records,
    description="b_0 = 0, b_k = E_{2k-2}((x+1)/2)",
)
_proposition(
    "P7.3",
    "shift0:E[2k-2]",
    rhs=lambda n: sign_power(n) / (4**n * fact(n) ** 2) * k_const(n) * closed_form("7.10a", n),
    description="b_0 = 0, b_k = E_{2k-2}",
)

PROPOSITION_IDS: List[str] = list(PROPOSITIONS)


def verify_proposition(proposition: str, n_max: int) -> VerificationReport:
    """
    Check one proposition for every n from its first index up to n_max.

    Raises:
        UnknownIdentifierError: If the id is unknown.
    """
    if proposition not in PROPOSITIONS:
        raise UnknownIdentifierError("proposition", proposition, PROPOSITIONS)
    prop = PROPOSITIONS[proposition]
    if n_max < max(prop.least_n, 1):
        raise ValueError(f"n_max must be >= 1 (got {n_max})")
    started = time.perf_counter()
    records = prop.build_records(n_max)
    report = VerificationReport(prop.id, prop.least_n, n_max, records, time.perf_counter() - started)
    logger.info("%s verified up to n=%d: %s in %.3fs", prop.id, n_max, report.status, report.seconds)
    for failure in report.failures:
        logger.warning(
            "%s n=%d %s: lhs %s != rhs %s", prop.id, failure.n, failure.part, failure.lhs, failure.rhs
        )
    return report


def verify_all(
    ids: Optional[Iterable[str]] = None, n_max: int = 6, jobs: int = 1
) -> List[VerificationReport]:
    """
    Verify several propositions, optionally on a thread pool.

    Reports come back in the order of `ids` (all propositions by default)
    regardless of completion order.
    """
    selected: Sequence[str] = list(ids) if ids is not None else PROPOSITION_IDS
    for identifier in selected:
        if identifier not in PROPOSITIONS:
            raise UnknownIdentifierError("proposition", identifier, PROPOSITIONS)
    if jobs <= 1:
        return [verify_proposition(identifier, n_max) for identifier in selected]
    with ThreadPoolExecutor(max_workers=jobs) as executor:
        futures = [executor.submit(verify_proposition, identifier, n_max) for identifier in selected]
        return [future.result() for future in futures]
