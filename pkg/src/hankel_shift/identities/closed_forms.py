"""
Closed-form evaluations of Hankel determinants, their consecutive ratios,
left-shift quotients and shifted-sequence ratios.

Every formula is registered in FORMULAS under a stable id together with the
sequence it describes, so that `brute_force` can recompute it from
determinants.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Optional

from ..errors import UnknownIdentifierError
from ..exact.matrix import Entry
from ..exact.poly import Poly
from ..exact.rational import factorial, sign_power
from ..hankel import hankel_det
from ..sequences.grammar import parse_spec
from ..sequences.spec import SequenceSpec
from .aux import alt1, alt2, harmonic, odd_harmonic, p_poly
from .standard_form import StandardForm, sign_n_plus_one, sign_triangular

F = Fraction
fact = factorial


class FormKind(Enum):
    HANKEL = "hankel"  # H_n(c)
    RATIO = "ratio"  # H_n(c) / H_{n-1}(c)
    LEFT_SHIFT = "left-shift"  # H_n(c_{k+1}) / H_n(c_k)
    SHIFT_RATIO = "shift-ratio"  # H_n(b) / H_{n-1}(c) for b_0 = α, b_k = c_{k-1}


@dataclass(frozen=True)
class ClosedForm:
    """
    Attributes:
        id: Stable identifier.
        spec_text: The sequence the formula is about.
        kind: Which determinant quantity the formula evaluates.
        evaluate: (n, x) -> value; x is only used by x-dependent formulas.
        needs_x: Whether x must be supplied.
        least_n: Smallest n the formula is stated for.
    """

    id: str
    spec_text: str
    kind: FormKind
    evaluate: Callable[[int, Optional[Entry]], Entry]
    description: str = ""
    needs_x: bool = False
    least_n: int = 0

    @property
    def spec(self) -> SequenceSpec:
        return parse_spec(self.spec_text)


FORMULAS: Dict[str, ClosedForm] = {}


def _register(form_id, spec_text, kind, evaluate, description="", needs_x=False, least_n=0):
    FORMULAS[form_id] = ClosedForm(
        form_id, spec_text, kind, evaluate, description, needs_x, least_n
    )


def _standard(form: StandardForm) -> Callable[[int, Optional[Entry]], Entry]:
    return lambda n, x=None: form(n)


# === Standard-form evaluations

SF_B2K2 = StandardForm(
    F(1, 6),
    lambda l: F(
        l**3 * (l + 1) * (2 * l - 1) * (2 * l + 1) ** 3,
        (4 * l - 1) * (4 * l + 1) ** 2 * (4 * l + 3),
    ),
)
SF_B2K4 = StandardForm(
    F(1, 30),
    lambda l: F(
        l * (l + 1) ** 3 * (2 * l + 1) ** 3 * (2 * l + 3),
        (4 * l + 1) * (4 * l + 3) ** 2 * (4 * l + 5),
    ),
    sign_n_plus_one,
)
SF_B = StandardForm(F(1), lambda l: F(l**4, 4 * (2 * l + 1) * (2 * l - 1)), sign_triangular)
SF_E1 = StandardForm(F(1), lambda l: F(l**2, 4), sign_triangular)
SF_E1_ODD = StandardForm(F(1, 2), lambda l: F(l**2 * (2 * l - 1) * (2 * l + 1), 4))
SF_B2K2_MERSENNE = StandardForm(F(1, 2), lambda l: F(l**3 * (l + 1)))
SF_E1_FACT_SHIFT = StandardForm(
    F(1, 2), lambda l: F(1, 4 * (2 * l - 1) * (2 * l + 1)), sign_triangular
)
SF_E1_ODD3 = StandardForm(
    F(1, 4), lambda l: F(l * (l + 1) * (2 * l + 1) ** 2, 4), sign_n_plus_one
)
SF_B2K2_WEIGHTED = StandardForm(F(1, 2), lambda l: F(l**3 * (l + 1) ** 3, 4 * (2 * l + 1) ** 2))
SF_E1_ODD_FACT = StandardForm(
    F(1, 2), lambda l: F(1, 16 * (4 * l - 3) * (4 * l - 1) ** 2 * (4 * l + 1))
)
SF_E1_ODD3_FACT = StandardForm(
    F(1, 24),
    lambda l: F(1, 16 * (4 * l - 1) * (4 * l + 1) ** 2 * (4 * l + 3)),
    sign_n_plus_one,
)
SF_E_EVEN = StandardForm(F(1), lambda l: F((2 * l - 1) ** 2 * (2 * l) ** 2))


def euler_even_half_form(x: Entry) -> StandardForm:
    """H_n(E_{2k}((x+1)/2)) in standard form, for a rational x or x itself."""
    return StandardForm(
        F(1), lambda l: F(l**2, 4) * (x**2 - (2 * l - 1) ** 2), sign_triangular
    )


_register("1.6", "B[2k+2]", FormKind.HANKEL, _standard(SF_B2K2), "H_n(B_{2k+2})")
_register("1.7", "B[2k+4]", FormKind.HANKEL, _standard(SF_B2K4), "H_n(B_{2k+4})")
_register("3.7", "B[k]", FormKind.HANKEL, _standard(SF_B), "H_n(B_k)")
_register("3.12", "E1[k]", FormKind.HANKEL, _standard(SF_E1), "H_n(E_k(1))")
_register("3.15", "E1[2k+1]", FormKind.HANKEL, _standard(SF_E1_ODD), "H_n(E_{2k+1}(1))")
_register(
    "3.16",
    "(2^(2k+2)-1)*B[2k+2]",
    FormKind.HANKEL,
    _standard(SF_B2K2_MERSENNE),
    "H_n((2^{2k+2}-1) B_{2k+2})",
)
_register(
    "3.25", "E1[k+1]/(k+1)!", FormKind.HANKEL, _standard(SF_E1_FACT_SHIFT), "H_n(E_{k+1}(1)/(k+1)!)"
)
_register("5.2", "E1[2k+3]", FormKind.HANKEL, _standard(SF_E1_ODD3), "H_n(E_{2k+3}(1))")
_register(
    "5.4",
    "E1[2k+5]",
    FormKind.HANKEL,
    lambda n, x=None: 2 * odd_harmonic(n + 1) * SF_E1_ODD(n + 1),
    "H_n(E_{2k+5}(1))",
)
_register(
    "cor52",
    "(2k+1)*E[2k]",
    FormKind.HANKEL,
    lambda n, x=None: F(2 ** (2 * n * (n + 1))) * _product(lambda l: fact(l) ** 4, n),
    "H_n((2k+1) E_{2k})",
)
_register("6.3", "(2k+3)*B[2k+2]", FormKind.HANKEL, _standard(SF_B2K2_WEIGHTED), "H_n((2k+3) B_{2k+2})")
_register(
    "6a.7a", "E1[2k+1]/(2k+1)!", FormKind.HANKEL, _standard(SF_E1_ODD_FACT), "H_n(E_{2k+1}(1)/(2k+1)!)"
)
_register(
    "6a.7b", "E1[2k+3]/(2k+3)!", FormKind.HANKEL, _standard(SF_E1_ODD3_FACT), "H_n(E_{2k+3}(1)/(2k+3)!)"
)
_register(
    "7.10",
    "Ehalf[2k]",
    FormKind.HANKEL,
    lambda n, x: euler_even_half_form(x)(n),
    "H_n(E_{2k}((x+1)/2))",
    needs_x=True,
)
_register("7.10a", "E[2k]", FormKind.HANKEL, _standard(SF_E_EVEN), "H_n(E_{2k})")


def _product(factor: Callable[[int], Entry], n: int) -> Entry:
    value: Entry = F(1)
    for ell in range(1, n + 1):
        value = value * factor(ell)
    return value


# === Left-shift quotients d_n

_register(
    "5.5",
    "E1[2k+1]",
    FormKind.LEFT_SHIFT,
    lambda n, x=None: F(-1, 4) ** (n + 1) * fact(2 * n + 2),
    "H_n(E_{2k+3}(1)) / H_n(E_{2k+1}(1))",
)
_register(
    "6a.8",
    "E1[2k+1]/(2k+1)!",
    FormKind.LEFT_SHIFT,
    lambda n, x=None: sign_power(n + 1) * fact(2 * n + 2) / fact(4 * n + 4),
    "H_n(c_{k+1}) / H_n(c_k) for c_k = E_{2k+1}(1)/(2k+1)!",
)

# === Consecutive ratios H_n / H_{n-1}

_register(
    "ratio-3.7",
    "B[k]",
    FormKind.RATIO,
    lambda n, x=None: sign_power(n) * fact(n) ** 6 / (fact(2 * n) * fact(2 * n + 1)),
)
_register(
    "ratio-3.12",
    "E1[k]",
    FormKind.RATIO,
    lambda n, x=None: sign_power(n) * fact(n) ** 2 / 2 ** (2 * n),
)
_register(
    "ratio-3.25",
    "E1[k+1]/(k+1)!",
    FormKind.RATIO,
    lambda n, x=None: sign_power(n) * fact(n) ** 2 / (2 * fact(2 * n) * fact(2 * n + 1)),
)
_register(
    "ratio-6.3",
    "(2k+3)*B[2k+2]",
    FormKind.RATIO,
    lambda n, x=None: fact(n) ** 5 * fact(n + 1) ** 3 / (2 * fact(2 * n + 1) ** 2),
)
_register(
    "ratio-6a.7",
    "E1[2k+1]/(2k+1)!",
    FormKind.RATIO,
    lambda n, x=None: fact(2 * n) ** 2 / (2 * (4 * n + 1) * fact(4 * n) ** 2),
)
_register(
    "ratio-1.6",
    "B[2k+2]",
    FormKind.RATIO,
    lambda n, x=None: (2 * n + 1) ** 4
    * (n + 1)
    * fact(2 * n) ** 6
    / (fact(4 * n + 1) * fact(4 * n + 3)),
)

# === Ratios r_n = H_n(b) / H_{n-1}(c) driven by the shifted Hankel engine

_register(
    "r-3.1",
    "shift0:B[k-1]",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: sign_power(n) * 2 * fact(n) ** 3 / fact(2 * n) * alt2(n),
    least_n=1,
)
_register(
    "r-3.2",
    "shift0:E1[k-1]",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: -fact(n) / 2 ** (n - 1) * alt1(n),
    least_n=1,
)
_register(
    "r-3.6",
    "shiftA=1:E1[k]/k!",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: sign_power(n) * fact(n) / fact(2 * n),
    least_n=1,
)
_register(
    "r-6.1",
    "shiftA=1:B[2k]",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: sign_power(n)
    * fact(2 * n) ** 2
    * fact(2 * n + 1)
    / fact(4 * n + 1)
    * harmonic(2 * n + 1),
    least_n=1,
)
_register(
    "r-6.2",
    "shiftA=1:(2k+1)*B[2k]",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: sign_power(n)
    * fact(n) ** 3
    * fact(n + 1)
    / fact(2 * n + 1)
    * (harmonic(n) + harmonic(n + 1)),
    least_n=1,
)
_register(
    "r-6.3",
    "shift0:E1[2k-1]/(2k-1)!",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: sign_power(n) * fact(2 * n + 1) / (2 * fact(4 * n - 1)),
    least_n=1,
)
_register(
    "r-7.2",
    "shift0:Ehalf[2k-2]",
    FormKind.SHIFT_RATIO,
    lambda n, x=None: -F(4) ** (1 - n) * p_poly(n - 1),
    least_n=1,
)


def _lookup(formula: str) -> ClosedForm:
    if formula not in FORMULAS:
        raise UnknownIdentifierError("closed form", formula, FORMULAS)
    return FORMULAS[formula]


def closed_form(formula: str, n: int, x: Optional[Entry] = None) -> Entry:
    """
    Evaluate a registered closed form.

    Args:
        formula: Formula id, e.g. "3.7" or "ratio-3.12".
        n: Index; empty products (n = 0) are 1.
        x: Rational value or Poly for the x-dependent formulas.

    Raises:
        UnknownIdentifierError: If the id is unknown.
        ValueError: If x is required but missing, or n is out of range.
    """
    form = _lookup(formula)
    if form.needs_x and x is None:
        raise ValueError(f"Closed form {formula} depends on x; pass x")
    if n < form.least_n:
        raise ValueError(f"Closed form {formula} is stated for n >= {form.least_n} (got {n})")
    return form.evaluate(n, x)


def brute_force(formula: str, n: int, x: Optional[Entry] = None) -> Entry:
    """
    The quantity a closed form describes, computed from determinants.

    For x-dependent formulas the determinant is taken over polynomial entries
    and then evaluated at a rational x (or returned as a Poly if x is None or
    is itself a Poly).
    """
    form = _lookup(formula)
    spec = form.spec
    if form.kind == FormKind.HANKEL:
        value = hankel_det(spec, n)
    elif form.kind == FormKind.RATIO:
        value = hankel_det(spec, n) / hankel_det(spec, n - 1)
    elif form.kind == FormKind.LEFT_SHIFT:
        value = hankel_det(spec.left_shift(), n) / hankel_det(spec, n)
    else:
        value = hankel_det(spec, n) / hankel_det(spec.base(), n - 1)
    if isinstance(value, Poly) and x is not None and not isinstance(x, Poly):
        return value.evaluate(x)
    return value
