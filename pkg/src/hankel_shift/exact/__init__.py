from .matrix import Entry, SquareMatrix, det, entry_at, format_entry, is_zero
from .poly import Poly, poly_eval
from .rational import (
    Rational,
    as_rational,
    binom,
    factorial,
    format_rational,
    parse_rational,
    sign_power,
)

__all__ = [
    "Entry",
    "Poly",
    "Rational",
    "SquareMatrix",
    "as_rational",
    "binom",
    "det",
    "entry_at",
    "factorial",
    "format_entry",
    "format_rational",
    "is_zero",
    "parse_rational",
    "poly_eval",
    "sign_power",
]
