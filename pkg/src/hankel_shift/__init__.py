"""
Exact Hankel determinants of Bernoulli/Euler sequences and their shifts
"""

from .errors import (
    CheckerboardPatternError,
    ConsistencyError,
    HankelDegeneracyError,
    HankelShiftError,
    SpecParseError,
    UnknownIdentifierError,
)
from .exact import Poly, SquareMatrix, det
from .hankel import checkerboard_split, hankel_det, hankel_matrix
from .identities import verify_all, verify_proposition
from .orthopoly import extract_recurrence, monic_op, shifted_hankel, tagged_recurrence
from .sequences import SequenceSpec, format_spec, parse_spec, term

# The remaining subpackages are not imported here. Use
# `from hankel_shift.identities import ...` and friends to reach the full
# API; this keeps the top-level namespace small and avoids eager imports.

__all__ = [
    "CheckerboardPatternError",
    "ConsistencyError",
    "HankelDegeneracyError",
    "HankelShiftError",
    "Poly",
    "SequenceSpec",
    "SpecParseError",
    "SquareMatrix",
    "UnknownIdentifierError",
    "checkerboard_split",
    "det",
    "extract_recurrence",
    "format_spec",
    "hankel_det",
    "hankel_matrix",
    "monic_op",
    "parse_spec",
    "shifted_hankel",
    "tagged_recurrence",
    "term",
    "verify_all",
    "verify_proposition",
]

# Keep lazy access to the output subpackages (so users can import
# hankel_shift.writers) but do not expose them as top-level names in __all__.
_subpackages = {
    "writers": "hankel_shift.writers",
    "utils": "hankel_shift.utils",
    "cli": "hankel_shift.cli",
}


def __getattr__(name: str):
    # Lazy import subpackages on attribute access (PEP 562)
    if name in _subpackages:
        import importlib

        mod = importlib.import_module(_subpackages[name])
        globals()[name] = mod
        return mod
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


def __dir__():
    return sorted(list(globals().keys()) + list(_subpackages.keys()))
