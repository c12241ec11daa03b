"""
Exception types raised by hankel_shift.

All of them derive from a built-in exception so callers can keep catching
`ValueError`, `ArithmeticError` and friends.
"""

from typing import Optional, Tuple


class HankelShiftError(Exception):
    """Common base for every error raised by this package."""


class SpecParseError(HankelShiftError, ValueError):
    """A sequence spec string could not be parsed."""

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class MalformedSpecError(HankelShiftError, ValueError):
    """A SequenceSpec that cannot produce a well-defined sequence."""


class HankelDegeneracyError(HankelShiftError, ArithmeticError):
    """A Hankel determinant vanished where it must not."""

    def __init__(self, n: int, what: str = "sequence"):
        self.n = n
        super().__init__(
            f"Hankel degeneracy at n={n}: H_{n}({what}) = 0, "
            "the orthogonal polynomials do not all exist"
        )


class CheckerboardPatternError(HankelShiftError, ValueError):
    """A matrix entry declared to be zero is not."""

    def __init__(self, position: Tuple[int, int]):
        self.position = position
        i, j = position
        super().__init__(f"Checkerboard pattern violated: entry ({i}, {j}) is nonzero")


class InexactDivisionError(HankelShiftError, ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class InsufficientCoefficientsError(HankelShiftError, IndexError):
    """A recurrence was queried beyond the coefficients it holds."""


class ConsistencyError(HankelShiftError, RuntimeError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, message: str, n: Optional[int] = None):
        self.n = n
        super().__init__(message)


class UnknownIdentifierError(HankelShiftError, KeyError):
    """An unknown recurrence tag, formula id or proposition id."""

    def __init__(self, kind: str, identifier: str, known):
        self.identifier = identifier
        self.kind = kind
        super().__init__(
            f"Unknown {kind} '{identifier}'. Known values are: {', '.join(known)}"
        )

    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0])
