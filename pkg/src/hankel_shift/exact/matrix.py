"""
Square matrices over Rational or Poly entries and their exact determinant.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .poly import Poly
from .rational import as_rational, format_rational

logger = logging.getLogger(__name__)

Entry = Union[Fraction, Poly]


def to_entry(value) -> Entry:
    """Normalize an int/Fraction/Poly into an Entry."""
    if isinstance(value, Poly):
        return value
    return as_rational(value)


def is_zero(value: Entry) -> bool:
    return value == 0


def format_entry(value: Entry) -> str:
    """Wire format of an entry: "p/q" for scalars, "[c0, c1, ...]" for polynomials."""
    if isinstance(value, Poly):
        return str(value)
    return format_rational(value)


def entry_at(value: Entry, x) -> Fraction:
    """Specialize a polynomial entry at x; scalars are returned unchanged."""
    if isinstance(value, Poly):
        return value.evaluate(x)
    return value


def _grid(rows) -> np.ndarray:
    # Elementwise assignment: numpy must never try to unpack an entry.
    rows = [list(row) for row in rows]
    size = len(rows)
    grid = np.empty((size, size), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != size:
            raise ValueError(
                f"Matrix is not square: row {i} has {len(row)} entries, expected {size}"
            )
        for j, value in enumerate(row):
            grid[i, j] = to_entry(value)
    return grid


class SquareMatrix:
    """
    An (n+1)x(n+1) matrix of exact entries backed by an object-dtype ndarray.

    Entries are homogeneous: either all Rational (Fraction) or all Poly in the
    same variable. A Hankel-tagged matrix has entries depending only on i+j.
    """

    def __init__(self, rows: Union[Sequence[Sequence], np.ndarray], hankel: bool = False):
        if isinstance(rows, np.ndarray):
            if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
                raise ValueError(f"Matrix is not square: shape {rows.shape}")
            grid = _grid(rows.tolist())
        else:
            grid = _grid(rows)
        if grid.shape[0] == 0:
            raise ValueError("Matrix order must be at least 1")
        self._grid = grid
        self._hankel = hankel

    @classmethod
    def hankel_of(cls, terms: Sequence, n: int) -> SquareMatrix:
        """The Hankel matrix (terms[i+j]) for 0 <= i, j <= n."""
        if n < 0:
            raise ValueError(f"Hankel order index must be >= 0 (got {n})")
        if len(terms) < 2 * n + 1:
            raise ValueError(
                f"A Hankel matrix of index {n} needs {2 * n + 1} terms, got {len(terms)}"
            )
        return cls([[terms[i + j] for j in range(n + 1)] for i in range(n + 1)], hankel=True)

    @property
    def order(self) -> int:
        return self._grid.shape[0]

    @property
    def is_hankel(self) -> bool:
        return self._hankel

    @property
    def grid(self) -> np.ndarray:
        """A copy of the underlying object array."""
        return self._grid.copy()

    def __getitem__(self, position):
        return self._grid[position]

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> SquareMatrix:
        return SquareMatrix(self._grid[np.ix_(list(rows), list(cols))])

    def det(self) -> Entry:
        return det(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.order == other.order and bool(np.all(self._grid == other._grid))

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(format_entry(v) for v in row) + "]" for row in self._grid
        ) + "]"

    def __repr__(self) -> str:
        return f"SquareMatrix({self}, hankel={self._hankel})"


def det(m: Union[SquareMatrix, Sequence[Sequence]]) -> Entry:
    """
    Exact determinant by fraction-free (Bareiss) elimination.

    Every division performed is exact in the entry ring, so polynomial matrices
    never produce rational-function intermediates. Zero pivots are handled by
    swapping in the first nonzero entry below; a column with no nonzero entry
    at or below the diagonal means the determinant is 0.

    Args:
        m: A SquareMatrix, or nested rows that form one.

    Returns:
        A Fraction, or a Poly for polynomial entries.
    """
    if not isinstance(m, SquareMatrix):
        m = SquareMatrix(m)
    a = m.grid
    size = a.shape[0]
    zero = next((_zero_like(v) for v in a.flat if isinstance(v, Poly)), Fraction(0))
    sign = 1
    previous: Entry = Fraction(1)
    for k in range(size - 1):
        if is_zero(a[k, k]):
            pivot_row: Optional[int] = next(
                (r for r in range(k + 1, size) if not is_zero(a[r, k])), None
            )
            if pivot_row is None:
                logger.debug("Zero column below pivot %d, determinant is 0", k)
                return zero
            a[[k, pivot_row]] = a[[pivot_row, k]]
            sign = -sign
        pivot = a[k, k]
        for i in range(k + 1, size):
            a[i, k + 1 :] = (a[i, k + 1 :] * pivot - a[i, k] * a[k, k + 1 :]) / previous
        previous = pivot
    result = a[size - 1, size - 1]
    if sign < 0:
        result = -result
    return _like(result, zero)


def _zero_like(value: Entry) -> Entry:
    if isinstance(value, Poly):
        return Poly((), value.variable)
    return Fraction(0)


def _like(value: Entry, zero: Entry) -> Entry:
    # Keep the result in the entry type of the matrix.
    if isinstance(zero, Poly) and not isinstance(value, Poly):
        return Poly([value], zero.variable)
    return value
