from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Union

Cell = Union[str, int, bool]


def format_cell(value: Cell) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


@dataclass
class Table:
    """
    Rows of already-serialized values under named columns.

    Rationals and polynomials arrive here in their canonical text form; the
    writers never format numbers themselves.

    Attributes:
        columns: Column names.
        rows: One tuple of cells per row, aligned with `columns`.
        header: Whether the text writer prints the column names.
    """

    columns: Sequence[str]
    rows: List[Sequence[Cell]] = field(default_factory=list)
    header: bool = True

    def __post_init__(self):
        for row in self.rows:
            self._check(row)

    def _check(self, row: Sequence[Cell]) -> None:
        if len(row) != len(self.columns):
            raise ValueError(
                f"Row has {len(row)} cells but the table has {len(self.columns)} columns"
            )

    def add_row(self, *cells: Cell) -> None:
        self._check(cells)
        self.rows.append(tuple(cells))

    def records(self) -> List[Dict[str, Cell]]:
        return [dict(zip(self.columns, row)) for row in self.rows]

    def select(self, *columns: str) -> Table:
        """A table restricted to some of the columns, in the given order."""
        positions = [list(self.columns).index(name) for name in columns]
        return Table(
            list(columns),
            [tuple(row[i] for i in positions) for row in self.rows],
            self.header,
        )
