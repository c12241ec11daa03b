"""
Plain-text writer: aligned columns, one row per line.
"""

from typing import List, TextIO

from .table import Table, format_cell


class TextWriter:
    """Writer for human-readable text output."""

    @staticmethod
    def write(table: Table, stream: TextIO) -> None:
        """
        Write a table as whitespace-aligned text.

        A single-column table is written bare, one value per line; wider
        tables get a header line unless `table.header` is False.

        Args:
            table: The table to write.
            stream: Text stream receiving the output.

        Raises:
            IOError: If the stream cannot be written.
        """
        try:
            for line in TextWriter._build_lines(table):
                stream.write(line + "\n")
        except IOError as e:
            raise IOError(f"Failed to write text output: {e}") from e

    @staticmethod
    def _build_lines(table: Table) -> List[str]:
        cells = [[format_cell(value) for value in row] for row in table.rows]
        if len(table.columns) == 1:
            return [row[0] for row in cells]

        lines = ([list(table.columns)] if table.header else []) + cells
        if not lines:
            return []
        widths = [max(len(line[i]) for line in lines) for i in range(len(table.columns))]
        return [
            "  ".join(value.ljust(width) for value, width in zip(line, widths)).rstrip()
            for line in lines
        ]
