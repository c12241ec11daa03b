"""
CSV writer with a header row.
"""

import csv
from typing import TextIO

from .table import Table, format_cell


class CsvWriter:
    """Writer for comma-separated output."""

    @staticmethod
    def write(table: Table, stream: TextIO) -> None:
        """
        Write a table as CSV, header first.

        Raises:
            IOError: If the stream cannot be written.
        """
        try:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(table.columns)
            for row in table.rows:
                writer.writerow([format_cell(value) for value in row])
        except IOError as e:
            raise IOError(f"Failed to write csv output: {e}") from e
