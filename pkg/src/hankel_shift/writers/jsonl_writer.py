"""
JSON-lines writer: one JSON object per row.
"""

import json
from typing import TextIO

from .table import Table


class JsonLinesWriter:
    """Writer for json-lines output, keys in column order."""

    @staticmethod
    def write(table: Table, stream: TextIO) -> None:
        """
        Write each row of a table as one JSON object per line.

        Raises:
            IOError: If the stream cannot be written.
        """
        try:
            for record in table.records():
                stream.write(json.dumps(record, ensure_ascii=False) + "\n")
        except IOError as e:
            raise IOError(f"Failed to write json-lines output: {e}") from e
