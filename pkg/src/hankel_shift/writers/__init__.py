"""Writers exposed by hankel_shift.writers

Re-export the table writers used by the command line for its output formats.
"""
from typing import Type, Union

from ..utils.formats import OutputFormat
from .csv_writer import CsvWriter
from .jsonl_writer import JsonLinesWriter
from .table import Table, format_cell
from .text_writer import TextWriter

Writer = Union[Type[TextWriter], Type[JsonLinesWriter], Type[CsvWriter]]


def writer_for(output_format: OutputFormat) -> Writer:
    """The writer class of an output format."""
    if output_format == OutputFormat.JSONL:
        return JsonLinesWriter
    elif output_format == OutputFormat.CSV:
        return CsvWriter
    return TextWriter


__all__ = [
    "CsvWriter",
    "JsonLinesWriter",
    "Table",
    "TextWriter",
    "format_cell",
    "writer_for",
]
