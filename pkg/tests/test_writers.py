import io
import json

import pytest

from hankel_shift.utils.formats import OutputFormat
from hankel_shift.writers import (
    CsvWriter,
    JsonLinesWriter,
    Table,
    TextWriter,
    format_cell,
    writer_for,
)


@pytest.fixture
def table():
    return Table(["n", "s"], [(0, "1/2"), (10, "-1/12")])


def render(writer, table):
    stream = io.StringIO()
    writer.write(table, stream)
    return stream.getvalue()


class BrokenStream(io.StringIO):
    def write(self, text):
        raise OSError("disk full")


# --- Table ---


def test_table_rows_must_match_columns():
    with pytest.raises(ValueError, match="Row has 1 cells but the table has 2 columns"):
        Table(["a", "b"], [("x",)])
    t = Table(["a", "b"])
    with pytest.raises(ValueError):
        t.add_row(1, 2, 3)


def test_table_records_and_select(table):
    assert table.records() == [{"n": 0, "s": "1/2"}, {"n": 10, "s": "-1/12"}]
    narrow = table.select("s")
    assert narrow.columns == ["s"]
    assert narrow.rows == [("1/2",), ("-1/12",)]


def test_format_cell():
    assert format_cell(True) == "true"
    assert format_cell(False) == "false"
    assert format_cell(3) == "3"
    assert format_cell("x^2 - 1") == "x^2 - 1"


# --- Writers ---


def test_text_writer_aligns_columns(table):
    assert render(TextWriter, table) == "n   s\n0   1/2\n10  -1/12\n"


def test_text_writer_without_header(table):
    table.header = False
    assert render(TextWriter, table) == "0   1/2\n10  -1/12\n"


def test_text_writer_single_column(table):
    assert render(TextWriter, table.select("s")) == "1/2\n-1/12\n"
    assert render(TextWriter, Table(["s"])) == ""


def test_jsonl_writer(table):
    lines = render(JsonLinesWriter, table).splitlines()
    assert lines[0] == '{"n": 0, "s": "1/2"}'
    assert [json.loads(line) for line in lines] == table.records()


def test_jsonl_writer_keeps_booleans():
    t = Table(["n", "match"], [(1, True)])
    assert json.loads(render(JsonLinesWriter, t)) == {"n": 1, "match": True}


def test_csv_writer(table):
    assert render(CsvWriter, table) == "n,s\n0,1/2\n10,-1/12\n"
    t = Table(["expr", "equal"], [("x^2 - 1, x", False)])
    assert render(CsvWriter, t) == 'expr,equal\n"x^2 - 1, x",false\n'


@pytest.mark.parametrize("writer", [TextWriter, JsonLinesWriter, CsvWriter])
def test_write_errors_are_wrapped(writer, table):
    with pytest.raises(IOError, match="Failed to write"):
        writer.write(table, BrokenStream())


# --- Formats ---


def test_writer_for():
    assert writer_for(OutputFormat.TEXT) is TextWriter
    assert writer_for(OutputFormat.JSONL) is JsonLinesWriter
    assert writer_for(OutputFormat.CSV) is CsvWriter


@pytest.mark.parametrize(
    "flag, expected",
    [
        ("text", OutputFormat.TEXT),
        ("jsonl", OutputFormat.JSONL),
        ("json-lines", OutputFormat.JSONL),
        ("CSV", OutputFormat.CSV),
    ],
)
def test_format_flags(flag, expected):
    assert OutputFormat.from_flag(flag) == expected


def test_invalid_format_flag():
    with pytest.raises(ValueError, match="Invalid output format 'xml'"):
        OutputFormat.from_flag("xml")
