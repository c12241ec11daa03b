from __future__ import annotations

from enum import Enum


class OutputFormat(Enum):
    TEXT = "text"
    JSONL = "jsonl"
    CSV = "csv"

    @staticmethod
    def from_flag(flag: str) -> OutputFormat:
        """Parse the value of a --format flag.

        "json-lines" is accepted as an alias of "jsonl".
        """
        normalized = flag.strip().lower()
        if normalized == "json-lines":
            normalized = "jsonl"
        for output_format in OutputFormat:
            if output_format.value == normalized:
                return output_format
        raise ValueError(
            f"Invalid output format '{flag}'. Valid values are: "
            f"{', '.join(f.value for f in OutputFormat)}"
        )
