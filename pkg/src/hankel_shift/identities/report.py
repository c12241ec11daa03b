from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from ..exact.matrix import Entry, format_entry

RECORD_COLUMNS = ("id", "n", "part", "lhs", "rhs", "equal")


@dataclass(frozen=True)
class VerificationRecord:
    """One exact comparison: brute-force lhs against closed-form rhs."""

    proposition: str
    n: int
    lhs: Entry
    rhs: Entry
    part: str = ""

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def as_row(self) -> Tuple[str, ...]:
        return (
            self.proposition,
            str(self.n),
            self.part,
            format_entry(self.lhs),
            format_entry(self.rhs),
            "true" if self.equal else "false",
        )


@dataclass
class VerificationReport:
    """
    All records of one proposition over an n range.

    The report passes iff every record is an exact equality.
    """

    proposition: str
    n_min: int
    n_max: int
    records: List[VerificationRecord] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(record.equal for record in self.records)

    @property
    def failures(self) -> List[VerificationRecord]:
        return [record for record in self.records if not record.equal]

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def summary(self) -> str:
        return (
            f"{self.proposition} n={self.n_min}..{self.n_max} {self.status} "
            f"({len(self.records) - len(self.failures)}/{len(self.records)} records)"
        )

    def rows(self) -> List[Tuple[str, ...]]:
        return [record.as_row() for record in self.records]
