"""Pydantic models for verification reports and emitted tables."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Status(str, Enum):
    """Outcome of one identity at one N.

    ``pass``/``fail`` are asserted identities; ``recorded-*`` are observations
    that never fail a run.
    """

    PASS = "pass"
    FAIL = "fail"
    RECORDED_TRUE = "recorded-true"
    RECORDED_FALSE = "recorded-false"

    @property
    def is_recorded(self) -> bool:
        return self in (Status.RECORDED_TRUE, Status.RECORDED_FALSE)


class ReportEntry(BaseModel):
    """One identity checked at one N."""

    id: str
    status: Status
    witness: str | None = None

    @model_validator(mode="after")
    def fail_has_witness(self) -> ReportEntry:
        """A failing entry must carry its counterexample."""
        if self.status is Status.FAIL and not self.witness:
            raise ValueError(f"failing entry '{self.id}' needs a witness")
        return self


class ReportSummary(BaseModel):
    """Counts per status class."""

    model_config = ConfigDict(populate_by_name=True)

    passed: int = Field(0, alias="pass")
    fail: int = 0
    recorded: int = 0


class VerificationReport(BaseModel):
    """All registry identities evaluated at one order N."""

    n: int
    entries: list[ReportEntry] = Field(default_factory=list)
    summary: ReportSummary = Field(default_factory=ReportSummary)

    @classmethod
    def from_entries(cls, n: int, entries: list[ReportEntry]) -> VerificationReport:
        """Build a report with entries sorted by id and the summary filled in."""
        ordered = sorted(entries, key=lambda entry: entry.id)
        summary = ReportSummary(
            passed=sum(1 for e in ordered if e.status is Status.PASS),
            fail=sum(1 for e in ordered if e.status is Status.FAIL),
            recorded=sum(1 for e in ordered if e.status.is_recorded),
        )
        return cls(n=n, entries=ordered, summary=summary)

    @property
    def ok(self) -> bool:
        return self.summary.fail == 0

    def to_json_dict(self) -> dict[str, object]:
        return self.model_dump(by_alias=True, mode="json")


class TableRow(BaseModel):
    """One row of an emitted table.

    ``cells`` hold canonical text renderings and are the JSON payload; ``line``
    and ``latex`` are the text and LaTeX renderings of the same row.
    """

    key: list[int]
    cells: dict[str, str]
    members: list[list[int]] | None = None
    line: str = Field("", exclude=True)
    latex: list[str] = Field(default_factory=list, exclude=True)


class Table(BaseModel):
    """A table of one kind at one N."""

    kind: str
    n: int
    columns: list[str]
    rows: list[TableRow]
