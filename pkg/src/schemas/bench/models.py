from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator


class RunStatus(str, Enum):
    OK = "ok"
    STARRED = "starred"  # target reducible, full algorithm not executed
    FAILED = "failed"


class AccountedRun(BaseModel):
    """Metrics of one pipeline run in a sweep."""

    model_config = ConfigDict(frozen=True)

    target: int = Field(..., ge=1, description="1-based column")
    status: RunStatus = RunStatus.OK
    peak_retained_units: int = Field(default=0, ge=0)
    transversal_count: int = Field(default=0, ge=0)
    kept_count: int = Field(default=0, ge=0)
    wall_ms: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def check_starred(self) -> "AccountedRun":
        if self.status == RunStatus.STARRED and self.transversal_count:
            raise ValueError("starred runs enumerate nothing")
        return self


class ComparisonRow(BaseModel):
    """Original versus small-space metrics for one target."""

    model_config = ConfigDict(frozen=True)

    target: int = Field(..., ge=1)
    original: AccountedRun
    small: AccountedRun
    message: Optional[str] = Field(default=None, description="Reduction note or failure reason")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def status(self) -> RunStatus:
        if RunStatus.FAILED in (self.original.status, self.small.status):
            return RunStatus.FAILED
        if RunStatus.STARRED in (self.original.status, self.small.status):
            return RunStatus.STARRED
        return RunStatus.OK

    @property
    def peak_diff(self) -> int:
        return self.small.peak_retained_units - self.original.peak_retained_units

    @property
    def ms_diff(self) -> float:
        return self.small.wall_ms - self.original.wall_ms

    @property
    def peak_savings_pct(self) -> float:
        """(original - small) / original as a percentage; 0 when the original peak is 0."""
        orig = self.original.peak_retained_units
        if orig == 0:
            return 0.0
        return (orig - self.small.peak_retained_units) / orig * 100
