from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.schemas.dualize.models import DualizationEngine
from src.schemas.table.models import ReductionLog


class PipelineKind(str, Enum):
    """Run flavours: store implications then aggregate, or aggregate in-stream."""

    FULL = "full"
    SMALL_SPACE = "small_space"


class Implication(BaseModel):
    """Full-confidence implication Y -> t in 0-based original column indices."""

    model_config = ConfigDict(frozen=True)

    antecedent: Tuple[int, ...] = Field(..., min_length=1, description="Y in emission order")
    consequent: int = Field(..., ge=0, description="Target column t")
    support_rows: Tuple[int, ...] = Field(default=(), description="Rows holding Y and t, ascending")

    @model_validator(mode="after")
    def check_shape(self) -> "Implication":
        if self.consequent in self.antecedent:
            raise ValueError("the consequent cannot appear in the antecedent")
        if len(set(self.antecedent)) != len(self.antecedent):
            raise ValueError("antecedent has repeated columns")
        if list(self.support_rows) != sorted(set(self.support_rows)):
            raise ValueError("support rows must be distinct and ascending")
        return self

    @property
    def support(self) -> int:
        return len(self.support_rows)


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: int = Field(..., ge=1, description="1-based original column t")
    minsup: int = Field(default=1, ge=0, description="Minimal support delta")
    engine: DualizationEngine = DualizationEngine.REVERSE_SEARCH
    pipeline: PipelineKind = PipelineKind.SMALL_SPACE
    negate_target: bool = False
    cap: Optional[int] = Field(default=None, ge=1, description="Stop after this many transversals")

    @property
    def target_index(self) -> int:
        return self.target - 1


class RunReport(BaseModel):
    """Outcome of one pipeline run.

    ``implications`` is only filled by the full pipeline. ``accumulator`` holds the
    exact totals indexed by original column.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    config: RunConfig
    reduction_log: ReductionLog
    implications: List[Implication] = Field(default_factory=list)
    accumulator: Any = Field(..., description="TotalSupportAccumulator of the run")
    transversal_count: int = Field(default=0, ge=0)
    wall_ms: float = Field(default=0.0, ge=0)
    truncated: bool = False
    peak_retained_units: int = Field(default=0, ge=0)
    peak_by_site: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_small_space_output(self) -> "RunReport":
        if self.config.pipeline == PipelineKind.SMALL_SPACE and self.implications:
            raise ValueError("small-space runs keep no implications")
        return self

    @property
    def kept_count(self) -> int:
        return self.accumulator.implications_kept

    @property
    def tsup(self) -> Tuple[Fraction, ...]:
        return self.accumulator.totals


class RelevanceRow(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    column: int = Field(..., ge=0, description="0-based original column")
    tsup_t: Fraction
    tsup_not_t: Fraction
    relevance: Fraction
