from typing import FrozenSet, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.schemas.common.bitsets import bits_of, iter_bits


class ArrowRelations(BaseModel):
    """Up and down arrow relations of a table, one attribute bitset per row."""

    model_config = ConfigDict(frozen=True)

    up_by_row: Tuple[int, ...] = Field(..., description="Attributes x with (u, x) in the up relation, per row u")
    down_by_row: Tuple[int, ...] = Field(..., description="Attributes y with (u, y) in the down relation, per row u")

    @model_validator(mode="after")
    def check_shape(self) -> "ArrowRelations":
        if len(self.up_by_row) != len(self.down_by_row):
            raise ValueError("up and down relations must cover the same rows")
        return self

    @property
    def up(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((u, x) for u, mask in enumerate(self.up_by_row) for x in iter_bits(mask))

    @property
    def down(self) -> FrozenSet[Tuple[int, int]]:
        return frozenset((u, y) for u, mask in enumerate(self.down_by_row) for y in iter_bits(mask))

    def up_rows_for(self, attr: int) -> List[int]:
        return [u for u, mask in enumerate(self.up_by_row) if mask >> attr & 1]


class TargetContext(BaseModel):
    """D-relation row xD and the maximal closed sets M(x) for one target."""

    model_config = ConfigDict(frozen=True)

    target: int = Field(..., ge=0)
    d_row: int = Field(..., ge=0, description="Bitset of xD")
    up_rows: Tuple[int, ...] = Field(..., description="Rows u with (u, x) in the up relation")
    maximal_sets: Tuple[int, ...] = Field(..., description="Row intents of the up rows")

    @model_validator(mode="after")
    def check_invariants(self) -> "TargetContext":
        target_bit = 1 << self.target
        if self.d_row & target_bit:
            raise ValueError("target must not belong to its own D-row")
        if any(m & target_bit for m in self.maximal_sets):
            raise ValueError("maximal sets must exclude the target")
        if len(self.up_rows) != len(self.maximal_sets):
            raise ValueError("one maximal set per up row")
        return self

    @property
    def d_row_attrs(self) -> FrozenSet[int]:
        return bits_of(self.d_row)

    @property
    def maximal_attr_sets(self) -> List[FrozenSet[int]]:
        return [bits_of(m) for m in self.maximal_sets]
