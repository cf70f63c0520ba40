from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.schemas.common.bitsets import full_mask, iter_bits


def transpose(bitsets: Sequence[int], width: int) -> Tuple[int, ...]:
    """Turn row bitsets over ``width`` columns into column bitsets over rows (or back)."""
    out = [0] * width
    for i, mask in enumerate(bitsets):
        for j in iter_bits(mask):
            out[j] |= 1 << i
    return tuple(out)


class BinaryTable(BaseModel):
    """Binary table T=(U, A, R) kept as row bitsets and column bitsets.

    Bit ``c`` of ``rows[r]`` is set iff object ``r`` has attribute ``c``; ``cols`` is the
    transpose. Parsed tables have at least two columns; reduced tables may have one.
    """

    model_config = ConfigDict(frozen=True)

    rows: Tuple[int, ...] = Field(..., description="Row bitsets over attributes")
    cols: Tuple[int, ...] = Field(..., description="Column bitsets over objects")
    n_rows: int = Field(..., ge=1, description="Number of objects")
    n_cols: int = Field(..., ge=1, description="Number of attributes")
    attr_names: Optional[Tuple[str, ...]] = Field(default=None, description="Optional attribute labels")

    @model_validator(mode="after")
    def check_relation(self) -> "BinaryTable":
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} row bitsets, got {len(self.rows)}")
        if len(self.cols) != self.n_cols:
            raise ValueError(f"expected {self.n_cols} column bitsets, got {len(self.cols)}")
        if self.attr_names is not None and len(self.attr_names) != self.n_cols:
            raise ValueError(f"expected {self.n_cols} attribute names, got {len(self.attr_names)}")
        col_limit = full_mask(self.n_cols)
        if any(row & ~col_limit for row in self.rows):
            raise ValueError("row bitset references a column beyond n_cols")
        if transpose(self.rows, self.n_cols) != self.cols:
            raise ValueError("rows and cols do not encode the same relation")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[int], n_cols: int, attr_names: Optional[Sequence[str]] = None) -> "BinaryTable":
        rows = tuple(rows)
        return cls(
            rows=rows,
            cols=transpose(rows, n_cols),
            n_rows=len(rows),
            n_cols=n_cols,
            attr_names=tuple(attr_names) if attr_names is not None else None,
        )

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], attr_names: Optional[Sequence[str]] = None) -> "BinaryTable":
        """Build a table from a list of 0/1 rows."""
        if not matrix:
            raise ValueError("matrix has no rows")
        n_cols = len(matrix[0])
        rows = []
        for values in matrix:
            if len(values) != n_cols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, v in enumerate(values) if v))
        return cls.from_rows(rows, n_cols, attr_names)

    @property
    def all_rows(self) -> int:
        return full_mask(self.n_rows)

    @property
    def all_cols(self) -> int:
        return full_mask(self.n_cols)

    def label(self, col: int) -> str:
        """Name of a 0-based column, falling back to its 1-based number."""
        if self.attr_names is not None:
            return self.attr_names[col]
        return str(col + 1)

    def index_of(self, name: str) -> int:
        if self.attr_names is None or name not in self.attr_names:
            raise KeyError(name)
        return self.attr_names.index(name)

    def to_matrix(self) -> List[List[int]]:
        return [[(row >> j) & 1 for j in range(self.n_cols)] for row in self.rows]


class ReductionLog(BaseModel):
    """What ``reduce_table`` did, in 0-based original column indices.

    ``kept[i]`` is the original index of reduced column ``i``; merged pairs are
    ``(original, representative)``.
    """

    model_config = ConfigDict(frozen=True)

    n_original: int = Field(..., ge=1)
    kept: Tuple[int, ...]
    removed_full_columns: Tuple[int, ...] = ()
    merged_duplicates: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def check_partition(self) -> "ReductionLog":
        seen = list(self.kept) + list(self.removed_full_columns) + [orig for orig, _ in self.merged_duplicates]
        if sorted(seen) != list(range(self.n_original)):
            raise ValueError("every original column must be kept, removed or merged exactly once")
        if any(rep not in self.kept for _, rep in self.merged_duplicates):
            raise ValueError("merge representative must be a kept column")
        return self

    @property
    def is_empty(self) -> bool:
        return not self.removed_full_columns and not self.merged_duplicates

    @property
    def index_map(self) -> Dict[int, Optional[int]]:
        """Original index to reduced index, ``None`` for removed or merged columns."""
        mapping: Dict[int, Optional[int]] = {i: None for i in range(self.n_original)}
        for reduced, original in enumerate(self.kept):
            mapping[original] = reduced
        return mapping

    def to_reduced(self, original: int) -> Optional[int]:
        return self.index_map[original]

    def to_original(self, reduced: int) -> int:
        return self.kept[reduced]


class TargetStatusKind(str, Enum):
    """Outcome of the target gate."""

    USABLE = "usable"
    REDUCIBLE = "reducible"
    EMPTY_EXTENT = "empty_extent"


class TargetStatus(BaseModel):
    model_config = ConfigDict(frozen=True)

    target: int = Field(..., ge=0, description="0-based column index")
    kind: TargetStatusKind
    explanation: str = ""

    @property
    def usable(self) -> bool:
        return self.kind == TargetStatusKind.USABLE
