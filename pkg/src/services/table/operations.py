import logging
from typing import Dict, FrozenSet, Iterable, List, Tuple

from src.exceptions import TableArgumentError, TableReductionError
from src.schemas.common.bitsets import bits_of, is_subset, iter_bits
from src.schemas.table.models import BinaryTable, ReductionLog, TargetStatus, TargetStatusKind, transpose

logger = logging.getLogger(__name__)


def check_column(table: BinaryTable, col: int) -> None:
    if not 0 <= col < table.n_cols:
        raise TableArgumentError(f"column {col + 1} is out of range 1..{table.n_cols}")


def check_row(table: BinaryTable, row: int) -> None:
    if not 0 <= row < table.n_rows:
        raise TableArgumentError(f"row {row + 1} is out of range 1..{table.n_rows}")


def attrs_mask(table: BinaryTable, attrs: Iterable[int]) -> int:
    mask = 0
    for col in attrs:
        check_column(table, col)
        mask |= 1 << col
    return mask


def rows_mask(table: BinaryTable, rows: Iterable[int]) -> int:
    mask = 0
    for row in rows:
        check_row(table, row)
        mask |= 1 << row
    return mask


def extent(table: BinaryTable, attr_mask: int) -> int:
    """Rows holding every attribute of ``attr_mask``."""
    result = table.all_rows
    for col in iter_bits(attr_mask):
        result &= table.cols[col]
    return result


def intent(table: BinaryTable, row_mask: int) -> int:
    """Attributes held by every row of ``row_mask``."""
    result = table.all_cols
    for row in iter_bits(row_mask):
        result &= table.rows[row]
    return result


def closure_mask(table: BinaryTable, attr_mask: int) -> int:
    return intent(table, extent(table, attr_mask))


def support_of_attrs(table: BinaryTable, attrs: Iterable[int]) -> FrozenSet[int]:
    """sup_A(Y): the 0-based rows containing all of ``attrs``; all rows for an empty set."""
    return bits_of(extent(table, attrs_mask(table, attrs)))


def support_of_rows(table: BinaryTable, rows: Iterable[int]) -> FrozenSet[int]:
    """sup_U(Z): the 0-based attributes shared by all of ``rows``; all attributes for an empty set."""
    return bits_of(intent(table, rows_mask(table, rows)))


def closure(table: BinaryTable, attrs: Iterable[int]) -> FrozenSet[int]:
    """phi(Y) = sup_U(sup_A(Y))."""
    return bits_of(closure_mask(table, attrs_mask(table, attrs)))


def reduce_table(table: BinaryTable) -> Tuple[BinaryTable, ReductionLog]:
    """Drop all-ones columns and keep one column (the lowest index) per group of identical columns.

    :raises TableReductionError: When no column survives
    """
    kept: List[int] = []
    removed: List[int] = []
    merged: List[Tuple[int, int]] = []
    representative: Dict[int, int] = {}

    for col, column in enumerate(table.cols):
        if column == table.all_rows:
            removed.append(col)
        elif column in representative:
            merged.append((col, representative[column]))
        else:
            representative[column] = col
            kept.append(col)

    if not kept:
        raise TableReductionError("no attributes remain after reduction")

    log = ReductionLog(
        n_original=table.n_cols,
        kept=tuple(kept),
        removed_full_columns=tuple(removed),
        merged_duplicates=tuple(merged),
    )
    if log.is_empty:
        return table, log

    cols = tuple(table.cols[c] for c in kept)
    names = tuple(table.attr_names[c] for c in kept) if table.attr_names is not None else None
    reduced = BinaryTable(rows=transpose(cols, table.n_rows), cols=cols, n_rows=table.n_rows, n_cols=len(kept), attr_names=names)
    logger.info(f"Reduced table: {len(removed)} all-ones column(s) removed, {len(merged)} duplicate(s) merged")
    return reduced, log


def check_target_status(table: BinaryTable, target: int) -> TargetStatus:
    """Decide whether the full algorithm can run on ``target`` (0-based, unreduced table).

    Reducible when the column is all ones, duplicates a lower column, or its extent
    equals the intersection of the strictly larger extents (when there is at least
    one). The last test is a reconstruction of the undocumented original check.
    """
    check_column(table, target)
    column = table.cols[target]
    label = target + 1

    if column == table.all_rows:
        return TargetStatus(target=target, kind=TargetStatusKind.REDUCIBLE, explanation=f"column {label} is reduced, a column with all 1s")

    for col in range(target):
        if table.cols[col] == column:
            return TargetStatus(
                target=target,
                kind=TargetStatusKind.REDUCIBLE,
                explanation=f"column {label} is reduced, equal to column {col + 1}",
            )

    if column == 0:
        return TargetStatus(target=target, kind=TargetStatusKind.EMPTY_EXTENT, explanation=f"column {label} has no 1s")

    larger = [col for col, other in enumerate(table.cols) if other != column and is_subset(column, other)]
    if larger:
        meet = table.all_rows
        for col in larger:
            meet &= table.cols[col]
        if meet == column:
            joined = ", ".join(str(col + 1) for col in larger)
            return TargetStatus(
                target=target,
                kind=TargetStatusKind.REDUCIBLE,
                explanation=f"column {label} is reduced, equal to the intersection of columns {joined}",
            )

    logger.debug(f"Column {label} is usable as a target")
    return TargetStatus(target=target, kind=TargetStatusKind.USABLE)


def negate_column(table: BinaryTable, target: int) -> BinaryTable:
    """Replace column ``target`` by its complement."""
    check_column(table, target)
    cols = list(table.cols)
    cols[target] ^= table.all_rows
    return BinaryTable(
        rows=transpose(cols, table.n_rows),
        cols=tuple(cols),
        n_rows=table.n_rows,
        n_cols=table.n_cols,
        attr_names=table.attr_names,
    )
