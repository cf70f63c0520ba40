"""Text renderings of run results. Every index printed here is 1-based."""

import csv
import io
from fractions import Fraction
from typing import Iterable, List, Sequence, Union

from src.exceptions import PipelineException
from src.schemas.pipeline.models import Implication, PipelineKind, RelevanceRow, RunReport
from src.schemas.table.models import ReductionLog

Number = Union[int, float, Fraction]


def format_number(value: Number, decimals: int = 2) -> str:
    """Round to ``decimals`` places and drop trailing zeros: 3 -> "3", 1.5 -> "1.5", 32/3 -> "10.67"."""
    text = f"{float(value):.{decimals}f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def format_implication(number: int, implication: Implication) -> str:
    antecedent = " ".join(str(y + 1) for y in implication.antecedent)
    rows = "".join(f" {r + 1}," for r in implication.support_rows)
    return f"{number}; {antecedent} -> {implication.consequent + 1} ; Support = {implication.support}; rows ={rows}"


def format_reduction_notes(log: ReductionLog) -> List[str]:
    lines: List[str] = []
    for col in log.removed_full_columns:
        lines.append(f"{col + 1} <=>")
        lines.append(f"  Note: column {col + 1} is reduced, a column with all 1s")
    for col, rep in log.merged_duplicates:
        lines.append(f"{col + 1} <=> {rep + 1}")
        lines.append(f"  Note: column {col + 1} is reduced, equal to column {rep + 1}")
    return lines


def render_implications(report: RunReport) -> str:
    """Reduction notes followed by the numbered implication lines.

    :raises PipelineException: When the report comes from a small-space run, which keeps no implications
    """
    if report.config.pipeline == PipelineKind.SMALL_SPACE:
        raise PipelineException("the small-space pipeline keeps no implications; rerun with the full pipeline")
    lines = format_reduction_notes(report.reduction_log)
    lines.extend(format_implication(k, imp) for k, imp in enumerate(report.implications, start=1))
    return "".join(line + "\n" for line in lines)


def render_tsup_csv(totals: Sequence[Number], decimals: int = 2) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["column", "tsup"])
    for col, value in enumerate(totals):
        writer.writerow([col + 1, format_number(value, decimals)])
    return buffer.getvalue()


def render_relevance_csv(rows: Iterable[RelevanceRow], decimals: int = 2) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["column", "tsup_t", "tsup_not_t", "relevance"])
    for row in rows:
        writer.writerow(
            [
                row.column + 1,
                format_number(row.tsup_t, decimals),
                format_number(row.tsup_not_t, decimals),
                format_number(row.relevance, decimals),
            ]
        )
    return buffer.getvalue()
