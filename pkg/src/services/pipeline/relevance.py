import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.config import Settings
from src.exceptions import TableArgumentError, TargetNotUsableError
from src.schemas.pipeline.models import PipelineKind, RelevanceRow, RunConfig, RunReport
from src.schemas.table.models import BinaryTable

from .runner import run_small_space

logger = logging.getLogger(__name__)


def relevance(tsup_t: Sequence[Fraction], tsup_not_t: Sequence[Fraction]) -> List[Fraction]:
    """Elementwise tsup_t(y) / (tsup_not_t(y) + 1).

    :raises TableArgumentError: When the arrays differ in length
    """
    if len(tsup_t) != len(tsup_not_t):
        raise TableArgumentError(f"total support arrays differ in length: {len(tsup_t)} and {len(tsup_not_t)}")
    return [Fraction(x) / (Fraction(x_neg) + 1) for x, x_neg in zip(tsup_t, tsup_not_t)]


def rank_relevance(tsup_t: Sequence[Fraction], tsup_not_t: Sequence[Fraction], target: int) -> List[RelevanceRow]:
    """Relevance rows for every column but ``target``, highest relevance first, ties by column."""
    scores = relevance(tsup_t, tsup_not_t)
    rows = [
        RelevanceRow(column=col, tsup_t=Fraction(tsup_t[col]), tsup_not_t=Fraction(tsup_not_t[col]), relevance=score)
        for col, score in enumerate(scores)
        if col != target
    ]
    rows.sort(key=lambda row: (-row.relevance, row.column))
    return rows


def run_relevance(
    table: BinaryTable,
    target: int,
    minsup: int = 1,
    settings: Optional[Settings] = None,
) -> Tuple[List[RelevanceRow], RunReport, RunReport]:
    """Run the small-space pipeline on ``target`` and on its complement, then rank columns.

    :param target: 1-based column
    :returns: Ranked rows plus the two run reports
    :raises TargetNotUsableError: Naming the run whose target could not be used
    """
    base = RunConfig(target=target, minsup=minsup, pipeline=PipelineKind.SMALL_SPACE)
    reports = []
    for negate in (False, True):
        cfg = base.model_copy(update={"negate_target": negate})
        try:
            reports.append(run_small_space(table, cfg, settings=settings))
        except TargetNotUsableError as e:
            context = f"negated target column {target}" if negate else f"target column {target}"
            raise TargetNotUsableError(e.status, context=context) from e

    plain, negated = reports
    ranked = rank_relevance(plain.tsup, negated.tsup, base.target_index)
    logger.info(f"Relevance for column {target}: {len(ranked)} column(s) ranked")
    return ranked, plain, negated
