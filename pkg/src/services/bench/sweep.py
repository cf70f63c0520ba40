import asyncio
import csv
import logging
from pathlib import Path
from statistics import fmean
from typing import IO, Iterable, List, Optional, Sequence, Union

from src.config import Settings
from src.exceptions import (
    BenchmarkException,
    ConfigurationError,
    DualizationException,
    PipelineException,
    TableException,
    TotalSupportMismatchError,
)
from src.schemas.bench.models import AccountedRun, ComparisonRow, RunStatus
from src.schemas.pipeline.models import PipelineKind, RunConfig, RunReport
from src.schemas.table.models import BinaryTable
from src.services.pipeline.formatting import format_number
from src.services.pipeline.runner import run_pipeline
from src.services.table.operations import check_column, check_target_status

logger = logging.getLogger(__name__)

CSV_HEADER = [
    "target",
    "status",
    "orig_peak",
    "small_peak",
    "peak_diff",
    "peak_savings_pct",
    "orig_ms",
    "small_ms",
    "ms_diff",
    "transversals",
    "kept",
]


def account_peak(table: BinaryTable, cfg: RunConfig, settings: Optional[Settings] = None) -> int:
    """Peak retained units of one run."""
    return run_pipeline(table, cfg, settings=settings).peak_retained_units


class BenchmarkSweep:
    """Runs both pipelines per target and compares retained memory and time."""

    def __init__(self, workers: int = 1, repeats: int = 1, settings: Optional[Settings] = None):
        """Initialize the sweep.

        :param workers: Targets processed at the same time
        :param repeats: Runs per pipeline; peak from the first, wall time from the last
        :param settings: Settings passed on to each run
        :raises ConfigurationError: When workers or repeats is below 1
        """
        if workers < 1 or repeats < 1:
            raise ConfigurationError(f"workers and repeats must be at least 1, got workers={workers}, repeats={repeats}")
        self.workers = workers
        self.repeats = repeats
        self.settings = settings

    def _measure(self, table: BinaryTable, cfg: RunConfig) -> RunReport:
        first = run_pipeline(table, cfg, settings=self.settings)
        last = first
        for _ in range(self.repeats - 1):
            last = run_pipeline(table, cfg, settings=self.settings)
        if last is not first:
            return first.model_copy(update={"wall_ms": last.wall_ms})
        return first

    @staticmethod
    def _accounted(report: RunReport) -> AccountedRun:
        return AccountedRun(
            target=report.config.target,
            peak_retained_units=report.peak_retained_units,
            transversal_count=report.transversal_count,
            kept_count=report.kept_count,
            wall_ms=report.wall_ms,
        )

    def compare_target(self, table: BinaryTable, target: int, minsup: int) -> ComparisonRow:
        """Build one comparison row; never raises for run-level failures.

        :param target: 1-based column
        """
        status = check_target_status(table, target - 1)
        if not status.usable:
            starred = AccountedRun(target=target, status=RunStatus.STARRED)
            logger.info(f"Column {target} starred: {status.explanation}")
            return ComparisonRow(target=target, original=starred, small=starred, message=status.explanation)

        base = RunConfig(target=target, minsup=minsup)
        try:
            full = self._measure(table, base.model_copy(update={"pipeline": PipelineKind.FULL}))
            small = self._measure(table, base.model_copy(update={"pipeline": PipelineKind.SMALL_SPACE}))
            if full.tsup != small.tsup:
                raise TotalSupportMismatchError(f"column {target}: full and small-space totals differ")
        except (BenchmarkException, DualizationException, PipelineException, TableException) as e:
            logger.warning(f"Column {target} failed: {e}")
            failed = AccountedRun(target=target, status=RunStatus.FAILED)
            return ComparisonRow(target=target, original=failed, small=failed, message=str(e))

        return ComparisonRow(target=target, original=self._accounted(full), small=self._accounted(small))

    async def sweep_async(self, table: BinaryTable, targets: Sequence[int], minsup: int = 1) -> List[ComparisonRow]:
        """Compare every target, at most ``workers`` at a time, rows in target order."""
        for target in targets:
            check_column(table, target - 1)

        semaphore = asyncio.Semaphore(self.workers)

        async def one(target: int) -> ComparisonRow:
            async with semaphore:
                row = await asyncio.to_thread(self.compare_target, table, target, minsup)
                logger.info(f"Column {target}: {row.status.value}")
                return row

        rows = await asyncio.gather(*(one(t) for t in targets))
        return list(rows)

    def sweep(self, table: BinaryTable, targets: Sequence[int], minsup: int = 1) -> List[ComparisonRow]:
        return asyncio.run(self.sweep_async(table, targets, minsup))


def sweep(table: BinaryTable, targets: Sequence[int], minsup: int = 1, workers: int = 1, repeats: int = 1) -> List[ComparisonRow]:
    return BenchmarkSweep(workers=workers, repeats=repeats).sweep(table, targets, minsup)


def _csv_values(row: ComparisonRow) -> List[float]:
    return [
        row.original.peak_retained_units,
        row.small.peak_retained_units,
        row.peak_diff,
        row.peak_savings_pct,
        row.original.wall_ms,
        row.small.wall_ms,
        row.ms_diff,
        row.small.transversal_count,
        row.small.kept_count,
    ]


def _footer(label: str, rows: Iterable[ComparisonRow]) -> List[str]:
    columns = list(zip(*(_csv_values(r) for r in rows)))
    means = [fmean(col) for col in columns] if columns else [0.0] * (len(CSV_HEADER) - 2)
    return [label, ""] + [format_number(m) for m in means]


def emit_csv(rows: Sequence[ComparisonRow], out: Union[str, Path, IO[str]]) -> None:
    """Write the comparison table with "AVG" and "AVG (no *)" footers.

    :param out: Path or open text stream
    """
    if isinstance(out, (str, Path)):
        with open(out, "w", newline="", encoding="utf-8") as handle:
            emit_csv(rows, handle)
        return

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        values = _csv_values(row)
        writer.writerow(
            [row.target, row.status.value]
            + [str(int(v)) for v in values[:3]]
            + [format_number(v) for v in values[3:7]]
            + [str(int(v)) for v in values[7:]]
        )
    writer.writerow(_footer("AVG", rows))
    writer.writerow(_footer("AVG (no *)", [r for r in rows if r.status == RunStatus.OK]))
