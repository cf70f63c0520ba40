import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

from src.config import Settings, get_settings
from src.exceptions import TargetNotUsableError
from src.schemas.dualize.models import DualizationEngine, Hypergraph
from src.schemas.pipeline.models import Implication, PipelineKind, RunConfig, RunReport
from src.schemas.table.models import BinaryTable, ReductionLog
from src.services.accounting.ledger import ACCUMULATOR, DUAL, IMPLICATIONS, AccountingLedger
from src.services.dualize.factory import make_dualizer
from src.services.dualize.sinks import TransversalSink
from src.services.relations.arrows import build_hypergraph, compute_d_row
from src.services.table.operations import check_column, check_target_status, negate_column, reduce_table

from .accumulator import TotalSupportAccumulator, accumulate
from .support import implication_support

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreparedRun:
    """Reduced table, index maps and hypergraph for one target."""

    reduced: BinaryTable
    reduction_log: ReductionLog
    target: int
    hypergraph: Hypergraph

    def to_original(self, transversal: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(self.reduction_log.to_original(v) for v in transversal)


def prepare_run(table: BinaryTable, cfg: RunConfig) -> PreparedRun:
    """Gate the target, reduce the table and build H(t).

    :raises TableArgumentError: When the target is outside the table
    :raises TargetNotUsableError: When the target column is reducible or has an empty extent
    """
    target = cfg.target_index
    check_column(table, target)

    working = negate_column(table, target) if cfg.negate_target else table
    status = check_target_status(working, target)
    if not status.usable:
        raise TargetNotUsableError(status)

    reduced, log = reduce_table(working)
    reduced_target = log.to_reduced(target)
    if reduced_target is None:
        raise TargetNotUsableError(status)

    ctx = compute_d_row(reduced, reduced_target)
    return PreparedRun(reduced=reduced, reduction_log=log, target=reduced_target, hypergraph=build_hypergraph(ctx))


class _StopAfter:
    def __init__(self, cap: Optional[int]):
        self.cap = cap
        self.seen = 0
        self.stopped = False

    def tick(self) -> bool:
        self.seen += 1
        if self.cap is not None and self.seen >= self.cap:
            self.stopped = True
            return False
        return True


def _report(
    cfg: RunConfig,
    prepared: PreparedRun,
    acc: TotalSupportAccumulator,
    ledger: AccountingLedger,
    transversal_count: int,
    started: float,
    truncated: bool,
    implications: Optional[List[Implication]] = None,
) -> RunReport:
    report = RunReport(
        config=cfg,
        reduction_log=prepared.reduction_log,
        implications=implications or [],
        accumulator=acc,
        transversal_count=transversal_count,
        wall_ms=(time.perf_counter() - started) * 1000,
        truncated=truncated,
        peak_retained_units=ledger.peak,
        peak_by_site=ledger.snapshot(),
    )
    if truncated:
        logger.warning(f"Run on column {cfg.target} stopped after {transversal_count} transversal(s); totals are partial")
    logger.info(
        f"{cfg.pipeline.value} run on column {cfg.target}: {transversal_count} transversal(s), "
        f"{acc.implications_kept} kept, {report.wall_ms:.2f} ms, peak {ledger.peak} units"
    )
    return report


def run_full(
    table: BinaryTable,
    cfg: RunConfig,
    observer: Optional[TransversalSink] = None,
    settings: Optional[Settings] = None,
) -> RunReport:
    """Collect the dual hypergraph, form and filter implications, then aggregate.

    :param table: Original table
    :param cfg: Run configuration
    :param observer: Optional sink receiving every transversal in original indices
    :param settings: Optional settings instance
    :returns: Report carrying the kept implications in emission order
    """
    started = time.perf_counter()
    prepared = prepare_run(table, cfg)
    ledger = AccountingLedger()
    acc = TotalSupportAccumulator(table.n_cols)
    ledger.charge(ACCUMULATOR, table.n_cols)

    dual: List[Tuple[int, ...]] = []
    stop = _StopAfter(cfg.cap)

    def collect(transversal: Tuple[int, ...]) -> bool:
        if observer is not None:
            observer(prepared.to_original(transversal))
        dual.append(transversal)
        ledger.charge(DUAL, len(transversal) + 1)
        return stop.tick()

    dualizer = make_dualizer(cfg.engine, settings)
    transversal_count = dualizer.dualize(prepared.hypergraph, collect, ledger)

    target = cfg.target_index
    kept: List[Implication] = []
    for transversal in dual:
        if not transversal:
            continue
        acc.record_seen()
        support, rows = implication_support(prepared.reduced, transversal, prepared.target)
        if support < cfg.minsup:
            continue
        implication = Implication(antecedent=prepared.to_original(transversal), consequent=target, support_rows=tuple(sorted(rows)))
        ledger.charge(IMPLICATIONS, len(implication.antecedent) + implication.support + 2)
        kept.append(implication)

    ledger.release(DUAL, ledger.current_for(DUAL))
    dual.clear()

    for implication in kept:
        accumulate(acc, implication.antecedent, implication.support)

    return _report(cfg, prepared, acc, ledger, transversal_count, started, stop.stopped, kept)


def run_small_space(
    table: BinaryTable,
    cfg: RunConfig,
    observer: Optional[TransversalSink] = None,
    settings: Optional[Settings] = None,
) -> RunReport:
    """Aggregate each transversal as it is emitted and keep nothing else.

    Always uses reverse search.
    """
    if cfg.engine != DualizationEngine.REVERSE_SEARCH:
        logger.warning("Small-space runs always use reverse search; ignoring the requested engine")
        cfg = cfg.model_copy(update={"engine": DualizationEngine.REVERSE_SEARCH})

    started = time.perf_counter()
    prepared = prepare_run(table, cfg)
    ledger = AccountingLedger()
    acc = TotalSupportAccumulator(table.n_cols)
    ledger.charge(ACCUMULATOR, table.n_cols)
    stop = _StopAfter(cfg.cap)

    def aggregate(transversal: Tuple[int, ...]) -> bool:
        original = prepared.to_original(transversal)
        if observer is not None:
            observer(original)
        if transversal:
            acc.record_seen()
            support, _ = implication_support(prepared.reduced, transversal, prepared.target)
            if support >= cfg.minsup:
                accumulate(acc, original, support)
        return stop.tick()

    dualizer = make_dualizer(DualizationEngine.REVERSE_SEARCH, settings)
    transversal_count = dualizer.dualize(prepared.hypergraph, aggregate, ledger)
    return _report(cfg, prepared, acc, ledger, transversal_count, started, stop.stopped)


def run_pipeline(
    table: BinaryTable,
    cfg: RunConfig,
    observer: Optional[TransversalSink] = None,
    settings: Optional[Settings] = None,
) -> RunReport:
    if cfg.pipeline == PipelineKind.FULL:
        return run_full(table, cfg, observer, settings or get_settings())
    return run_small_space(table, cfg, observer, settings or get_settings())
