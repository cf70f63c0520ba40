from .bench.models import AccountedRun, ComparisonRow, RunStatus
from .dualize.models import DualizationEngine, Hypergraph
from .pipeline.models import Implication, PipelineKind, RelevanceRow, RunConfig, RunReport
from .relations.models import ArrowRelations, TargetContext
from .table.models import BinaryTable, ReductionLog, TargetStatus, TargetStatusKind

__all__ = [
    "AccountedRun",
    "ArrowRelations",
    "BinaryTable",
    "ComparisonRow",
    "DualizationEngine",
    "Hypergraph",
    "Implication",
    "PipelineKind",
    "ReductionLog",
    "RelevanceRow",
    "RunConfig",
    "RunReport",
    "RunStatus",
    "TargetContext",
    "TargetStatus",
    "TargetStatusKind",
]
