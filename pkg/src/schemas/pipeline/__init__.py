from .models import Implication, PipelineKind, RelevanceRow, RunConfig, RunReport

__all__ = ["Implication", "PipelineKind", "RelevanceRow", "RunConfig", "RunReport"]
