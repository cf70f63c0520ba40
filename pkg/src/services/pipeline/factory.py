from typing import Optional

from src.config import Settings, get_settings
from src.schemas.dualize.models import DualizationEngine
from src.schemas.pipeline.models import PipelineKind, RunConfig


def make_run_config(
    target: int,
    minsup: Optional[int] = None,
    pipeline: Optional[PipelineKind] = None,
    engine: Optional[DualizationEngine] = None,
    negate_target: bool = False,
    cap: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> RunConfig:
    """Build a run configuration, filling unset values from settings.

    :param target: 1-based column
    :returns: Validated RunConfig
    """
    if settings is None:
        settings = get_settings()

    return RunConfig(
        target=target,
        minsup=settings.pipeline.minsup if minsup is None else minsup,
        pipeline=PipelineKind(pipeline or settings.pipeline.pipeline),
        engine=DualizationEngine(engine or settings.dualization.engine),
        negate_target=negate_target,
        cap=cap,
    )
