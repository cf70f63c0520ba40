from typing import Optional, Union

from src.config import Settings, get_settings
from src.schemas.dualize.models import DualizationEngine

from .bruteforce import BruteForceDualizer
from .reverse_search import ReverseSearchDualizer

Dualizer = Union[ReverseSearchDualizer, BruteForceDualizer]


def make_dualizer(engine: Optional[DualizationEngine] = None, settings: Optional[Settings] = None) -> Dualizer:
    """Factory function to create a dualization engine.

    :param engine: Engine to build; defaults to the configured one
    :param settings: Optional settings instance
    :returns: An engine exposing ``dualize(hypergraph, sink, ledger)``
    """
    if settings is None:
        settings = get_settings()

    engine = DualizationEngine(engine or settings.dualization.engine)
    if engine == DualizationEngine.BRUTEFORCE:
        return BruteForceDualizer(max_vertices=settings.dualization.oracle_max_vertices)
    return ReverseSearchDualizer()
