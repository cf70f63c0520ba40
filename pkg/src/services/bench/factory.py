from typing import Optional

from src.config import Settings, get_settings

from .sweep import BenchmarkSweep


def make_benchmark_sweep(workers: Optional[int] = None, settings: Optional[Settings] = None) -> BenchmarkSweep:
    """Factory function to create a benchmark sweep from settings.

    :param workers: Overrides the configured worker count
    """
    if settings is None:
        settings = get_settings()

    return BenchmarkSweep(
        workers=settings.bench.workers if workers is None else workers,
        repeats=settings.bench.repeats,
        settings=settings,
    )
