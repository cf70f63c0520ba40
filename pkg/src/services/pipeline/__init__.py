from .accumulator import TotalSupportAccumulator, accumulate
from .factory import make_run_config
from .formatting import format_implication, render_implications, render_relevance_csv, render_tsup_csv
from .relevance import rank_relevance, relevance, run_relevance
from .runner import prepare_run, run_full, run_pipeline, run_small_space
from .support import implication_support

__all__ = [
    "TotalSupportAccumulator",
    "accumulate",
    "format_implication",
    "implication_support",
    "make_run_config",
    "prepare_run",
    "rank_relevance",
    "relevance",
    "render_implications",
    "render_relevance_csv",
    "render_tsup_csv",
    "run_full",
    "run_pipeline",
    "run_relevance",
    "run_small_space",
]
