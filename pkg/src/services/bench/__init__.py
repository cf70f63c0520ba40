from .factory import make_benchmark_sweep
from .sweep import CSV_HEADER, BenchmarkSweep, account_peak, emit_csv, sweep

__all__ = ["BenchmarkSweep", "CSV_HEADER", "account_peak", "emit_csv", "make_benchmark_sweep", "sweep"]
