from .models import AccountedRun, ComparisonRow, RunStatus

__all__ = ["AccountedRun", "ComparisonRow", "RunStatus"]
