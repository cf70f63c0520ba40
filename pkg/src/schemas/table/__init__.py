from .models import BinaryTable, ReductionLog, TargetStatus, TargetStatusKind

__all__ = ["BinaryTable", "ReductionLog", "TargetStatus", "TargetStatusKind"]
