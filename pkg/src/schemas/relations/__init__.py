from .models import ArrowRelations, TargetContext

__all__ = ["ArrowRelations", "TargetContext"]
