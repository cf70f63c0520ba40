from .models import DualizationEngine, Hypergraph

__all__ = ["DualizationEngine", "Hypergraph"]
