from .arrows import build_hypergraph, compute_arrow_relations, compute_d_row, compute_down_arrow, compute_up_arrow

__all__ = [
    "build_hypergraph",
    "compute_arrow_relations",
    "compute_d_row",
    "compute_down_arrow",
    "compute_up_arrow",
]
