from typing import Iterable, List, Sequence

from src.schemas.common.bitsets import is_subset


def minimize_edges(raw_edges: Iterable[int]) -> List[int]:
    """Drop duplicate edges and edges that contain another edge.

    Survivors keep their first-occurrence order.
    """
    unique = list(dict.fromkeys(raw_edges))
    return [edge for edge in unique if not any(other != edge and is_subset(other, edge) for other in unique)]


def is_transversal(edges: Sequence[int], members: int) -> bool:
    return all(edge & members for edge in edges)


def has_critical_edge(edges: Sequence[int], members: int, vertex: int) -> bool:
    """True when some edge meets ``members`` in ``vertex`` only."""
    bit = 1 << vertex
    return any(edge & members == bit for edge in edges)
