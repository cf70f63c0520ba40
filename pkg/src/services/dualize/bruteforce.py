import logging
from itertools import combinations
from typing import Optional

from src.exceptions import OracleCapacityError
from src.schemas.common.bitsets import mask_of
from src.schemas.dualize.models import Hypergraph
from src.services.accounting.ledger import AccountingLedger

from .hypergraph import is_transversal
from .sinks import TransversalSink

logger = logging.getLogger(__name__)


class BruteForceDualizer:
    """Subset-enumeration oracle.

    Tries subsets by increasing size, ties in lexicographic vertex order, and emits
    those that meet every edge and stop doing so when any single member is removed.
    """

    def __init__(self, max_vertices: int = 20):
        self.max_vertices = max_vertices

    def dualize(self, hypergraph: Hypergraph, sink: TransversalSink, ledger: Optional[AccountingLedger] = None) -> int:
        """:raises OracleCapacityError: When the hypergraph has more than ``max_vertices`` vertices"""
        vertices = hypergraph.vertices
        if len(vertices) > self.max_vertices:
            raise OracleCapacityError(f"brute force handles at most {self.max_vertices} vertices, got {len(vertices)}")
        if hypergraph.unsatisfiable:
            return 0

        edges = hypergraph.edges
        count = 0
        for size in range(len(vertices) + 1):
            for subset in combinations(vertices, size):
                members = mask_of(subset)
                if not is_transversal(edges, members):
                    continue
                if any(is_transversal(edges, members & ~(1 << v)) for v in subset):
                    continue
                count += 1
                if sink(subset) is False:
                    logger.info(f"Brute force stopped by sink after {count} transversal(s)")
                    return count
        return count


def dualize_bruteforce(hypergraph: Hypergraph, sink: TransversalSink, max_vertices: int = 20) -> int:
    return BruteForceDualizer(max_vertices=max_vertices).dualize(hypergraph, sink)
