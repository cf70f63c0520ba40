import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from src.schemas.common.bitsets import iter_bits
from src.schemas.dualize.models import Hypergraph
from src.services.accounting.ledger import ENGINE, AccountingLedger

from .hypergraph import has_critical_edge
from .sinks import TransversalSink

logger = logging.getLogger(__name__)

Node = Tuple[Tuple[int, ...], int]


class ReverseSearchDualizer:
    """Reverse search over the edge sequence.

    A node at depth i is a minimal transversal of the first i edges. Its children
    at depth i+1 are the node itself when it already meets edge i+1, otherwise the
    node extended by one vertex v of edge i+1 such that every old member still has
    a critical edge among the first i edges. Removing the only member that meets
    the last edge recovers the parent, so each minimal transversal is reached once
    and nothing emitted is ever looked up again.

    Storage is one frame per depth: the current member tuple, its bitset and a
    candidate iterator. Emission order is depth-first with vertices taken in
    ascending order; members are reported in the order they were added.
    """

    def dualize(self, hypergraph: Hypergraph, sink: TransversalSink, ledger: Optional[AccountingLedger] = None) -> int:
        """Stream every minimal transversal of ``hypergraph`` to ``sink``.

        :returns: Number of emissions, including one that asked to stop
        """
        ledger = ledger or AccountingLedger()
        if hypergraph.unsatisfiable:
            return 0

        edges = hypergraph.edges
        depth_limit = len(edges)
        if depth_limit == 0:
            sink(())
            return 1

        count = 0
        frames: List[Iterator[Node]] = []
        frame_units: List[int] = []

        def push(path: Tuple[int, ...], members: int) -> None:
            units = len(path) + 2
            ledger.charge(ENGINE, units)
            frame_units.append(units)
            frames.append(self._children(edges, len(frames), path, members))

        push((), 0)
        while frames:
            child = next(frames[-1], None)
            if child is None:
                frames.pop()
                ledger.release(ENGINE, frame_units.pop())
                continue

            path, members = child
            if len(frames) < depth_limit:
                push(path, members)
                continue

            count += 1
            if sink(path) is False:
                logger.info(f"Reverse search stopped by sink after {count} transversal(s)")
                break

        while frame_units:
            ledger.release(ENGINE, frame_units.pop())
        return count

    @staticmethod
    def _children(edges: Sequence[int], depth: int, path: Tuple[int, ...], members: int) -> Iterator[Node]:
        edge = edges[depth]
        if members & edge:
            yield path, members
            return

        earlier = edges[:depth]
        for vertex in iter_bits(edge):
            candidate = members | (1 << vertex)
            if all(has_critical_edge(earlier, candidate, u) for u in path):
                yield path + (vertex,), candidate


def dualize_reverse_search(hypergraph: Hypergraph, sink: TransversalSink, ledger: Optional[AccountingLedger] = None) -> int:
    return ReverseSearchDualizer().dualize(hypergraph, sink, ledger)
