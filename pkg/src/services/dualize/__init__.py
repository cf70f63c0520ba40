from .bruteforce import BruteForceDualizer, dualize_bruteforce
from .factory import Dualizer, make_dualizer
from .hypergraph import minimize_edges
from .reverse_search import ReverseSearchDualizer, dualize_reverse_search
from .sinks import CollectingSink, TransversalDumpSink, TransversalSink

__all__ = [
    "BruteForceDualizer",
    "CollectingSink",
    "Dualizer",
    "ReverseSearchDualizer",
    "TransversalDumpSink",
    "TransversalSink",
    "dualize_bruteforce",
    "dualize_reverse_search",
    "make_dualizer",
    "minimize_edges",
]
