import logging
from typing import FrozenSet, List, Optional, Protocol, Set, TextIO, Tuple

logger = logging.getLogger(__name__)


class TransversalSink(Protocol):
    """Receives each minimal transversal once.

    Returning ``False`` asks the engine to stop; any other value continues.
    """

    def __call__(self, transversal: Tuple[int, ...]) -> Optional[bool]: ...


class CollectingSink:
    """Keeps every emission in order. Meant for tests and oracles."""

    def __init__(self) -> None:
        self.emissions: List[Tuple[int, ...]] = []

    def __call__(self, transversal: Tuple[int, ...]) -> Optional[bool]:
        self.emissions.append(transversal)
        return None

    @property
    def as_sets(self) -> Set[FrozenSet[int]]:
        return {frozenset(t) for t in self.emissions}


class TransversalDumpSink:
    """Writes one transversal per line as space-separated 1-based indices."""

    def __init__(self, stream: TextIO):
        self.stream = stream
        self.lines = 0

    def __call__(self, transversal: Tuple[int, ...]) -> Optional[bool]:
        self.stream.write(" ".join(str(v + 1) for v in transversal) + "\n")
        self.lines += 1
        return None
