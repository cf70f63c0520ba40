from enum import Enum
from typing import FrozenSet, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from src.schemas.common.bitsets import bits_of, is_subset, mask_of


class DualizationEngine(str, Enum):
    """Available minimal transversal enumerators."""

    REVERSE_SEARCH = "reverse_search"
    BRUTEFORCE = "bruteforce"


class Hypergraph(BaseModel):
    """Vertex set and edge family to dualize.

    Edges are bitsets over attribute indices. An unsatisfiable hypergraph had an
    empty raw edge; it stores no edges and has no transversals.
    """

    model_config = ConfigDict(frozen=True)

    vertices: Tuple[int, ...] = Field(..., description="Attribute indices in ascending order")
    edges: Tuple[int, ...] = Field(default=(), description="Edge bitsets, an antichain")
    unsatisfiable: bool = False

    @model_validator(mode="after")
    def check_edges(self) -> "Hypergraph":
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be distinct and ascending")
        if self.unsatisfiable and self.edges:
            raise ValueError("an unsatisfiable hypergraph keeps no edges")
        universe = self.vertex_mask
        for edge in self.edges:
            if edge == 0:
                raise ValueError("stored edges must be non-empty")
            if not is_subset(edge, universe):
                raise ValueError("edge leaves the vertex set")
        for i, a in enumerate(self.edges):
            for j, b in enumerate(self.edges):
                if i != j and is_subset(a, b):
                    raise ValueError("edges must form an antichain")
        return self

    @classmethod
    def from_sets(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(vertices=tuple(sorted(set(vertices))), edges=tuple(mask_of(e) for e in edges))

    @property
    def vertex_mask(self) -> int:
        return mask_of(self.vertices)

    @property
    def edge_sets(self) -> List[FrozenSet[int]]:
        return [bits_of(e) for e in self.edges]
