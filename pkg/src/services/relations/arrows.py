import logging
from typing import FrozenSet, List, Optional, Tuple

from src.schemas.common.bitsets import is_subset, iter_bits
from src.schemas.dualize.models import Hypergraph
from src.schemas.relations.models import ArrowRelations, TargetContext
from src.schemas.table.models import BinaryTable
from src.services.dualize.hypergraph import minimize_edges
from src.services.table.operations import check_column

logger = logging.getLogger(__name__)


def _up_by_row(table: BinaryTable) -> List[int]:
    # Only the first row of each group of identical intents may carry an up arrow
    first_seen = set()
    up: List[int] = []
    for row_intent in table.rows:
        if row_intent in first_seen:
            up.append(0)
            continue
        first_seen.add(row_intent)

        meet = table.all_cols
        for other in table.rows:
            if other != row_intent and is_subset(row_intent, other):
                meet &= other
        up.append(meet & ~row_intent)
    return up


def _down_by_row(table: BinaryTable) -> List[int]:
    down = [0] * table.n_rows
    for y, col_extent in enumerate(table.cols):
        meet = table.all_rows
        for other in table.cols:
            if other != col_extent and is_subset(col_extent, other):
                meet &= other
        for u in iter_bits(meet & ~col_extent):
            down[u] |= 1 << y
    return down


def compute_arrow_relations(table: BinaryTable) -> ArrowRelations:
    """Up and down arrows by direct comparison of row intents and column extents.

    (u, x) is an up arrow when u lacks x and every row whose intent strictly
    contains u's has x. (u, y) is a down arrow when u lacks y and u holds every
    attribute whose extent strictly contains y's.
    """
    return ArrowRelations(up_by_row=tuple(_up_by_row(table)), down_by_row=tuple(_down_by_row(table)))


def compute_up_arrow(table: BinaryTable) -> FrozenSet[Tuple[int, int]]:
    return compute_arrow_relations(table).up


def compute_down_arrow(table: BinaryTable) -> FrozenSet[Tuple[int, int]]:
    return compute_arrow_relations(table).down


def compute_d_row(table: BinaryTable, x: int, arrows: Optional[ArrowRelations] = None) -> TargetContext:
    """Build xD and M(x) for attribute ``x`` (0-based, reduced table).

    :param arrows: Precomputed relations, reused across targets
    :returns: Target context; ``d_row`` may be empty
    """
    check_column(table, x)
    arrows = arrows or compute_arrow_relations(table)

    up_rows = arrows.up_rows_for(x)
    d_row = 0
    for u in up_rows:
        d_row |= arrows.down_by_row[u]
    d_row &= ~(1 << x)

    return TargetContext(
        target=x,
        d_row=d_row,
        up_rows=tuple(up_rows),
        maximal_sets=tuple(table.rows[u] for u in up_rows),
    )


def build_hypergraph(ctx: TargetContext) -> Hypergraph:
    """H(x) with vertices xD and one edge xD minus M_i per maximal set."""
    vertices = tuple(iter_bits(ctx.d_row))
    raw_edges = [ctx.d_row & ~maximal for maximal in ctx.maximal_sets]

    if any(edge == 0 for edge in raw_edges):
        logger.info(f"Hypergraph for column {ctx.target + 1} has an empty edge; no transversals exist")
        return Hypergraph(vertices=vertices, unsatisfiable=True)

    edges = minimize_edges(raw_edges)
    logger.info(f"Hypergraph for column {ctx.target + 1}: {len(vertices)} vertices, {len(edges)} edges")
    return Hypergraph(vertices=vertices, edges=tuple(edges))
