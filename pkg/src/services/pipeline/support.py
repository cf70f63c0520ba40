from typing import FrozenSet, Iterable, Tuple

from src.exceptions import TableArgumentError
from src.schemas.common.bitsets import bits_of
from src.schemas.table.models import BinaryTable
from src.services.table.operations import attrs_mask, check_column, extent


def implication_support(table: BinaryTable, antecedent: Iterable[int], target: int) -> Tuple[int, FrozenSet[int]]:
    """Rows holding every attribute of ``antecedent`` together with ``target``.

    :returns: The row count and the 0-based rows
    :raises TableArgumentError: On an empty antecedent, a target inside it, or out-of-range indices
    """
    members = tuple(antecedent)
    if not members:
        raise TableArgumentError("antecedent must not be empty")
    check_column(table, target)
    if target in members:
        raise TableArgumentError(f"column {target + 1} cannot be both antecedent and consequent")

    rows = extent(table, attrs_mask(table, members) | (1 << target))
    found = bits_of(rows)
    return len(found), found
