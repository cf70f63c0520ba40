from .operations import (
    check_target_status,
    closure,
    negate_column,
    reduce_table,
    support_of_attrs,
    support_of_rows,
)
from .parser import load_table, parse_table

__all__ = [
    "check_target_status",
    "closure",
    "load_table",
    "negate_column",
    "parse_table",
    "reduce_table",
    "support_of_attrs",
    "support_of_rows",
]
