"""Integer bitset helpers.

Rows and columns of a binary table are stored as Python ints where bit i
stands for row (or column) i, counted from 0.
"""

from typing import FrozenSet, Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    """Build a bitset from 0-based indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> FrozenSet[int]:
    return frozenset(iter_bits(mask))


def full_mask(width: int) -> int:
    return (1 << width) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0
