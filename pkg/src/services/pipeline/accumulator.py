from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple


class TotalSupportAccumulator:
    """Running total supports tsup_t(y), one exact entry per original column.

    Each kept implication Y -> t adds support/|Y| to every y in Y.
    """

    def __init__(self, n_attrs: int):
        if n_attrs < 1:
            raise ValueError("accumulator needs at least one column")
        self._totals: List[Fraction] = [Fraction(0)] * n_attrs
        self.implications_seen = 0
        self.implications_kept = 0

    def __len__(self) -> int:
        return len(self._totals)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TotalSupportAccumulator):
            return NotImplemented
        return self._totals == other._totals

    def __repr__(self) -> str:
        return f"TotalSupportAccumulator(totals={self.as_floats()}, seen={self.implications_seen}, kept={self.implications_kept})"

    @property
    def totals(self) -> Tuple[Fraction, ...]:
        return tuple(self._totals)

    def record_seen(self) -> None:
        self.implications_seen += 1

    def add(self, antecedent: Sequence[int], support: int) -> None:
        if not antecedent:
            raise ValueError("antecedent must not be empty")
        if support < 0:
            raise ValueError("support must be non-negative")
        share = Fraction(support, len(antecedent))
        for y in antecedent:
            self._totals[y] += share
        self.implications_kept += 1

    def as_floats(self) -> List[float]:
        return [float(v) for v in self._totals]


def accumulate(acc: TotalSupportAccumulator, antecedent: Iterable[int], support: int) -> TotalSupportAccumulator:
    acc.add(tuple(antecedent), support)
    return acc
