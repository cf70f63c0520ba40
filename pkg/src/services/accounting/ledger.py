import logging
from collections import defaultdict
from typing import Dict

logger = logging.getLogger(__name__)

# Accounting sites
ACCUMULATOR = "accumulator"
ENGINE = "engine"
DUAL = "dual"
IMPLICATIONS = "implications"


class AccountingLedger:
    """Deterministic retained-memory accounting in logical units.

    One unit stands for one stored index word. Call sites charge what they keep
    and release it when they drop it; the ledger tracks the running total and its
    peak, overall and per site.
    """

    def __init__(self) -> None:
        self._current: Dict[str, int] = defaultdict(int)
        self._peak_by_site: Dict[str, int] = defaultdict(int)
        self.current = 0
        self.peak = 0

    def charge(self, site: str, units: int) -> None:
        if units < 0:
            raise ValueError("cannot charge a negative amount")
        self._current[site] += units
        self.current += units
        if self._current[site] > self._peak_by_site[site]:
            self._peak_by_site[site] = self._current[site]
        if self.current > self.peak:
            self.peak = self.current

    def release(self, site: str, units: int) -> None:
        if units > self._current[site]:
            raise ValueError(f"releasing {units} units from {site!r} which holds {self._current[site]}")
        self._current[site] -= units
        self.current -= units

    def current_for(self, site: str) -> int:
        return self._current[site]

    def peak_for(self, site: str) -> int:
        return self._peak_by_site[site]

    def snapshot(self) -> Dict[str, int]:
        """Peak units per site plus the overall peak under ``"total"``."""
        peaks = dict(self._peak_by_site)
        peaks["total"] = self.peak
        return peaks
