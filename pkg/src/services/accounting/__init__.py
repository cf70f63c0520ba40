from .ledger import ACCUMULATOR, DUAL, ENGINE, IMPLICATIONS, AccountingLedger

__all__ = ["ACCUMULATOR", "DUAL", "ENGINE", "IMPLICATIONS", "AccountingLedger"]
