"""Work cap for brute-force enumeration, so oracles fail loudly instead of hanging."""

from __future__ import annotations

DEFAULT_ORACLE_BUDGET = 10_000_000


class OracleBudgetError(RuntimeError):
    """Raised when an enumeration would examine more candidates than allowed."""
