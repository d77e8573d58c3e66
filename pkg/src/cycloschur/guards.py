"""Size guards for potentially explosive enumerations.

Desk-scale computations are the design point; anything whose size estimate
exceeds a guard raises GuardError instead of hanging, and callers surface
the skip in reports.
"""

from __future__ import annotations

DEFAULT_GUARD = 10**6


class GuardError(RuntimeError):
    """An enumeration would exceed the configured size guard."""


def check_guard(count: int, cap: int | None, what: str) -> None:
    cap = DEFAULT_GUARD if cap is None else cap
    if count > cap:
        raise GuardError(f"{what} has size {count}, exceeding guard {cap}")
