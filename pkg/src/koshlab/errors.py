"""Exception hierarchy shared by every module."""
from __future__ import annotations


class KoshlabError(Exception):
    """Base class for all library errors."""


class DomainError(KoshlabError, ValueError):
    """An argument violates a stated precondition.

    ``predicate`` is a short human-readable form of the violated condition,
    e.g. ``"Re(a) > |Im(rho)|"``.
    """

    def __init__(self, predicate: str, detail: str | None = None):
        self.predicate = predicate
        msg = f"domain violation: {predicate}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class PoleError(DomainError):
    def __init__(self, where, predicate: str = "argument is not a pole"):
        self.where = where
        super().__init__(predicate, f"pole at {where}")


class BranchError(DomainError):
    pass


class UnsupportedRegionError(DomainError):
    pass


class ConvergenceError(KoshlabError, ArithmeticError):
    def __init__(self, message: str, best=None):
        self.best = best
        super().__init__(message)


class CacheMissError(KoshlabError, IndexError):
    pass


class NumericOverflowError(KoshlabError, OverflowError):
    pass
