"""
Domain types, error classes and day-count arithmetic.

Days between valuation and payment are actual calendar days; the year
length used to turn days into periods is always 365 (ACT/365 Fixed).
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from datetime import date
from decimal import Decimal
from typing import Iterable, Optional

DAYS_PER_YEAR = 365


class EcfError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(EcfError, ValueError):
    """Bad input: malformed schedule, out-of-range parameter, bad tenor."""


class SolverError(EcfError, ArithmeticError):
    """A calibration or root search could not produce an answer."""


class InvalidTenor(ValidationError):
    pass


class EmptySchedule(ValidationError):
    pass


class MalformedSchedule(ValidationError):
    pass


class InvalidAmount(ValidationError):
    pass


class KOutOfRange(ValidationError):
    pass


class InvalidRate(ValidationError):
    pass


class InvalidConfig(ValidationError):
    pass


class UnknownInstrument(ValidationError):
    pass


class SpeculativeDistortion(SolverError):
    """Quoted price at or above what the promised cash flows could ever be worth."""


class BelowSearchFloor(SolverError):
    pass


class NoConvergence(SolverError):
    pass


class NoCrossover(SolverError):
    pass


def _finite(x) -> bool:
    if isinstance(x, bool) or not isinstance(x, (numbers.Real, Decimal)):
        return False
    return math.isfinite(x)


def check_days(days: float) -> float:
    if not _finite(days) or days < 0:
        raise InvalidTenor(f"days must be a finite value >= 0, got {days!r}")
    return float(days)


def check_k(k: float) -> float:
    """Return ``k`` if it is a usable efficiency factor (k <= 1, finite)."""
    if not _finite(k) or k > 1:
        raise KOutOfRange(f"k must be finite and <= 1, got {k!r}")
    return float(k)


def check_amount(x: float, what: str = "amount") -> float:
    if not _finite(x) or x <= 0:
        raise InvalidAmount(f"{what} must be finite and > 0, got {x!r}")
    return float(x)


def day_count(valuation_date: date, flow_date: date) -> int:
    """Calendar days from ``valuation_date`` to ``flow_date``.

    Leap days count as days; the 365-day year only enters when days are
    converted into periods.
    """
    days = (flow_date - valuation_date).days
    if days < 0:
        raise InvalidTenor(f"flow date {flow_date} precedes valuation date {valuation_date}")
    return days


@dataclass(frozen=True)
class CashFlow:
    """A single promised payment ``amount`` due ``days`` after valuation."""

    days: int
    amount: float

    def __post_init__(self):
        if isinstance(self.days, bool) or not isinstance(self.days, int) or self.days < 0:
            raise InvalidTenor(f"cash flow days must be an integer >= 0, got {self.days!r}")
        if not _finite(self.amount) or self.amount <= 0:
            raise MalformedSchedule(f"cash flow amount must be > 0, got {self.amount!r}")
        object.__setattr__(self, "amount", float(self.amount))


def _check_flows(flows: tuple) -> None:
    if not flows:
        raise EmptySchedule("schedule has no cash flows")
    for f in flows:
        if not isinstance(f, CashFlow):
            raise MalformedSchedule(f"expected CashFlow, got {type(f).__name__}")
    for prev, cur in zip(flows, flows[1:]):
        if cur.days <= prev.days:
            raise MalformedSchedule(
                f"flows must be strictly ascending in days ({prev.days} then {cur.days})"
            )


@dataclass(frozen=True)
class Schedule:
    """Ordered cash flows of one instrument (loan, bond, annuity)."""

    instrument_id: str
    flows: tuple[CashFlow, ...]

    def __post_init__(self):
        # accept any iterable, store an immutable tuple
        object.__setattr__(self, "flows", tuple(self.flows))
        _check_flows(self.flows)

    @classmethod
    def from_pairs(cls, instrument_id: str, pairs: Iterable[tuple[int, float]]) -> "Schedule":
        return cls(instrument_id, tuple(CashFlow(d, a) for d, a in pairs))

    @property
    def total(self) -> float:
        """Undiscounted sum of the promised amounts."""
        return math.fsum(f.amount for f in self.flows)

    @property
    def maturity_days(self) -> int:
        return self.flows[-1].days


def validate_schedule(schedule: Schedule) -> Schedule:
    """Re-check all schedule invariants and return the same object."""
    if not isinstance(schedule, Schedule):
        raise MalformedSchedule(f"expected Schedule, got {type(schedule).__name__}")
    _check_flows(schedule.flows)
    return schedule


@dataclass(frozen=True)
class Quote:
    instrument_id: str
    issuer: str
    price: float
    valuation_date: Optional[date] = field(default=None)

    def __post_init__(self):
        check_amount(self.price, "quote price")
        object.__setattr__(self, "price", float(self.price))


class InvalidInput(ValidationError):
    """Unreadable or schema-violating input file."""
