"""
Classical compound-interest discounting, kept only as a baseline to set
the ECF curves against. Annual compounding, ``t = days / 365``.
"""

from __future__ import annotations

import math

from ._roots import bisect
from .core import (
    DAYS_PER_YEAR,
    InvalidRate,
    NoConvergence,
    Schedule,
    check_amount,
    check_days,
    validate_schedule,
)

YIELD_LOWER = -0.9999
YIELD_UPPER = 10.0


def check_rate(r: float) -> float:
    if not isinstance(r, (int, float)) or not math.isfinite(r) or r <= -1:
        raise InvalidRate(f"annual rate must be finite and > -1, got {r!r}")
    return float(r)


def dcf_discount_factor(t: float, r: float) -> float:
    """``(1 + r) ** -t`` for ``t`` in years."""
    t = check_days(t)
    r = check_rate(r)
    return (1.0 + r) ** -t


def _pv_flows(schedule: Schedule, r: float) -> float:
    base = 1.0 + r
    return math.fsum(f.amount * base ** (-f.days / DAYS_PER_YEAR) for f in schedule.flows)


def pv_dcf(schedule: Schedule, r: float) -> float:
    validate_schedule(schedule)
    return _pv_flows(schedule, check_rate(r))


def solve_implied_yield(
    schedule: Schedule,
    price: float,
    rel_tolerance: float = 1e-9,
    max_iterations: int = 200,
) -> float:
    """Annual yield at which the schedule's DCF value equals ``price``.

    Bisection on ``(-0.9999, 10]``; a price outside the values reachable on
    that interval raises ``NoConvergence``.
    """
    validate_schedule(schedule)
    price = check_amount(price, "price")

    def objective(r: float) -> float:
        return _pv_flows(schedule, r) - price

    # pv is decreasing in r
    if objective(YIELD_LOWER) < 0.0 or objective(YIELD_UPPER) > 0.0:
        raise NoConvergence(
            f"price {price} is not attainable for yields in ({YIELD_LOWER}, {YIELD_UPPER}]"
        )
    r = bisect(objective, YIELD_LOWER, YIELD_UPPER, 1e-15, max_iterations)
    if abs(objective(r)) > rel_tolerance * price:
        raise NoConvergence(f"residual at r={r} exceeds tolerance")
    return r
