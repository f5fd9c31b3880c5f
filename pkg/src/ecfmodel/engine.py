"""
Expected Cash Flow pricing.

A payment ``fv`` due in ``X`` days from an issuer of efficiency ``k`` is
worth::

    pv = fv / sqrt(X * (1 - k) / 365 + 1)

``k = 1`` means no default risk at all (pv == fv); ``k = 0`` is the
"natural" issuer; ``k`` may be arbitrarily negative. Nothing here takes an
interest rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ._roots import bisect
from .core import (
    DAYS_PER_YEAR,
    BelowSearchFloor,
    InvalidConfig,
    InvalidTenor,
    NoConvergence,
    Schedule,
    SpeculativeDistortion,
    check_amount,
    check_days,
    check_k,
    validate_schedule,
)


@dataclass(frozen=True)
class EcfSolverConfig:
    k_tolerance: float = 1e-12
    pv_rel_tolerance: float = 1e-9
    k_search_floor: float = -1e6
    max_iterations: int = 200

    def __post_init__(self):
        if not (self.k_tolerance > 0 and self.pv_rel_tolerance > 0):
            raise InvalidConfig("solver tolerances must be > 0")
        if not self.k_search_floor < 1:
            raise InvalidConfig("k_search_floor must be < 1")
        if self.max_iterations < 1:
            raise InvalidConfig("max_iterations must be >= 1")


DEFAULT_CONFIG = EcfSolverConfig()


def effective_periods(days: float, k: float) -> float:
    """Brownian period count ``n = X(1-k)/365 + 1``; never below 1."""
    days = check_days(days)
    k = check_k(k)
    return days * (1.0 - k) / DAYS_PER_YEAR + 1.0


def ecf_discount_factor(days: float, k: float) -> float:
    return 1.0 / math.sqrt(effective_periods(days, k))


def pv_single(fv: float, days: float, k: float) -> float:
    fv = check_amount(fv, "fv")
    return fv / math.sqrt(effective_periods(days, k))


def fv_single(pv: float, days: float, k: float) -> float:
    pv = check_amount(pv, "pv")
    return pv * math.sqrt(effective_periods(days, k))


def solve_k_single(pv: float, fv: float, days: float) -> float:
    """Issuer efficiency implied by one price ``pv`` for one payment ``fv``.

    Closed form: ``k = 1 - 365 * ((fv/pv)**2 - 1) / X``.
    """
    pv = check_amount(pv, "pv")
    fv = check_amount(fv, "fv")
    days = check_days(days)
    if pv > fv:
        raise SpeculativeDistortion(f"price {pv} exceeds the promised payment {fv}")
    if pv == fv:
        return 1.0
    if days == 0:
        raise InvalidTenor("a same-day payment can only be worth its face value")
    # (fv/pv)^2 - 1 without the cancellation of forming the square first
    excess = (fv - pv) * (fv + pv) / (pv * pv)
    return 1.0 - DAYS_PER_YEAR * excess / days


def pv_schedule(schedule: Schedule, k: float) -> float:
    """Sum of every flow discounted on its own tenor with one shared ``k``."""
    validate_schedule(schedule)
    k = check_k(k)
    return _pv_flows(schedule, k)


def _pv_flows(schedule: Schedule, k: float) -> float:
    w = (1.0 - k) / DAYS_PER_YEAR
    return math.fsum(f.amount / math.sqrt(f.days * w + 1.0) for f in schedule.flows)


def solve_k_schedule(
    schedule: Schedule, price: float, config: EcfSolverConfig = DEFAULT_CONFIG
) -> float:
    """Find the ``k`` at which the schedule prices at ``price``.

    PV is strictly increasing in ``k`` (for any flow beyond day 0), so the
    root is unique; bisection on ``[lo, 1]`` where ``lo`` is pushed down
    geometrically until it brackets, stopping at ``config.k_search_floor``.
    """
    validate_schedule(schedule)
    price = check_amount(price, "price")
    total = schedule.total
    if price >= total:
        raise SpeculativeDistortion(
            f"price {price} is not below the undiscounted cash-flow sum {total}"
        )

    def objective(k: float) -> float:
        return _pv_flows(schedule, k) - price

    floor = config.k_search_floor
    lo = max(0.0, floor)
    while objective(lo) > 0.0:
        if lo <= floor:
            raise BelowSearchFloor(
                f"price {price} implies k below the search floor {floor}"
            )
        lo = max(1.0 - 2.0 * (1.0 - lo), floor)

    k = bisect(objective, lo, 1.0, config.k_tolerance, config.max_iterations)
    if abs(objective(k)) > config.pv_rel_tolerance * price:
        raise NoConvergence(f"residual at k={k} exceeds pv tolerance")
    return k


def days_saved(days: float, k: float) -> float:
    """Share of the tenor the issuer's efficiency removes from risk, ``k * X``.

    Negative for ``k < 0``: days added rather than saved.
    """
    return check_k(k) * check_days(days)


def risk_equivalent_days(days: float, k: float) -> float:
    """Tenor actually carried as risk, ``X * (1 - k)``.

    Computed as ``X - days_saved`` so the pair sums back to ``X``.
    """
    return check_days(days) - days_saved(days, k)
