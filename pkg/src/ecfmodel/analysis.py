"""
Tables behind the ECF-vs-DCF comparison: discount-factor curves, the
crossover tenor, the k-by-maturity term structure, and batch calibration
of quotes.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from ._roots import bisect
from .core import (
    DAYS_PER_YEAR,
    EcfError,
    InvalidConfig,
    InvalidRate,
    NoCrossover,
    Quote,
    Schedule,
    UnknownInstrument,
    check_k,
)
from .dcf import check_rate, dcf_discount_factor, solve_implied_yield
from .engine import (
    DEFAULT_CONFIG,
    EcfSolverConfig,
    days_saved,
    ecf_discount_factor,
    solve_k_schedule,
    solve_k_single,
)

CROSSOVER_MAX_YEARS = 200.0


@dataclass(frozen=True)
class CurveRow:
    t: float
    df_ecf: float
    df_dcf: dict[float, float]


@dataclass(frozen=True)
class KTermPoint:
    maturity_years: float
    days: int
    k: float


@dataclass(frozen=True)
class CalibrationRecord:
    issuer: Optional[str]
    instrument_id: str
    maturity_days: Optional[int] = None
    k: Optional[float] = None
    days_saved: Optional[float] = None
    implied_dcf_yield: Optional[float] = None
    error: Optional[str] = None
    message: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def to_days(years: float) -> int:
    """Whole days in ``years`` (365-day years), rounded half up."""
    return int(math.floor(years * DAYS_PER_YEAR + 0.5))


def curve_table(
    max_years: float, step_years: float, k: float = 0.0, rates: Sequence[float] = (0.05, 0.10, 0.15)
) -> list[CurveRow]:
    """ECF and DCF discount factors at ``t = 0, step, 2*step, ... <= max_years``.

    The ECF column is evaluated on whole days, ``X = round(t * 365)``.
    """
    if not (max_years > 0 and step_years > 0):
        raise InvalidConfig("max_years and step_years must be > 0")
    k = check_k(k)
    rates = [check_rate(r) for r in rates]
    n = int(math.floor(max_years / step_years + 1e-9))
    rows = []
    for i in range(n + 1):
        t = i * step_years
        rows.append(
            CurveRow(
                t=t,
                df_ecf=ecf_discount_factor(to_days(t), k),
                df_dcf={r: dcf_discount_factor(t, r) for r in rates},
            )
        )
    return rows


def find_crossover(r: float, k: float = 0.0, xtol: float = 1e-6) -> float:
    """Tenor in years beyond which the ECF discount factor exceeds the DCF one.

    With ``g(t) = ln DF_ecf - ln DF_dcf`` we have ``g(0) = 0`` and ``g'``
    increasing, so ``g`` dips below zero only if ``g'(0) < 0``, bottoms out
    at ``t_min`` and then rises through zero exactly once. The root is
    bisected on ``[t_min, 200]``.
    """
    r = check_rate(r)
    k = check_k(k)
    if r <= 0:
        raise InvalidRate("crossover needs a positive rate")
    if k >= 1:
        raise NoCrossover("k = 1 never discounts, so it never meets a positive-rate curve")
    a = 1.0 - k
    log_growth = math.log1p(r)

    def g(t: float) -> float:
        return -0.5 * math.log1p(a * t) + t * log_growth

    if a / 2.0 <= log_growth:
        raise NoCrossover(f"ECF discount factor is above DCF at every tenor for r={r}, k={k}")
    t_min = (a / (2.0 * log_growth) - 1.0) / a
    if t_min >= CROSSOVER_MAX_YEARS or g(CROSSOVER_MAX_YEARS) < 0.0:
        raise NoCrossover(f"no crossover within {CROSSOVER_MAX_YEARS:g} years for r={r}, k={k}")
    return bisect(g, t_min, CROSSOVER_MAX_YEARS, xtol, 200)


def k_term_under_constant_yield(r: float, maturities_years: Sequence[float]) -> list[KTermPoint]:
    """k implied across maturities when every bond is priced at one compound yield.

    Each maturity ``T`` is a single payment of ``(1 + r) ** T`` bought for 1.
    """
    r = check_rate(r)
    if r <= 0:
        raise InvalidRate("term structure needs a positive yield")
    out = []
    for T in maturities_years:
        if not T > 0:
            raise InvalidConfig(f"maturity must be > 0 years, got {T!r}")
        days = to_days(T)
        out.append(KTermPoint(T, days, solve_k_single(1.0, (1.0 + r) ** T, days)))
    return out


def _calibrate_one(
    quote: Quote, schedules: Mapping[str, Schedule], config: EcfSolverConfig
) -> CalibrationRecord:
    schedule = schedules.get(quote.instrument_id)
    try:
        if schedule is None:
            raise UnknownInstrument(f"no schedule for instrument {quote.instrument_id!r}")
        maturity = schedule.maturity_days
        k = solve_k_schedule(schedule, quote.price, config)
        yld = solve_implied_yield(schedule, quote.price)
    except EcfError as exc:
        return CalibrationRecord(
            issuer=quote.issuer,
            instrument_id=quote.instrument_id,
            maturity_days=schedule.maturity_days if schedule is not None else None,
            error=type(exc).__name__,
            message=str(exc),
        )
    return CalibrationRecord(
        issuer=quote.issuer,
        instrument_id=quote.instrument_id,
        maturity_days=maturity,
        k=k,
        days_saved=days_saved(maturity, k),
        implied_dcf_yield=yld,
    )


def calibrate_batch(
    quotes: Sequence[Quote],
    schedules: Mapping[str, Schedule] | Sequence[Schedule],
    config: EcfSolverConfig = DEFAULT_CONFIG,
    workers: int | None = None,
) -> list[CalibrationRecord]:
    """Calibrate k for every quote; one record per quote, in input order.

    Failures (unknown instrument, speculative price, solver trouble) end up
    in the record's ``error`` field and never stop the batch.
    """
    if not isinstance(schedules, Mapping):
        schedules = {s.instrument_id: s for s in schedules}

    def one(q: Quote) -> CalibrationRecord:
        return _calibrate_one(q, schedules, config)

    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, quotes))
    return [one(q) for q in quotes]
