from datetime import date, timedelta
from decimal import Decimal

import pytest
from hypothesis import given, strategies as st

from ecfmodel.core import (
    CashFlow,
    EmptySchedule,
    InvalidAmount,
    InvalidTenor,
    MalformedSchedule,
    Quote,
    Schedule,
    day_count,
    validate_schedule,
)


def test_day_count_identity():
    assert day_count(date(2024, 1, 1), date(2024, 1, 1)) == 0


def test_day_count_leap_year_counts_366_days():
    # 2024 is a leap year: Jan 1 2024 -> Jan 1 2025 spans Feb 29
    expected = sum(1 for i in range(400) if date(2024, 1, 1) + timedelta(days=i) < date(2025, 1, 1))
    assert expected == 366
    assert day_count(date(2024, 1, 1), date(2025, 1, 1)) == expected


def test_day_count_rejects_earlier_flow_date():
    with pytest.raises(InvalidTenor):
        day_count(date(2024, 1, 1), date(2023, 12, 31))


dates = st.dates(min_value=date(1900, 1, 1), max_value=date(2200, 1, 1))


@given(dates, dates, dates)
def test_day_count_is_additive(a, b, c):
    a, b, c = sorted((a, b, c))
    assert day_count(a, b) + day_count(b, c) == day_count(a, c)


def test_single_flow_schedule_is_valid():
    s = Schedule.from_pairs("LOAN", [(365, 110)])
    assert validate_schedule(s) is s
    assert s.total == 110
    assert s.maturity_days == 365


def test_duplicate_days_rejected():
    with pytest.raises(MalformedSchedule):
        Schedule.from_pairs("X", [(365, 100), (365, 100)])


def test_unsorted_days_rejected():
    with pytest.raises(MalformedSchedule):
        Schedule.from_pairs("X", [(730, 100), (365, 100)])


def test_empty_schedule_rejected():
    with pytest.raises(EmptySchedule):
        Schedule("X", [])


@pytest.mark.parametrize("amount", [0, -1, float("nan"), float("inf")])
def test_non_positive_amount_rejected(amount):
    with pytest.raises(MalformedSchedule):
        CashFlow(365, amount)


@pytest.mark.parametrize("days", [-1, 1.5, True])
def test_bad_days_rejected(days):
    with pytest.raises(InvalidTenor):
        CashFlow(days, 100)


def test_decimal_amounts_accepted():
    f = CashFlow(10, Decimal("100.10"))
    assert isinstance(f.amount, float) and f.amount == pytest.approx(100.1)


def test_schedule_flows_are_immutable_tuple():
    s = Schedule("X", [CashFlow(1, 1.0)])
    assert isinstance(s.flows, tuple)


@given(st.lists(st.integers(0, 40000), min_size=1, max_size=30, unique=True),
       st.floats(0.01, 1e6))
def test_validation_is_idempotent(days, amount):
    s = Schedule.from_pairs("X", [(d, amount) for d in sorted(days)])
    assert validate_schedule(validate_schedule(s)) == s


def test_quote_price_must_be_positive():
    with pytest.raises(InvalidAmount):
        Quote("X", "ISS", 0)
    assert Quote("X", "ISS", Decimal("99.5")).price == 99.5
