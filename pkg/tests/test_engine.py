import inspect
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ecfmodel import engine
from ecfmodel.core import (
    BelowSearchFloor,
    InvalidAmount,
    InvalidConfig,
    InvalidTenor,
    KOutOfRange,
    Schedule,
    SpeculativeDistortion,
)
from ecfmodel.engine import (
    EcfSolverConfig,
    days_saved,
    ecf_discount_factor,
    effective_periods,
    fv_single,
    pv_schedule,
    pv_single,
    risk_equivalent_days,
    solve_k_schedule,
    solve_k_single,
)

ANNUITY = Schedule.from_pairs("ANN3", [(365, 100), (730, 100), (1095, 100)])
# 100 * (1/sqrt(2) + 1/sqrt(3) + 1/sqrt(4)), evaluated directly
ANNUITY_PV_K0 = 178.44570503761733


# -- effective periods / discount factor -------------------------------------


@pytest.mark.parametrize(
    "days,k,expected", [(365, 0, 2.0), (365, 0.79, 1.21), (0, 0.5, 1.0), (730, 1, 1.0)]
)
def test_effective_periods(days, k, expected):
    assert effective_periods(days, k) == pytest.approx(expected, abs=1e-15)


def test_k_above_one_rejected():
    with pytest.raises(KOutOfRange):
        effective_periods(365, 1.0000001)
    with pytest.raises(KOutOfRange):
        ecf_discount_factor(365, float("nan"))


def test_negative_days_rejected():
    with pytest.raises(InvalidTenor):
        ecf_discount_factor(-1, 0.5)


@pytest.mark.parametrize(
    "days,k,expected",
    [
        (365, 0.79, 100 / 110),
        (365, 0, 1 / math.sqrt(2)),
        (730, 0, 0.5773502691896258),
    ],
)
def test_discount_factor_values(days, k, expected):
    assert ecf_discount_factor(days, k) == pytest.approx(expected, rel=1e-12)


def test_discount_factor_is_one_only_at_zero_tenor_or_k_one():
    assert ecf_discount_factor(0, -3.0) == 1.0
    assert ecf_discount_factor(10_000, 1.0) == 1.0
    assert ecf_discount_factor(1, 0.999) < 1.0


def test_large_negative_k_is_allowed():
    # no structural floor on k
    assert 0 < ecf_discount_factor(365, -1e4) < ecf_discount_factor(365, -10)


# -- pv / fv ------------------------------------------------------------------


@pytest.mark.parametrize(
    "fv,days,k,expected",
    [(110, 365, 0.79, 100.0), (110, 0, 0.3, 110.0), (200, 730, 0, 115.47005383792516)],
)
def test_pv_single(fv, days, k, expected):
    assert pv_single(fv, days, k) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "pv,days,k,expected",
    [(100, 365, 0.79, 110.0), (100, 0, 0.9, 100.0), (100, 365, 0, 141.4213562373095)],
)
def test_fv_single(pv, days, k, expected):
    assert fv_single(pv, days, k) == pytest.approx(expected, rel=1e-12)


def test_pv_rejects_non_positive_fv():
    with pytest.raises(InvalidAmount):
        pv_single(0, 365, 0.5)


@given(st.floats(0.01, 1e9), st.integers(0, 36500), st.floats(-5, 1))
def test_fv_inverts_pv(fv, days, k):
    assert fv_single(pv_single(fv, days, k), days, k) == pytest.approx(fv, rel=1e-9)


# -- closed-form k ------------------------------------------------------------


def test_solve_k_single_worked_example():
    assert solve_k_single(100, 110, 365) == pytest.approx(0.79, abs=1e-12)


def test_solve_k_single_par_is_one():
    assert solve_k_single(100, 100, 365) == 1.0
    assert solve_k_single(100, 100, 0) == 1.0


def test_solve_k_single_two_year():
    # 1 - 365 * (1.21**2 - 1) / 730 evaluated by hand: 1 - 0.4641 / 2
    assert solve_k_single(100, 121, 730) == pytest.approx(0.76795, abs=1e-12)


def test_solve_k_single_speculative():
    with pytest.raises(SpeculativeDistortion):
        solve_k_single(120, 110, 365)


def test_solve_k_single_zero_tenor_off_par():
    with pytest.raises(InvalidTenor):
        solve_k_single(100, 110, 0)


@given(st.floats(0.01, 1e9), st.integers(1, 36500), st.floats(-5, 1))
def test_single_round_trip(fv, days, k):
    pv = pv_single(fv, days, k)
    if pv == fv:
        # k so close to 1 that the discount rounds away entirely
        assert ecf_discount_factor(days, k) == 1.0
        return
    assert solve_k_single(pv, fv, days) == pytest.approx(k, abs=1e-9)


# -- schedules ----------------------------------------------------------------


def test_pv_schedule_annuity():
    assert pv_schedule(ANNUITY, 0) == pytest.approx(ANNUITY_PV_K0, rel=1e-12)
    assert pv_schedule(ANNUITY, 1) == 300.0


def test_pv_schedule_single_flow_matches_worked_example():
    assert pv_schedule(Schedule.from_pairs("L", [(365, 110)]), 0.79) == pytest.approx(100, rel=1e-12)


def test_solve_k_schedule_worked_example():
    s = Schedule.from_pairs("L", [(365, 110)])
    k = solve_k_schedule(s, 100)
    assert k == pytest.approx(solve_k_single(100, 110, 365), abs=1e-12)
    assert k == pytest.approx(0.79, abs=1e-12)


def test_solve_k_schedule_annuity_round_trip():
    assert solve_k_schedule(ANNUITY, ANNUITY_PV_K0) == pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize("price", [300.01, 300.0])
def test_solve_k_schedule_speculative(price):
    with pytest.raises(SpeculativeDistortion):
        solve_k_schedule(ANNUITY, price)


def test_solve_k_schedule_below_floor():
    cfg = EcfSolverConfig(k_search_floor=-10)
    price = pv_schedule(ANNUITY, -50)
    with pytest.raises(BelowSearchFloor):
        solve_k_schedule(ANNUITY, price, cfg)
    # default floor is deep enough
    assert solve_k_schedule(ANNUITY, price) == pytest.approx(-50, abs=1e-7)


def test_solve_k_schedule_only_same_day_flows():
    s = Schedule.from_pairs("X", [(0, 100)])
    with pytest.raises(BelowSearchFloor):
        solve_k_schedule(s, 90, EcfSolverConfig(k_search_floor=-100))


@pytest.mark.parametrize(
    "kwargs",
    [{"k_tolerance": 0}, {"pv_rel_tolerance": -1}, {"k_search_floor": 1}, {"max_iterations": 0}],
)
def test_solver_config_validation(kwargs):
    with pytest.raises(InvalidConfig):
        EcfSolverConfig(**kwargs)


@st.composite
def schedules(draw, max_flows=50):
    days = draw(st.lists(st.integers(1, 18250), min_size=1, max_size=max_flows, unique=True))
    amounts = draw(st.lists(st.floats(1, 1e6), min_size=len(days), max_size=len(days)))
    return Schedule.from_pairs("H", zip(sorted(days), amounts))


@settings(max_examples=200, deadline=None)
@given(schedules(), st.floats(-5, 0.999))
def test_schedule_round_trip(s, k):
    assert solve_k_schedule(s, pv_schedule(s, k)) == pytest.approx(k, abs=1e-7)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 36500), st.floats(1, 1e6), st.floats(-5, 0.999))
def test_schedule_solver_agrees_with_closed_form(days, fv, k):
    pv = pv_single(fv, days, k)
    s = Schedule.from_pairs("S", [(days, fv)])
    assert solve_k_schedule(s, pv) == pytest.approx(solve_k_single(pv, fv, days), abs=1e-9)


# -- monotonicity and shape ----------------------------------------------------


def test_discount_factor_decreases_with_tenor():
    for k in (-2.0, 0.0, 0.5, 0.99):
        dfs = [ecf_discount_factor(x, k) for x in range(0, 36501, 73)]
        assert all(b < a for a, b in zip(dfs, dfs[1:]))


def test_discount_factor_and_pv_increase_with_k():
    ks = np.linspace(-5, 1, 241)
    for days in (1, 30, 365, 3650, 36500):
        dfs = [ecf_discount_factor(days, k) for k in ks]
        assert all(b > a for a, b in zip(dfs, dfs[1:]))
    pvs = [pv_schedule(ANNUITY, k) for k in ks]
    assert all(b > a for a, b in zip(pvs, pvs[1:]))


def test_decline_is_sharp_then_gradual():
    # forward one-year discount ratio climbs toward 1 as the start tenor grows
    ratios = [ecf_discount_factor(365 * (t + 1), 0) / ecf_discount_factor(365 * t, 0) for t in range(31)]
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] < 1


def test_no_ecf_operation_takes_a_rate():
    for fn in (effective_periods, ecf_discount_factor, pv_single, fv_single, solve_k_single,
               pv_schedule, solve_k_schedule, days_saved, risk_equivalent_days):
        for name in inspect.signature(fn).parameters:
            assert "rate" not in name and "yield" not in name, (fn.__name__, name)
    assert "dcf" not in dir(engine)


# -- days saved / risk-equivalent days ---------------------------------------


@pytest.mark.parametrize("days,k,saved,risk", [(365, 0.79, 288.35, 76.65), (365, 0, 0, 365), (365, 1, 365, 0)])
def test_days_split(days, k, saved, risk):
    assert days_saved(days, k) == pytest.approx(saved, abs=1e-9)
    assert risk_equivalent_days(days, k) == pytest.approx(risk, abs=1e-9)


def test_negative_k_adds_days():
    assert days_saved(365, -0.5) == pytest.approx(-182.5)
    assert risk_equivalent_days(365, -0.5) == pytest.approx(547.5)


@given(st.integers(0, 36500), st.floats(-100, 1))
def test_days_split_sums_to_tenor(days, k):
    # rounding scales with |k * X|, up to ~4e6 here
    assert days_saved(days, k) + risk_equivalent_days(days, k) == pytest.approx(days, abs=1e-8)


def test_risk_equivalent_days_consistent_with_periods():
    assert risk_equivalent_days(365, 0.79) / 365 + 1 == pytest.approx(effective_periods(365, 0.79))


def test_days_saved_rejects_k_above_one():
    with pytest.raises(KOutOfRange):
        days_saved(365, 1.5)
