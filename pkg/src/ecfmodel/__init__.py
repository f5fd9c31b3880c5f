"""Expected Cash Flow (ECF) valuation: square-root-of-time discounting with an
issuer-efficiency factor ``k``, plus DCF comparison tables and a random-walk
check of the square-root law."""

__version__ = "0.1.0"

from .core import (
    BelowSearchFloor,
    CashFlow,
    EcfError,
    EmptySchedule,
    InvalidAmount,
    InvalidConfig,
    InvalidInput,
    InvalidRate,
    InvalidTenor,
    KOutOfRange,
    MalformedSchedule,
    NoConvergence,
    NoCrossover,
    Quote,
    Schedule,
    SolverError,
    SpeculativeDistortion,
    UnknownInstrument,
    ValidationError,
    day_count,
    validate_schedule,
)
from .engine import (
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
from .dcf import dcf_discount_factor, pv_dcf, solve_implied_yield
from .analysis import (
    CalibrationRecord,
    CurveRow,
    KTermPoint,
    calibrate_batch,
    curve_table,
    find_crossover,
    k_term_under_constant_yield,
)
from .brownian import WalkConfig, WalkStats, simulate_walks, verify_sqrt_law
