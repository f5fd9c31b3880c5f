"""
Command line front end.

    ecf price     --fv 110 --days 365 --k 0.79
    ecf price     --instruments instruments.csv --k 0.79
    ecf calibrate --instruments instruments.csv --quotes quotes.csv
    ecf curve     --max-years 50 --step 0.25 --k 0 --rates 0.05,0.10,0.15
    ecf term      --yield 0.10 --maturities 1..15
    ecf simulate  --steps 1000 --lambda 1 --walks 200000 --seed 42 --tolerance 0.01

Exit codes: 0 success (per-record calibration errors included), 2 invalid
input, 3 solver failure, 4 I/O failure. On failure the error class name is
the first token written to stderr.
"""

from __future__ import annotations

import argparse
import sys
from datetime import date
from typing import Optional, Sequence

from .analysis import calibrate_batch, curve_table, k_term_under_constant_yield
from .brownian import WalkConfig, simulate_walks, verify_sqrt_law
from .core import EcfError, InvalidInput, SolverError, ValidationError
from .csvio import AMOUNT, DF, KFMT, PCT, Report, fixed, plain, rate_label, read_instruments, read_quotes
from .engine import (
    EcfSolverConfig,
    days_saved,
    ecf_discount_factor,
    effective_periods,
    pv_schedule,
    pv_single,
    risk_equivalent_days,
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_SOLVER = 3
EXIT_IO = 4

DAYS4 = fixed(4)


def _percent(k):
    return None if k is None else 100.0 * k


def _parse_rates(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"bad rate list {text!r}") from None


def _parse_maturities(text: str) -> list[float]:
    """``1..15`` (inclusive integer range) or a comma list such as ``1,2,5,10``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return [float(m) for m in range(int(lo), int(hi) + 1)]
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InvalidInput(f"bad maturity list {text!r}") from None


def _parse_date(text: Optional[str]) -> Optional[date]:
    if text is None:
        return None
    try:
        return date.fromisoformat(text)
    except ValueError:
        raise InvalidInput(f"bad ISO date {text!r}") from None


def _read(path: str, reader, valuation_date):
    with open(path, newline="", encoding="utf-8") as fh:
        return reader(fh, valuation_date)


def cmd_price(args) -> Report:
    if args.instruments:
        if args.fv is not None or args.days is not None:
            raise InvalidInput("give either --fv/--days or --instruments, not both")
        schedules = _read(args.instruments, read_instruments, _parse_date(args.valuation_date))
        if args.instrument_id:
            schedules = {i: s for i, s in schedules.items() if i == args.instrument_id}
        rows = []
        for iid, s in schedules.items():
            rows.append(
                {
                    "instrument_id": iid,
                    "n_flows": len(s.flows),
                    "maturity_days": s.maturity_days,
                    "total": s.total,
                    "k": args.k,
                    "k_percent": _percent(args.k),
                    "pv": pv_schedule(s, args.k),
                    "days_saved": days_saved(s.maturity_days, args.k),
                }
            )
        columns = [
            ("instrument_id", plain),
            ("n_flows", plain),
            ("maturity_days", plain),
            ("total", AMOUNT),
            ("k", KFMT),
            ("k_percent", PCT),
            ("pv", AMOUNT),
            ("days_saved", DAYS4),
        ]
        config = {
            "instruments": args.instruments,
            "instrument_id": args.instrument_id,
            "valuation_date": args.valuation_date,
            "k": args.k,
        }
        return Report("price", config, columns, rows)

    if args.fv is None or args.days is None:
        raise InvalidInput("price needs --fv and --days, or --instruments")
    row = {
        "fv": args.fv,
        "days": args.days,
        "k": args.k,
        "k_percent": _percent(args.k),
        "effective_periods": effective_periods(args.days, args.k),
        "discount_factor": ecf_discount_factor(args.days, args.k),
        "pv": pv_single(args.fv, args.days, args.k),
        "days_saved": days_saved(args.days, args.k),
        "risk_equivalent_days": risk_equivalent_days(args.days, args.k),
    }
    columns = [
        ("fv", AMOUNT),
        ("days", plain),
        ("k", KFMT),
        ("k_percent", PCT),
        ("effective_periods", AMOUNT),
        ("discount_factor", DF),
        ("pv", AMOUNT),
        ("days_saved", DAYS4),
        ("risk_equivalent_days", DAYS4),
    ]
    return Report("price", {"fv": args.fv, "days": args.days, "k": args.k}, columns, [row])


def cmd_calibrate(args) -> Report:
    vdate = _parse_date(args.valuation_date)
    schedules = _read(args.instruments, read_instruments, vdate)
    quotes = _read(args.quotes, read_quotes, vdate)
    solver = EcfSolverConfig(
        k_tolerance=args.k_tolerance,
        pv_rel_tolerance=args.pv_rel_tolerance,
        k_search_floor=args.k_floor,
        max_iterations=args.max_iterations,
    )
    records = calibrate_batch(quotes, schedules, solver)
    rows = []
    for q, rec in zip(quotes, records):
        rows.append(
            {
                "issuer": rec.issuer,
                "instrument_id": rec.instrument_id,
                "price": q.price,
                "maturity_days": rec.maturity_days,
                "k": rec.k,
                "k_percent": _percent(rec.k),
                "days_saved": rec.days_saved,
                "implied_dcf_yield": rec.implied_dcf_yield,
                "error": rec.error,
            }
        )
    columns = [
        ("issuer", plain),
        ("instrument_id", plain),
        ("price", AMOUNT),
        ("maturity_days", plain),
        ("k", KFMT),
        ("k_percent", PCT),
        ("days_saved", DAYS4),
        ("implied_dcf_yield", fixed(6)),
        ("error", plain),
    ]
    config = {
        "instruments": args.instruments,
        "quotes": args.quotes,
        "valuation_date": args.valuation_date,
        "k_tolerance": solver.k_tolerance,
        "pv_rel_tolerance": solver.pv_rel_tolerance,
        "k_search_floor": solver.k_search_floor,
        "max_iterations": solver.max_iterations,
    }
    return Report("calibrate", config, columns, rows)


def cmd_curve(args) -> Report:
    rates = _parse_rates(args.rates)
    table = curve_table(args.max_years, args.step, args.k, rates)
    columns = [("t", fixed(4)), ("df_ecf", DF)] + [(rate_label(r), DF) for r in rates]
    rows = []
    for row in table:
        out = {"t": row.t, "df_ecf": row.df_ecf}
        out.update({rate_label(r): v for r, v in row.df_dcf.items()})
        rows.append(out)
    config = {"max_years": args.max_years, "step": args.step, "k": args.k, "rates": rates}
    return Report("curve", config, columns, rows)


def cmd_term(args) -> Report:
    maturities = _parse_maturities(args.maturities)
    points = k_term_under_constant_yield(args.yield_, maturities)
    rows = [
        {"maturity_years": p.maturity_years, "days": p.days, "k": p.k, "k_percent": _percent(p.k)}
        for p in points
    ]
    columns = [("maturity_years", fixed(4)), ("days", plain), ("k", KFMT), ("k_percent", PCT)]
    return Report("term", {"yield": args.yield_, "maturities": maturities}, columns, rows)


def cmd_simulate(args) -> Report:
    config = WalkConfig(args.steps, args.lambda_, args.walks, args.seed)
    stats = simulate_walks(config, workers=args.workers)
    check = verify_sqrt_law(stats, args.tolerance)
    row = dict(vars(stats))
    row.update(tolerance=args.tolerance, passed=check.passed)
    columns = [
        ("n_steps", plain),
        ("step_length", AMOUNT),
        ("n_walks", plain),
        ("seed", plain),
        ("generator", plain),
        ("rms_displacement", AMOUNT),
        ("mean_displacement", AMOUNT),
        ("predicted_rms", AMOUNT),
        ("relative_deviation", fixed(8)),
        ("tolerance", fixed(8)),
        ("passed", plain),
    ]
    cfg = {
        "steps": args.steps,
        "lambda": args.lambda_,
        "walks": args.walks,
        "seed": args.seed,
        "tolerance": args.tolerance,
        "generator": stats.generator,
    }
    return Report("simulate", cfg, columns, [row])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ecf", description="Expected Cash Flow valuation tools")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--output", "-o", help="write the report here instead of stdout")

    sp = sub.add_parser("price", help="present value of a payment or of instrument schedules")
    sp.add_argument("--fv", type=float)
    sp.add_argument("--days", type=int)
    sp.add_argument("--k", type=float, required=True)
    sp.add_argument("--instruments")
    sp.add_argument("--instrument-id")
    sp.add_argument("--valuation-date")
    common(sp)
    sp.set_defaults(func=cmd_price)

    sp = sub.add_parser("calibrate", help="implied k for each quote")
    sp.add_argument("--instruments", required=True)
    sp.add_argument("--quotes", required=True)
    sp.add_argument("--valuation-date")
    sp.add_argument("--k-tolerance", type=float, default=1e-12)
    sp.add_argument("--pv-rel-tolerance", type=float, default=1e-9)
    sp.add_argument("--k-floor", type=float, default=-1e6)
    sp.add_argument("--max-iterations", type=int, default=200)
    common(sp)
    sp.set_defaults(func=cmd_calibrate)

    sp = sub.add_parser("curve", help="ECF vs DCF discount factor table")
    sp.add_argument("--max-years", type=float, default=50.0)
    sp.add_argument("--step", type=float, default=0.25)
    sp.add_argument("--k", type=float, default=0.0)
    sp.add_argument("--rates", default="0.05,0.10,0.15")
    common(sp)
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("term", help="k by maturity under one compound yield")
    sp.add_argument("--yield", dest="yield_", type=float, default=0.10)
    sp.add_argument("--maturities", default="1..15")
    common(sp)
    sp.set_defaults(func=cmd_term)

    sp = sub.add_parser("simulate", help="Monte Carlo check of the square-root displacement law")
    sp.add_argument("--steps", type=int, default=1000)
    sp.add_argument("--lambda", dest="lambda_", type=float, default=1.0)
    sp.add_argument("--walks", type=int, default=200_000)
    sp.add_argument("--seed", type=int, default=20240101)
    sp.add_argument("--tolerance", type=float, default=0.01)
    sp.add_argument("--workers", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_simulate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args).render(args.format)
    except ValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SolverError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except EcfError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return EXIT_IO

    try:
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"IOError: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
