"""
CSV ingestion of instruments and quotes, and CSV/JSON report emission.

instruments.csv  ``instrument_id,days,amount`` (one row per cash flow), or
                 ``instrument_id,date,amount`` with ISO dates plus a
                 valuation date.
quotes.csv       ``instrument_id,issuer,price``

Reports start with ``#`` metadata lines (tool version, command, effective
configuration) followed by a mandatory header row. Numbers are written
with fixed decimals so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from datetime import date
from decimal import Decimal, InvalidOperation
from typing import Any, Callable, Optional, Sequence, TextIO

from . import __version__
from .core import CashFlow, InvalidInput, Quote, Schedule, day_count

TOOL = "ecfmodel"


def _read_rows(stream: TextIO, required: Sequence[str]) -> tuple[list[str], list[dict]]:
    reader = csv.DictReader(stream)
    header = [h.strip() for h in (reader.fieldnames or [])]
    if not header:
        raise InvalidInput("missing header row")
    reader.fieldnames = header
    for col in required:
        if col not in header:
            raise InvalidInput(f"missing column {col!r} (have {header})")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if None in row:
            raise InvalidInput(f"line {lineno}: too many fields")
        row = {k: (v.strip() if v is not None else "") for k, v in row.items()}
        if not any(row.values()):
            continue
        row["_line"] = lineno
        rows.append(row)
    return header, rows


def _decimal(text: str, what: str, lineno: int) -> Decimal:
    try:
        value = Decimal(text)
    except InvalidOperation:
        raise InvalidInput(f"line {lineno}: {what} {text!r} is not a decimal number") from None
    if not value.is_finite():
        raise InvalidInput(f"line {lineno}: {what} must be finite")
    return value


def _int(text: str, what: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidInput(f"line {lineno}: {what} {text!r} is not an integer") from None


def read_instruments(stream: TextIO, valuation_date: Optional[date] = None) -> dict[str, Schedule]:
    """Schedules keyed by instrument id, in order of first appearance.

    Rows of one instrument may come in any order; they are sorted by day
    before validation, so duplicated days still fail.
    """
    header, rows = _read_rows(stream, ["instrument_id", "amount"])
    if "days" in header:
        by_date = False
    elif "date" in header:
        if valuation_date is None:
            raise InvalidInput("instrument file has flow dates; a valuation date is required")
        by_date = True
    else:
        raise InvalidInput("instrument file needs a 'days' or a 'date' column")

    grouped: dict[str, list[CashFlow]] = {}
    for row in rows:
        line = row["_line"]
        iid = row["instrument_id"]
        if not iid:
            raise InvalidInput(f"line {line}: empty instrument_id")
        if by_date:
            try:
                flow_date = date.fromisoformat(row["date"])
            except ValueError:
                raise InvalidInput(f"line {line}: bad ISO date {row['date']!r}") from None
            days = day_count(valuation_date, flow_date)
        else:
            days = _int(row["days"], "days", line)
        grouped.setdefault(iid, []).append(CashFlow(days, _decimal(row["amount"], "amount", line)))
    return {
        iid: Schedule(iid, sorted(flows, key=lambda f: f.days)) for iid, flows in grouped.items()
    }


def read_quotes(stream: TextIO, valuation_date: Optional[date] = None) -> list[Quote]:
    _, rows = _read_rows(stream, ["instrument_id", "issuer", "price"])
    quotes = []
    for row in rows:
        line = row["_line"]
        if not row["instrument_id"]:
            raise InvalidInput(f"line {line}: empty instrument_id")
        price = _decimal(row["price"], "price", line)
        quotes.append(Quote(row["instrument_id"], row["issuer"], price, valuation_date))
    return quotes


# column formatters: value -> text for CSV; JSON keeps numbers, rounded the same way


def fixed(digits: int) -> Callable[[Any], str]:
    def fmt(x):
        if x is None:
            return ""
        if isinstance(x, bool):
            return "true" if x else "false"
        if isinstance(x, (int, float, Decimal)):
            text = f"{float(x):.{digits}f}"
            # "-0.0000" reads as a sign error in a report
            return text[1:] if text.startswith("-") and not text.strip("-0.") else text
        return str(x)

    fmt.digits = digits
    return fmt


def plain(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


AMOUNT = fixed(6)
DF = fixed(6)
KFMT = fixed(4)
PCT = fixed(2)


@dataclass
class Report:
    command: str
    config: dict
    columns: list[tuple[str, Callable]]
    rows: list[dict] = field(default_factory=list)

    def _json_value(self, fmt, value):
        if value is None or isinstance(value, (bool, str)):
            return value
        digits = getattr(fmt, "digits", None)
        if digits is not None and isinstance(value, (int, float, Decimal)):
            return round(float(value), digits) + 0.0
        return value

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(f"# {TOOL} {__version__}\n")
        buf.write(f"# command: {self.command}\n")
        buf.write(f"# config: {json.dumps(self.config, sort_keys=True, default=str)}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([name for name, _ in self.columns])
        for row in self.rows:
            writer.writerow([fmt(row.get(name)) for name, fmt in self.columns])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "tool": TOOL,
            "version": __version__,
            "command": self.command,
            "config": self.config,
            "columns": [name for name, _ in self.columns],
            "rows": [
                {name: self._json_value(fmt, row.get(name)) for name, fmt in self.columns}
                for row in self.rows
            ],
        }
        return json.dumps(doc, indent=2, sort_keys=False, default=str) + "\n"

    def render(self, fmt: str) -> str:
        return self.to_json() if fmt == "json" else self.to_csv()


def rate_label(r: float) -> str:
    return f"df_dcf_{r:g}"
