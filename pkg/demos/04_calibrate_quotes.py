# Batch calibration: schedules from instruments.csv, prices from quotes.csv.
# Bad quotes come back as per-record errors; the batch never aborts.
from pathlib import Path

from ecfmodel.analysis import calibrate_batch
from ecfmodel.csvio import read_instruments, read_quotes

here = Path(__file__).parent / "data"
with open(here / "instruments.csv", newline="") as fh:
    schedules = read_instruments(fh)
with open(here / "quotes.csv", newline="") as fh:
    quotes = read_quotes(fh)

for rec in calibrate_batch(quotes, schedules):
    if rec.ok:
        print(f"{rec.issuer:7s} {rec.instrument_id:7s} k={rec.k:7.4f} "
              f"days saved={rec.days_saved:8.2f} DCF yield={rec.implied_dcf_yield:.4%}")
    else:
        print(f"{rec.issuer:7s} {rec.instrument_id:7s} {rec.error}: {rec.message}")

# Same thing from the shell:
#   ecf calibrate --instruments demos/data/instruments.csv --quotes demos/data/quotes.csv
