"""Daily-export ingestion: parse, clean, reject, and fill short gaps.

Input is the canonical CSV ``station_id,date,pollutant,value,unit`` with
ISO-8601 dates. Temperature rides along as pseudo-pollutant ``TEMP`` with
unit ``C`` (the one row type allowed to be negative).
"""

from __future__ import annotations

import csv
import datetime as dt
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import UnsortedInput
from .pollutants import AQI_POLLUTANTS, PM_POLLUTANTS, Pollutant, Unit, parse_pollutant, parse_unit

DEFAULT_MAX_GAP_DAYS = 3

_TEMP_TOKEN = "TEMP"


class Provenance(Enum):
    MEASURED = "measured"
    INTERPOLATED = "interpolated"


class RejectReason(Enum):
    MALFORMED_ROW = "malformed_row"
    BAD_DATE = "bad_date"
    UNKNOWN_POLLUTANT = "unknown_pollutant"
    UNKNOWN_STATION = "unknown_station"
    BAD_UNIT = "bad_unit"
    NON_NUMERIC = "non_numeric"
    NON_FINITE = "non_finite"
    NEGATIVE = "negative"
    DUPLICATE = "duplicate"


@dataclass(frozen=True)
class RawRow:
    """One unvalidated input row, plus provenance for the rejection report."""

    station_id: str
    date: str
    pollutant: str
    value: str
    unit: str
    row_number: int = 0
    raw_line: str = ""


@dataclass(frozen=True)
class RejectedRow:
    row_number: int
    reason: RejectReason
    raw_line: str


@dataclass(frozen=True)
class Sample:
    value: float
    provenance: Provenance = Provenance.MEASURED


@dataclass
class DailyRecord:
    station_id: str
    date: dt.date
    samples: dict[Pollutant, Sample] = field(default_factory=dict)
    temperature_c: float | None = None


@dataclass(frozen=True)
class AvailabilityCalendar:
    station_id: str
    dates: tuple[dt.date, ...]


def read_data_csv(path: str | Path) -> Iterator[RawRow]:
    """Stream RawRows from a canonical data CSV (header required)."""
    # utf-8-sig: spreadsheet exports regularly lead with a BOM
    with open(path, newline="", encoding="utf-8-sig") as fh:
        header = fh.readline().rstrip("\n")
        expected = ["station_id", "date", "pollutant", "value", "unit"]
        if [c.strip() for c in header.split(",")] != expected:
            raise ValueError(f"data CSV must start with header {','.join(expected)!r}")
        for number, line in enumerate(fh, start=2):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = next(csv.reader([line]))
            if len(fields) != 5:
                yield RawRow("", "", "", "", "", row_number=number, raw_line=line)
                continue
            yield RawRow(*[f.strip() for f in fields], row_number=number, raw_line=line)


def _parse_value(text: str) -> float | None:
    # tolerate thousands separators and the unicode minus CPCB exports use
    cleaned = text.strip().replace(",", "").replace("−", "-")
    try:
        return float(cleaned)
    except ValueError:
        return None


def parse_and_clean(
    rows: Iterable[RawRow], known_stations: Iterable[str]
) -> tuple[list[DailyRecord], list[RejectedRow]]:
    """Validate raw rows into per-(station, date) records.

    Every row is either accepted into a record or rejected with a reason;
    a duplicate (station, date, pollutant) rejects the *later* row.
    """
    station_ids = set(known_stations)
    records: dict[tuple[str, dt.date], DailyRecord] = {}
    rejects: list[RejectedRow] = []
    seen: set[tuple[str, dt.date, str]] = set()

    def reject(row: RawRow, reason: RejectReason) -> None:
        rejects.append(RejectedRow(row.row_number, reason, row.raw_line))

    for row in rows:
        if not row.station_id and not row.date:
            reject(row, RejectReason.MALFORMED_ROW)
            continue
        if row.station_id not in station_ids:
            reject(row, RejectReason.UNKNOWN_STATION)
            continue
        try:
            date = dt.date.fromisoformat(row.date)
        except ValueError:
            reject(row, RejectReason.BAD_DATE)
            continue

        if row.pollutant.strip().upper() == _TEMP_TOKEN:
            value = _parse_value(row.value)
            if value is None:
                reject(row, RejectReason.NON_NUMERIC)
                continue
            if not math.isfinite(value):
                reject(row, RejectReason.NON_FINITE)
                continue
            key = (row.station_id, date, _TEMP_TOKEN)
            if key in seen:
                reject(row, RejectReason.DUPLICATE)
                continue
            seen.add(key)
            record = records.setdefault(
                (row.station_id, date), DailyRecord(row.station_id, date)
            )
            record.temperature_c = value
            continue

        pollutant = parse_pollutant(row.pollutant)
        if pollutant is None:
            reject(row, RejectReason.UNKNOWN_POLLUTANT)
            continue
        unit = parse_unit(row.unit)
        if unit is None:
            reject(row, RejectReason.BAD_UNIT)
            continue
        value = _parse_value(row.value)
        if value is None:
            reject(row, RejectReason.NON_NUMERIC)
            continue
        if not math.isfinite(value):
            reject(row, RejectReason.NON_FINITE)
            continue
        if value < 0:
            reject(row, RejectReason.NEGATIVE)
            continue
        key = (row.station_id, date, pollutant.code)
        if key in seen:
            reject(row, RejectReason.DUPLICATE)
            continue
        seen.add(key)

        if unit is not pollutant.unit:
            # normalize to the pollutant's canonical unit
            value = value / 1000.0 if unit is Unit.UG_M3 else value * 1000.0
        record = records.setdefault((row.station_id, date), DailyRecord(row.station_id, date))
        record.samples[pollutant] = Sample(value, Provenance.MEASURED)

    ordered = sorted(records.values(), key=lambda r: (r.station_id, r.date))
    return ordered, rejects


def is_available(record: DailyRecord) -> bool:
    """Availability rule: >= 3 AQI-bearing samples including one PM."""
    aqi_present = [p for p in record.samples if p in AQI_POLLUTANTS]
    return len(aqi_present) >= 3 and any(p in PM_POLLUTANTS for p in aqi_present)


def interpolate_gaps(
    records: Sequence[DailyRecord], max_gap_days: int = DEFAULT_MAX_GAP_DAYS
) -> tuple[list[DailyRecord], AvailabilityCalendar]:
    """Fill short interior gaps per pollutant by linear interpolation.

    A run of k consecutive missing days (per pollutant, between two present
    values) is filled when k <= max_gap_days; longer runs and leading or
    trailing runs stay missing. Idempotent: filled values count as present
    on a rerun. Also derives the station's availability calendar.
    """
    if max_gap_days < 1:
        raise ValueError("max_gap_days must be >= 1")
    if not records:
        return [], AvailabilityCalendar("", ())
    station_id = records[0].station_id
    for a, b in zip(records, records[1:]):
        if a.station_id != b.station_id:
            raise UnsortedInput("records span multiple stations")
        if a.date >= b.date:
            raise UnsortedInput(f"records not strictly date-ordered at {b.date}")

    first = records[0].date
    n_days = (records[-1].date - first).days + 1
    by_day: dict[int, DailyRecord] = {}
    for rec in records:
        by_day[(rec.date - first).days] = DailyRecord(
            rec.station_id, rec.date, dict(rec.samples), rec.temperature_c
        )

    pollutants_seen = {p for rec in records for p in rec.samples}
    for pollutant in sorted(pollutants_seen, key=lambda p: p.code):
        present = [
            (day, rec.samples[pollutant].value)
            for day, rec in sorted(by_day.items())
            if pollutant in rec.samples
        ]
        for (day_a, val_a), (day_b, val_b) in zip(present, present[1:]):
            gap = day_b - day_a - 1
            if not 1 <= gap <= max_gap_days:
                continue
            for step in range(1, gap + 1):
                day = day_a + step
                value = val_a + (val_b - val_a) * step / (day_b - day_a)
                rec = by_day.setdefault(
                    day, DailyRecord(station_id, first + dt.timedelta(days=day))
                )
                rec.samples[pollutant] = Sample(value, Provenance.INTERPOLATED)

    filled = [by_day[day] for day in sorted(by_day)]
    filled = [r for r in filled if r.samples or r.temperature_c is not None]
    calendar = AvailabilityCalendar(
        station_id, tuple(r.date for r in filled if is_available(r))
    )
    return filled, calendar


def write_rejects_csv(rejects: Sequence[RejectedRow], path: str | Path) -> None:
    """Rejection report: row_number,reason,raw_line."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["row_number", "reason", "raw_line"])
        for r in rejects:
            writer.writerow([r.row_number, r.reason.value, r.raw_line])
