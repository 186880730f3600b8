"""Daily AQI series and before/after pivot summaries."""

from __future__ import annotations

import csv
import datetime as dt
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .aqi import AqiReport, report_for
from .breakpoints import BreakpointTable
from .errors import BadRange
from .ingest import DailyRecord
from .pollutants import AQI_POLLUTANTS, Pollutant
from .store import Store

TREND_CSV_FORMAT = "airviz-trend-v1"


@dataclass(frozen=True)
class TrendPoint:
    date: dt.date
    overall: int
    sub_indices: dict[Pollutant, int]


@dataclass(frozen=True)
class PivotSummary:
    pivot: dt.date
    mean_before: float | None
    mean_after: float | None
    percent_change: float | None
    max_slope_7d: float | None


def report_for_record(record: DailyRecord, table: BreakpointTable) -> AqiReport:
    return report_for({p: s.value for p, s in record.samples.items()}, table)


def daily_series(
    store: Store,
    table: BreakpointTable,
    station_id: str,
    date_from: dt.date,
    date_to: dt.date,
) -> list[TrendPoint]:
    """One point per available date in [date_from, date_to]; gaps omitted."""
    if date_from > date_to:
        raise BadRange(f"from {date_from} is after to {date_to}")
    calendar = store.get_dates(station_id)
    points = []
    for date in calendar.dates:
        if not date_from <= date <= date_to:
            continue
        record = store.get_record(station_id, date)
        report = report_for_record(record, table)
        points.append(
            TrendPoint(
                date=date,
                overall=report.overall,
                sub_indices={si.pollutant: si.value for si in report.sub_indices},
            )
        )
    return points


def pivot_summary(points: Sequence[TrendPoint], pivot: dt.date) -> PivotSummary:
    """Mean AQI before/after the pivot date (pivot itself counts as after),
    percent change, and the steepest 7-day AQI slope after the pivot."""
    before = [p.overall for p in points if p.date < pivot]
    after = [(p.date, p.overall) for p in points if p.date >= pivot]
    mean_before = float(np.mean(before)) if before else None
    mean_after = float(np.mean([v for _, v in after])) if after else None
    percent = None
    if mean_before and mean_after is not None:
        percent = (mean_after - mean_before) / mean_before * 100.0
    return PivotSummary(
        pivot=pivot,
        mean_before=mean_before,
        mean_after=mean_after,
        percent_change=percent,
        max_slope_7d=_max_slope_7d(after),
    )


def _max_slope_7d(series: Sequence[tuple[dt.date, int]]) -> float | None:
    """Max least-squares AQI slope over any 7-consecutive-day window."""
    if len(series) < 2:
        return None
    first = series[0][0]
    days = np.array([(d - first).days for d, _ in series], dtype=np.float64)
    values = np.array([v for _, v in series], dtype=np.float64)
    last_day = days[-1]
    best = None
    for start in days:
        if start + 6 > last_day:
            break
        mask = (days >= start) & (days <= start + 6)
        if mask.sum() < 2:
            continue
        x = days[mask]
        y = values[mask]
        x = x - x.mean()
        slope = float((x * y).sum() / (x * x).sum())
        if best is None or slope > best:
            best = slope
    return best


def write_trend_csv(
    points: Sequence[TrendPoint],
    path: str | Path,
    summary: PivotSummary | None = None,
) -> None:
    """Versioned CSV: date, overall AQI, one column per AQI pollutant.

    Lines starting with '#' are metadata: the format tag up top and, when a
    pivot was requested, the summary block at the bottom.
    """
    with open(path, "w", newline="", encoding="utf-8") as fh:
        fh.write(f"# {TREND_CSV_FORMAT}\n")
        writer = csv.writer(fh)
        writer.writerow(["date", "aqi"] + [p.code for p in AQI_POLLUTANTS])
        for point in points:
            row = [point.date.isoformat(), point.overall]
            for p in AQI_POLLUTANTS:
                value = point.sub_indices.get(p)
                row.append("" if value is None else value)
            writer.writerow(row)
        if summary is not None:
            fh.write("# summary\n")
            fh.write(f"# pivot,{summary.pivot.isoformat()}\n")
            fh.write(f"# mean_before,{_fmt(summary.mean_before)}\n")
            fh.write(f"# mean_after,{_fmt(summary.mean_after)}\n")
            fh.write(f"# percent_change,{_fmt(summary.percent_change)}\n")
            fh.write(f"# max_slope_7d,{_fmt(summary.max_slope_7d)}\n")


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.4f}"


def read_trend_csv(path: str | Path) -> tuple[list[dict], dict[str, str]]:
    """Read back a trend CSV: (data rows as dicts, summary key->value)."""
    rows: list[dict] = []
    summary: dict[str, str] = {}
    header: list[str] | None = None
    with open(path, newline="", encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if "," in body:
                    key, _, value = body.partition(",")
                    summary[key.strip()] = value.strip()
                continue
            fields = next(csv.reader([line]))
            if header is None:
                header = fields
                continue
            rows.append(dict(zip(header, fields)))
    return rows, summary
