"""Operator command line: ingest exports, inspect AQI, serve the API,
look up the nearest station, and export trend analyses.

Exit codes: 0 success, 1 usage error, 2 data error, 3 storage error.
"""

from __future__ import annotations

import argparse
import datetime as dt
import json
import socket
import sys
from pathlib import Path

from .aqi import AqiReport, report_for
from .breakpoints import load_table
from .errors import AirvizError, BadRange, EmptyInput, StorageFailure, UnknownStation
from .geo import GeoPoint, StationIndex, load_stations
from .ingest import (
    DEFAULT_MAX_GAP_DAYS,
    interpolate_gaps,
    parse_and_clean,
    read_data_csv,
    write_rejects_csv,
)
from .pollutants import Pollutant
from .store import Store
from .trend import daily_series, pivot_summary, write_trend_csv

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_STORAGE = 3

# first day of the 2020 national lockdown; the implied pivot when a trend
# range spans it and --pivot is not given
DEFAULT_PIVOT = dt.date(2020, 3, 25)

_AQI_FLAGS = {
    "pm25": Pollutant.PM25,
    "pm10": Pollutant.PM10,
    "no2": Pollutant.NO2,
    "so2": Pollutant.SO2,
    "co": Pollutant.CO,
    "o3": Pollutant.O3,
    "nh3": Pollutant.NH3,
}


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; we map usage problems to 1
    def error(self, message):
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="airviz", description=__doc__)
    parser.add_argument("--config", help="JSON file supplying defaults for any flag")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load station registry and daily data into a store")
    p.add_argument("--stations", help="station registry CSV (id,name,city,state,lat,lon,live)")
    p.add_argument("--data", help="data CSV (station_id,date,pollutant,value,unit)")
    p.add_argument("--store", help="store file path (created if absent)")
    p.add_argument("--max-gap-days", type=int, default=None,
                   help=f"longest gap to interpolate (default {DEFAULT_MAX_GAP_DAYS})")
    p.add_argument("--rejects", help="write the rejection report CSV here")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("aqi", help="compute an AQI report from concentrations")
    for flag, pollutant in _AQI_FLAGS.items():
        p.add_argument(f"--{flag}", type=float, default=None,
                       help=f"{pollutant.code} concentration ({pollutant.unit.value})")
    p.set_defaults(func=cmd_aqi)

    p = sub.add_parser("trend", help="export daily AQI series for a station")
    p.add_argument("--station", help="station id")
    p.add_argument("--from", dest="date_from", help="start date (ISO)")
    p.add_argument("--to", dest="date_to", help="end date (ISO)")
    p.add_argument("--pivot",
                   help="append a before/after summary around this date "
                        f"(default {DEFAULT_PIVOT} when the range covers it)")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--store", help="store file path")
    p.set_defaults(func=cmd_trend)

    p = sub.add_parser("serve", help="run the REST API")
    p.add_argument("--store", help="store file path")
    p.add_argument("--bind", default=None, help="host:port (default 127.0.0.1:8000)")
    p.add_argument("--cors-origin", action="append", default=None,
                   help="allowed CORS origin (repeatable; default *)")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("nearest", help="find the station nearest to a coordinate")
    p.add_argument("--lat", type=float, default=None)
    p.add_argument("--lon", type=float, default=None)
    p.add_argument("--store", help="store file path")
    p.set_defaults(func=cmd_nearest)

    return parser


def _apply_config(args: argparse.Namespace) -> None:
    if not args.config:
        return
    try:
        doc = json.loads(Path(args.config).read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}")
    if not isinstance(doc, dict):
        raise UsageError("config file must hold a JSON object")
    for key, value in doc.items():
        dest = key.replace("-", "_")
        if getattr(args, dest, None) is None:
            setattr(args, dest, value)


def _require(args: argparse.Namespace, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            flag = "--" + name.replace("_", "-").replace("date-from", "from").replace(
                "date-to", "to")
            raise UsageError(f"{flag} is required (flag or config file)")


def _parse_date(raw: str, flag: str) -> dt.date:
    try:
        return dt.date.fromisoformat(str(raw))
    except ValueError:
        raise UsageError(f"{flag} must be an ISO-8601 date, got {raw!r}")


def _open_existing_store(path: str) -> Store:
    if not Path(path).exists():
        raise StorageFailure(f"store not found: {path}")
    return Store(path)


def cmd_ingest(args) -> int:
    _require(args, "stations", "data", "store")
    max_gap = args.max_gap_days if args.max_gap_days is not None else DEFAULT_MAX_GAP_DAYS
    try:
        stations = load_stations(args.stations)
    except (OSError, ValueError) as exc:
        raise DataError(f"cannot read stations CSV: {exc}")

    total_rows = 0

    def counted(rows):
        nonlocal total_rows
        for row in rows:
            total_rows += 1
            yield row

    try:
        records, rejects = parse_and_clean(
            counted(read_data_csv(args.data)), [s.id for s in stations]
        )
    except (OSError, ValueError) as exc:
        raise DataError(f"cannot read data CSV: {exc}")

    for reject in rejects:
        print(f"row {reject.row_number} rejected: {reject.reason.value}", file=sys.stderr)
    if args.rejects:
        write_rejects_csv(rejects, args.rejects)

    by_station: dict[str, list] = {}
    for record in records:
        by_station.setdefault(record.station_id, []).append(record)

    interpolated = 0
    stored = 0
    with Store(args.store) as store:
        store.upsert_stations(stations)
        for station_id in sorted(by_station):
            series = sorted(by_station[station_id], key=lambda r: r.date)
            filled, _calendar = interpolate_gaps(series, max_gap_days=max_gap)
            interpolated += sum(
                1
                for rec in filled
                for s in rec.samples.values()
                if s.provenance.value == "interpolated"
            )
            stored += store.put_records(station_id, filled)

    print(f"stations: {len(stations)}")
    print(f"rows: {total_rows}")
    print(f"accepted: {total_rows - len(rejects)}")
    print(f"rejected: {len(rejects)}")
    print(f"interpolated: {interpolated}")
    print(f"records_stored: {stored}")
    return EXIT_OK


def _print_report(report: AqiReport) -> None:
    print(f"overall: {report.overall}")
    print(f"category: {report.category}")
    print(f"dominant: {report.dominant.code}")
    print(f"valid: {'true' if report.valid else 'false'}")
    if not report.valid:
        print(f"warning: report not valid ({report.reason})", file=sys.stderr)
    for si in report.sub_indices:
        print(f"  {si.pollutant.code:<6} {si.value:>4}  {si.category}")


def cmd_aqi(args) -> int:
    values = {
        pollutant: getattr(args, flag)
        for flag, pollutant in _AQI_FLAGS.items()
        if getattr(args, flag) is not None
    }
    if not values:
        raise UsageError("give at least one concentration flag (e.g. --pm25 45)")
    for pollutant, value in values.items():
        if value < 0:
            raise UsageError(f"--{pollutant.code.lower()} must be non-negative")
    _print_report(report_for(values, load_table()))
    return EXIT_OK


def cmd_trend(args) -> int:
    _require(args, "station", "date_from", "date_to", "out", "store")
    date_from = _parse_date(args.date_from, "--from")
    date_to = _parse_date(args.date_to, "--to")
    if args.pivot:
        pivot = _parse_date(args.pivot, "--pivot")
    elif date_from <= DEFAULT_PIVOT <= date_to:
        pivot = DEFAULT_PIVOT
    else:
        pivot = None
    with _open_existing_store(args.store) as store:
        points = daily_series(store, load_table(), args.station, date_from, date_to)
    summary = pivot_summary(points, pivot) if pivot else None
    write_trend_csv(points, args.out, summary)
    print(f"points: {len(points)}")
    if summary:
        fmt = lambda v: "n/a" if v is None else f"{v:.4f}"
        print(f"mean_before: {fmt(summary.mean_before)}")
        print(f"mean_after: {fmt(summary.mean_after)}")
        print(f"percent_change: {fmt(summary.percent_change)}")
        print(f"max_slope_7d: {fmt(summary.max_slope_7d)}")
    return EXIT_OK


def cmd_serve(args) -> int:
    _require(args, "store")
    bind = args.bind or "127.0.0.1:8000"
    host, _, port_text = bind.rpartition(":")
    if not host or not port_text.isdigit():
        raise UsageError(f"--bind must look like host:port, got {bind!r}")
    port = int(port_text)
    if Path(args.store).exists() is False:
        raise StorageFailure(f"store not found: {args.store}")
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((host, port))
        probe.close()
    except OSError as exc:
        raise UsageError(f"cannot bind {bind}: {exc}")

    import uvicorn

    from .api import create_app

    origins = tuple(args.cors_origin) if args.cors_origin else ("*",)
    app = create_app(args.store, cors_origins=origins)
    uvicorn.run(app, host=host, port=port, log_level="warning")
    return EXIT_OK


def cmd_nearest(args) -> int:
    _require(args, "lat", "lon", "store")
    try:
        point = GeoPoint(float(args.lat), float(args.lon))
    except ValueError as exc:
        raise UsageError(str(exc))
    with _open_existing_store(args.store) as store:
        stations = store.list_stations()
    if not stations:
        raise DataError("store has no stations")
    station, distance = StationIndex(stations).nearest(point)
    print(f"station: {station.id}")
    print(f"name: {station.name}")
    print(f"city: {station.city}")
    print(f"distance_km: {distance:.1f}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _apply_config(args)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, UnknownStation, BadRange, EmptyInput) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except StorageFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STORAGE
    except AirvizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
