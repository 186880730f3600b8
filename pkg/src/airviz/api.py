"""Read-only REST/JSON service over a store.

All state lives in the store file; every request opens a fresh snapshot
connection, so the service is stateless between requests. Errors carry a
machine-readable ``code`` next to the HTTP status.
"""

from __future__ import annotations

import datetime as dt
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .aqi import report_to_dict
from .breakpoints import BreakpointTable, load_table, table_to_dict
from .errors import EmptyInput, UnknownStation
from .geo import GeoPoint, StationIndex, StationMeta
from .info import load_registry
from .ingest import DailyRecord
from .pollutants import Pollutant, parse_pollutant
from .scene import SceneConfig, generate_scene, scene_to_dict
from .store import Store
from .trend import daily_series, report_for_record


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


def station_to_dict(s: StationMeta) -> dict:
    return {
        "id": s.id,
        "name": s.name,
        "city": s.city,
        "state": s.state,
        "location": {"lat": s.location.lat, "lon": s.location.lon},
        "live": s.live,
    }


def record_to_dict(record: DailyRecord) -> dict:
    doc = {
        "stationId": record.station_id,
        "date": record.date.isoformat(),
        "samples": {
            p.code: {
                "value": s.value,
                "unit": p.unit.value,
                "provenance": s.provenance.value,
            }
            for p, s in record.samples.items()
        },
    }
    if record.temperature_c is not None:
        doc["temperatureC"] = record.temperature_c
    return doc


def _parse_date(raw: str | None, param: str) -> dt.date:
    if raw is None:
        raise ApiError(400, "bad_date", f"query parameter {param!r} is required")
    try:
        return dt.date.fromisoformat(raw)
    except ValueError:
        raise ApiError(400, "bad_date", f"{param} must be an ISO-8601 date, got {raw!r}")


def _parse_coord(raw: str | None, param: str, bound: float) -> float:
    if raw is None:
        raise ApiError(400, "bad_coordinates", f"query parameter {param!r} is required")
    try:
        value = float(raw)
    except ValueError:
        raise ApiError(400, "bad_coordinates", f"{param} must be a number, got {raw!r}")
    if not -bound <= value <= bound:
        raise ApiError(400, "bad_coordinates", f"{param} must be within [-{bound}, {bound}]")
    return value


def create_app(
    store_path: str | Path,
    table: BreakpointTable | None = None,
    scene_config: SceneConfig | None = None,
    cors_origins: tuple[str, ...] = ("*",),
) -> FastAPI:
    table = table or load_table()
    scene_config = scene_config or SceneConfig()
    registry = load_registry()

    app = FastAPI(title="airviz", version="0.1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=list(cors_origins), allow_methods=["GET"], allow_headers=["*"]
    )

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"httpStatus": exc.status, "code": exc.code, "message": exc.message},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=400,
            content={"httpStatus": 400, "code": "bad_request", "message": str(exc)},
        )

    def open_store() -> Store:
        return Store(store_path)

    def require_record(store: Store, station_id: str, date: dt.date) -> DailyRecord:
        try:
            record = store.get_record(station_id, date)
        except UnknownStation as exc:
            raise ApiError(404, "unknown_station", str(exc))
        if record is None:
            raise ApiError(404, "not_found", f"no record for {station_id} on {date.isoformat()}")
        return record

    def report_or_none(record: DailyRecord):
        try:
            return report_for_record(record, table)
        except EmptyInput:
            return None

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/stations/nearest")
    def stations_nearest(lat: str | None = None, lon: str | None = None):
        user = GeoPoint(_parse_coord(lat, "lat", 90.0), _parse_coord(lon, "lon", 180.0))
        with open_store() as store:
            stations = store.list_stations()
        if not stations:
            raise ApiError(503, "empty_registry", "no stations registered")
        station, distance = StationIndex(stations).nearest(user)
        return {"station": station_to_dict(station), "distanceKm": round(distance, 1)}

    @app.get("/stations")
    def stations_list():
        with open_store() as store:
            return [station_to_dict(s) for s in store.list_stations()]

    @app.get("/stations/{station_id}/dates")
    def station_dates(station_id: str):
        with open_store() as store:
            try:
                calendar = store.get_dates(station_id)
            except UnknownStation as exc:
                raise ApiError(404, "unknown_station", str(exc))
        return {"stationId": station_id, "dates": [d.isoformat() for d in calendar.dates]}

    @app.get("/stations/{station_id}/records")
    def station_record(station_id: str, date: str | None = None):
        wanted = _parse_date(date, "date")
        with open_store() as store:
            record = require_record(store, station_id, wanted)
        report = report_or_none(record)
        return {
            "record": record_to_dict(record),
            "aqiReport": report_to_dict(report) if report else None,
        }

    @app.get("/stations/{station_id}/latest")
    def station_latest(station_id: str):
        with open_store() as store:
            try:
                record = store.get_latest(station_id)
            except UnknownStation as exc:
                raise ApiError(404, "unknown_station", str(exc))
        if record is None:
            raise ApiError(404, "not_found", f"no records for {station_id}")
        report = report_or_none(record)
        doc = {
            "record": record_to_dict(record),
            "aqiReport": report_to_dict(report) if report else None,
        }
        if record.temperature_c is not None:
            doc["temperatureC"] = record.temperature_c
        return doc

    @app.get("/stations/{station_id}/scene")
    def station_scene(station_id: str, date: str | None = None, seed: str | None = None):
        seed_value: int | None = None
        if seed is not None:
            try:
                seed_value = int(seed)
            except ValueError:
                raise ApiError(400, "bad_seed", f"seed must be an integer, got {seed!r}")
            if not 0 <= seed_value < 2**63:
                raise ApiError(400, "bad_seed", "seed must fit in 63 bits")
        with open_store() as store:
            if date is None:
                try:
                    record = store.get_latest(station_id)
                except UnknownStation as exc:
                    raise ApiError(404, "unknown_station", str(exc))
                if record is None:
                    raise ApiError(404, "not_found", f"no records for {station_id}")
            else:
                record = require_record(store, station_id, _parse_date(date, "date"))
        report = report_or_none(record)
        if report is None:
            raise ApiError(
                404, "not_found", f"record for {station_id} has no AQI-bearing samples"
            )
        spec = generate_scene(record, report, seed=seed_value, config=scene_config)
        return scene_to_dict(spec)

    @app.get("/breakpoints")
    def breakpoints_table():
        # the UI displays breakpoints but never computes with them;
        # serving the table keeps the config single-sourced
        return table_to_dict(table)

    @app.get("/pollutants")
    def pollutants_registry():
        return [
            {
                "code": entry.pollutant.code,
                "displayName": entry.display_name,
                "molecularStructure": entry.molecular_structure,
                "description": entry.description,
                "healthEffects": list(entry.health_effects),
                "controllableSources": list(entry.controllable_sources),
                "colorCode": entry.color,
            }
            for entry in (registry[p] for p in Pollutant)
        ]

    @app.get("/stations/{station_id}/trend")
    def station_trend(
        station_id: str,
        request: Request,
        to: str | None = None,
        metric: str = "aqi",
    ):
        date_from = _parse_date(request.query_params.get("from"), "from")
        date_to = _parse_date(to, "to")
        if date_from > date_to:
            raise ApiError(400, "bad_range", f"from {date_from} is after to {date_to}")
        wanted: Pollutant | None = None
        if metric != "aqi":
            wanted = parse_pollutant(metric)
            if wanted is None or not wanted.aqi_bearing:
                raise ApiError(400, "bad_metric", f"metric must be 'aqi' or an AQI pollutant code")
        with open_store() as store:
            try:
                points = daily_series(store, table, station_id, date_from, date_to)
            except UnknownStation as exc:
                raise ApiError(404, "unknown_station", str(exc))
        return {
            "stationId": station_id,
            "metric": metric,
            "from": date_from.isoformat(),
            "to": date_to.isoformat(),
            "points": [
                {
                    "date": p.date.isoformat(),
                    "overallAqi": p.overall,
                    "value": p.overall if wanted is None else p.sub_indices.get(wanted),
                    "subIndices": {q.code: v for q, v in p.sub_indices.items()},
                }
                for p in points
            ],
        }

    return app
