"""File-backed station and daily-record store.

A thin layer over sqlite: one writer at a time, snapshot reads, batches
applied in single transactions so a killed writer leaves either none or
all of a batch visible.
"""

from __future__ import annotations

import csv
import datetime as dt
import sqlite3
from pathlib import Path
from typing import Sequence

from .errors import DuplicateId, StorageFailure, UnknownStation
from .geo import GeoPoint, StationMeta
from .ingest import AvailabilityCalendar, DailyRecord, Provenance, Sample
from .pollutants import AQI_POLLUTANTS, PM_POLLUTANTS, Pollutant

SCHEMA_VERSION = "1"

_SCHEMA = """
CREATE TABLE IF NOT EXISTS meta (
    key TEXT PRIMARY KEY,
    value TEXT NOT NULL
);
CREATE TABLE IF NOT EXISTS stations (
    id TEXT PRIMARY KEY,
    name TEXT NOT NULL,
    city TEXT NOT NULL,
    state TEXT NOT NULL,
    lat REAL NOT NULL,
    lon REAL NOT NULL,
    live INTEGER NOT NULL
);
CREATE TABLE IF NOT EXISTS samples (
    station_id TEXT NOT NULL REFERENCES stations(id),
    date TEXT NOT NULL,
    pollutant TEXT NOT NULL,
    value REAL NOT NULL,
    provenance TEXT NOT NULL,
    PRIMARY KEY (station_id, date, pollutant)
);
CREATE TABLE IF NOT EXISTS temperatures (
    station_id TEXT NOT NULL REFERENCES stations(id),
    date TEXT NOT NULL,
    value REAL NOT NULL,
    PRIMARY KEY (station_id, date)
);
"""

_AQI_CODES = tuple(p.code for p in AQI_POLLUTANTS)
_PM_CODES = tuple(p.code for p in PM_POLLUTANTS)


class Store:
    """Open a store file, creating it (and its schema) if absent."""

    def __init__(self, path: str | Path):
        self.path = str(path)
        try:
            self._conn = sqlite3.connect(self.path)
            self._conn.execute("PRAGMA foreign_keys = ON")
            with self._conn:
                self._conn.executescript(_SCHEMA)
                self._conn.execute(
                    "INSERT OR IGNORE INTO meta (key, value) VALUES ('schema_version', ?)",
                    (SCHEMA_VERSION,),
                )
        except sqlite3.Error as exc:
            raise StorageFailure(f"cannot open store at {self.path}: {exc}") from exc

    def close(self) -> None:
        self._conn.close()

    def __enter__(self) -> "Store":
        return self

    def __exit__(self, *exc) -> None:
        self.close()

    # -- stations ---------------------------------------------------------

    def upsert_stations(self, stations: Sequence[StationMeta]) -> int:
        ids = [s.id for s in stations]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise DuplicateId(f"duplicate station ids in batch: {dupes}")
        try:
            with self._conn:
                self._conn.executemany(
                    "INSERT OR REPLACE INTO stations (id, name, city, state, lat, lon, live) "
                    "VALUES (?, ?, ?, ?, ?, ?, ?)",
                    [
                        (s.id, s.name, s.city, s.state, s.location.lat, s.location.lon,
                         1 if s.live else 0)
                        for s in stations
                    ],
                )
        except sqlite3.Error as exc:
            raise StorageFailure(str(exc)) from exc
        return len(stations)

    def list_stations(self) -> list[StationMeta]:
        rows = self._conn.execute(
            "SELECT id, name, city, state, lat, lon, live FROM stations ORDER BY id"
        ).fetchall()
        return [
            StationMeta(r[0], r[1], r[2], r[3], GeoPoint(r[4], r[5]), bool(r[6])) for r in rows
        ]

    def get_station(self, station_id: str) -> StationMeta | None:
        row = self._conn.execute(
            "SELECT id, name, city, state, lat, lon, live FROM stations WHERE id = ?",
            (station_id,),
        ).fetchone()
        if row is None:
            return None
        return StationMeta(row[0], row[1], row[2], row[3], GeoPoint(row[4], row[5]), bool(row[6]))

    def _require_station(self, station_id: str) -> None:
        if self.get_station(station_id) is None:
            raise UnknownStation(f"station {station_id!r} is not registered")

    # -- records ----------------------------------------------------------

    def put_records(self, station_id: str, records: Sequence[DailyRecord]) -> int:
        """Replace the stored records for each (station, date) in the batch."""
        self._require_station(station_id)
        for rec in records:
            if rec.station_id != station_id:
                raise ValueError(f"record for {rec.station_id!r} in batch for {station_id!r}")
        try:
            with self._conn:
                for rec in records:
                    date = rec.date.isoformat()
                    self._conn.execute(
                        "DELETE FROM samples WHERE station_id = ? AND date = ?",
                        (station_id, date),
                    )
                    self._conn.execute(
                        "DELETE FROM temperatures WHERE station_id = ? AND date = ?",
                        (station_id, date),
                    )
                    self._conn.executemany(
                        "INSERT INTO samples (station_id, date, pollutant, value, provenance) "
                        "VALUES (?, ?, ?, ?, ?)",
                        [
                            (station_id, date, p.code, s.value, s.provenance.value)
                            for p, s in rec.samples.items()
                        ],
                    )
                    if rec.temperature_c is not None:
                        self._conn.execute(
                            "INSERT INTO temperatures (station_id, date, value) VALUES (?, ?, ?)",
                            (station_id, date, rec.temperature_c),
                        )
        except sqlite3.Error as exc:
            raise StorageFailure(str(exc)) from exc
        return len(records)

    def get_record(self, station_id: str, date: dt.date) -> DailyRecord | None:
        self._require_station(station_id)
        iso = date.isoformat()
        rows = self._conn.execute(
            "SELECT pollutant, value, provenance FROM samples WHERE station_id = ? AND date = ?",
            (station_id, iso),
        ).fetchall()
        temp = self._conn.execute(
            "SELECT value FROM temperatures WHERE station_id = ? AND date = ?",
            (station_id, iso),
        ).fetchone()
        if not rows and temp is None:
            return None
        samples = {
            Pollutant(code): Sample(value, Provenance(prov)) for code, value, prov in rows
        }
        return DailyRecord(station_id, date, samples, temp[0] if temp else None)

    def get_dates(self, station_id: str) -> AvailabilityCalendar:
        """Dates passing the availability rule, computed from stored samples."""
        self._require_station(station_id)
        placeholders = ",".join("?" * len(_AQI_CODES))
        pm_placeholders = ",".join("?" * len(_PM_CODES))
        rows = self._conn.execute(
            f"SELECT date FROM samples "
            f"WHERE station_id = ? AND pollutant IN ({placeholders}) "
            f"GROUP BY date "
            f"HAVING COUNT(DISTINCT pollutant) >= 3 "
            f"AND SUM(CASE WHEN pollutant IN ({pm_placeholders}) THEN 1 ELSE 0 END) >= 1 "
            f"ORDER BY date",
            (station_id, *_AQI_CODES, *_PM_CODES),
        ).fetchall()
        return AvailabilityCalendar(station_id, tuple(dt.date.fromisoformat(r[0]) for r in rows))

    def get_latest(self, station_id: str) -> DailyRecord | None:
        self._require_station(station_id)
        row = self._conn.execute(
            "SELECT MAX(date) FROM ("
            "  SELECT date FROM samples WHERE station_id = :sid"
            "  UNION ALL SELECT date FROM temperatures WHERE station_id = :sid)",
            {"sid": station_id},
        ).fetchone()
        if row is None or row[0] is None:
            return None
        return self.get_record(station_id, dt.date.fromisoformat(row[0]))

    # -- fixtures ---------------------------------------------------------

    def export_csv(self, path: str | Path, include_interpolated: bool = False) -> int:
        """Dump samples to the canonical ingestion CSV (measured only by default)."""
        query = "SELECT station_id, date, pollutant, value, provenance FROM samples"
        if not include_interpolated:
            query += " WHERE provenance = 'measured'"
        query += " ORDER BY station_id, date, pollutant"
        count = 0
        with open(path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["station_id", "date", "pollutant", "value", "unit"])
            for sid, date, code, value, _prov in self._conn.execute(query):
                writer.writerow([sid, date, code, repr(value), Pollutant(code).unit.value])
                count += 1
            temps = "SELECT station_id, date, value FROM temperatures ORDER BY station_id, date"
            for sid, date, value in self._conn.execute(temps):
                writer.writerow([sid, date, "TEMP", repr(value), "C"])
                count += 1
        return count
