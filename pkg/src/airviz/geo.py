"""Great-circle distances and nearest-station queries."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import EmptyRegistry
from .kernels import haversine_batch

EARTH_RADIUS_KM = 6371.0088  # IUGG mean radius


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lat) and -90 <= self.lat <= 90):
            raise ValueError(f"latitude out of range: {self.lat!r}")
        if not (math.isfinite(self.lon) and -180 <= self.lon <= 180):
            raise ValueError(f"longitude out of range: {self.lon!r}")


@dataclass(frozen=True)
class StationMeta:
    id: str
    name: str
    city: str
    state: str
    location: GeoPoint
    live: bool = True

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("station id must be non-empty")


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance in km on the mean-radius sphere."""
    phi1 = math.radians(a.lat)
    phi2 = math.radians(b.lat)
    sp = math.sin((phi2 - phi1) * 0.5)
    sl = math.sin(math.radians(b.lon - a.lon) * 0.5)
    h = sp * sp + math.cos(phi1) * math.cos(phi2) * sl * sl
    if h > 1.0:
        h = 1.0
    return 2.0 * EARTH_RADIUS_KM * math.asin(math.sqrt(h))


class StationIndex:
    """Registry snapshot with precomputed coordinate arrays.

    nearest() prunes with a latitude-delta lower bound (distance on a
    sphere is at least R*|dlat|) before running the full haversine on the
    surviving candidates; results are identical to a full scan.
    """

    def __init__(self, stations: Sequence[StationMeta]):
        self.stations = list(stations)
        self._lats = np.array([s.location.lat for s in self.stations], dtype=np.float64)
        self._lons = np.array([s.location.lon for s in self.stations], dtype=np.float64)

    def nearest(self, point: GeoPoint) -> tuple[StationMeta, float]:
        if not self.stations:
            raise EmptyRegistry("no stations registered")
        bound = EARTH_RADIUS_KM * np.radians(np.abs(self._lats - point.lat))
        seed = int(np.argmin(bound))
        seed_dist = haversine_km(point, self.stations[seed].location)
        # keep anything that could still beat or tie the seed
        candidates = np.nonzero(bound <= seed_dist + 1e-9)[0]
        dists = haversine_batch(
            point.lat, point.lon, self._lats[candidates], self._lons[candidates], EARTH_RADIUS_KM
        )
        best = float(np.min(dists))
        tied = [int(candidates[i]) for i in np.nonzero(dists == best)[0]]
        winner = min(tied, key=lambda i: self.stations[i].id)
        return self.stations[winner], best


def nearest_station(point: GeoPoint, registry: Sequence[StationMeta]) -> tuple[StationMeta, float]:
    """The station nearest to ``point``; ties break by lexicographic id."""
    return StationIndex(registry).nearest(point)


def load_stations(path: str | Path) -> list[StationMeta]:
    """Read the station registry CSV: id,name,city,state,lat,lon,live."""
    stations = []
    with open(path, newline="", encoding="utf-8-sig") as fh:
        reader = csv.DictReader(fh)
        required = {"id", "name", "city", "state", "lat", "lon", "live"}
        if reader.fieldnames is None or not required.issubset(reader.fieldnames):
            raise ValueError(f"station CSV must have columns {sorted(required)}")
        for row in reader:
            stations.append(
                StationMeta(
                    id=row["id"].strip(),
                    name=row["name"].strip(),
                    city=row["city"].strip(),
                    state=row["state"].strip(),
                    location=GeoPoint(float(row["lat"]), float(row["lon"])),
                    live=row["live"].strip().lower() in ("1", "true", "yes"),
                )
            )
    return stations


def save_stations(stations: Sequence[StationMeta], path: str | Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "name", "city", "state", "lat", "lon", "live"])
        for s in stations:
            writer.writerow(
                [s.id, s.name, s.city, s.state, repr(s.location.lat), repr(s.location.lon),
                 "true" if s.live else "false"]
            )
