"""Deterministic particle-cloud scene generation.

A scene maps one station-date's pollution levels to particle spawns inside
the simulated airspace. All randomness comes from a PCG64 generator seeded
explicitly, so identical (record, report, seed, config) inputs always give
the identical scene.
"""

from __future__ import annotations

import datetime as dt
import hashlib
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .aqi import AqiReport
from .errors import MismatchedInputs, OutOfRange
from .ingest import DailyRecord
from .pollutants import AQI_POLLUTANTS, Pollutant

Vec3 = tuple[float, float, float]


@dataclass(frozen=True)
class Airspace:
    """Box around the origin in which particles spawn (metres)."""

    half_extents: Vec3 = (5.0, 2.5, 5.0)
    render_range: float = 3.0

    @property
    def volume(self) -> float:
        x, y, z = self.half_extents
        return 8.0 * x * y * z


def _default_max_counts() -> dict[Pollutant, int]:
    return {p: 100 for p in Pollutant}


def _default_scale_ranges() -> dict[Pollutant, tuple[float, float]]:
    # PM spawns at varied sizes within its range; gases at a fixed size
    ranges = {p: (1.0, 1.0) for p in Pollutant}
    ranges[Pollutant.PM25] = (0.5, 1.0)
    ranges[Pollutant.PM10] = (1.0, 2.0)
    return ranges


def _default_ref_max() -> dict[Pollutant, float]:
    # full-scale concentrations for the 5 pollutants without breakpoints
    return {
        Pollutant.NO: 400.0,
        Pollutant.NOX: 500.0,
        Pollutant.C6H6: 20.0,
        Pollutant.C7H8: 200.0,
        Pollutant.C8H10: 200.0,
    }


@dataclass(frozen=True)
class SceneConfig:
    airspace: Airspace = Airspace()
    max_counts: Mapping[Pollutant, int] = field(default_factory=_default_max_counts)
    speed_range: tuple[float, float] = (0.05, 0.20)
    spin_range: tuple[float, float] = (0.1, 1.0)
    scale_ranges: Mapping[Pollutant, tuple[float, float]] = field(
        default_factory=_default_scale_ranges
    )
    ref_max: Mapping[Pollutant, float] = field(default_factory=_default_ref_max)


@dataclass(frozen=True)
class ParticleSpawn:
    pollutant: Pollutant
    position: Vec3
    velocity: Vec3
    rotation_axis: Vec3
    angular_speed: float
    scale: float


@dataclass(frozen=True)
class SceneSpec:
    station_id: str
    date: dt.date
    seed: int
    airspace: Airspace
    spawns: tuple[ParticleSpawn, ...]
    aqi: AqiReport


def default_seed(station_id: str, date: dt.date) -> int:
    """Stable 48-bit seed for a station-date (survives JSON number limits)."""
    digest = hashlib.blake2b(
        f"{station_id}:{date.isoformat()}".encode(), digest_size=6
    ).digest()
    return int.from_bytes(digest, "big")


def relative_level(pollutant: Pollutant, value: float, config: SceneConfig) -> int:
    """Map a non-AQI pollutant concentration onto the 0..500 scale."""
    ref = config.ref_max[pollutant]
    frac = min(max(value / ref, 0.0), 1.0)
    return int(math.floor(500.0 * frac + 0.5))


def particle_count(level: int, max_count: int) -> int:
    """Linear count model: round(max_count * level/500), capped at max_count."""
    if not 0 <= level <= 500:
        raise OutOfRange(f"level {level} outside 0..500")
    if max_count < 1:
        raise OutOfRange(f"max_count must be positive, got {max_count}")
    return min(int(math.floor(max_count * level / 500.0 + 0.5)), max_count)


def _unit_rows(rng: np.random.Generator, n: int) -> np.ndarray:
    vecs = rng.normal(size=(n, 3))
    norms = np.linalg.norm(vecs, axis=1, keepdims=True)
    # an all-zero draw is astronomically unlikely; keep the guard deterministic
    degenerate = norms[:, 0] < 1e-12
    vecs[degenerate] = (1.0, 0.0, 0.0)
    norms[degenerate] = 1.0
    return vecs / norms


def _vec3(row: np.ndarray) -> Vec3:
    return (float(row[0]), float(row[1]), float(row[2]))


def generate_scene(
    record: DailyRecord,
    report: AqiReport,
    seed: int | None = None,
    config: SceneConfig | None = None,
) -> SceneSpec:
    """Spawn particles for every sampled pollutant of one station-date.

    AQI-bearing pollutants scale by their sub-index, the others by their
    concentration relative to the configured full-scale value. Positions
    are uniform in the airspace box, velocity directions uniform on the
    sphere with speeds in the configured range, PM scales varied within
    their ranges.
    """
    config = config or SceneConfig()
    if seed is None:
        seed = default_seed(record.station_id, record.date)

    by_pollutant = {si.pollutant: si.value for si in report.sub_indices}
    sampled_aqi = {p for p in record.samples if p in AQI_POLLUTANTS}
    if sampled_aqi != set(by_pollutant):
        raise MismatchedInputs(
            "report sub-indices do not match the record's AQI-bearing samples"
        )

    rng = np.random.Generator(np.random.PCG64(seed))
    hx, hy, hz = config.airspace.half_extents
    spawns: list[ParticleSpawn] = []
    for pollutant in Pollutant:
        if pollutant not in record.samples:
            continue
        if pollutant in by_pollutant:
            level = by_pollutant[pollutant]
        else:
            level = relative_level(pollutant, record.samples[pollutant].value, config)
        count = particle_count(level, config.max_counts[pollutant])
        if count == 0:
            continue
        positions = rng.uniform((-hx, -hy, -hz), (hx, hy, hz), size=(count, 3))
        directions = _unit_rows(rng, count)
        speeds = rng.uniform(*config.speed_range, size=count)
        axes = _unit_rows(rng, count)
        spins = rng.uniform(*config.spin_range, size=count)
        lo, hi = config.scale_ranges[pollutant]
        scales = rng.uniform(lo, hi, size=count)
        velocities = directions * speeds[:, None]
        for i in range(count):
            spawns.append(
                ParticleSpawn(
                    pollutant=pollutant,
                    position=_vec3(positions[i]),
                    velocity=_vec3(velocities[i]),
                    rotation_axis=_vec3(axes[i]),
                    angular_speed=float(spins[i]),
                    scale=float(scales[i]),
                )
            )
    return SceneSpec(
        station_id=record.station_id,
        date=record.date,
        seed=seed,
        airspace=config.airspace,
        spawns=tuple(spawns),
        aqi=report,
    )


def scene_to_dict(spec: SceneSpec) -> dict:
    """The documented JSON shape of a scene (lowerCamelCase keys)."""
    from .aqi import report_to_dict

    return {
        "stationId": spec.station_id,
        "date": spec.date.isoformat(),
        "seed": spec.seed,
        "airspace": {
            "halfExtents": list(spec.airspace.half_extents),
            "renderRange": spec.airspace.render_range,
        },
        "aqi": report_to_dict(spec.aqi),
        "spawns": [
            {
                "pollutant": s.pollutant.code,
                "position": list(s.position),
                "velocity": list(s.velocity),
                "rotationAxis": list(s.rotation_axis),
                "angularSpeed": s.angular_speed,
                "scale": s.scale,
            }
            for s in spec.spawns
        ],
    }
