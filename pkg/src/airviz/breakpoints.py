"""Breakpoint segment tables and AQI category bands.

The table is data, not code: the default ships in ``data/breakpoints.json``
and any structurally valid replacement can be loaded at runtime. The file
format round-trips exactly (load -> serialize -> load is identity).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Mapping

import numpy as np

from .errors import OutOfRange
from .pollutants import Pollutant, Unit, parse_pollutant

_FORMAT_TAG = "airviz-breakpoints-v1"


@dataclass(frozen=True)
class Segment:
    """One piecewise-linear leg: [conc_lo, conc_hi] -> [index_lo, index_hi]."""

    conc_lo: float
    conc_hi: float
    index_lo: int
    index_hi: int


@dataclass(frozen=True)
class CategoryBand:
    label: str
    index_lo: int
    index_hi: int
    color: str


@dataclass(frozen=True)
class BreakpointTable:
    """Per-pollutant segments plus the shared category bands.

    Segments per pollutant must start at 0, be contiguous (each segment's
    upper knot is the next one's lower knot, in both concentration and
    index), and strictly increase. Category bands must partition the
    integers 0..500.
    """

    segments: Mapping[Pollutant, tuple[Segment, ...]]
    units: Mapping[Pollutant, Unit]
    categories: tuple[CategoryBand, ...]
    # Segment columns as float arrays, precomputed for the kernels.
    _arrays: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        for pollutant, segs in self.segments.items():
            if not segs:
                raise ValueError(f"{pollutant.code}: empty segment list")
            if segs[0].conc_lo != 0:
                raise ValueError(f"{pollutant.code}: first segment must start at 0")
            for seg in segs:
                if not (seg.conc_lo < seg.conc_hi and seg.index_lo < seg.index_hi):
                    raise ValueError(f"{pollutant.code}: segment not increasing: {seg}")
            for a, b in zip(segs, segs[1:]):
                if a.conc_hi != b.conc_lo or a.index_hi != b.index_lo:
                    raise ValueError(f"{pollutant.code}: segments not contiguous at {a.conc_hi}")
            if pollutant not in self.units:
                raise ValueError(f"{pollutant.code}: missing unit")
        self._check_categories()
        arrays = {}
        for pollutant, segs in self.segments.items():
            arrays[pollutant] = (
                np.array([s.conc_lo for s in segs], dtype=np.float64),
                np.array([s.conc_hi for s in segs], dtype=np.float64),
                np.array([s.index_lo for s in segs], dtype=np.float64),
                np.array([s.index_hi for s in segs], dtype=np.float64),
            )
        object.__setattr__(self, "_arrays", arrays)

    def _check_categories(self) -> None:
        if not self.categories:
            raise ValueError("no category bands")
        bands = sorted(self.categories, key=lambda b: b.index_lo)
        if bands[0].index_lo != 0 or bands[-1].index_hi != 500:
            raise ValueError("category bands must cover 0..500")
        for a, b in zip(bands, bands[1:]):
            if b.index_lo != a.index_hi + 1:
                raise ValueError(f"category bands must partition 0..500, gap/overlap at {a.index_hi}")

    def segment_arrays(self, pollutant: Pollutant):
        """(conc_lo, conc_hi, index_lo, index_hi) columns for the kernels."""
        return self._arrays[pollutant]

    def unit_for(self, pollutant: Pollutant) -> Unit:
        return self.units[pollutant]

    def band_for(self, aqi: int) -> CategoryBand:
        if not 0 <= aqi <= 500:
            raise OutOfRange(f"AQI {aqi} outside 0..500")
        for band in self.categories:
            if band.index_lo <= aqi <= band.index_hi:
                return band
        raise OutOfRange(f"no category band contains {aqi}")  # unreachable if bands partition


def table_to_dict(table: BreakpointTable) -> dict:
    return {
        "format": _FORMAT_TAG,
        "pollutants": {
            p.code: {
                "unit": table.units[p].value,
                "segments": [[s.conc_lo, s.conc_hi, s.index_lo, s.index_hi] for s in segs],
            }
            for p, segs in table.segments.items()
        },
        "categories": [
            {"label": b.label, "indexLo": b.index_lo, "indexHi": b.index_hi, "color": b.color}
            for b in table.categories
        ],
    }


def table_from_dict(doc: dict) -> BreakpointTable:
    if doc.get("format") != _FORMAT_TAG:
        raise ValueError(f"unsupported breakpoint file format: {doc.get('format')!r}")
    segments: dict[Pollutant, tuple[Segment, ...]] = {}
    units: dict[Pollutant, Unit] = {}
    for code, entry in doc["pollutants"].items():
        pollutant = parse_pollutant(code)
        if pollutant is None:
            raise ValueError(f"unknown pollutant code in breakpoint file: {code!r}")
        segments[pollutant] = tuple(
            Segment(float(lo), float(hi), int(ilo), int(ihi))
            for lo, hi, ilo, ihi in entry["segments"]
        )
        units[pollutant] = Unit(entry["unit"])
    categories = tuple(
        CategoryBand(c["label"], int(c["indexLo"]), int(c["indexHi"]), c["color"])
        for c in doc["categories"]
    )
    return BreakpointTable(segments=segments, units=units, categories=categories)


def dumps_table(table: BreakpointTable) -> str:
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def load_table(path: str | Path | None = None) -> BreakpointTable:
    """Load a breakpoint table; with no path, the packaged default."""
    if path is None:
        text = resources.files("airviz.data").joinpath("breakpoints.json").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return table_from_dict(json.loads(text))


def save_table(table: BreakpointTable, path: str | Path) -> None:
    Path(path).write_text(dumps_table(table), "utf-8")
