"""Static pollutant reference registry: what each pollutant is, where it
comes from, and what it does to people. Shipped as an editable data file."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .pollutants import Pollutant, parse_pollutant

_FORMAT_TAG = "airviz-pollutant-info-v1"


@dataclass(frozen=True)
class PollutantInfo:
    pollutant: Pollutant
    display_name: str
    molecular_structure: str
    description: str
    health_effects: tuple[str, ...]
    controllable_sources: tuple[str, ...]
    color: str


def load_registry(path: str | Path | None = None) -> dict[Pollutant, PollutantInfo]:
    """Load the registry; exactly one entry per pollutant is required."""
    if path is None:
        text = resources.files("airviz.data").joinpath("pollutant_info.json").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    doc = json.loads(text)
    if doc.get("format") != _FORMAT_TAG:
        raise ValueError(f"unsupported pollutant info format: {doc.get('format')!r}")
    registry: dict[Pollutant, PollutantInfo] = {}
    for entry in doc["pollutants"]:
        pollutant = parse_pollutant(entry["code"])
        if pollutant is None:
            raise ValueError(f"unknown pollutant code: {entry['code']!r}")
        if pollutant in registry:
            raise ValueError(f"duplicate registry entry for {pollutant.code}")
        registry[pollutant] = PollutantInfo(
            pollutant=pollutant,
            display_name=entry["displayName"],
            molecular_structure=entry["molecularStructure"],
            description=entry["description"],
            health_effects=tuple(entry["healthEffects"]),
            controllable_sources=tuple(entry["controllableSources"]),
            color=entry["colorCode"],
        )
    missing = [p.code for p in Pollutant if p not in registry]
    if missing:
        raise ValueError(f"registry is missing entries for: {missing}")
    return registry


@lru_cache(maxsize=1)
def _default_registry() -> dict[Pollutant, PollutantInfo]:
    return load_registry()


def pollutant_info(pollutant: Pollutant) -> PollutantInfo:
    """Registry lookup against the packaged data file; total over all 12."""
    return _default_registry()[pollutant]
