"""Pollutant identities, measurement units, and concentration values."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Unit(Enum):
    UG_M3 = "ug/m3"
    MG_M3 = "mg/m3"


class Pollutant(Enum):
    """The 12 pollutants tracked by the platform.

    Declaration order is the canonical order and the fixed tie-break
    order when two sub-indices are equal.
    """

    PM10 = "PM10"
    PM25 = "PM2.5"
    NO = "NO"
    NO2 = "NO2"
    NOX = "NOx"
    CO = "CO"
    SO2 = "SO2"
    O3 = "O3"
    NH3 = "NH3"
    C6H6 = "C6H6"
    C7H8 = "C7H8"
    C8H10 = "C8H10"

    @property
    def code(self) -> str:
        return self.value

    @property
    def unit(self) -> Unit:
        # CPCB convention: CO is reported in mg/m3, everything else in ug/m3.
        return Unit.MG_M3 if self is Pollutant.CO else Unit.UG_M3

    @property
    def aqi_bearing(self) -> bool:
        return self in AQI_POLLUTANTS


# The seven pollutants that carry an AQI sub-index.
AQI_POLLUTANTS: tuple[Pollutant, ...] = (
    Pollutant.PM10,
    Pollutant.PM25,
    Pollutant.NO2,
    Pollutant.SO2,
    Pollutant.CO,
    Pollutant.O3,
    Pollutant.NH3,
)

PM_POLLUTANTS: tuple[Pollutant, ...] = (Pollutant.PM10, Pollutant.PM25)

# Spellings accepted on input, beyond the canonical codes themselves.
_POLLUTANT_ALIASES: dict[str, Pollutant] = {
    "PM25": Pollutant.PM25,
    "PM2_5": Pollutant.PM25,
    "OZONE": Pollutant.O3,
    "BENZENE": Pollutant.C6H6,
    "TOLUENE": Pollutant.C7H8,
    "XYLENE": Pollutant.C8H10,
    "AMMONIA": Pollutant.NH3,
}

_UNIT_ALIASES: dict[str, Unit] = {
    "UG/M3": Unit.UG_M3,
    "MG/M3": Unit.MG_M3,
}


def parse_pollutant(token: str) -> Pollutant | None:
    """Map a raw token to a pollutant, or None if unknown."""
    cleaned = token.strip().upper()
    for p in Pollutant:
        if p.value.upper() == cleaned:
            return p
    return _POLLUTANT_ALIASES.get(cleaned)


def parse_unit(token: str) -> Unit | None:
    # fold micro sign / greek mu to 'u' and superscript-3 to '3' first;
    # str.upper() would turn them into capital Mu and leave them unmatched
    cleaned = (
        token.strip()
        .replace("µ", "u")
        .replace("μ", "u")
        .replace("³", "3")
        .upper()
    )
    return _UNIT_ALIASES.get(cleaned)


@dataclass(frozen=True)
class Concentration:
    """A single measured pollutant value."""

    pollutant: Pollutant
    value: float
    unit: Unit

    def __post_init__(self) -> None:
        if not math.isfinite(self.value):
            raise ValueError(f"concentration must be finite, got {self.value!r}")
        if self.value < 0:
            raise ValueError(f"concentration must be non-negative, got {self.value!r}")
