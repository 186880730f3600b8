"""Sub-index interpolation, overall AQI aggregation, and category lookup."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .breakpoints import BreakpointTable, CategoryBand
from .errors import EmptyInput, NonAqiPollutant, UnitMismatch
from .kernels import subindex_batch
from .pollutants import PM_POLLUTANTS, Concentration, Pollutant

_POLLUTANT_ORDER = {p: i for i, p in enumerate(Pollutant)}


@dataclass(frozen=True)
class SubIndex:
    pollutant: Pollutant
    value: int
    category: str


@dataclass(frozen=True)
class AqiReport:
    """Overall AQI with its contributing sub-indices.

    ``overall`` is the maximum sub-index; ``dominant`` is a pollutant
    achieving it. ``valid`` is False when the CPCB validity rule fails
    (fewer than 3 sub-indices, or no particulate-matter sub-index); the
    numbers are still computed in that case and ``reason`` says why.
    """

    overall: int
    category: str
    color: str
    dominant: Pollutant
    sub_indices: tuple[SubIndex, ...]
    valid: bool
    reason: str | None = None


def sub_index_values(pollutant: Pollutant, values, table: BreakpointTable) -> np.ndarray:
    """Sub-indices for a batch of same-pollutant concentration values."""
    if pollutant not in table.segments:
        raise NonAqiPollutant(f"{pollutant.code} has no breakpoint segments")
    return subindex_batch(np.atleast_1d(values), *table.segment_arrays(pollutant))


def sub_index(conc: Concentration, table: BreakpointTable) -> SubIndex:
    """Piecewise-linear sub-index of one concentration, rounded half-up."""
    if conc.pollutant not in table.segments:
        raise NonAqiPollutant(f"{conc.pollutant.code} has no breakpoint segments")
    if conc.unit is not table.unit_for(conc.pollutant):
        raise UnitMismatch(
            f"{conc.pollutant.code} given in {conc.unit.value}, table expects "
            f"{table.unit_for(conc.pollutant).value}"
        )
    value = int(sub_index_values(conc.pollutant, [conc.value], table)[0])
    return SubIndex(conc.pollutant, value, table.band_for(value).label)


def categorize(aqi: int, table: BreakpointTable) -> CategoryBand:
    """The unique category band containing an AQI value in 0..500."""
    return table.band_for(aqi)


def overall_aqi(sub_indices: Sequence[SubIndex], table: BreakpointTable) -> AqiReport:
    """Aggregate sub-indices: overall = max, dominant = argmax.

    Ties break by canonical pollutant order. The report is flagged invalid
    (but still computed) unless at least 3 sub-indices are present and one
    of them is PM10 or PM2.5.
    """
    if not sub_indices:
        raise EmptyInput("no sub-indices")
    seen = set()
    for si in sub_indices:
        if si.pollutant in seen:
            raise ValueError(f"duplicate sub-index for {si.pollutant.code}")
        seen.add(si.pollutant)

    ordered = sorted(sub_indices, key=lambda si: _POLLUTANT_ORDER[si.pollutant])
    best = ordered[0]
    for si in ordered[1:]:
        if si.value > best.value:
            best = si

    problems = []
    if len(sub_indices) < 3:
        problems.append("fewer than 3 sub-indices")
    if not any(si.pollutant in PM_POLLUTANTS for si in sub_indices):
        problems.append("no particulate-matter sub-index")
    band = table.band_for(best.value)
    return AqiReport(
        overall=best.value,
        category=band.label,
        color=band.color,
        dominant=best.pollutant,
        sub_indices=tuple(ordered),
        valid=not problems,
        reason="; ".join(problems) or None,
    )


def report_for(values: Mapping[Pollutant, float], table: BreakpointTable) -> AqiReport:
    """AqiReport from canonical-unit concentration values.

    Non-AQI pollutants in ``values`` are ignored. Raises EmptyInput when
    nothing AQI-bearing is present.
    """
    subs = [
        sub_index(Concentration(p, v, p.unit), table)
        for p, v in values.items()
        if p in table.segments
    ]
    return overall_aqi(subs, table)


def report_to_dict(report: AqiReport) -> dict:
    """The wire shape of a report (lowerCamelCase keys)."""
    return {
        "overall": report.overall,
        "category": report.category,
        "colorCode": report.color,
        "dominant": report.dominant.code,
        "valid": report.valid,
        "reason": report.reason,
        "subIndices": [
            {"pollutant": si.pollutant.code, "value": si.value, "category": si.category}
            for si in report.sub_indices
        ],
    }
