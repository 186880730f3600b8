import json

import pytest

from airviz.breakpoints import (
    BreakpointTable,
    CategoryBand,
    Segment,
    dumps_table,
    load_table,
    save_table,
    table_from_dict,
    table_to_dict,
)
from airviz.errors import OutOfRange
from airviz.pollutants import AQI_POLLUTANTS, Pollutant, Unit

GOOD_BANDS = (
    CategoryBand("Good", 0, 50, "#00b050"),
    CategoryBand("Satisfactory", 51, 100, "#92d050"),
    CategoryBand("Moderate", 101, 200, "#ffff00"),
    CategoryBand("Poor", 201, 300, "#ff9900"),
    CategoryBand("Very Poor", 301, 400, "#ff0000"),
    CategoryBand("Severe", 401, 500, "#c00000"),
)


def test_default_table_covers_the_seven_aqi_pollutants(table):
    assert set(table.segments) == set(AQI_POLLUTANTS)
    assert len(table.categories) == 6
    assert table.unit_for(Pollutant.CO) is Unit.MG_M3
    assert table.unit_for(Pollutant.PM25) is Unit.UG_M3


def test_serialize_roundtrip_is_identity(table):
    doc = json.loads(dumps_table(table))
    again = table_from_dict(doc)
    assert again == table
    # and a second cycle stays bit-identical at the text level too
    assert dumps_table(again) == dumps_table(table)


def test_file_roundtrip(tmp_path, table):
    path = tmp_path / "bp.json"
    save_table(table, path)
    assert load_table(path) == table


def test_band_edges(table):
    assert table.band_for(50).label == "Good"
    assert table.band_for(51).label == "Satisfactory"
    assert table.band_for(500).label == "Severe"
    with pytest.raises(OutOfRange):
        table.band_for(501)


def _one_pollutant_table(segments):
    return BreakpointTable(
        segments={Pollutant.PM25: tuple(segments)},
        units={Pollutant.PM25: Unit.UG_M3},
        categories=GOOD_BANDS,
    )


def test_rejects_gap_between_segments():
    with pytest.raises(ValueError, match="contiguous"):
        _one_pollutant_table([Segment(0, 30, 0, 50), Segment(31, 60, 51, 100)])


def test_rejects_non_increasing_segment():
    with pytest.raises(ValueError, match="not increasing"):
        _one_pollutant_table([Segment(0, 30, 50, 50)])


def test_rejects_first_segment_not_at_zero():
    with pytest.raises(ValueError, match="start at 0"):
        _one_pollutant_table([Segment(10, 30, 0, 50)])


def test_rejects_category_gap():
    with pytest.raises(ValueError, match="partition"):
        BreakpointTable(
            segments={Pollutant.PM25: (Segment(0, 30, 0, 50),)},
            units={Pollutant.PM25: Unit.UG_M3},
            categories=(
                CategoryBand("Good", 0, 50, "#0f0"),
                CategoryBand("Rest", 52, 500, "#f00"),
            ),
        )


def test_rejects_unknown_format_tag(table):
    doc = table_to_dict(table)
    doc["format"] = "something-else"
    with pytest.raises(ValueError, match="format"):
        table_from_dict(doc)
