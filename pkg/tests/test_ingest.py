import datetime as dt

import numpy as np
import pytest

from airviz.errors import UnsortedInput
from airviz.ingest import (
    AvailabilityCalendar,
    DailyRecord,
    Provenance,
    RawRow,
    RejectReason,
    Sample,
    interpolate_gaps,
    is_available,
    parse_and_clean,
    read_data_csv,
    write_rejects_csv,
)
from airviz.pollutants import Pollutant

D = dt.date
PM25 = Pollutant.PM25
PM10 = Pollutant.PM10
NO2 = Pollutant.NO2


def raw(station="S1", date="2020-01-01", pollutant="PM2.5", value="42.5", unit="ug/m3", n=2):
    return RawRow(station, date, pollutant, value, unit, row_number=n, raw_line="raw")


class TestParseAndClean:
    def test_clean_row_accepted_as_measured(self):
        records, rejects = parse_and_clean([raw()], ["S1"])
        assert rejects == []
        assert records[0].samples[PM25] == Sample(42.5, Provenance.MEASURED)

    @pytest.mark.parametrize(
        "row,reason",
        [
            (raw(value="N/A"), RejectReason.NON_NUMERIC),
            (raw(value="−5"), RejectReason.NEGATIVE),  # unicode minus
            (raw(value="-0.1"), RejectReason.NEGATIVE),
            (raw(value="inf"), RejectReason.NON_FINITE),
            (raw(pollutant="WATER"), RejectReason.UNKNOWN_POLLUTANT),
            (raw(station="GHOST"), RejectReason.UNKNOWN_STATION),
            (raw(date="01/02/2020"), RejectReason.BAD_DATE),
            (raw(unit="ppb"), RejectReason.BAD_UNIT),
        ],
    )
    def test_rejection_reasons(self, row, reason):
        records, rejects = parse_and_clean([row], ["S1"])
        assert records == []
        assert [r.reason for r in rejects] == [reason]

    def test_duplicate_rejects_the_later_row(self):
        first = raw(value="10", n=2)
        second = raw(value="99", n=3)
        records, rejects = parse_and_clean([first, second], ["S1"])
        assert records[0].samples[PM25].value == 10.0
        assert [(r.row_number, r.reason) for r in rejects] == [(3, RejectReason.DUPLICATE)]

    def test_thousands_separator_stripped(self):
        records, _ = parse_and_clean([raw(value="1,234.5")], ["S1"])
        assert records[0].samples[PM25].value == 1234.5

    def test_unit_normalized_to_canonical(self):
        records, _ = parse_and_clean([raw(pollutant="CO", value="1200", unit="ug/m3")], ["S1"])
        assert records[0].samples[Pollutant.CO].value == pytest.approx(1.2)

    def test_unicode_unit_accepted(self):
        records, rejects = parse_and_clean([raw(unit="µg/m³")], ["S1"])
        assert rejects == []
        assert records[0].samples[PM25].value == 42.5

    def test_temperature_rows(self):
        records, rejects = parse_and_clean(
            [raw(), raw(pollutant="TEMP", value="-2.5", unit="C", n=3)], ["S1"]
        )
        assert rejects == []
        assert records[0].temperature_c == -2.5

    def test_alias_tokens(self):
        records, _ = parse_and_clean(
            [raw(pollutant="PM25"), raw(pollutant="Benzene", n=3)], ["S1"]
        )
        assert set(records[0].samples) == {PM25, Pollutant.C6H6}

    def test_counts_add_up(self):
        rows = [
            raw(n=2),
            raw(value="bad", n=3),
            raw(date="2020-01-02", n=4),
            raw(station="GHOST", n=5),
            raw(pollutant="PM10", n=6),
        ]
        records, rejects = parse_and_clean(rows, ["S1"])
        accepted = sum(len(r.samples) for r in records)
        assert accepted + len(rejects) == len(rows)


class TestReadDataCsv:
    def test_header_enforced(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text("a,b,c\n")
        with pytest.raises(ValueError, match="header"):
            list(read_data_csv(path))

    def test_malformed_width_becomes_reject(self, tmp_path):
        path = tmp_path / "data.csv"
        path.write_text(
            "station_id,date,pollutant,value,unit\n"
            "S1,2020-01-01,PM2.5,42.5,ug/m3\n"
            "S1,2020-01-02,PM2.5\n"
        )
        records, rejects = parse_and_clean(read_data_csv(path), ["S1"])
        assert len(records) == 1
        assert [r.reason for r in rejects] == [RejectReason.MALFORMED_ROW]
        assert rejects[0].row_number == 3

    def test_bom_header_tolerated(self, tmp_path):
        path = tmp_path / "bom.csv"
        path.write_bytes(
            b"\xef\xbb\xbfstation_id,date,pollutant,value,unit\n"
            b"S1,2020-01-01,PM2.5,42.5,ug/m3\n"
        )
        records, rejects = parse_and_clean(read_data_csv(path), ["S1"])
        assert rejects == []
        assert records[0].samples[PM25].value == 42.5

    def test_rejects_report_roundtrip(self, tmp_path):
        records, rejects = parse_and_clean([raw(value="N/A")], ["S1"])
        out = tmp_path / "rejects.csv"
        write_rejects_csv(rejects, out)
        lines = out.read_text().splitlines()
        assert lines[0] == "row_number,reason,raw_line"
        assert lines[1].startswith("2,non_numeric,")


def record(date, samples, station="S1"):
    return DailyRecord(station, date, {p: Sample(v) for p, v in samples.items()})


class TestInterpolateGaps:
    def test_midpoint_fill(self):
        series = [
            record(D(2020, 1, 1), {PM10: 100.0}),
            record(D(2020, 1, 3), {PM10: 120.0}),
        ]
        filled, _ = interpolate_gaps(series)
        jan2 = next(r for r in filled if r.date == D(2020, 1, 2))
        assert jan2.samples[PM10] == Sample(110.0, Provenance.INTERPOLATED)

    def test_long_gap_stays_missing(self):
        series = [
            record(D(2020, 1, 1), {PM10: 100.0, PM25: 50.0, NO2: 20.0}),
            record(D(2020, 1, 6), {PM10: 150.0, PM25: 60.0, NO2: 30.0}),
        ]
        filled, calendar = interpolate_gaps(series, max_gap_days=3)
        assert [r.date for r in filled] == [D(2020, 1, 1), D(2020, 1, 6)]
        assert calendar.dates == (D(2020, 1, 1), D(2020, 1, 6))

    def test_gap_exactly_at_threshold_fills(self):
        series = [
            record(D(2020, 1, 1), {PM10: 100.0}),
            record(D(2020, 1, 5), {PM10: 180.0}),
        ]
        filled, _ = interpolate_gaps(series, max_gap_days=3)
        values = {r.date: r.samples[PM10].value for r in filled}
        assert values[D(2020, 1, 2)] == 120.0
        assert values[D(2020, 1, 3)] == 140.0
        assert values[D(2020, 1, 4)] == 160.0

    def test_leading_and_trailing_never_filled(self):
        series = [
            record(D(2020, 1, 3), {PM10: 100.0, PM25: 40.0}),
            record(D(2020, 1, 4), {PM10: 110.0, PM25: 42.0, NO2: 20.0}),
        ]
        filled, _ = interpolate_gaps(series)
        assert all(NO2 not in r.samples for r in filled if r.date != D(2020, 1, 4))

    def test_pollutants_fail_independently(self):
        series = [
            record(D(2020, 1, 1), {PM10: 100.0, PM25: 30.0}),
            record(D(2020, 1, 2), {PM10: 110.0}),
            record(D(2020, 1, 3), {PM10: 120.0, PM25: 36.0}),
        ]
        filled, _ = interpolate_gaps(series)
        jan2 = next(r for r in filled if r.date == D(2020, 1, 2))
        assert jan2.samples[PM10].provenance is Provenance.MEASURED
        assert jan2.samples[PM25] == Sample(33.0, Provenance.INTERPOLATED)

    def test_idempotent(self):
        series = [
            record(D(2020, 1, 1), {PM10: 100.0}),
            record(D(2020, 1, 4), {PM10: 130.0}),
        ]
        once, cal_once = interpolate_gaps(series)
        twice, cal_twice = interpolate_gaps(once)
        assert twice == once
        assert cal_twice == cal_once

    def test_unsorted_input(self):
        series = [
            record(D(2020, 1, 2), {PM10: 100.0}),
            record(D(2020, 1, 1), {PM10: 100.0}),
        ]
        with pytest.raises(UnsortedInput):
            interpolate_gaps(series)

    def test_calendar_requires_three_pollutants_with_pm(self):
        # Jan 2's NO2 hole is a 1-day gap, so it fills and the date counts;
        # Jan 3 has three pollutants but no PM, so it never counts.
        series = [
            record(D(2020, 1, 1), {PM10: 1.0, PM25: 1.0, NO2: 1.0}),
            record(D(2020, 1, 2), {PM10: 1.0, PM25: 1.0}),
            record(D(2020, 1, 3), {NO2: 1.0, Pollutant.SO2: 1.0, Pollutant.O3: 1.0}),
        ]
        _, calendar = interpolate_gaps(series)
        assert calendar.dates == (D(2020, 1, 1), D(2020, 1, 2))

    def test_calendar_skips_date_without_enough_pollutants(self):
        series = [
            record(D(2020, 1, 1), {PM10: 1.0, PM25: 1.0, NO2: 1.0}),
            record(D(2020, 1, 9), {PM10: 1.0, PM25: 1.0}),
        ]
        _, calendar = interpolate_gaps(series)
        assert calendar.dates == (D(2020, 1, 1),)

    def test_interpolated_values_inside_bracket(self):
        rng = np.random.default_rng(23)
        series = []
        for day in range(40):
            if rng.random() < 0.3 and 0 < day < 39:
                continue
            series.append(
                record(D(2020, 1, 1) + dt.timedelta(days=day), {PM10: float(rng.uniform(5, 400))})
            )
        filled, _ = interpolate_gaps(series)
        by_date = {r.date: r for r in filled}
        measured = sorted(
            (d, r.samples[PM10].value)
            for d, r in by_date.items()
            if r.samples[PM10].provenance is Provenance.MEASURED
        )
        for date, rec in by_date.items():
            sample = rec.samples[PM10]
            if sample.provenance is Provenance.MEASURED:
                continue
            before = max((d, v) for d, v in measured if d < date)
            after = min((d, v) for d, v in measured if d > date)
            assert min(before[1], after[1]) <= sample.value <= max(before[1], after[1])

    def test_punch_and_reconstruct_exactly(self):
        # integer-slope linear series: interpolation must restore it bit-for-bit
        rng = np.random.default_rng(29)
        start = D(2019, 6, 1)
        n_days = 120
        truth = {start + dt.timedelta(days=i): 40.0 + 3.0 * i for i in range(n_days)}
        punched = set()
        day = 5
        while day < n_days - 5:
            gap = int(rng.integers(1, 4))
            for g in range(gap):
                punched.add(start + dt.timedelta(days=day + g))
            day += gap + int(rng.integers(2, 6))
        series = [
            record(d, {PM25: v}) for d, v in sorted(truth.items()) if d not in punched
        ]
        filled, _ = interpolate_gaps(series, max_gap_days=3)
        by_date = {r.date: r for r in filled}
        assert set(by_date) == set(truth)
        for date in punched:
            sample = by_date[date].samples[PM25]
            assert sample.provenance is Provenance.INTERPOLATED
            assert sample.value == truth[date]

    def test_empty_series(self):
        filled, calendar = interpolate_gaps([])
        assert filled == []
        assert calendar == AvailabilityCalendar("", ())


def test_is_available_rule():
    assert is_available(record(D(2020, 1, 1), {PM10: 1.0, PM25: 1.0, NO2: 1.0}))
    assert not is_available(record(D(2020, 1, 1), {NO2: 1.0, Pollutant.SO2: 1.0, Pollutant.O3: 1.0}))
    assert not is_available(record(D(2020, 1, 1), {PM10: 1.0, PM25: 1.0}))
    # non-AQI pollutants don't count toward the three
    assert not is_available(
        record(D(2020, 1, 1), {PM10: 1.0, Pollutant.NO: 1.0, Pollutant.C6H6: 1.0})
    )
