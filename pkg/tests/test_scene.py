import datetime as dt
import json
import math

import numpy as np
import pytest

from airviz.errors import MismatchedInputs, OutOfRange
from airviz.info import load_registry, pollutant_info
from airviz.ingest import DailyRecord, Sample
from airviz.pollutants import Pollutant
from airviz.scene import (
    Airspace,
    SceneConfig,
    default_seed,
    generate_scene,
    particle_count,
    relative_level,
    scene_to_dict,
)
from airviz.trend import report_for_record

from synth import inverse_subindex

D = dt.date


def make_record(values, date=D(2020, 3, 1), station="S1"):
    return DailyRecord(station, date, {p: Sample(v) for p, v in values.items()})


def record_and_report(table, values, **kw):
    record = make_record(values, **kw)
    return record, report_for_record(record, table)


class TestAirspace:
    def test_default_volume_is_500м3(self):
        assert Airspace().volume == 500.0

    def test_default_render_range(self):
        assert Airspace().render_range == 3.0


class TestParticleCount:
    def test_zero_level(self):
        assert particle_count(0, 100) == 0

    def test_full_scale_caps_at_max(self):
        assert particle_count(500, 120) == 120

    def test_linear_midpoint(self):
        assert particle_count(250, 100) == 50

    def test_rounding_half_up(self):
        # 250 * 125/500 = 62.5
        assert particle_count(125, 250) == 63

    @pytest.mark.parametrize("level", [-1, 501])
    def test_level_out_of_range(self, level):
        with pytest.raises(OutOfRange):
            particle_count(level, 100)

    def test_max_count_must_be_positive(self):
        with pytest.raises(OutOfRange):
            particle_count(10, 0)

    def test_monotone_in_level(self):
        counts = [particle_count(level, 100) for level in range(0, 501, 7)]
        assert counts == sorted(counts)


class TestRelativeLevel:
    def test_full_scale(self):
        config = SceneConfig()
        assert relative_level(Pollutant.NO, 400.0, config) == 500

    def test_midpoint(self):
        assert relative_level(Pollutant.NO, 200.0, SceneConfig()) == 250

    def test_clamps_above_reference(self):
        assert relative_level(Pollutant.C6H6, 999.0, SceneConfig()) == 500

    def test_zero(self):
        assert relative_level(Pollutant.NOX, 0.0, SceneConfig()) == 0


class TestGenerateScene:
    def test_all_zero_concentrations_give_empty_scene(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 0.0, Pollutant.PM10: 0.0, Pollutant.NO2: 0.0}
        )
        spec = generate_scene(record, report, seed=1)
        assert spec.spawns == ()

    def test_same_seed_same_scene(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 120.0, Pollutant.PM10: 90.0, Pollutant.NO2: 40.0,
                    Pollutant.C6H6: 5.0}
        )
        assert generate_scene(record, report, seed=99) == generate_scene(record, report, seed=99)

    def test_different_seed_different_scene(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 120.0, Pollutant.PM10: 90.0, Pollutant.NO2: 40.0}
        )
        assert generate_scene(record, report, seed=1) != generate_scene(record, report, seed=2)

    def test_default_seed_is_stable_per_station_date(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 60.0, Pollutant.PM10: 60.0, Pollutant.NO2: 30.0}
        )
        spec = generate_scene(record, report)
        assert spec.seed == default_seed("S1", record.date)
        assert spec == generate_scene(record, report, seed=spec.seed)
        assert default_seed("S2", record.date) != spec.seed

    def test_pm25_count_from_subindex_300(self, table):
        conc = inverse_subindex(Pollutant.PM25, 300, table)
        record, report = record_and_report(
            table, {Pollutant.PM25: conc, Pollutant.PM10: 0.0, Pollutant.NO2: 0.0}
        )
        spec = generate_scene(record, report, seed=5)
        pm25 = [s for s in spec.spawns if s.pollutant is Pollutant.PM25]
        assert len(pm25) == 60  # round(100 * 300/500)
        assert len(spec.spawns) == 60
        hx, hy, hz = spec.airspace.half_extents
        for s in pm25:
            assert abs(s.position[0]) <= hx
            assert abs(s.position[1]) <= hy
            assert abs(s.position[2]) <= hz

    def test_count_monotone_in_subindex(self, table):
        counts = []
        for target in (0, 100, 200, 300, 400, 500):
            conc = inverse_subindex(Pollutant.PM25, target, table) if target else 0.0
            record, report = record_and_report(
                table, {Pollutant.PM25: conc, Pollutant.PM10: 0.0, Pollutant.NO2: 0.0}
            )
            counts.append(len(generate_scene(record, report, seed=3).spawns))
        assert counts == sorted(counts)

    def test_spawn_invariants_over_random_seeds(self, table):
        config = SceneConfig()
        record, report = record_and_report(
            table,
            {
                Pollutant.PM25: 185.0,
                Pollutant.PM10: 80.0,
                Pollutant.NO2: 40.0,
                Pollutant.NO: 120.0,
                Pollutant.C7H8: 50.0,
            },
        )
        hx, hy, hz = config.airspace.half_extents
        vmin, vmax = config.speed_range
        rmin, rmax = config.spin_range
        rng = np.random.default_rng(31)
        total_cap = sum(config.max_counts.values())
        for seed in rng.integers(0, 2**48, size=25):
            spec = generate_scene(record, report, seed=int(seed), config=config)
            assert len(spec.spawns) <= total_cap
            for s in spec.spawns:
                assert abs(s.position[0]) <= hx
                assert abs(s.position[1]) <= hy
                assert abs(s.position[2]) <= hz
                speed = math.sqrt(sum(v * v for v in s.velocity))
                assert vmin - 1e-9 <= speed <= vmax + 1e-9
                axis_norm = math.sqrt(sum(a * a for a in s.rotation_axis))
                assert abs(axis_norm - 1.0) < 1e-9
                assert rmin <= s.angular_speed <= rmax
                lo, hi = config.scale_ranges[s.pollutant]
                assert lo <= s.scale <= hi

    def test_pm_scales_vary_others_fixed(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 185.0, Pollutant.PM10: 300.0, Pollutant.NO2: 300.0}
        )
        spec = generate_scene(record, report, seed=8)
        pm25_scales = {s.scale for s in spec.spawns if s.pollutant is Pollutant.PM25}
        no2_scales = {s.scale for s in spec.spawns if s.pollutant is Pollutant.NO2}
        assert len(pm25_scales) > 1
        assert no2_scales == {1.0}

    def test_mismatched_report_rejected(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 60.0, Pollutant.PM10: 60.0, Pollutant.NO2: 30.0}
        )
        other = make_record({Pollutant.PM25: 60.0, Pollutant.SO2: 10.0})
        with pytest.raises(MismatchedInputs):
            generate_scene(other, report, seed=1)

    def test_scene_dict_is_json_stable(self, table):
        record, report = record_and_report(
            table, {Pollutant.PM25: 120.0, Pollutant.PM10: 90.0, Pollutant.NO2: 40.0}
        )
        spec = generate_scene(record, report, seed=123)
        doc = scene_to_dict(spec)
        once = json.dumps(doc, sort_keys=True)
        again = json.dumps(scene_to_dict(generate_scene(record, report, seed=123)), sort_keys=True)
        assert once == again
        assert doc["stationId"] == "S1"
        assert doc["seed"] == 123
        assert doc["airspace"]["halfExtents"] == [5.0, 2.5, 5.0]
        assert len(doc["spawns"]) == len(spec.spawns)


class TestPollutantInfo:
    def test_all_twelve_present_and_distinct(self):
        registry = load_registry()
        assert len(registry) == 12
        assert {e.display_name for e in registry.values()} == {
            e.display_name for e in registry.values()
        }
        colors = [e.color for e in registry.values()]
        assert len(set(colors)) == 12

    def test_every_entry_has_substance(self):
        for pollutant in Pollutant:
            entry = pollutant_info(pollutant)
            assert entry.pollutant is pollutant
            assert entry.health_effects
            assert entry.controllable_sources
            assert entry.description
            assert entry.molecular_structure
            assert entry.color.startswith("#")

    def test_pm25_entry(self):
        entry = pollutant_info(Pollutant.PM25)
        assert entry.health_effects and entry.controllable_sources
