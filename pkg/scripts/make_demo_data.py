"""Generate a deterministic demo dataset: stations.csv + data.csv.

Sixteen months of synthetic daily data for a dozen Indian stations, with a
winter-peaking seasonal cycle, city-specific baselines, short random gaps
(so interpolation has work to do), a few long outages, and a pollution dip
after 2020-03-25 with a slow creep back.

Usage: python3 scripts/make_demo_data.py [outdir]
"""

import csv
import datetime as dt
import math
import sys
from pathlib import Path

import numpy as np

START = dt.date(2019, 1, 1)
END = dt.date(2020, 5, 1)
LOCKDOWN = dt.date(2020, 3, 25)

# id, name, city, state, lat, lon, baseline multiplier
STATIONS = [
    ("DL001", "Anand Vihar", "Delhi", "Delhi", 28.6468, 77.3152, 2.2),
    ("DL002", "Lodhi Road", "Delhi", "Delhi", 28.5918, 77.2273, 1.7),
    ("GZ001", "Vasundhara", "Ghaziabad", "Uttar Pradesh", 28.6603, 77.3572, 2.3),
    ("PT001", "Collectorate", "Patna", "Bihar", 25.6093, 85.1235, 2.0),
    ("LK001", "Lalbagh", "Lucknow", "Uttar Pradesh", 26.8467, 80.9462, 1.8),
    ("JP001", "Shastri Nagar", "Jaipur", "Rajasthan", 26.9501, 75.7662, 1.4),
    ("KL001", "Ballygunge", "Kolkata", "West Bengal", 22.5278, 88.3639, 1.5),
    ("MB001", "Bandra Kurla", "Mumbai", "Maharashtra", 19.0653, 72.8691, 1.2),
    ("HY001", "Sanathnagar", "Hyderabad", "Telangana", 17.4559, 78.4332, 1.1),
    ("BN001", "Silk Board", "Bengaluru", "Karnataka", 12.9172, 77.6228, 0.9),
    ("CH001", "Alandur", "Chennai", "Tamil Nadu", 13.0067, 80.1009, 0.8),
    ("TP001", "Tiruchanoor", "Tirupati", "Andhra Pradesh", 13.6288, 79.4192, 0.6),
]

# pollutant: (typical clean-day level in canonical units, seasonal swing)
LEVELS = {
    "PM2.5": (38.0, 30.0),
    "PM10": (80.0, 55.0),
    "NO2": (28.0, 14.0),
    "SO2": (12.0, 4.0),
    "CO": (0.7, 0.5),
    "O3": (35.0, 12.0),
    "NH3": (22.0, 6.0),
    "NO": (18.0, 8.0),
    "NOx": (40.0, 18.0),
    "C6H6": (2.2, 1.2),
}


def main() -> None:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("demo")
    outdir.mkdir(parents=True, exist_ok=True)
    rng = np.random.default_rng(20190101)

    with open(outdir / "stations.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "name", "city", "state", "lat", "lon", "live"])
        for sid, name, city, state, lat, lon, _mult in STATIONS:
            writer.writerow([sid, name, city, state, lat, lon, "true"])

    n_days = (END - START).days + 1
    rows = 0
    with open(outdir / "data.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["station_id", "date", "pollutant", "value", "unit"])
        for sid, _name, _city, _state, lat, _lon, mult in STATIONS:
            # each station misses a few random short stretches plus one long outage
            missing = set()
            for _ in range(14):
                day = int(rng.integers(2, n_days - 2))
                for g in range(int(rng.integers(1, 4))):
                    missing.add(day + g)
            outage = int(rng.integers(30, n_days - 40))
            missing.update(range(outage, outage + int(rng.integers(6, 12))))

            phase = rng.uniform(0, 0.2)
            for i in range(n_days):
                if i in missing:
                    continue
                date = START + dt.timedelta(days=i)
                # winter peak around early January
                season = 1.0 + 0.9 * math.cos(2 * math.pi * (i / 365.25 + phase))
                damp = 1.0
                if date >= LOCKDOWN:
                    since = (date - LOCKDOWN).days
                    damp = 0.35 + 0.004 * since  # dip, then slow creep back
                for code, (base, swing) in LEVELS.items():
                    level = (base + swing * season) * mult * damp
                    noise = float(rng.normal(1.0, 0.12))
                    value = max(0.0, level * noise)
                    unit = "mg/m3" if code == "CO" else "ug/m3"
                    writer.writerow([sid, date.isoformat(), code, f"{value:.2f}", unit])
                    rows += 1
                temp = 24 + 9 * math.sin(2 * math.pi * (i / 365.25 - 0.22)) - 0.15 * (lat - 20)
                writer.writerow(
                    [sid, date.isoformat(), "TEMP", f"{temp + float(rng.normal(0, 1.2)):.1f}", "C"]
                )
                rows += 1

    print(f"wrote {outdir}/stations.csv ({len(STATIONS)} stations)")
    print(f"wrote {outdir}/data.csv ({rows} rows, {START} .. {END})")
    print("next:")
    print(f"  airviz ingest --stations {outdir}/stations.csv --data {outdir}/data.csv "
          f"--store {outdir}/air.db")
    print(f"  airviz serve --store {outdir}/air.db --bind 127.0.0.1:8000")


if __name__ == "__main__":
    main()
