"""airviz: station-level air quality service.

Indian NAQI sub-index and AQI computation, nearest-station lookup,
daily-export ingestion with gap interpolation, an embedded store, a
REST/JSON API, and deterministic 3D pollutant-cloud scene generation.
"""

__version__ = "0.1.0"

from .aqi import AqiReport, SubIndex, categorize, overall_aqi, sub_index
from .breakpoints import BreakpointTable, load_table
from .geo import GeoPoint, StationMeta, haversine_km, nearest_station
from .pollutants import AQI_POLLUTANTS, Concentration, Pollutant, Unit

__all__ = [
    "AqiReport",
    "SubIndex",
    "categorize",
    "overall_aqi",
    "sub_index",
    "BreakpointTable",
    "load_table",
    "GeoPoint",
    "StationMeta",
    "haversine_km",
    "nearest_station",
    "AQI_POLLUTANTS",
    "Concentration",
    "Pollutant",
    "Unit",
    "__version__",
]
