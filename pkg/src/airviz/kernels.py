"""Hot numeric kernels: piecewise-linear index evaluation and haversine batches.

Each kernel exists twice: a vectorized numpy implementation and a scalar-loop
twin compiled with numba. The JIT path is the default; set ``AIRVIZ_NO_NUMBA=1``
(or run without numba installed) to select the numpy path instead.
``benchmarks/bench_kernels.py`` compares the two.
"""

from __future__ import annotations

import math
import os

import numpy as np


def _numba_disabled() -> bool:
    return os.environ.get("AIRVIZ_NO_NUMBA", "").strip() not in ("", "0")


def subindex_batch_np(values, conc_lo, conc_hi, index_lo, index_hi):
    """Piecewise-linear sub-indices for a batch of concentrations.

    Values above the last segment clamp to 500. Rounding is half-up.
    """
    v = np.asarray(values, dtype=np.float64)
    seg = np.searchsorted(conc_hi, v, side="left")
    out = np.full(v.shape, 500, dtype=np.int64)
    inside = seg < conc_hi.shape[0]
    s = seg[inside]
    x = v[inside]
    raw = index_lo[s] + (index_hi[s] - index_lo[s]) / (conc_hi[s] - conc_lo[s]) * (x - conc_lo[s])
    out[inside] = np.floor(raw + 0.5).astype(np.int64)
    return out


def _subindex_batch_loop(values, conc_lo, conc_hi, index_lo, index_hi):
    n_seg = conc_hi.shape[0]
    out = np.empty(values.shape[0], dtype=np.int64)
    for i in range(values.shape[0]):
        v = values[i]
        res = 500
        for s in range(n_seg):
            if v <= conc_hi[s]:
                raw = index_lo[s] + (index_hi[s] - index_lo[s]) / (conc_hi[s] - conc_lo[s]) * (v - conc_lo[s])
                res = int(math.floor(raw + 0.5))
                break
        out[i] = res
    return out


def haversine_batch_np(lat, lon, lats, lons, radius_km):
    """Great-circle distances (km) from one point to many."""
    phi1 = math.radians(lat)
    lam1 = math.radians(lon)
    phi2 = np.radians(np.asarray(lats, dtype=np.float64))
    lam2 = np.radians(np.asarray(lons, dtype=np.float64))
    sp = np.sin((phi2 - phi1) * 0.5)
    sl = np.sin((lam2 - lam1) * 0.5)
    h = sp * sp + math.cos(phi1) * np.cos(phi2) * sl * sl
    # fp drift can push h a hair past 1 for antipodal points
    h = np.minimum(h, 1.0)
    return 2.0 * radius_km * np.arcsin(np.sqrt(h))


def _haversine_batch_loop(lat, lon, lats, lons, radius_km):
    phi1 = math.radians(lat)
    lam1 = math.radians(lon)
    out = np.empty(lats.shape[0], dtype=np.float64)
    for i in range(lats.shape[0]):
        phi2 = math.radians(lats[i])
        lam2 = math.radians(lons[i])
        sp = math.sin((phi2 - phi1) * 0.5)
        sl = math.sin((lam2 - lam1) * 0.5)
        h = sp * sp + math.cos(phi1) * math.cos(phi2) * sl * sl
        if h > 1.0:
            h = 1.0
        out[i] = 2.0 * radius_km * math.asin(math.sqrt(h))
    return out


USING_NUMBA = False

if not _numba_disabled():
    try:
        from numba import njit

        _subindex_batch_jit = njit(cache=True, nogil=True)(_subindex_batch_loop)
        _haversine_batch_jit = njit(cache=True, nogil=True)(_haversine_batch_loop)
        USING_NUMBA = True
    except ImportError:
        pass

if USING_NUMBA:

    def subindex_batch(values, conc_lo, conc_hi, index_lo, index_hi):
        v = np.ascontiguousarray(values, dtype=np.float64)
        return _subindex_batch_jit(v, conc_lo, conc_hi, index_lo, index_hi)

    def haversine_batch(lat, lon, lats, lons, radius_km):
        la = np.ascontiguousarray(lats, dtype=np.float64)
        lo = np.ascontiguousarray(lons, dtype=np.float64)
        return _haversine_batch_jit(float(lat), float(lon), la, lo, float(radius_km))

else:
    subindex_batch = subindex_batch_np
    haversine_batch = haversine_batch_np
