"""Benchmark the JIT kernels against their pure-numpy fallbacks.

Run: python3 benchmarks/bench_kernels.py [--sizes 1000,100000,1000000]
"""

import argparse
import time

import numpy as np

from airviz.breakpoints import load_table
from airviz.kernels import (
    USING_NUMBA,
    haversine_batch,
    haversine_batch_np,
    subindex_batch,
    subindex_batch_np,
)
from airviz.pollutants import Pollutant

N_REPEAT = 20


def timeit(func, *args):
    func(*args)  # warmup (JIT compile on the numba path)
    times = []
    for _ in range(N_REPEAT):
        start = time.perf_counter()
        func(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="1000,100000,1000000",
                        help="comma-separated batch sizes")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if not USING_NUMBA:
        print("note: numba path disabled (AIRVIZ_NO_NUMBA set or numba missing); "
              "both columns will run the numpy implementation\n")

    table = load_table()
    cols = table.segment_arrays(Pollutant.PM25)
    rng = np.random.default_rng(0)

    print(f"{'kernel':<22}{'n':>10}{'numpy':>12}{'jit':>12}{'speedup':>9}")
    for n in sizes:
        values = rng.uniform(0, 320, size=n)
        t_np = timeit(subindex_batch_np, values, *cols)
        t_jit = timeit(subindex_batch, values, *cols)
        check_np = subindex_batch_np(values, *cols)
        check_jit = subindex_batch(values, *cols)
        assert np.array_equal(check_np, check_jit), "paths disagree"
        print(f"{'subindex_batch':<22}{n:>10}{t_np * 1e3:>10.3f}ms{t_jit * 1e3:>10.3f}ms"
              f"{t_np / t_jit:>8.2f}x")

    for n in sizes:
        lats = rng.uniform(-90, 90, size=n)
        lons = rng.uniform(-180, 180, size=n)
        t_np = timeit(haversine_batch_np, 28.6, 77.2, lats, lons, 6371.0088)
        t_jit = timeit(haversine_batch, 28.6, 77.2, lats, lons, 6371.0088)
        d_np = haversine_batch_np(28.6, 77.2, lats, lons, 6371.0088)
        d_jit = haversine_batch(28.6, 77.2, lats, lons, 6371.0088)
        assert np.allclose(d_np, d_jit, atol=1e-9), "paths disagree"
        print(f"{'haversine_batch':<22}{n:>10}{t_np * 1e3:>10.3f}ms{t_jit * 1e3:>10.3f}ms"
              f"{t_np / t_jit:>8.2f}x")


if __name__ == "__main__":
    main()
