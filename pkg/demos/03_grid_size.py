"""
How large is the grid?
======================

The drawing grid is as wide as the augmented graph has vertices. This sweep
measures that size against the input size on random Delaunay instances.
"""
import time

import numpy as np

from windrose.draw import windrose_pipeline
from windrose.generators import delaunay

sizes = [10, 25, 50, 100, 200, 400]
rows = []
for n in sizes:
    ratios, seconds, extent = [], [], []
    for seed in range(5):
        inst = delaunay(n, seed)
        start = time.perf_counter()
        res = windrose_pipeline(inst.graph, inst.constraints)
        seconds.append(time.perf_counter() - start)
        ratios.append(res.augmented_size / n)
        extent.append(res.drawing.max_coordinate() + 1)
    rows.append((n, np.mean(ratios), np.max(ratios), np.mean(extent), np.mean(seconds)))

# %%
print(f"{'n':>5} {'mean n*/n':>10} {'max n*/n':>9} {'grid side':>10} {'seconds':>8}")
for n, mean, top, side, sec in rows:
    print(f"{n:>5} {mean:>10.2f} {top:>9.2f} {side:>10.1f} {sec:>8.3f}")

# %%
# A least-squares fit of grid side against n shows the growth is linear.
ns = np.array([r[0] for r in rows], dtype=float)
side = np.array([r[3] for r in rows])
slope, intercept = np.polyfit(ns, side, 1)
print(f"grid side ~ {slope:.2f} n + {intercept:.1f}")
