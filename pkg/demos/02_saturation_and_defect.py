"""
Saturation and the packing defect
=================================

A configuration is saturated when no further disk fits. Saturating a
sample and measuring Voronoi cell areas against the optimal 2*sqrt(3)
yields the defect: zero for perfect triangular packing, large wherever
disks are missing or misplaced.
"""

import math

import numpy as np

from harddisks import (Box, HardDiskChain, Rect, RngStream, defect,
                       hexagon_proximity, saturate, triangular_packing,
                       voronoi_cells)

ROOT3 = math.sqrt(3.0)
rng = RngStream(7)

# --- saturate a moderate-intensity sample
chain = HardDiskChain(Box(10), lam=30.0, rng=rng.substream(0).generator())
chain.run_sweeps(150)
sample = chain.snapshot()
sat = saturate(sample, Box(10), rho=3.0)
print(f"sample: {sample.n_free} disks; saturated: {sat.n_free} disks")

# --- every bounded cell of a hard-core configuration has area >= 2 sqrt 3
cells = voronoi_cells(sat, Box(10).rect)
areas = np.array([c.area for c in cells if c.bounded])
print(f"cells: {len(areas)}, min area {areas.min():.4f} "
      f"(optimal bound {2 * ROOT3:.4f})")

# --- the defect of the sample against its saturated extension
report = defect(sample, sat, Rect(-7, 7, -7, 7), rho=3.0)
missing = sum(1 for _, (_, member, _) in report.contributions.items() if not member)
print(f"defect over the inner 14x14 window: {report.total:.3f} "
      f"({missing} inserted sites, each worth its full cell)")

# --- near-critical triangular packing has essentially zero defect
tp = triangular_packing(14, 2 + 1e-9)
perfect = defect(tp, tp, Rect(-7, 7, -7, 7), rho=3.0)
print(f"same window on a near-critical packing: defect {perfect.total:.2e}")

# --- low-defect cells are nearly regular hexagons
inner = [c for c in voronoi_cells(tp, Box(3).rect) if c.bounded][0]
print(f"hexagon proximity of a packing cell: {hexagon_proximity(inner):.2e}")
rough = sorted((c for c in cells if c.bounded), key=lambda c: -c.area)[0]
print(f"hexagon proximity of the worst sampled cell "
      f"(area {rough.area:.3f}): {hexagon_proximity(rough):.3f}")
