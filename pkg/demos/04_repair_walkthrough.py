"""
Repairing a thin box
====================

The repair pass works on a tall thin column of disks inside a wider frame.
Cells of the column are classified by defect; blocks of high-defect cells
get processed bottom to top, pulling stray disks down along circle chords
until they rejoin the cluster below. Either the column ends up crossed, or
the pass reports a genuine empty space.

Desk-scale geometry (K = 12) keeps the run watchable; production scale
would take K in the millions.
"""

import math
import os

import numpy as np

from harddisks import (ThinBoxSpec, admits_empty_space, box_cross,
                       classify_cubes, run_repair, voronoi_cells)
from harddisks.defect import _point_set, cell_arrays
from harddisks.geometry import Configuration
from harddisks.oracles import triangular_lattice_points
from harddisks.repair import RepairParams, write_trace_frames

K, N_CELLS, EPS, C, RHO = 12.0, 1, 0.5, 0.5, 2.5
OUT = os.path.join(os.path.dirname(__file__), "output", "repair_frames")

spec = ThinBoxSpec(K, N_CELLS, rho=RHO)
lattice = triangular_lattice_points(spec.R_prime.expand(6.5), 2 + 1e-9,
                                    offset=(0.3, 0.1))
in_column = spec.R.contains_many(lattice)
full = Configuration(lattice[in_column], lattice[~in_column], spec.R,
                     validate=False)
cells = voronoi_cells(full, spec.R_prime)

# evacuate a full-width gap from the middle of the column; narrower than
# the move reach, so the pass can bridge it by pulling disks down
free = full.free
keep = ~((free[:, 1] > 5.0) & (free[:, 1] < 12.5))
damaged = Configuration(free[keep], full.boundary, spec.R, validate=False)
print(f"column: {full.n_free} disks, {full.n_free - damaged.n_free} evacuated")

cls = classify_cubes(damaged, full, K, N_CELLS, c=C, rho=RHO, cells=cells,
                     verify=False)
print("cell types:", dict(sorted(cls.types.items())),
      "defects:", {i: round(d, 3) for i, d in sorted(cls.deltas.items())})

sites, areas, tuples = cell_arrays(cells)
members = _point_set(damaged.points)
mask = spec.R_prime.contains_many(sites)
member = np.fromiter((t in members for t in tuples), dtype=bool)
delta0 = float(areas[mask].sum() - 2 * math.sqrt(3) * member[mask].sum()) + 1e-6
print(f"defect over the enlarged box: {delta0:.3f}")

params = RepairParams(eps=EPS, c=C, rho=RHO, desk_mode=True,
                      verify_saturation=False)
trace = run_repair(damaged, K, N_CELLS, lambda _c: full, delta0, params,
                   cells=cells)
print(f"repair: {trace.termination}, {len(trace.moves)} moves "
      f"(length bound {trace.k0:.0f})")
for mv in trace.moves:
    print(f"   moved {tuple(round(v, 2) for v in mv.point)} -> "
          f"{tuple(round(v, 2) for v in mv.result)} "
          f"(magnitude {mv.magnitude}, displacement {mv.displacement:.2f})")

nu = 6 * delta0 / C
crossed = box_cross(trace.states[-1], spec, EPS, nu)
empty = admits_empty_space(trace.states[-1], EPS, spec.R)
print(f"after repair: crossed at allowance {nu:.0f}: {bool(crossed)}; "
      f"empty space: {empty}")

frames = write_trace_frames(trace, OUT, EPS)
print(f"{len(frames)} SVG frames in {OUT}")
