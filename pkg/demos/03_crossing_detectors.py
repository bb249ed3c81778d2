"""
Connectivity and crossing events
================================

Disks within distance eps of each other (centers within 2 + eps) form the
adjacency graph. At low intensity the graph shatters; at high intensity a
single component crosses the annulus between the inner and outer squares.
The empty-space detector finds room for one more disk with slack.
"""

import os

from harddisks import (Box, HardDiskChain, RngStream, admits_empty_space,
                       annulus_crossing, build_graph, render_svg, saturate)
from harddisks.geometry import Configuration

EPS = 0.5
L1, L2 = 5.0, 15.0
OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

rng = RngStream(31)
for lam in (2.0, 60.0):
    chain = HardDiskChain(Box(L2 + 5), lam=lam, rng=rng.substream(int(lam)).generator())
    chain.run_sweeps(250)
    cfg = chain.snapshot()
    g = build_graph(cfg, EPS)
    w = annulus_crossing(cfg, EPS, L1, L2, graph=g)
    print(f"intensity {lam:5.1f}: {cfg.n_free:4d} disks, "
          f"{g.n_components:4d} components, crossing: {bool(w)}")
    if w:
        print(f"   witness: inner {tuple(round(v, 2) for v in w.inner)} "
              f"outer {tuple(round(v, 2) for v in w.outer)}")
    path = os.path.join(OUT, f"crossing_lam{int(lam)}.svg")
    render_svg(cfg, graph=g, rects=[Box(L1).rect, Box(L2).rect], path=path)
    print(f"   picture: {path}")

# --- empty space: a sparse box has room for one more disk with slack
sparse = Configuration([(0.0, 0.0), (6.0, 1.0)], domain=Box(8))
wit = admits_empty_space(sparse, EPS, Box(8))
print(f"\nsparse box admits an empty {EPS}-space at "
      f"{tuple(round(v, 2) for v in wit)}")

# --- a saturated box does not: nothing fits anywhere
sat = saturate(sparse, Box(8), rho=3.0)
print(f"after saturation ({sat.n_free} disks): "
      f"empty space = {admits_empty_space(sat, EPS, Box(8))}")
