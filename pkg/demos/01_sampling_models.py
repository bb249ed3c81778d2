"""
Sampling the hard-disk model
============================

Three ways to draw configurations of non-overlapping unit disks, and the
mixture identity tying them together: the intensity-driven model is a
weighted mixture of fixed-count models, with weights built from acceptance
integrals.
"""

import numpy as np

from harddisks import (Box, HardDiskChain, McmcParams, PoissonModelSpec,
                       RngStream, UniformModelSpec, mixture_weight,
                       sample_hard_disk_mcmc, sample_ppp,
                       sample_poisson_hard_disk_rejection,
                       sample_uniform_hard_disk_rejection)

rng = RngStream(master_seed=2024)

# --- a raw Poisson point process has no exclusion: points may collide
pts = sample_ppp(Box(5), lam=0.3, rng=rng.substream(0))
print(f"PPP on Q_5 at intensity 0.3: {len(pts)} points (mean 30)")

# --- exact rejection sampling of the conditioned models
spec = PoissonModelSpec(Box(5), intensity=0.1)
cfg = sample_poisson_hard_disk_rejection(spec, rng.substream(1))
print(f"Poisson hard-disk sample: {cfg.n_free} disks, "
      f"min gap > 2 guaranteed")

ucfg = sample_uniform_hard_disk_rejection(UniformModelSpec(Box(5), 8),
                                          rng.substream(2))
print(f"uniform hard-disk sample: exactly {ucfg.n_free} disks")

# --- the Metropolis chain reaches intensities rejection cannot touch
chain = HardDiskChain(Box(10), lam=40.0, rng=rng.substream(3).generator())
chain.run_sweeps(300)
dense = chain.snapshot()
area_fraction = dense.n_free * np.pi / Box(10).rect.area
print(f"chain at intensity 40 on Q_10: {dense.n_free} disks, "
      f"area fraction {area_fraction:.2f}")

# --- mixture weights: on a box too small for two disks the occupation
# probability is exactly lam / (1 + lam)
for lam in (1.0, 3.0, 9.0):
    mw = mixture_weight(Box(0.5), lam, None, 1, rng.substream(4))
    print(f"Q_0.5, intensity {lam:4.1f}: Pr(one disk) = {mw.probability:.4f} "
          f"(exact {lam / (1 + lam):.4f})")

# --- mixture weights against an empirical histogram on Q_1
n = 20_000
gen = rng.substream(5).generator()
counts = np.zeros(6)
for _ in range(n):
    s = sample_poisson_hard_disk_rejection(PoissonModelSpec(Box(1), 1.0), gen).n_free
    counts[min(s, 5)] += 1
print("\nQ_1 at intensity 1: occupation law, empirical vs mixture weights")
for k in range(4):
    mw = mixture_weight(Box(1), 1.0, None, k, rng.substream(6 + k))
    print(f"  s={k}: empirical {counts[k] / n:.4f}   "
          f"mixture {mw.probability:.4f} +- {mw.stderr:.4f}")
