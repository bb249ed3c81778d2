"""
The discrete Peierls layer
==========================

Boxes that contain a large circuit of disks become occupied sites of an
integer lattice. Crossings of that site process from an inner ring to an
outer ring are blocked only by closed contours of vacant sites around the
origin, and contour counting turns vacancy probabilities into crossing
bounds.
"""

from harddisks import (RngStream, enumerate_contours, is_mn_crossing,
                       p_dense_check, peierls_bound)
from harddisks.discrete import SiteSet, extract_origin_contour

# --- contour census: sizes are even, the unit square is the smallest
counts = enumerate_contours(12)
print("origin-enclosing contours by size:", counts)
ratios = [counts[k + 2] / counts[k] for k in sorted(counts)[:-1]]
print("growth ratios:", [round(r, 2) for r in ratios],
      " (sub-exponential: bounded by a constant)")

# --- a blocking contour for a non-crossing vacancy pattern
ups = SiteSet.from_iterable([(3, 0), (2, 0), (2, 1)], 3)
contour = extract_origin_contour(ups, 1)
print(f"\nblocking contour around the origin: size {contour.size}, "
      f"closed: {contour.is_closed()}")

# --- Bernoulli site process: occupied with probability theta
theta, N, trials = 0.9, 10, 800
gen = RngStream(5).generator()
freqs = {M: 0 for M in (1, 2, 3, 4)}
for _ in range(trials):
    sites = SiteSet.from_iterable(
        [(a, b) for a in range(-N, N + 1) for b in range(-N, N + 1)
         if gen.random() < theta], N)
    for M in freqs:
        freqs[M] += is_mn_crossing(sites, M, N)[0]
print(f"\ncrossing frequencies to ring {N} (theta = {theta}):")
for M, h in freqs.items():
    print(f"   from ring {M}: {h / trials:.3f}")

# --- the p-density certificate feeding the contour bound
def sampler(g):
    return SiteSet.from_iterable(
        [(a, b) for a in range(-6, 7) for b in range(-6, 7)
         if g.random() < theta], 6)

rep = p_dense_check(sampler, 1 - theta, 6, trials=1500, rng=RngStream(6))
print(f"\np-density at p = {1 - theta}: holds = {rep.holds}")

# --- the bound itself, with illustrative constants
print("\ncrossing bound 1 - C1 (C2 p)^(c1 M) with C1 = C2 = c1 = 1:")
for M in (1, 2, 3, 4):
    print(f"   M = {M}: {peierls_bound(M, 1 - theta, 1.0, 1.0, 1.0).value:.4f}")
