"""
The crossing trend end to end
=============================

Sweep the model intensity and watch the annulus-crossing frequency climb:
at low intensity the adjacency graph is dust, beyond a threshold the
crossing becomes overwhelming. The sweep also fits the decay rate of the
failure probability in the inner radius.
"""

import os

from harddisks import run_sweep

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

result = run_sweep(
    lambdas=[1.0, 5.0, 20.0, 80.0],
    epsilon=0.5,
    l1s=[3.0, 5.0, 7.0],
    L2=15.0,
    L0=5.0,
    replicas=60,
    seed=2025,
    burn_sweeps=200,
    spacing_sweeps=4,
)

print("lambda   L1   freq    [95% interval]")
for row in result.rows:
    print(f"{row['lambda']:6.1f} {row['L1']:4.1f} {row['freq']:7.3f}"
          f"   [{row['lo95']:.3f}, {row['hi95']:.3f}]")

print("\nfitted decay of log(1 - freq) in L1 (empirical rate per lambda):")
for lam, fit in result.fits.items():
    print(f"   lambda {lam}: rate {fit['empirical_c']:+.3f} "
          f"over {fit['points']} points")

path = os.path.join(OUT, "sweep.csv")
with open(path, "w") as fh:
    fh.write(result.to_csv())
print(f"\nCSV written to {path}")
