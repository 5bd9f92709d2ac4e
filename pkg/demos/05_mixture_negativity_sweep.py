"""Negativity of ground-state mixtures versus anisotropy.

Two curves: the zero-temperature equilibrium mixture (equal weights on the
degenerate ground states) and the average over random mixtures (uniform
weight on the doublet, flat Dirichlet on the fourfold space at the critical
point).  The equilibrium curve peaks at exactly 1/3 at the isotropic point
Delta = 1; product-doublet mixtures below Delta = -1 are unentangled; and the
equal-weight fourfold mixture at Delta = -1 is separable (negativity zero)
even though generic weight choices there are not, which keeps the average
strictly positive.

Run with:  python demos/05_mixture_negativity_sweep.py
"""

import numpy as np

import spinpair as sp

SAMPLES = 50_000
SEED = 19

deltas = np.concatenate([[-2.0, -1.5], [-1.0], np.linspace(-0.95, 6.0, 18)])

print(f"{SAMPLES} mixtures per averaged point, seed {SEED}")
print(f"{'Delta':>8} {'N_equilibrium':>14} {'N_average':>10} {'stderr':>9}")
rows = []
for index, delta in enumerate(deltas):
    delta = float(delta)
    if delta < -1.0:
        eq = 0.0
    elif delta == -1.0:
        eq = sp.critical_mixture_negativity(0.25, 0.25, 0.25, 0.25)
    else:
        eq = sp.mixture_negativity_closed(0.5, delta)
    est = sp.average_mixture_negativity(delta, SAMPLES, sp.RandomStream(SEED, index))
    rows.append((delta, eq, est.mean, est.stderr))
    print(f"{delta:8.3f} {eq:14.6f} {est.mean:10.6f} {est.stderr:9.6f}")

print("\nisotropic equilibrium value:", sp.mixture_negativity_closed(0.5, 1.0), "(= 1/3)")
print("large-anisotropy tail:      ", sp.mixture_negativity_closed(0.5, 1e6))

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    arr = np.array(rows)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(arr[:, 0], arr[:, 1], "o-", ms=3, color="crimson", label="equilibrium")
    ax.plot(arr[:, 0], arr[:, 2], "s-", ms=3, color="black", label="mixture average")
    ax.axvline(-1.0, color="gray", ls=":")
    ax.set_xlabel("Delta")
    ax.set_ylabel("negativity")
    ax.legend()
    fig.tight_layout()
    fig.savefig("demo05_mixture_negativity.png", dpi=120)
    print("wrote demo05_mixture_negativity.png")
except ImportError:
    print("(matplotlib not installed; skipping the plot)")
