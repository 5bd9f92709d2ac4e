"""Exact spectrum of the anisotropic pair and its level crossings.

At zero field every level is doubly degenerate and the ground branch switches
at Delta = -1 between the product doublet and the entangled doublet.  A
longitudinal field splits the levels and drags the ground energy through
slope kinks at the critical fields.

Run with:  python demos/02_spectrum_and_critical_fields.py
"""

import numpy as np

import spinpair as sp

print("zero-field spectrum (each level twice):")
print(f"{'Delta':>7} | {'levels':^42} | degeneracy of the ground level")
for delta in (-3.0, -1.5, -1.0, -0.5, 0.0, 1.0, 5.0):
    vals = sp.spectrum(sp.ModelParams(delta=delta)).values
    gs = sp.ground_subspace(sp.ModelParams(delta=delta))
    levels = " ".join(f"{v:6.3f}" for v in vals)
    print(f"{delta:7.2f} | {levels} | {gs.degeneracy}")

print("\ncritical fields (ground-level crossings):")
for delta in (-2.0, -0.99, 0.0, 1.0, 3.0):
    fields = ", ".join(f"{b:+.4f}" for b in sp.critical_fields(delta))
    print(f"  Delta = {delta:5.2f}: {fields}")

# The ground energy is piecewise linear in B; kinks mark the crossings.
delta = 1.0
grid = np.linspace(-3.0, 3.0, 241)
e0 = np.array([sp.spectrum(sp.ModelParams(delta=delta, b=b)).values[0] for b in grid])
d2 = np.abs(e0[:-2] - 2 * e0[1:-1] + e0[2:])
kinks = grid[1:-1][d2 > 10 * np.median(d2) + 1e-9]
print(f"\nslope kinks of the ground energy at Delta = {delta}: {np.round(kinks, 3)}")
print(f"predicted critical fields:                        {sp.critical_fields(delta)}")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    all_levels = np.array(
        [sp.spectrum(sp.ModelParams(delta=delta, b=b)).values for b in grid])
    fig, ax = plt.subplots(figsize=(6, 4))
    for k in range(6):
        ax.plot(grid, all_levels[:, k], lw=1)
    ax.plot(grid, e0, "k", lw=2, label="ground energy")
    for b in sp.critical_fields(delta):
        ax.axvline(b, color="gray", ls=":")
    ax.set_xlabel("B")
    ax.set_ylabel("energy")
    ax.set_title(f"levels vs field at Delta = {delta}")
    ax.legend()
    fig.tight_layout()
    fig.savefig("demo02_levels_vs_field.png", dpi=120)
    print("\nwrote demo02_levels_vs_field.png")
except ImportError:
    print("\n(matplotlib not installed; skipping the plot)")
