"""Tour of the entanglement measures on hand-picked qubit-qutrit states.

Walks through the concurrence vector, its two scalar reductions, the Schmidt
decomposition, the entanglement entropy, and the negativity, checking the
identities that tie them together.

Run with:  python demos/01_measures_tour.py
"""

import numpy as np

import spinpair as sp


def describe(label, psi):
    c_vec = sp.concurrence_vector(psi)
    c = sp.concurrence_norm(psi)
    sd = sp.schmidt(psi)
    entropy = sp.von_neumann_entropy(psi)
    neg = sp.negativity(sp.density_of_pure(psi))
    print(f"\n{label}")
    print(f"  concurrence vector  : {np.round(c_vec, 6)}")
    print(f"  |C|                 : {c:.6f}")
    print(f"  Schmidt kappa       : {np.round(sd.kappa, 6)}  (2 k1 k2 = {2*sd.kappa[0]*sd.kappa[1]:.6f})")
    print(f"  entropy             : {entropy:.6f} bits")
    print(f"  negativity          : {neg:.6f}  (|C|/2 = {c/2:.6f})")


print("Basis tokens:", ", ".join(sp.BASIS_TOKENS))

describe("product state |uU>", sp.basis_state("uU"))

bell_like = (sp.basis_state("uU") + sp.basis_state("d0")) / np.sqrt(2)
describe("maximally entangled (|uU> + |d0>)/sqrt(2)", bell_like)

partial = np.sqrt(0.9) * sp.basis_state("dD") + np.sqrt(0.1) * sp.basis_state("uU")
describe("tilted corner superposition sqrt(0.9)|dD> + sqrt(0.1)|uU>", partial)

psi1, psi2 = sp.analytic_ground_pair(1.0)
describe("entangled ground state psi1 at Delta = 1", psi1)

# The entropy is a monotone function of |C|: sweep it.
print("\n|C| -> entropy (bits):")
for c in (0.0, 0.25, 0.5, 0.75, 0.9428, 1.0):
    h = sp.binary_entropy(0.5 * (1 - np.sqrt(max(0.0, 1 - c * c))))
    print(f"  {c:6.4f} -> {h:.6f}")

# Mixtures: product-state mixtures stay unentangled, entangled-state mixtures
# keep some negativity.
rho_corners = sp.density_of_mixture(
    [0.5, 0.5], [sp.basis_state("dD"), sp.basis_state("uU")])
rho_doublet = sp.density_of_mixture([0.5, 0.5], [psi1, psi2])
print("\nnegativity of the corner mixture   :", sp.negativity(rho_corners))
print("negativity of the doublet mixture  :", sp.negativity(rho_doublet), "(= 1/3)")
print("closed form for the same mixture   :", sp.mixture_negativity_closed(0.5, 1.0))
