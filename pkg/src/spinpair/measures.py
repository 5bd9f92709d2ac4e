"""Entanglement quantifiers for qubit-qutrit states.

For a pure state with coefficient matrix a[mu, j], the concurrence vector has
the three complex components

    C_1 = 2 (a*_00 a*_11 - a*_01 a*_10)
    C_2 = 2 (a*_01 a*_12 - a*_02 a*_11)
    C_3 = 2 (a*_00 a*_12 - a*_02 a*_10)

i.e. twice the 2x2 minors of the conjugated coefficient matrix, one per pair
of qutrit levels.  Two scalars are derived from it:

* concurrence_norm: sqrt(|C_1|^2 + |C_2|^2 + |C_3|^2).  This is the
  entanglement measure: it equals 2 kappa_1 kappa_2 in the Schmidt
  decomposition and sqrt(2 (1 - tr rho_A^2)), and it is invariant under local
  unitaries.
* concurrence_bilinear: sqrt(|C_1^2 + C_2^2 + C_3^2|), the square-sum taken
  without conjugation, so relative phases between the components interfere.
  It coincides with concurrence_norm on states whose amplitudes can all be
  made real, and never exceeds it.  This is the scalar that the subspace
  averaging in ``spinpair.haar`` integrates.
"""

from __future__ import annotations

import numpy as np

from . import linalg, states

CLAMP_ATOL = 1e-12
PSD_FLOOR = -1e-10


def concurrence_vector(psi) -> np.ndarray:
    """The three complex concurrence components of a normalized pure state."""
    psi = states.require_normalized(psi)
    if psi.ndim != 1:
        raise ValueError("concurrence_vector takes a single state")
    return _components(psi)


def _components(psi: np.ndarray) -> np.ndarray:
    a = states.coefficient_matrix(psi).conj()
    m12 = a[..., 0, 0] * a[..., 1, 1] - a[..., 0, 1] * a[..., 1, 0]
    m23 = a[..., 0, 1] * a[..., 1, 2] - a[..., 0, 2] * a[..., 1, 1]
    m13 = a[..., 0, 0] * a[..., 1, 2] - a[..., 0, 2] * a[..., 1, 0]
    return 2.0 * np.stack([m12, m23, m13], axis=-1)


def concurrence_norm(psi):
    """sqrt(sum |C_k|^2) in [0, 1]; accepts a single state or a stack."""
    psi = states.require_normalized(psi)
    c = _components(psi)
    out = np.sqrt((np.abs(c) ** 2).sum(axis=-1))
    return float(out) if out.ndim == 0 else out


def concurrence_bilinear(psi):
    """sqrt(|sum C_k^2|); phase-sensitive companion of concurrence_norm."""
    psi = states.require_normalized(psi)
    c = _components(psi)
    out = np.sqrt(np.abs((c * c).sum(axis=-1)))
    return float(out) if out.ndim == 0 else out


def binary_entropy(x: float) -> float:
    """h(x) = -x log2 x - (1-x) log2 (1-x) in bits, with h(0) = h(1) = 0."""
    x = float(x)
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary_entropy needs x in [0, 1], got {x}")
    out = 0.0
    if x > 0.0:
        out -= x * np.log2(x)
    if x < 1.0:
        out -= (1.0 - x) * np.log2(1.0 - x)
    return float(out)


def _clamped(value: float, lo: float, hi: float, what: str) -> float:
    """Snap rounding noise within CLAMP_ATOL of [lo, hi] back in; error beyond."""
    if lo - CLAMP_ATOL <= value < lo:
        return lo
    if hi < value <= hi + CLAMP_ATOL:
        return hi
    if lo <= value <= hi:
        return value
    raise ValueError(f"{what} = {value} lies outside [{lo}, {hi}] beyond tolerance")


def von_neumann_entropy(psi) -> float:
    """Entanglement entropy of a pure state, in bits.

    Computed from the concurrence norm as h((1 - sqrt(1 - |C|^2)) / 2); this
    equals the eigenvalue form -sum lambda log2 lambda of either reduced
    density matrix.
    """
    c = concurrence_norm(psi)
    if np.ndim(c) != 0:
        raise ValueError("von_neumann_entropy takes a single state")
    radicand = _clamped(1.0 - c * c, 0.0, 1.0, "1 - |C|^2")
    return binary_entropy(0.5 * (1.0 - np.sqrt(radicand)))


def require_density(rho) -> np.ndarray:
    """Validate a 6x6 density matrix: Hermitian, unit trace, PSD up to rounding."""
    rho = linalg.require_pair_density(rho)
    if rho.ndim != 2:
        raise ValueError("expected a single density matrix")
    linalg.require_hermitian(rho)
    floor = linalg.eigvals_hermitian(rho)[0]
    if floor < PSD_FLOOR:
        raise ValueError(f"density matrix has eigenvalue {floor} below {PSD_FLOOR}")
    return rho


def negativity(rho) -> float:
    """(||rho^{T_A}||_1 - 1) / 2 for a 6x6 density matrix; zero iff PPT.

    T_A transposes the qubit; the result is clamped at 0 when rounding drags
    it within 1e-12 below.
    """
    rho = require_density(rho)
    value = 0.5 * (linalg.trace_norm(linalg.partial_transpose_qubit(rho)) - 1.0)
    return _clamped(value, 0.0, np.inf, "negativity")


def negativity_of_stack(rhos) -> np.ndarray:
    """Negativity of a stack of density matrices, without per-matrix validation.

    The caller guarantees valid densities (used on mixtures built by
    construction in the Monte Carlo estimators).
    """
    vals = linalg.eigvals_hermitian(linalg.partial_transpose_qubit(rhos))
    neg = 0.5 * (np.abs(vals).sum(axis=-1) - 1.0)
    if neg.min() < -CLAMP_ATOL:
        raise ValueError(f"negativity {neg.min()} below 0 beyond tolerance")
    return np.maximum(neg, 0.0)
