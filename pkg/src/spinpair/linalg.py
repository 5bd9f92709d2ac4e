"""Dense Hermitian linear algebra for the qubit-qutrit (2x3) Hilbert space.

Everything in this module is sized for matrices no larger than 8x8.  The
eigensolver is a cyclic Jacobi sweep over complex plane rotations: at this
scale it is deterministic, accurate to near machine precision, and it
vectorizes over a leading batch axis, which is what the Monte Carlo
estimators lean on when they diagonalize many 6x6 matrices at once.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

QUBIT_DIM = 2
QUTRIT_DIM = 3
PAIR_DIM = QUBIT_DIM * QUTRIT_DIM

HERMITICITY_ATOL = 1e-12
DENSITY_TRACE_ATOL = 1e-12

_MAX_DIM = 8
_OFFDIAG_TOL = 1e-14  # relative to max(1, Frobenius norm of the input)
_MAX_SWEEPS = 100


class JacobiError(RuntimeError):
    """Cyclic Jacobi failed to reduce the off-diagonal mass within the sweep cap."""


class HermEig(NamedTuple):
    """Eigendecomposition of a Hermitian matrix.

    values: real eigenvalues, ascending.
    vectors: unit-norm eigenvectors in the matching columns; the phase is
        fixed so that each vector's first largest-modulus component is real
        and nonnegative.  Within a degenerate eigenvalue cluster the basis is
        an arbitrary orthonormal one: compare subspaces by projector.
    """

    values: np.ndarray
    vectors: np.ndarray


def _as_square(m, max_dim: int = _MAX_DIM) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[-1] > max_dim:
        raise ValueError(f"matrix dimension {m.shape[-1]} exceeds the supported {max_dim}")
    return m


def require_hermitian(m, atol: float = HERMITICITY_ATOL) -> np.ndarray:
    """Validate M = M^dagger within ``atol`` elementwise; returns the array."""
    m = _as_square(m)
    dev = np.abs(m - np.conj(np.swapaxes(m, -1, -2))).max()
    if not dev <= atol:  # NaN-safe: NaN must fail, not pass
        raise ValueError(f"matrix is not Hermitian within {atol} (deviation {dev})")
    return m


def _jacobi(a: np.ndarray, want_vectors: bool):
    """Cyclic Jacobi on a stack of Hermitian matrices, shape (b, n, n).

    Returns (values (b, n) unsorted real, vectors (b, n, n) or None).
    """
    b, n = a.shape[0], a.shape[-1]
    a = a.copy()
    # exact-Hermitian symmetrization kills rounding asymmetry in the input
    a = 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))
    v = np.broadcast_to(np.eye(n, dtype=complex), (b, n, n)).copy() if want_vectors else None

    fro = np.linalg.norm(a, axis=(-1, -2))
    tol2 = (_OFFDIAG_TOL * np.maximum(1.0, fro)) ** 2

    eye = np.eye(n, dtype=bool)

    def off2(x):
        return (np.abs(x) ** 2 * ~eye).sum(axis=(-1, -2))

    for _ in range(_MAX_SWEEPS):
        if np.all(off2(a) <= tol2):
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[:, p, q]
                absa = np.abs(apq)
                if not absa.any():
                    continue
                phase = np.where(absa > 0.0, apq / np.where(absa > 0.0, absa, 1.0), 1.0)
                theta = 0.5 * np.arctan2(2.0 * absa, a[:, q, q].real - a[:, p, p].real)
                c = np.cos(theta)
                s = np.sin(theta)
                up = c * phase  # plane unitary: [[c e^{i phi}, s e^{i phi}], [-s, c]]
                uq = s * phase
                colp = a[:, :, p] * up[:, None] - a[:, :, q] * s[:, None]
                colq = a[:, :, p] * uq[:, None] + a[:, :, q] * c[:, None]
                a[:, :, p] = colp
                a[:, :, q] = colq
                rowp = np.conj(up)[:, None] * a[:, p, :] - s[:, None] * a[:, q, :]
                rowq = np.conj(uq)[:, None] * a[:, p, :] + c[:, None] * a[:, q, :]
                a[:, p, :] = rowp
                a[:, q, :] = rowq
                a[:, p, q] = 0.0
                a[:, q, p] = 0.0
                a[:, p, p] = a[:, p, p].real
                a[:, q, q] = a[:, q, q].real
                if want_vectors:
                    vp = v[:, :, p] * up[:, None] - v[:, :, q] * s[:, None]
                    vq = v[:, :, p] * uq[:, None] + v[:, :, q] * c[:, None]
                    v[:, :, p] = vp
                    v[:, :, q] = vq
    if not np.all(off2(a) <= tol2):
        raise JacobiError(f"no convergence after {_MAX_SWEEPS} sweeps")
    vals = np.diagonal(a, axis1=-2, axis2=-1).real.copy()
    return vals, v


def _fix_phases(vectors: np.ndarray) -> np.ndarray:
    """Make the first largest-modulus component of each column real nonnegative."""
    mag = np.abs(vectors)
    lead = mag.argmax(axis=-2)  # (b, n): row index per column
    bi = np.arange(vectors.shape[0])[:, None]
    ci = np.arange(vectors.shape[-1])[None, :]
    pivot = vectors[bi, lead, ci]
    mod = np.abs(pivot)
    phase = np.where(mod > 0.0, pivot / np.where(mod > 0.0, mod, 1.0), 1.0)
    return vectors * np.conj(phase)[:, None, :]


def eig_hermitian(m) -> HermEig:
    """Full eigendecomposition of a single Hermitian matrix (n <= 8).

    Raises ValueError on non-Hermitian input and JacobiError if the sweep
    budget is exhausted (which does not happen for finite input at n <= 8).
    """
    m = require_hermitian(m)
    if m.ndim != 2:
        raise ValueError("eig_hermitian takes a single matrix; use eigvals_hermitian for stacks")
    vals, vecs = _jacobi(m[None], want_vectors=True)
    order = np.argsort(vals, axis=-1, kind="stable")
    vals = np.take_along_axis(vals, order, axis=-1)
    vecs = np.take_along_axis(vecs, order[:, None, :], axis=-1)
    vecs = _fix_phases(vecs)
    return HermEig(vals[0], vecs[0])


def eigvals_hermitian(ms) -> np.ndarray:
    """Ascending eigenvalues of one Hermitian matrix or a stack of them.

    Input shape (..., n, n) gives output shape (..., n).
    """
    ms = require_hermitian(ms)
    lead = ms.shape[:-2]
    flat = ms.reshape((-1,) + ms.shape[-2:])
    vals, _ = _jacobi(flat, want_vectors=False)
    vals.sort(axis=-1)
    return vals.reshape(lead + ms.shape[-1:])


def require_pair_density(rho, trace_atol: float = DENSITY_TRACE_ATOL) -> np.ndarray:
    """Validate a 6x6 matrix with unit trace (Hermiticity checked separately)."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (PAIR_DIM, PAIR_DIM):
        raise ValueError(f"expected a {PAIR_DIM}x{PAIR_DIM} matrix, got shape {rho.shape}")
    tr = np.trace(rho, axis1=-2, axis2=-1)
    dev = np.abs(tr - 1.0).max()
    if not dev <= trace_atol:
        raise ValueError(f"trace differs from 1 by {dev}")
    return rho


def partial_trace(rho, part: str) -> np.ndarray:
    """Trace out one subsystem of a 6x6 pair density matrix.

    part="A" removes the qubit and returns the 3x3 qutrit state;
    part="B" removes the qutrit and returns the 2x2 qubit state.
    """
    rho = require_pair_density(rho)
    if rho.ndim != 2:
        raise ValueError("partial_trace takes a single 6x6 matrix")
    r = rho.reshape(QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM)
    if part == "A":
        return np.einsum("mjmk->jk", r)
    if part == "B":
        return np.einsum("mjnj->mn", r)
    raise ValueError(f"part must be 'A' or 'B', got {part!r}")


def partial_transpose_qubit(rho) -> np.ndarray:
    """Transpose the qubit indices of a 6x6 matrix (or a stack of them).

    In 2x2 block form (3x3 blocks, qubit index outer) this swaps the two
    off-diagonal blocks; it is linear, trace-preserving, Hermiticity
    preserving, and an involution.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape[-2:] != (PAIR_DIM, PAIR_DIM):
        raise ValueError(f"expected a {PAIR_DIM}x{PAIR_DIM} matrix, got shape {rho.shape}")
    lead = rho.shape[:-2]
    r = rho.reshape(lead + (QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM))
    r = np.swapaxes(r, -4, -2)
    return r.reshape(lead + (PAIR_DIM, PAIR_DIM))


def trace_norm(m):
    """Sum of absolute eigenvalues of a Hermitian matrix (or stack).

    Equals tr sqrt(M^dagger M) for Hermitian M and is at least |tr M|.
    Returns a float for a single matrix, an array for a stack.
    """
    vals = eigvals_hermitian(m)
    out = np.abs(vals).sum(axis=-1)
    return float(out) if out.ndim == 0 else out
