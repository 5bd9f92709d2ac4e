"""State construction, Schmidt decomposition, density matrices."""

import numpy as np
import pytest

from spinpair import linalg, states


def random_pure(rng, count=None):
    shape = (6,) if count is None else (count, 6)
    z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    return z / np.linalg.norm(z, axis=-1, keepdims=True)


def test_basis_tokens_cover_flat_indices():
    assert states.BASIS_TOKENS == ("uU", "u0", "uD", "dU", "d0", "dD")
    for i, tok in enumerate(states.BASIS_TOKENS):
        assert states.basis_index(tok) == i
        vec = states.basis_state(tok)
        assert vec[i] == 1.0 and np.abs(vec).sum() == 1.0
    assert states.flat_index(1, 1) == 4
    with pytest.raises(ValueError):
        states.basis_index("xx")
    with pytest.raises(ValueError):
        states.flat_index(2, 0)


def test_require_normalized():
    with pytest.raises(ValueError, match="norm"):
        states.require_normalized(np.ones(6))
    with pytest.raises(ValueError, match="amplitudes"):
        states.require_normalized(np.ones(4) / 2.0)


class TestSchmidt:
    def test_product_state(self):
        sd = states.schmidt(states.basis_state("uU"))
        assert np.allclose(sd.kappa, [1.0, 0.0], atol=1e-12)

    def test_balanced_superposition(self):
        psi = (states.basis_state("uU") + states.basis_state("d0")) / np.sqrt(2.0)
        sd = states.schmidt(psi)
        assert np.allclose(sd.kappa, [1.0 / np.sqrt(2.0)] * 2, atol=1e-12)

    def test_entangled_doublet_weights(self):
        # (|d0> - sqrt(2)|uD>)/sqrt(3) has reduced-density eigenvalues 2/3, 1/3
        psi = np.zeros(6, dtype=complex)
        psi[4] = 1.0 / np.sqrt(3.0)
        psi[2] = -np.sqrt(2.0 / 3.0)
        sd = states.schmidt(psi)
        assert np.allclose(sd.kappa ** 2, [2.0 / 3.0, 1.0 / 3.0], atol=1e-12)

    def test_reconstruction_and_orthonormality(self):
        rng = np.random.default_rng(11)
        for psi in random_pure(rng, count=200):
            sd = states.schmidt(psi)
            assert abs((sd.kappa ** 2).sum() - 1.0) < 1e-12
            assert sd.kappa[0] >= sd.kappa[1] >= 0.0
            assert np.abs(sd.left.conj().T @ sd.left - np.eye(2)).max() < 1e-10
            assert np.abs(sd.right.conj().T @ sd.right - np.eye(2)).max() < 1e-10
            rebuilt = sum(
                sd.kappa[i] * np.kron(sd.left[:, i], sd.right[:, i]) for i in range(2)
            )
            assert abs(states.overlap(rebuilt, psi) - 1.0) < 1e-10

    def test_svd_oracle(self):
        rng = np.random.default_rng(12)
        for psi in random_pure(rng, count=100):
            ref = np.linalg.svd(states.coefficient_matrix(psi), compute_uv=False)
            assert np.abs(states.schmidt(psi).kappa - ref).max() < 1e-10

    def test_weights_match_both_reduced_densities(self):
        rng = np.random.default_rng(13)
        for psi in random_pure(rng, count=50):
            rho = states.density_of_pure(psi)
            k2 = states.schmidt(psi).kappa ** 2
            ev_a = linalg.eigvals_hermitian(linalg.partial_trace(rho, "B"))
            ev_b = linalg.eigvals_hermitian(linalg.partial_trace(rho, "A"))
            assert np.abs(np.sort(k2) - ev_a).max() < 1e-10
            # the 3x3 reduced density has rank at most 2
            assert ev_b[0] < 1e-10
            assert np.abs(np.sort(k2) - ev_b[1:]).max() < 1e-10


class TestDensities:
    def test_pure_basis_state(self):
        rho = states.density_of_pure(states.basis_state("uU"))
        expected = np.zeros((6, 6))
        expected[0, 0] = 1.0
        assert np.array_equal(rho, expected)

    def test_pure_corner_superposition(self):
        psi = (states.basis_state("uU") + states.basis_state("dD")) / np.sqrt(2.0)
        rho = states.density_of_pure(psi)
        nz = {(0, 0), (0, 5), (5, 0), (5, 5)}
        for i in range(6):
            for j in range(6):
                target = 0.5 if (i, j) in nz else 0.0
                assert rho[i, j] == pytest.approx(target, abs=1e-15)

    def test_purity(self):
        rng = np.random.default_rng(14)
        for psi in random_pure(rng, count=100):
            rho = states.density_of_pure(psi)
            assert np.trace(rho @ rho).real == pytest.approx(1.0, abs=1e-12)

    def test_mixture_single_state(self):
        psi = states.basis_state("uU")
        assert np.abs(states.density_of_mixture([1.0], [psi])
                      - states.density_of_pure(psi)).max() < 1e-15

    def test_mixture_two_corners(self):
        rho = states.density_of_mixture(
            [0.5, 0.5], [states.basis_state("uU"), states.basis_state("dD")]
        )
        assert np.allclose(rho, np.diag([0.5, 0, 0, 0, 0, 0.5]), atol=1e-15)

    def test_mixture_linearity_and_psd_floor(self):
        rng = np.random.default_rng(15)
        psis = random_pure(rng, count=4)
        w = np.array([0.1, 0.2, 0.3, 0.4])
        rho = states.density_of_mixture(w, psis)
        by_parts = sum(wi * states.density_of_pure(p) for wi, p in zip(w, psis))
        assert np.abs(rho - by_parts).max() < 1e-14
        assert linalg.eigvals_hermitian(rho)[0] > -1e-10
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)

    def test_mixture_validation(self):
        psi = states.basis_state("uU")
        with pytest.raises(ValueError, match="sum"):
            states.density_of_mixture([0.5, 0.4], [psi, states.basis_state("dD")])
        with pytest.raises(ValueError, match="weights"):
            states.density_of_mixture([0.5], [psi, states.basis_state("dD")])
        with pytest.raises(ValueError, match="nonnegative"):
            states.density_of_mixture([1.5, -0.5], [psi, states.basis_state("dD")])
