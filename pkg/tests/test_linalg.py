import numpy as np
import pytest

from interfero import ValidationError, eig_hermitian, kron, outer, purity
from interfero.linalg import check_density_matrix, check_state_vector, random_unitary

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)


def test_kron_identity_case():
    assert np.allclose(kron(I2, I2), np.eye(4), atol=1e-12)


def test_kron_diagonal_case():
    assert np.allclose(kron(np.diag([1.0, 2.0]), I2), np.diag([1.0, 1.0, 2.0, 2.0]), atol=1e-12)


def test_kron_double_bit_flip():
    v00 = np.array([1, 0, 0, 0], dtype=complex)
    v = kron(X, X) @ v00
    assert np.allclose(v, [0, 0, 0, 1], atol=1e-12)


def test_kron_associative_on_random_matrices():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a, b, c = (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)) for _ in range(3))
        assert np.max(np.abs(kron(kron(a, b), c) - kron(a, kron(b, c)))) <= 1e-12


def test_outer_basis_state():
    assert np.allclose(outer(np.array([1, 0])), np.diag([1.0, 0.0]), atol=1e-12)


def test_outer_plus_state():
    rho = outer(np.array([1, 1]) / np.sqrt(2))
    assert np.allclose(rho, np.full((2, 2), 0.5), atol=1e-12)


def test_outer_interferometer_state_has_uniform_magnitudes():
    # balanced splitter output (cos(pi/4), i sin(pi/4)) up to sign
    v = np.array([np.cos(-np.pi / 4), 1j * np.sin(-np.pi / 4)])
    rho = outer(v)
    assert np.allclose(np.abs(rho), np.full((2, 2), 0.5), atol=1e-12)


def test_outer_rejects_unnormalised():
    with pytest.raises(ValidationError):
        outer(np.array([1.0, 1.0]))


def test_outer_is_rank_one():
    rng = np.random.default_rng(3)
    for _ in range(10):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v /= np.linalg.norm(v)
        lam, _ = eig_hermitian(outer(v))
        assert abs(lam[-1] - 1.0) <= 1e-8
        assert np.max(np.abs(lam[:-1])) <= 1e-8


def test_purity_maximally_mixed():
    assert purity(I2 / 2) == pytest.approx(0.5, abs=1e-12)


def test_purity_pure_state():
    assert purity(np.diag([1.0, 0.0])) == pytest.approx(1.0, abs=1e-12)


def test_purity_mixed_diagonal():
    # 0.75^2 + 0.25^2
    assert purity(np.diag([0.75, 0.25])) == pytest.approx(0.625, abs=1e-12)


def test_eig_diagonal():
    lam, _ = eig_hermitian(np.diag([1.0, 0.0]))
    assert np.allclose(lam, [0.0, 1.0], atol=1e-12)


def test_eig_pauli_x():
    lam, _ = eig_hermitian(X)
    assert np.allclose(lam, [-1.0, 1.0], atol=1e-12)


def test_eig_projector_onto_plus():
    lam, _ = eig_hermitian(np.full((2, 2), 0.5))
    assert np.allclose(lam, [0.0, 1.0], atol=1e-12)


def test_eig_reconstruction_and_order():
    rng = np.random.default_rng(11)
    for _ in range(25):
        g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = (g + g.conj().T) / 2
        lam, vecs = eig_hermitian(m)
        assert np.all(np.diff(lam) >= -1e-12)
        recon = (vecs * lam) @ vecs.conj().T
        assert np.max(np.abs(recon - m)) <= 1e-8


def test_eig_deterministic_on_degenerate_input():
    lam1, v1 = eig_hermitian(np.eye(4))
    lam2, v2 = eig_hermitian(np.eye(4))
    assert np.array_equal(lam1, lam2)
    assert np.array_equal(v1, v2)


def test_eig_rejects_non_hermitian():
    with pytest.raises(ValidationError):
        eig_hermitian(np.array([[0, 1], [0, 0]], dtype=complex))


def test_unitary_evolution_preserves_norm():
    rng = np.random.default_rng(13)
    for dim in (2, 4):
        for _ in range(20):
            u = random_unitary(dim, rng)
            v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
            v /= np.linalg.norm(v)
            assert abs(np.linalg.norm(u @ v) - 1.0) <= 1e-10


def test_check_state_vector_dimension_guard():
    with pytest.raises(ValidationError):
        check_state_vector(np.array([1.0, 0.0, 0.0]))
    with pytest.raises(ValidationError):
        check_state_vector(np.ones(32) / np.sqrt(32))


def test_check_density_matrix_guards():
    with pytest.raises(ValidationError):
        check_density_matrix(np.diag([0.6, 0.6]))
    with pytest.raises(ValidationError):
        check_density_matrix(np.array([[0.5, 1.0], [0.0, 0.5]]))
    with pytest.raises(ValidationError):
        check_density_matrix(np.diag([1.5, -0.5]))
    check_density_matrix(np.diag([1.5, -0.5]), require_psd=False)
