import numpy as np
import pytest

from dwigner import (
    bell,
    grid_overlap,
    kernel,
    phase_exponent,
    purity,
    reconstruct,
    schwinger_pair,
    symmetrized_basis,
    wigner_grid,
)
from dwigner.generators import PAULI_X, PAULI_Y, PAULI_Z
from dwigner.kernel import hermitizing_phase
from helpers import random_density

DIMS = (2, 3, 4, 5)


@pytest.mark.parametrize("n", DIMS)
def test_schwinger_pair_properties(n):
    pair = schwinger_pair(n)
    w = np.exp(2j * np.pi / n)
    np.testing.assert_allclose(np.linalg.matrix_power(pair.u, n), np.eye(n), atol=1e-12)
    np.testing.assert_allclose(np.linalg.matrix_power(pair.v, n), np.eye(n), atol=1e-12)
    np.testing.assert_allclose(pair.v @ pair.u, w * pair.u @ pair.v, atol=1e-12)


def test_schwinger_pair_qubit_case():
    pair = schwinger_pair(2)
    np.testing.assert_allclose(pair.u, PAULI_Z, atol=1e-15)
    np.testing.assert_allclose(pair.v, PAULI_X, atol=1e-15)
    # sigma_y = -i u v
    np.testing.assert_allclose(-1j * pair.u @ pair.v, PAULI_Y, atol=1e-15)


def test_schwinger_pair_ququart_clock():
    pair = schwinger_pair(4)
    np.testing.assert_allclose(np.diag(pair.u), [1, 1j, -1, -1j], atol=1e-15)
    np.testing.assert_allclose(
        pair.v @ pair.u, np.exp(1j * np.pi / 2) * pair.u @ pair.v, atol=1e-12
    )


def test_schwinger_pair_rejects_small_dimension():
    with pytest.raises(ValueError):
        schwinger_pair(1)


def test_symmetrized_basis_identity_point():
    np.testing.assert_allclose(symmetrized_basis(0, 0, 4), np.eye(4) / 2, atol=1e-15)


@pytest.mark.parametrize("n", (2, 4))
def test_symmetrized_basis_traces(n):
    for eta in range(n):
        for xi in range(n):
            expected = np.sqrt(n) if (eta == 0 and xi == 0) else 0.0
            assert abs(np.trace(symmetrized_basis(eta, xi, n)) - expected) < 1e-12


def test_symmetrized_basis_orthonormal_on_window():
    n = 4
    for eta in range(n):
        for xi in range(n):
            s = symmetrized_basis(eta, xi, n)
            for eta2 in range(n):
                for xi2 in range(n):
                    s2 = symmetrized_basis(eta2, xi2, n)
                    expected = 1.0 if (eta, xi) == (eta2, xi2) else 0.0
                    assert abs(np.sum(s.conj() * s2) - expected) < 1e-12


def test_phase_exponent_window_values():
    for n in (2, 4):
        for eta in range(n):
            for xi in range(n):
                assert phase_exponent(eta, xi, n) == 0


def test_phase_exponent_shift_rules():
    n = 4
    for eta in range(n):
        for xi in range(n):
            assert phase_exponent(eta + n, xi, n) == -xi
    assert phase_exponent(n, n, n) == -n


@pytest.mark.parametrize("n", DIMS)
def test_kernel_unit_traces(n):
    k = kernel(n)
    for mu in range(n):
        for nu in range(n):
            assert abs(np.trace(k[mu, nu]) - 1.0) < 1e-12


@pytest.mark.parametrize("n", DIMS)
def test_kernel_hermitian(n):
    k = kernel(n)
    for mu in range(n):
        for nu in range(n):
            assert np.max(np.abs(k[mu, nu] - k[mu, nu].conj().T)) < 1e-12


@pytest.mark.parametrize("n", DIMS)
def test_kernel_orthogonality(n):
    k = kernel(n)
    for mu in range(n):
        for nu in range(n):
            for mu2 in range(n):
                for nu2 in range(n):
                    value = np.sum(k[mu, nu].conj() * k[mu2, nu2])
                    expected = n if (mu, nu) == (mu2, nu2) else 0.0
                    assert abs(value - expected) < 1e-12


@pytest.mark.parametrize("n", DIMS)
def test_kernel_completeness(n):
    k = kernel(n)
    np.testing.assert_allclose(k.ops.sum(axis=(0, 1)) / n, np.eye(n), atol=1e-12)


def test_kernel_qubit_pauli_traces():
    k = kernel(2)
    for mu in range(2):
        for nu in range(2):
            gdag = k[mu, nu].conj().T
            assert abs(np.trace(gdag @ PAULI_X) - (-1.0) ** nu) < 1e-12
            assert abs(np.trace(gdag @ PAULI_Y) - (-1.0) ** (mu + nu + 1)) < 1e-12
            assert abs(np.trace(gdag @ PAULI_Z) - (-1.0) ** mu) < 1e-12


@pytest.mark.parametrize("n", (2, 4))
def test_kernel_window_shift_invariance(n):
    # rebuild each operator summing eta over [-n, -1]; the integer-part
    # exponent supplies exactly the compensating sign
    w = np.exp(2j * np.pi / n)
    k = kernel(n)
    for mu in range(n):
        for nu in range(n):
            total = np.zeros((n, n), dtype=complex)
            for eta in range(-n, 0):
                for xi in range(n):
                    total += (
                        w ** (-(mu * eta + nu * xi))
                        * np.exp(1j * np.pi * phase_exponent(eta, xi, n))
                        * hermitizing_phase(eta, xi, n)
                        * symmetrized_basis(eta, xi, n)
                    )
            np.testing.assert_allclose(total / np.sqrt(n), k[mu, nu], atol=1e-12)


def test_kernel_window_shift_invariance_both_axes():
    n = 4
    w = np.exp(2j * np.pi / n)
    k = kernel(n)
    total = np.zeros((n, n), dtype=complex)
    mu, nu = 2, 3
    for eta in range(-n, 0):
        for xi in range(n, 2 * n):
            total += (
                w ** (-(mu * eta + nu * xi))
                * np.exp(1j * np.pi * phase_exponent(eta, xi, n))
                * hermitizing_phase(eta, xi, n)
                * symmetrized_basis(eta, xi, n)
            )
    np.testing.assert_allclose(total / np.sqrt(n), k[mu, nu], atol=1e-12)


@pytest.mark.parametrize("n", DIMS)
def test_grid_of_maximally_mixed(n):
    np.testing.assert_allclose(wigner_grid(np.eye(n) / n), np.full((n, n), 1 / n), atol=1e-12)


def test_grid_of_qubit_ground_state():
    rho = np.diag([1.0, 0.0]).astype(complex)
    grid = wigner_grid(rho)
    np.testing.assert_allclose(grid[0], [1.0, 1.0], atol=1e-12)
    np.testing.assert_allclose(grid[1], [0.0, 0.0], atol=1e-12)


@pytest.mark.parametrize("n", DIMS)
def test_grid_normalization_and_purity(rng, n):
    for _ in range(100):
        rho = random_density(rng, n)
        grid = wigner_grid(rho)
        assert abs(np.sum(grid) / n - 1.0) < 1e-10
        assert abs(np.sum(grid * grid) / n - purity(rho)) < 1e-10


def test_grid_rejects_non_hermitian_input():
    m = np.zeros((4, 4), dtype=complex)
    m[0, 1] = 1.0
    m[0, 0] = 1.0
    with pytest.raises(ValueError, match="imaginary"):
        wigner_grid(m)


def test_grid_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        wigner_grid(np.eye(4) / 4, kernel(2))


def test_grid_linearity(rng):
    rho1 = random_density(rng, 4)
    rho2 = random_density(rng, 4)
    alpha = 0.3
    mixed = alpha * rho1 + (1 - alpha) * rho2
    np.testing.assert_allclose(
        wigner_grid(mixed),
        alpha * wigner_grid(rho1) + (1 - alpha) * wigner_grid(rho2),
        atol=1e-12,
    )


def test_reconstruct_constant_grid():
    np.testing.assert_allclose(reconstruct(np.full((4, 4), 0.25)), np.eye(4) / 4, atol=1e-12)


def test_reconstruct_bell_grid():
    rho = bell("phi+")
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 0] = expected[0, 3] = expected[3, 0] = expected[3, 3] = 0.5
    np.testing.assert_allclose(rho, expected, atol=1e-15)
    np.testing.assert_allclose(reconstruct(wigner_grid(rho)), expected, atol=1e-12)


@pytest.mark.parametrize("n", (2, 4))
def test_round_trip_random_states(rng, n):
    worst = 0.0
    for _ in range(100):
        rho = random_density(rng, n)
        worst = max(worst, np.max(np.abs(reconstruct(wigner_grid(rho)) - rho)))
    assert worst < 1e-12


@pytest.mark.parametrize("n", (3, 4))
def test_operator_decomposition_for_arbitrary_operators(rng, n):
    # non-Hermitian operators decompose through complex coefficients
    op = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    k = kernel(n)
    coeffs = np.einsum("mnij,ij->mn", k.ops.conj(), op)
    rebuilt = np.einsum("mn,mnij->ij", coeffs, k.ops) / n
    np.testing.assert_allclose(rebuilt, op, atol=1e-12)


def test_overlap_with_itself_is_purity(rng):
    rho = random_density(rng, 4)
    grid = wigner_grid(rho)
    assert abs(grid_overlap(grid, grid) - purity(rho)) < 1e-12


def test_overlap_orthogonal_levels():
    a = np.diag([1.0, 0, 0, 0]).astype(complex)
    b = np.diag([0, 1.0, 0, 0]).astype(complex)
    assert abs(grid_overlap(wigner_grid(a), wigner_grid(b))) < 1e-12


def test_overlap_matches_direct_trace(rng):
    a = random_density(rng, 4)
    b = random_density(rng, 4)
    direct = np.trace(a @ b).real
    assert abs(grid_overlap(wigner_grid(a), wigner_grid(b)) - direct) < 1e-12


def test_overlap_shape_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        grid_overlap(np.zeros((2, 2)), np.zeros((4, 4)))
