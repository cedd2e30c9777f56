import numpy as np
import pytest

from dwigner import grid_overlap, state_overlap, super_fidelity, werner, wigner_grid
from helpers import random_density, random_pure


def test_self_fidelity_is_one(rng):
    for n in (2, 4):
        for _ in range(10):
            rho = random_density(rng, n)
            assert abs(super_fidelity(rho, rho) - 1.0) < 1e-12


def test_orthogonal_pure_states():
    a = np.diag([1.0, 0, 0, 0]).astype(complex)
    b = np.diag([0, 0, 1.0, 0]).astype(complex)
    assert abs(super_fidelity(a, b)) < 1e-12


def test_symmetry(rng):
    a = random_density(rng, 4)
    b = random_density(rng, 4)
    assert abs(super_fidelity(a, b) - super_fidelity(b, a)) < 1e-14


def test_range(rng):
    for _ in range(20):
        a = random_density(rng, 4)
        b = random_density(rng, 4)
        value = super_fidelity(a, b)
        assert -1e-12 <= value <= 1.0 + 1e-12


def test_overlap_two_paths_random_pairs(rng):
    for n in (2, 4):
        for _ in range(25):
            a = random_density(rng, n)
            b = random_density(rng, n)
            direct = state_overlap(a, b)
            via_grids = grid_overlap(wigner_grid(a), wigner_grid(b))
            assert abs(direct - via_grids) < 1e-12


def test_werner_two_path_example():
    rho = werner(0.5)
    direct = state_overlap(rho, rho)
    via_grids = grid_overlap(wigner_grid(rho), wigner_grid(rho))
    assert abs(direct - via_grids) < 1e-12
    assert abs(super_fidelity(rho, rho) - 1.0) < 1e-12


def test_pure_state_overlap_is_squared_amplitude(rng):
    u = random_pure(rng, 4)
    v = random_pure(rng, 4)
    rho = np.outer(u, u.conj())
    sigma = np.outer(v, v.conj())
    assert abs(state_overlap(rho, sigma) - abs(np.vdot(u, v)) ** 2) < 1e-12


def test_dimension_mismatch():
    with pytest.raises(ValueError, match="mismatch"):
        state_overlap(np.eye(2) / 2, np.eye(4) / 4)
