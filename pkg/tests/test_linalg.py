import numpy as np
import pytest

from dwigner import (
    DensityMatrixError,
    hermitian_eigenvalues,
    positivity_inequalities,
    purity,
    trace_product,
    validate_density,
    werner,
)
from dwigner.generators import PAULI_X, PAULI_Y
from helpers import random_density, random_hermitian_unit_trace


def test_trace_product_identity():
    assert trace_product(np.eye(4), np.eye(4)) == 4


def test_trace_product_pauli_orthogonality():
    assert abs(trace_product(PAULI_X, PAULI_Y)) == 0


def test_trace_product_against_elementwise_sum(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    b = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    # independent double-loop oracle
    expected = 0.0
    for i in range(4):
        for j in range(4):
            expected += np.conj(a[i, j]) * b[i, j]
    assert abs(trace_product(a, b) - expected) < 1e-13


def test_trace_product_dimension_mismatch():
    with pytest.raises(ValueError, match="2.*4|4.*2"):
        trace_product(np.eye(2), np.eye(4))


def test_eigenvalues_pauli_z():
    np.testing.assert_allclose(
        hermitian_eigenvalues(np.diag([1.0, -1.0])), [-1.0, 1.0], atol=1e-14
    )


def test_eigenvalues_maximally_mixed():
    np.testing.assert_allclose(hermitian_eigenvalues(np.eye(4) / 4), [0.25] * 4, atol=1e-14)


def test_eigenvalues_rejects_non_hermitian():
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError, match="asymmetry"):
        hermitian_eigenvalues(m)


def _characteristic_roots_by_bisection(a):
    """Roots of det(a - x I) located by sign changes and bisected."""

    def char(x):
        return np.linalg.det(a - x * np.eye(a.shape[0])).real

    radius = np.max(np.sum(np.abs(a), axis=1)) + 1.0
    xs = np.linspace(-radius, radius, 4001)
    values = [char(x) for x in xs]
    roots = []
    for lo, hi, flo, fhi in zip(xs[:-1], xs[1:], values[:-1], values[1:]):
        if flo == 0.0:
            roots.append(lo)
            continue
        if flo * fhi < 0:
            for _ in range(100):
                mid = (lo + hi) / 2
                fm = char(mid)
                if flo * fm <= 0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            roots.append((lo + hi) / 2)
    return np.array(roots)


def test_eigenvalues_match_characteristic_polynomial(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    h = (a + a.conj().T) / 2
    roots = _characteristic_roots_by_bisection(h)
    assert len(roots) == 4
    np.testing.assert_allclose(hermitian_eigenvalues(h), np.sort(roots), atol=1e-9)


def test_eigenvalue_sum_matches_trace(rng):
    h = random_hermitian_unit_trace(rng, 4)
    assert abs(np.sum(hermitian_eigenvalues(h)) - 1.0) < 1e-10


def test_validate_accepts_maximally_mixed():
    rho = validate_density(np.eye(4) / 4)
    assert rho.dim == 4


def test_validate_rejects_negative_eigenvalue():
    with pytest.raises(DensityMatrixError) as info:
        validate_density(np.diag([1.1, -0.1, 0.0, 0.0]))
    names = [name for name, _ in info.value.violations]
    assert "positive semidefiniteness" in names
    magnitude = dict(info.value.violations)["positive semidefiniteness"]
    assert abs(magnitude - 0.1) < 1e-12


def test_validate_reports_every_violation():
    bad = np.array([[1.5, 1.0], [0.0, -0.2]])
    with pytest.raises(DensityMatrixError) as info:
        validate_density(bad)
    names = {name for name, _ in info.value.violations}
    assert {"hermiticity", "unit trace", "positive semidefiniteness"} <= names


def test_validated_eigenvalues_nonnegative_and_sum_to_one(rng):
    for _ in range(20):
        rho = validate_density(random_density(rng, 4))
        eig = hermitian_eigenvalues(rho.matrix)
        assert eig[0] >= -1e-10
        assert abs(np.sum(eig) - 1.0) < 1e-10


def test_werner_extreme_is_pure_state():
    rho = validate_density(werner(1.0))
    assert abs(purity(rho) - 1.0) < 1e-12


def test_purity_of_projector(rng):
    v = rng.normal(size=4) + 1j * rng.normal(size=4)
    v /= np.linalg.norm(v)
    assert abs(purity(np.outer(v, v.conj())) - 1.0) < 1e-12


def test_purity_maximally_mixed():
    assert abs(purity(np.eye(4) / 4) - 0.25) < 1e-15


@pytest.mark.parametrize("fraction", [0.0, 0.3, 0.5, 0.75, 1.0])
def test_werner_purity_closed_form(fraction):
    expected = (1 - 2 * fraction + 4 * fraction**2) / 3
    assert abs(purity(werner(fraction)) - expected) < 1e-12


def test_positivity_on_pure_projector():
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[0, 3] = rho[3, 0] = rho[3, 3] = 0.5
    report = positivity_inequalities(rho)
    assert abs(report.trace_sq - 1) < 1e-12
    assert abs(report.trace_cube - 1) < 1e-12
    assert abs(report.trace_fourth - 1) < 1e-12
    assert report.all_hold
    # the cubic bound is tight for projectors
    assert abs(report.trace_cube - (1.5 * report.trace_sq - 0.5)) < 1e-12


def test_positivity_maximally_mixed():
    report = positivity_inequalities(np.eye(4) / 4)
    assert abs(report.trace_sq - 0.25) < 1e-15
    assert abs(report.trace_cube - 1 / 16) < 1e-15
    assert report.all_hold


def test_positivity_detects_small_negative_eigenvalue():
    report = positivity_inequalities(np.diag([0.55, 0.3, 0.2, -0.05]))
    assert not report.all_hold


def test_positivity_wrong_dimension():
    with pytest.raises(ValueError, match="dimension"):
        positivity_inequalities(np.eye(3) / 3)


def test_positivity_iff_nonnegative_spectrum(rng):
    # mixture of PSD and indefinite unit-trace Hermitian samples
    for i in range(500):
        if i % 2 == 0:
            m = random_density(rng, 4)
        else:
            m = random_hermitian_unit_trace(rng, 4)
        min_eig = np.linalg.eigvalsh(m)[0]
        if abs(min_eig) < 1e-8:
            continue  # skip samples too close to the boundary for a clean verdict
        assert positivity_inequalities(m).all_hold == (min_eig >= 0)
