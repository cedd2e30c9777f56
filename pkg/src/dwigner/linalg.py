"""Dense complex linear algebra over small square matrices.

Provides the validated density-matrix type used throughout the package,
together with purity and the trace-moment positivity diagnostic for
four-level systems.
"""

from __future__ import annotations

import dataclasses

import numpy as np

DEFAULT_TOLERANCE = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce input to a square complex matrix with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValueError("matrix entries must be finite")
    return a


def adjoint(a) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def trace_product(a, b) -> complex:
    """Tr[A† B] for two square matrices of the same dimension."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(
            f"dimension mismatch: {a.shape[0]}x{a.shape[0]} vs {b.shape[0]}x{b.shape[0]}"
        )
    return complex(np.sum(a.conj() * b))


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    return a @ b + b @ a


def hermiticity_defect(a) -> float:
    """Largest entrywise deviation of a matrix from its adjoint."""
    a = np.asarray(a, dtype=complex)
    return float(np.max(np.abs(a - a.conj().T)))


def hermitian_eigenvalues(a, tol: float = DEFAULT_TOLERANCE) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in ascending order."""
    a = as_matrix(a)
    defect = hermiticity_defect(a)
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian: max asymmetry {defect:.3e}")
    return np.linalg.eigvalsh(a)


class DensityMatrixError(ValueError):
    """Validation failure carrying every violated invariant.

    ``violations`` is a list of ``(invariant, magnitude)`` pairs and
    ``matrix`` keeps the rejected input for inspection.
    """

    def __init__(self, violations, matrix):
        self.violations = list(violations)
        self.matrix = matrix
        detail = "; ".join(f"{name} violated by {mag:.6e}" for name, mag in self.violations)
        super().__init__(f"not a density matrix: {detail}")


@dataclasses.dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix: Hermitian, unit trace, positive semidefinite."""

    matrix: np.ndarray
    tolerance: float = DEFAULT_TOLERANCE

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)


def matrix_of(rho) -> np.ndarray:
    """Unwrap a DensityMatrix, or coerce a raw array, to a complex ndarray."""
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    return as_matrix(rho)


def validate_density(m, tol: float | None = None) -> DensityMatrix:
    """Check Hermiticity, unit trace and positive semidefiniteness.

    Raises DensityMatrixError listing every violated invariant together
    with its measured magnitude.
    """
    if tol is None:
        tol = DEFAULT_TOLERANCE
    a = as_matrix(m)
    violations = []
    defect = hermiticity_defect(a)
    if defect > tol:
        violations.append(("hermiticity", defect))
    trace_error = abs(complex(np.trace(a)) - 1.0)
    if trace_error > tol:
        violations.append(("unit trace", trace_error))
    hermitian_part = (a + a.conj().T) / 2.0
    min_eigenvalue = float(np.linalg.eigvalsh(hermitian_part)[0])
    if min_eigenvalue < -tol:
        violations.append(("positive semidefiniteness", -min_eigenvalue))
    if violations:
        raise DensityMatrixError(violations, a)
    frozen = a.copy()
    frozen.flags.writeable = False
    return DensityMatrix(matrix=frozen, tolerance=tol)


def purity(rho) -> float:
    """Tr[rho^2]; 1 for pure states, 1/N for the maximally mixed state."""
    a = matrix_of(rho)
    return float(np.real(np.trace(a @ a)))


@dataclasses.dataclass(frozen=True)
class PositivityReport:
    """Trace-moment test equivalent to a nonnegative spectrum in dimension 4.

    For a Hermitian unit-trace 4x4 matrix the three inequalities hold
    exactly when all four eigenvalues are nonnegative.
    """

    trace_sq: float
    trace_cube: float
    trace_fourth: float
    ineq1: bool
    ineq2: bool
    ineq3: bool

    @property
    def all_hold(self) -> bool:
        return self.ineq1 and self.ineq2 and self.ineq3


def positivity_inequalities(rho, tol: float = DEFAULT_TOLERANCE) -> PositivityReport:
    """Evaluate the three trace-moment inequalities for a 4x4 matrix."""
    a = matrix_of(rho)
    if a.shape[0] != 4:
        raise ValueError(f"dimension must be 4, got {a.shape[0]}")
    a2 = a @ a
    p2 = float(np.real(np.trace(a2)))
    p3 = float(np.real(np.trace(a2 @ a)))
    p4 = float(np.real(np.trace(a2 @ a2)))
    return PositivityReport(
        trace_sq=p2,
        trace_cube=p3,
        trace_fourth=p4,
        ineq1=p2 <= 1.0 + tol,
        ineq2=p3 >= 1.5 * p2 - 0.5 - tol,
        ineq3=p4 <= 1.0 / 6.0 - p2 + 0.5 * p2**2 + (4.0 / 3.0) * p3 + tol,
    )
