"""Two-qubit states in the Pauli-product parameterization.

Covers composition/extraction of the 15 real coefficients, reductions to
single qubits, the four-index pair phase-space function in both the
coefficient and the matrix-element form, the correlation signature, and
the change of basis into the four-level generator description.
"""

from __future__ import annotations

import dataclasses

import numpy as np

from .generators import PAULI_X, PAULI_Y, PAULI_Z, generators
from .linalg import DensityMatrix, matrix_of, validate_density

_PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)


@dataclasses.dataclass(frozen=True, eq=False)
class FanoCoefficients:
    """Polarizations ``a`` (qubit 1), ``b`` (qubit 2) and correlations ``c``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a = np.array(self.a, dtype=float)
        b = np.array(self.b, dtype=float)
        c = np.array(self.c, dtype=float)
        if a.shape != (3,) or b.shape != (3,) or c.shape != (3, 3):
            raise ValueError(
                f"expected shapes (3,), (3,), (3, 3); got {a.shape}, {b.shape}, {c.shape}"
            )
        for arr, name in ((a, "a"), (b, "b"), (c, "c")):
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


def pair_index(i: int, j: int) -> int:
    """Level of the four-level system matching basis state |i j> of the pair."""
    if i not in (0, 1) or j not in (0, 1):
        raise ValueError(f"bits must be 0 or 1, got ({i}, {j})")
    return 2 * i + j


def fano_matrix(f: FanoCoefficients) -> np.ndarray:
    """Compose the 4x4 matrix; defined for any coefficients, physical or not."""
    eye2 = np.eye(2, dtype=complex)
    rho = np.eye(4, dtype=complex)
    for i in range(3):
        rho += f.a[i] * np.kron(_PAULIS[i], eye2)
        rho += f.b[i] * np.kron(eye2, _PAULIS[i])
        for j in range(3):
            rho += f.c[i, j] * np.kron(_PAULIS[i], _PAULIS[j])
    return rho / 4.0


def fano_compose(f: FanoCoefficients, tol: float | None = None) -> DensityMatrix:
    """Compose and validate; rejects coefficient sets outside the state space.

    The raised error carries the composed matrix, so non-physical
    coefficient sets remain available for exploratory work through
    ``fano_matrix``.
    """
    return validate_density(fano_matrix(f), tol)


def fano_extract(rho) -> FanoCoefficients:
    """Read the 15 coefficients off a 4x4 matrix by Pauli-product traces."""
    m = matrix_of(rho)
    if m.shape[0] != 4:
        raise ValueError(f"dimension must be 4, got {m.shape[0]}")
    eye2 = np.eye(2, dtype=complex)
    a = np.array([np.real(np.trace(m @ np.kron(p, eye2))) for p in _PAULIS])
    b = np.array([np.real(np.trace(m @ np.kron(eye2, p))) for p in _PAULIS])
    c = np.array(
        [[np.real(np.trace(m @ np.kron(p, q))) for q in _PAULIS] for p in _PAULIS]
    )
    return FanoCoefficients(a=a, b=b, c=c)


def reduced_density(f: FanoCoefficients, which: int) -> np.ndarray:
    """Partial trace onto qubit 1 or 2: (I + polarization . sigma) / 2."""
    p = _polarization(f, which)
    return (np.eye(2, dtype=complex) + p[0] * PAULI_X + p[1] * PAULI_Y + p[2] * PAULI_Z) / 2.0


def _polarization(f: FanoCoefficients, which: int) -> np.ndarray:
    if which == 1:
        return f.a
    if which == 2:
        return f.b
    raise ValueError(f"qubit selector must be 1 or 2, got {which}")


def _point_signs(mu: int, nu: int) -> np.ndarray:
    # per-point signs multiplying (x, y, z) polarization components
    return np.array(
        [(-1.0) ** nu, (-1.0) ** (mu + nu + 1), (-1.0) ** mu]
    )


def wigner_pair(f: FanoCoefficients) -> np.ndarray:
    """Pair phase-space function on the 16 points (mu1, nu1, mu2, nu2)."""
    grid = np.empty((2, 2, 2, 2))
    for mu1 in range(2):
        for nu1 in range(2):
            s1 = _point_signs(mu1, nu1)
            for mu2 in range(2):
                for nu2 in range(2):
                    s2 = _point_signs(mu2, nu2)
                    grid[mu1, nu1, mu2, nu2] = 0.25 * (
                        1.0 + s1 @ f.a + s2 @ f.b + s1 @ f.c @ s2
                    )
    return grid


def _gamma_diagonal(rho: np.ndarray, mu1: int, mu2: int) -> float:
    s1, s2 = (-1.0) ** mu1, (-1.0) ** mu2
    return float(
        (s1 + s2 + s1 * s2) * np.real(rho[0, 0])
        + (s1 - s2 - s1 * s2) * np.real(rho[1, 1])
        + (-s1 + s2 - s1 * s2) * np.real(rho[2, 2])
        + (-s1 - s2 + s1 * s2) * np.real(rho[3, 3])
    )


def _gamma_cross(rho: np.ndarray, mu1: int, mu2: int) -> tuple[float, float]:
    # antidiagonal coherences: the (0,3) and (1,2) entries
    s1, s2 = (-1.0) ** mu1, (-1.0) ** mu2
    g14 = (1.0 - s1 * s2) * rho[0, 3].real + (s1 + s2) * rho[0, 3].imag
    g23 = (1.0 + s1 * s2) * rho[1, 2].real + (s1 - s2) * rho[1, 2].imag
    return float(g14), float(g23)


def wigner_pair_from_matrix(rho) -> np.ndarray:
    """Pair phase-space function written directly in the matrix elements.

    Agrees with ``wigner_pair(fano_extract(rho))`` for every unit-trace
    matrix.
    """
    m = matrix_of(rho)
    if m.shape[0] != 4:
        raise ValueError(f"dimension must be 4, got {m.shape[0]}")
    grid = np.empty((2, 2, 2, 2))
    for mu1 in range(2):
        for mu2 in range(2):
            s1, s2 = (-1.0) ** mu1, (-1.0) ** mu2
            diag = _gamma_diagonal(m, mu1, mu2)
            g12 = (1.0 + s1) * (m[0, 1].real + s2 * m[0, 1].imag)
            g13 = (1.0 + s2) * (m[0, 2].real + s1 * m[0, 2].imag)
            g24 = (1.0 - s2) * (m[1, 3].real + s1 * m[1, 3].imag)
            g34 = (1.0 - s1) * (m[2, 3].real + s2 * m[2, 3].imag)
            g14, g23 = _gamma_cross(m, mu1, mu2)
            for nu1 in range(2):
                for nu2 in range(2):
                    t1, t2 = (-1.0) ** nu1, (-1.0) ** nu2
                    grid[mu1, nu1, mu2, nu2] = 0.25 * (
                        1.0
                        + diag
                        + 2.0 * t1 * (g13 + g24)
                        + 2.0 * t2 * (g12 + g34)
                        + 2.0 * t1 * t2 * (g14 + g23)
                    )
    return grid


def reduced_wigner(f: FanoCoefficients, which: int) -> np.ndarray:
    """2x2 phase-space grid of one qubit's reduction.

    Equals the half-sum of the pair grid over the other qubit's indices.
    """
    p = _polarization(f, which)
    grid = np.empty((2, 2))
    for mu in range(2):
        for nu in range(2):
            grid[mu, nu] = 0.5 * (1.0 + _point_signs(mu, nu) @ p)
    return grid


def delta_pair(f: FanoCoefficients) -> np.ndarray:
    """Correlation signature: pair grid minus the product of reductions.

    Identically zero exactly when the correlations factorize,
    c_ij = a_i b_j.
    """
    w1 = reduced_wigner(f, 1)
    w2 = reduced_wigner(f, 2)
    return wigner_pair(f) - np.multiply.outer(w1, w2)


def su4_coefficients(f: FanoCoefficients) -> np.ndarray:
    """Coefficients of the same state over the 15 dimension-4 generators.

    The composed matrix equals (I + sum_i coeffs[i] g_i) / 4; each
    coefficient is twice the corresponding generator mean value.
    """
    a, b, c = f.a, f.b, f.c
    r3, r6 = np.sqrt(3.0), np.sqrt(6.0)
    return np.array(
        [
            b[0] + c[2, 0],
            b[1] + c[2, 1],
            b[2] + c[2, 2],
            a[0] + c[0, 2],
            a[1] + c[1, 2],
            c[0, 0] + c[1, 1],
            -c[0, 1] + c[1, 0],
            (2.0 * a[2] - b[2] + c[2, 2]) / r3,
            c[0, 0] - c[1, 1],
            c[0, 1] + c[1, 0],
            a[0] - c[0, 2],
            a[1] - c[1, 2],
            b[0] - c[2, 0],
            b[1] - c[2, 1],
            2.0 * (a[2] + b[2] - c[2, 2]) / r6,
        ]
    )


def density_from_su4_coefficients(coeffs) -> np.ndarray:
    """Rebuild the 4x4 matrix (I + sum_i coeffs[i] g_i) / 4."""
    v = np.asarray(coeffs, dtype=float)
    if v.shape != (15,):
        raise ValueError(f"expected 15 coefficients, got shape {v.shape}")
    stack = generators(4).stack()
    return (np.eye(4, dtype=complex) + np.einsum("i,iab->ab", v, stack)) / 4.0
