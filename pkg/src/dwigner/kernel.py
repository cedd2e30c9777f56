"""Clock/shift unitary pairs and the phase-point operator basis.

The basis maps operators on an N-level system to functions on the N x N
discrete phase space and back.  Conventions: the clock operator is
diagonal with phases w^k, w = exp(2 pi i / N); the shift operator lowers
the clock eigenbasis cyclically (v|k> = |k-1 mod N>), so v u = w u v;
the half-phase branch is w^(1/2) = exp(i pi / N).
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache

import numpy as np

from .linalg import matrix_of

REALNESS_TOLERANCE = 1e-10


@dataclasses.dataclass(frozen=True, eq=False)
class SchwingerPair:
    """Clock operator ``u`` and cyclic-lowering shift operator ``v``."""

    dim: int
    u: np.ndarray
    v: np.ndarray


@lru_cache(maxsize=None)
def schwinger_pair(n: int) -> SchwingerPair:
    """Build the dimension-n clock/shift pair."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    w = np.exp(2j * np.pi / n)
    u = np.diag(w ** np.arange(n))
    v = np.zeros((n, n), dtype=complex)
    v[(np.arange(n) - 1) % n, np.arange(n)] = 1.0
    u.flags.writeable = False
    v.flags.writeable = False
    return SchwingerPair(dim=n, u=u, v=v)


def _unitary_power(m: np.ndarray, k: int) -> np.ndarray:
    # negative powers via the adjoint keep permutation/diagonal factors exact
    if k >= 0:
        return np.linalg.matrix_power(m, k)
    return np.linalg.matrix_power(m.conj().T, -k)


def phase_exponent(eta: int, xi: int, n: int) -> int:
    """Integer exponent that makes the basis invariant under window shifts.

    Uses floor division toward minus infinity for the integer parts; the
    value vanishes whenever both indices lie in the fundamental window
    [0, n).
    """
    i_eta = eta // n
    i_xi = xi // n
    return n * i_eta * i_xi - eta * i_xi - xi * i_eta


def symmetrized_basis(eta: int, xi: int, n: int) -> np.ndarray:
    """n^(-1/2) w^(eta xi / 2) u^eta v^xi, defined for any integer indices."""
    pair = schwinger_pair(n)
    phase = np.exp(1j * np.pi * eta * xi / n)
    return phase / np.sqrt(n) * (_unitary_power(pair.u, eta) @ _unitary_power(pair.v, xi))


def hermitizing_phase(eta: int, xi: int, n: int) -> complex:
    """Unimodular weight that makes every phase-point operator Hermitian.

    The plain Fourier sum of the symmetrized basis is Hermitian only for
    n = 2; this factor restores Hermiticity for every dimension while
    leaving the family trace-orthogonal and complete.  It depends on the
    index residues only, so the weighted sum keeps the window-shift
    invariance provided by the integer-part exponent.  At n = 2 it is
    identically 1.
    """
    eta %= n
    xi %= n
    if n % 2 == 1:
        return -1.0 if (eta % 2 == 1 and xi % 2 == 1) else 1.0
    if eta != 0 and xi != 0 and (eta + xi) % 2 == 1:
        return 1j
    return 1.0


@dataclasses.dataclass(frozen=True, eq=False)
class MappingKernel:
    """Phase-point operators indexed by (mu, nu) on the n x n grid.

    Every operator has unit trace, the family is trace-orthogonal with
    normalization Tr[G†(p) G(q)] = n * delta(p, q), and the average over
    all points is the identity.
    """

    dim: int
    ops: np.ndarray  # shape (n, n, n, n); ops[mu, nu] is one operator

    def __getitem__(self, key) -> np.ndarray:
        mu, nu = key
        return self.ops[mu, nu]


@lru_cache(maxsize=None)
def kernel(n: int) -> MappingKernel:
    """Construct (and cache) the phase-point operator basis for dimension n."""
    if n < 2:
        raise ValueError(f"dimension must be at least 2, got {n}")
    w = np.exp(2j * np.pi / n)
    # the window-shift exponent vanishes on the fundamental window
    basis = [
        [hermitizing_phase(eta, xi, n) * symmetrized_basis(eta, xi, n) for xi in range(n)]
        for eta in range(n)
    ]
    ops = np.zeros((n, n, n, n), dtype=complex)
    for mu in range(n):
        for nu in range(n):
            total = np.zeros((n, n), dtype=complex)
            for eta in range(n):
                for xi in range(n):
                    total += w ** (-(mu * eta + nu * xi)) * basis[eta][xi]
            ops[mu, nu] = total / np.sqrt(n)
    ops.flags.writeable = False
    return MappingKernel(dim=n, ops=ops)


def wigner_grid(rho, kern: MappingKernel | None = None) -> np.ndarray:
    """Phase-space values W(mu, nu) = Tr[G†(mu, nu) rho] as a real grid.

    For a density matrix the grid satisfies (1/n) sum W = 1.  A residual
    imaginary part above 1e-10 signals a non-Hermitian input or a kernel
    of the wrong dimension and raises instead of being discarded.
    """
    a = matrix_of(rho)
    if kern is None:
        kern = kernel(a.shape[0])
    if kern.dim != a.shape[0]:
        raise ValueError(f"dimension mismatch: kernel {kern.dim} vs matrix {a.shape[0]}")
    values = np.einsum("mnij,ij->mn", kern.ops.conj(), a)
    residue = float(np.max(np.abs(values.imag)))
    if residue > REALNESS_TOLERANCE:
        raise ValueError(
            f"phase-space values have imaginary residue {residue:.3e}; "
            "input matrix is not Hermitian or does not match the kernel"
        )
    return values.real


def reconstruct(values, kern: MappingKernel | None = None) -> np.ndarray:
    """Invert a phase-space grid back to the operator (1/n) sum W(p) G(p)."""
    w = np.asarray(values, dtype=float)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise ValueError(f"expected a square grid, got shape {w.shape}")
    if kern is None:
        kern = kernel(w.shape[0])
    if kern.dim != w.shape[0]:
        raise ValueError(f"dimension mismatch: kernel {kern.dim} vs grid {w.shape[0]}")
    return np.einsum("mn,mnij->ij", w, kern.ops) / kern.dim


def grid_overlap(wa, wb) -> float:
    """Tr[rho sigma] recovered from two phase-space grids.

    Works for both single grids (n x n) and pair grids (2 x 2 x 2 x 2);
    the normalization is 1/sqrt(number of cells).
    """
    a = np.asarray(wa, dtype=float)
    b = np.asarray(wb, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"grid shape mismatch: {a.shape} vs {b.shape}")
    weight = round(a.size**0.5)
    return float(np.sum(a * b) / weight)
