"""Generator sets for the special unitary groups of dimensions 2 and 4.

Covers the algebraic law checks (orthonormality, closure, Jacobi
identities, trace products), Bloch vectors, phase-space representatives
of each generator, and the closed-form Wigner functions built on them.
"""

from __future__ import annotations

import dataclasses
from functools import lru_cache

import numpy as np

from .kernel import schwinger_pair, _unitary_power
from .linalg import DEFAULT_TOLERANCE, matrix_of

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
for _p in (PAULI_X, PAULI_Y, PAULI_Z):
    _p.flags.writeable = False


def _transition(alpha: int, beta: int) -> np.ndarray:
    m = np.zeros((4, 4), dtype=complex)
    m[alpha, beta] = 1.0
    return m


def _su4_matrices() -> tuple[np.ndarray, ...]:
    def sym(a, b):
        return _transition(a, b) + _transition(b, a)

    def asym(a, b):
        return -1j * (_transition(a, b) - _transition(b, a))

    return (
        sym(0, 1),
        asym(0, 1),
        np.diag([1, -1, 0, 0]).astype(complex),
        sym(0, 2),
        asym(0, 2),
        sym(1, 2),
        asym(1, 2),
        np.diag([1, 1, -2, 0]).astype(complex) / np.sqrt(3),
        sym(0, 3),
        asym(0, 3),
        sym(1, 3),
        asym(1, 3),
        sym(2, 3),
        asym(2, 3),
        np.diag([1, 1, 1, -3]).astype(complex) / np.sqrt(6),
    )


@dataclasses.dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Ordered traceless Hermitian generators with Tr[g_i g_j] = 2 delta_ij."""

    dim: int
    matrices: tuple[np.ndarray, ...]

    def __len__(self) -> int:
        return len(self.matrices)

    def __getitem__(self, i: int) -> np.ndarray:
        return self.matrices[i]

    def __iter__(self):
        return iter(self.matrices)

    def stack(self) -> np.ndarray:
        return np.stack(self.matrices)


@lru_cache(maxsize=None)
def generators(n: int) -> GeneratorSet:
    """Generator set for dimension n; supported dimensions are 2 and 4."""
    if n == 2:
        matrices = (PAULI_X.copy(), PAULI_Y.copy(), PAULI_Z.copy())
    elif n == 4:
        matrices = _su4_matrices()
    else:
        raise ValueError(f"unsupported dimension {n}; expected 2 or 4")
    for m in matrices:
        m.flags.writeable = False
    return GeneratorSet(dim=n, matrices=matrices)


# Each dimension-4 generator as a polynomial in the clock/shift pair;
# terms are (coefficient, clock power, shift power).
_R3 = np.sqrt(3)
_R6 = np.sqrt(6)
_SU4_CLOCK_SHIFT_TERMS = (
    # 0: coupling of levels 0 and 1, real part
    ((0.25, 0, 1), (0.25, 0, 3), (0.25, 1, 1), (0.25, 2, 1), (0.25, 3, 1),
     (-0.25j, 1, 3), (-0.25, 2, 3), (0.25j, 3, 3)),
    # 1: coupling of levels 0 and 1, imaginary part
    ((-0.25j, 0, 1), (0.25j, 0, 3), (-0.25j, 1, 1), (-0.25j, 2, 1), (-0.25j, 3, 1),
     (0.25, 1, 3), (-0.25j, 2, 3), (-0.25, 3, 3)),
    # 2: population difference of levels 0 and 1
    (((1 + 1j) / 4, 1, 0), (0.5, 2, 0), ((1 - 1j) / 4, 3, 0)),
    # 3: coupling of levels 0 and 2, real part
    ((0.5, 0, 2), (0.5, 2, 2)),
    # 4: coupling of levels 0 and 2, imaginary part
    ((-0.5j, 1, 2), (-0.5j, 3, 2)),
    # 5: coupling of levels 1 and 2, real part
    ((0.25, 0, 1), (0.25, 0, 3), (-0.25j, 1, 1), (-0.25, 2, 1), (0.25j, 3, 1),
     (-0.25, 1, 3), (0.25, 2, 3), (-0.25, 3, 3)),
    # 6: coupling of levels 1 and 2, imaginary part
    ((-0.25j, 0, 1), (0.25j, 0, 3), (-0.25, 1, 1), (0.25j, 2, 1), (0.25, 3, 1),
     (-0.25j, 1, 3), (0.25j, 2, 3), (-0.25j, 3, 3)),
    # 7: diagonal on levels 0, 1 against 2
    (((3 - 1j) / (4 * _R3), 1, 0), (-1 / (2 * _R3), 2, 0), ((3 + 1j) / (4 * _R3), 3, 0)),
    # 8: coupling of levels 0 and 3, real part
    ((0.25, 0, 1), (0.25, 0, 3), (0.25j, 1, 1), (-0.25, 2, 1), (-0.25j, 3, 1),
     (0.25, 1, 3), (0.25, 2, 3), (0.25, 3, 3)),
    # 9: coupling of levels 0 and 3, imaginary part
    ((0.25j, 0, 1), (-0.25j, 0, 3), (-0.25, 1, 1), (-0.25j, 2, 1), (0.25, 3, 1),
     (-0.25j, 1, 3), (-0.25j, 2, 3), (-0.25j, 3, 3)),
    # 10: coupling of levels 1 and 3, real part
    ((0.5, 0, 2), (-0.5, 2, 2)),
    # 11: coupling of levels 1 and 3, imaginary part
    ((-0.5, 1, 2), (0.5, 3, 2)),
    # 12: coupling of levels 2 and 3, real part
    ((0.25, 0, 1), (0.25, 0, 3), (-0.25, 1, 1), (0.25, 2, 1), (-0.25, 3, 1),
     (0.25j, 1, 3), (-0.25, 2, 3), (-0.25j, 3, 3)),
    # 13: coupling of levels 2 and 3, imaginary part
    ((-0.25j, 0, 1), (0.25j, 0, 3), (0.25j, 1, 1), (-0.25j, 2, 1), (0.25j, 3, 1),
     (-0.25, 1, 3), (-0.25j, 2, 3), (0.25, 3, 3)),
    # 14: diagonal on levels 0, 1, 2 against 3
    ((-1j / _R6, 1, 0), (1 / _R6, 2, 0), (1j / _R6, 3, 0)),
)


def generator_from_schwinger(i: int) -> np.ndarray:
    """Dimension-4 generator i (0-based) built from its clock/shift polynomial."""
    if not 0 <= i < 15:
        raise IndexError(f"generator index {i} out of range [0, 15)")
    pair = schwinger_pair(4)
    total = np.zeros((4, 4), dtype=complex)
    for coeff, eta, xi in _SU4_CLOCK_SHIFT_TERMS[i]:
        total += coeff * (_unitary_power(pair.u, eta) @ _unitary_power(pair.v, xi))
    return total


@dataclasses.dataclass(frozen=True, eq=False)
class StructureConstants:
    """Antisymmetric and symmetric structure tensors of a generator set."""

    dim: int
    antisymmetric: np.ndarray  # totally antisymmetric; fixes the commutators
    symmetric: np.ndarray  # symmetric in the first two indices; fixes the anticommutators


def _triple_traces(stack: np.ndarray) -> np.ndarray:
    pair_products = np.einsum("iab,jbc->ijac", stack, stack)
    return np.einsum("ijab,kba->ijk", pair_products, stack)


def structure_constants(gs: GeneratorSet) -> StructureConstants:
    """Structure tensors from the trace formulas.

    antisymmetric_ijk = -i/4 Tr[[g_i, g_j] g_k] and
    symmetric_ijk     =  1/4 Tr[{g_i, g_j} g_k].
    """
    stack = gs.stack()
    triples = _triple_traces(stack)
    swapped = np.transpose(triples, (1, 0, 2))
    f = np.real(-0.25j * (triples - swapped))
    d = np.real(0.25 * (triples + swapped))
    f.flags.writeable = False
    d.flags.writeable = False
    return StructureConstants(dim=gs.dim, antisymmetric=f, symmetric=d)


@dataclasses.dataclass(frozen=True)
class AlgebraReport:
    """Maximum deviation per algebraic law, with pass/fail at a tolerance."""

    tolerance: float
    deviations: dict[str, float]

    @property
    def results(self) -> dict[str, bool]:
        return {law: dev <= self.tolerance for law, dev in self.deviations.items()}

    @property
    def all_pass(self) -> bool:
        return all(self.results.values())


def verify_algebra(gs: GeneratorSet, tol: float = DEFAULT_TOLERANCE) -> AlgebraReport:
    """Exhaustively check the generator algebra and report deviations.

    Laws covered: Hermiticity, tracelessness, trace orthonormality,
    commutator and anticommutator closure through the structure tensors,
    both Jacobi identities, and the cubic and quartic trace product
    formulas.
    """
    stack = gs.stack()
    m, n = stack.shape[0], gs.dim
    eye = np.eye(n, dtype=complex)
    sc = structure_constants(gs)
    f, d = sc.antisymmetric, sc.symmetric
    j = d + 1j * f

    comms = np.einsum("iab,jbc->ijac", stack, stack) - np.einsum("jab,ibc->ijac", stack, stack)
    antis = np.einsum("iab,jbc->ijac", stack, stack) + np.einsum("jab,ibc->ijac", stack, stack)

    deviations = {
        "hermiticity": float(np.max(np.abs(stack - np.conj(np.transpose(stack, (0, 2, 1)))))),
        "tracelessness": float(np.max(np.abs(np.trace(stack, axis1=1, axis2=2)))),
        "orthonormality": float(
            np.max(np.abs(np.einsum("iab,jba->ij", stack, stack) - 2 * np.eye(m)))
        ),
        "commutator_closure": float(
            np.max(np.abs(comms - 2j * np.einsum("ijk,kab->ijab", f, stack)))
        ),
        "anticommutator_closure": float(
            np.max(
                np.abs(
                    antis
                    - (4.0 / n) * np.einsum("ij,ab->ijab", np.eye(m), eye)
                    - 2 * np.einsum("ijk,kab->ijab", d, stack)
                )
            )
        ),
    }

    # both Jacobi identities, the second with anticommutators inside
    def cyclic(inner):
        term = np.einsum("iab,jkbc->ijkac", stack, inner) - np.einsum(
            "jkab,ibc->ijkac", inner, stack
        )
        return term + np.transpose(term, (1, 2, 0, 3, 4)) + np.transpose(term, (2, 0, 1, 3, 4))

    deviations["jacobi_commutator"] = float(np.max(np.abs(cyclic(comms))))
    deviations["jacobi_mixed"] = float(np.max(np.abs(cyclic(antis))))

    triples = _triple_traces(stack)
    deviations["triple_trace"] = float(np.max(np.abs(triples - 2 * j)))

    pair_products = np.einsum("iab,jbc->ijac", stack, stack)
    quartics = np.einsum("ijab,klba->ijkl", pair_products, pair_products)
    expected = (4.0 / n) * np.einsum("ij,kl->ijkl", np.eye(m), np.eye(m)) + 2 * np.einsum(
        "ijp,pkl->ijkl", j, j
    )
    deviations["quartic_trace"] = float(np.max(np.abs(quartics - expected)))

    return AlgebraReport(tolerance=tol, deviations=deviations)


def bloch_vector(rho, gs: GeneratorSet | None = None) -> np.ndarray:
    """Generator mean values Tr[g_i rho] as a real vector of length N^2 - 1."""
    a = matrix_of(rho)
    if gs is None:
        gs = generators(a.shape[0])
    if gs.dim != a.shape[0]:
        raise ValueError(f"dimension mismatch: generators {gs.dim} vs matrix {a.shape[0]}")
    return np.real(np.einsum("iab,ba->i", gs.stack(), a))


def density_from_bloch(components, n: int) -> np.ndarray:
    """Rebuild the matrix I/n + (1/2) sum_i components_i g_i."""
    v = np.asarray(components, dtype=float)
    gs = generators(n)
    if v.shape != (len(gs),):
        raise ValueError(f"expected {len(gs)} components, got shape {v.shape}")
    return np.eye(n, dtype=complex) / n + 0.5 * np.einsum("i,iab->ab", v, gs.stack())


def _mu_ratio(mu: int, half_offset: float) -> float:
    # Dirichlet-type ratio sin(4x)/sin(x) at x = (mu - half_offset) * pi/4;
    # half-integer offsets keep the denominator nonzero at integer mu.
    x = (mu - half_offset) * np.pi / 4.0
    return float(np.sin(4.0 * x) / np.sin(x))


def _cos_half(nu: int) -> float:
    return float((1, 0, -1, 0)[nu % 4])


def _sin_half(nu: int) -> float:
    return float((0, 1, 0, -1)[nu % 4])


def _alternating(nu: int) -> float:
    return float(1 - 2 * (nu % 2))


def _delta4(mu: int, k: int) -> float:
    return 1.0 if mu % 4 == k else 0.0


def generator_representative(i: int, mu: int, nu: int, dim: int = 4) -> float:
    """Phase-space representative of generator i in closed form.

    Total over all integer points: the grid indices enter through their
    residues modulo the dimension.  For dimension 4 these are the
    standard closed forms of the four-level convention; the diagonal
    generators agree with the invertible kernel while coherence sectors
    deviate from it (that convention is not informationally complete).
    """
    if dim not in (2, 4):
        raise ValueError(f"unsupported dimension {dim}; expected 2 or 4")
    mu %= dim
    nu %= dim
    if dim == 2:
        if not 0 <= i < 3:
            raise IndexError(f"generator index {i} out of range [0, 3)")
        return (
            _alternating(nu),
            _alternating(mu + nu + 1),
            _alternating(mu),
        )[i]
    if not 0 <= i < 15:
        raise IndexError(f"generator index {i} out of range [0, 15)")
    if i == 0:
        return 0.5 * _cos_half(nu) * _mu_ratio(mu, 0.5)
    if i == 1:
        return 0.5 * _sin_half(nu) * _mu_ratio(mu, 0.5)
    if i == 2:
        return _delta4(mu, 0) - _delta4(mu, 1)
    if i == 3:
        return 2.0 * _alternating(nu) * _delta4(mu, 1)
    if i == 4:
        return 0.0  # 2 sin(nu pi) vanishes at every integer point
    if i == 5:
        return 0.5 * _cos_half(nu) * _mu_ratio(mu, 1.5)
    if i == 6:
        return 0.5 * _sin_half(nu) * _mu_ratio(mu, 1.5)
    if i == 7:
        return (_delta4(mu, 0) + _delta4(mu, 1) - 2.0 * _delta4(mu, 2)) / np.sqrt(3)
    if i == 8:
        return 0.5 * _alternating(nu) * _cos_half(nu) * _mu_ratio(mu, 1.5)
    if i == 9:
        return 0.5 * _alternating(nu) * _sin_half(nu) * _mu_ratio(mu, 1.5)
    if i == 10:
        return 2.0 * _alternating(nu) * _delta4(mu, 2)
    if i == 11:
        return 0.0  # 2 sin(nu pi) vanishes at every integer point
    if i == 12:
        return 0.5 * _cos_half(nu) * _mu_ratio(mu, 2.5)
    if i == 13:
        return 0.5 * _sin_half(nu) * _mu_ratio(mu, 2.5)
    return (
        _delta4(mu, 0) + _delta4(mu, 1) + _delta4(mu, 2) - 3.0 * _delta4(mu, 3)
    ) / np.sqrt(6)


@lru_cache(maxsize=None)
def _representative_table(dim: int) -> np.ndarray:
    count = dim * dim - 1
    table = np.zeros((count, dim, dim))
    for i in range(count):
        for mu in range(dim):
            for nu in range(dim):
                table[i, mu, nu] = generator_representative(i, mu, nu, dim)
    table.flags.writeable = False
    return table


def wigner_su2(p) -> np.ndarray:
    """2x2 phase-space grid of a qubit state given its polarization vector."""
    p = np.asarray(p, dtype=float)
    if p.shape != (3,):
        raise ValueError(f"expected a 3-component polarization vector, got shape {p.shape}")
    norm_sq = float(p @ p)
    if norm_sq > 1.0 + DEFAULT_TOLERANCE:
        raise ValueError(f"polarization vector lies outside the unit ball: |P|^2 = {norm_sq}")
    grid = np.empty((2, 2))
    for mu in range(2):
        for nu in range(2):
            grid[mu, nu] = 0.5 * (
                1.0
                + _alternating(nu) * p[0]
                + _alternating(mu + nu + 1) * p[1]
                + _alternating(mu) * p[2]
            )
    return grid


def wigner_su4(rho) -> np.ndarray:
    """4x4 phase-space grid of a four-level state, in closed form.

    Equals the kernel-trace evaluation Tr[G†(mu, nu) rho] on every cell.
    """
    a = matrix_of(rho)
    if a.shape[0] != 4:
        raise ValueError(f"dimension must be 4, got {a.shape[0]}")
    means = bloch_vector(a)
    return 0.25 + 0.5 * np.einsum("i,imn->mn", means, _representative_table(4))
