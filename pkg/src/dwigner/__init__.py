"""Discrete Wigner functions on finite phase spaces.

Tools for two-level, two-qubit and four-level quantum states: clock and
shift operators, the phase-point operator basis, generator sets for the
special unitary groups of dimensions 2 and 4, named state families,
correlation signatures, super-fidelity, and a single-ququart parity
algorithm simulation, plus file formats and a CLI.
"""

from .algorithm import (
    AlgorithmStep,
    AlgorithmTrace,
    fourier4,
    measure_probabilities,
    permutation_pulse,
    run_parity_algorithm,
)
from .fidelity import state_overlap, super_fidelity
from .generators import (
    AlgebraReport,
    GeneratorSet,
    StructureConstants,
    bloch_vector,
    density_from_bloch,
    generator_from_schwinger,
    generator_representative,
    generators,
    structure_constants,
    verify_algebra,
    wigner_su2,
    wigner_su4,
)
from .io import emit_grid, parse_grid, parse_matrix, serialize_matrix
from .kernel import (
    MappingKernel,
    SchwingerPair,
    grid_overlap,
    kernel,
    phase_exponent,
    reconstruct,
    schwinger_pair,
    symmetrized_basis,
    wigner_grid,
)
from .linalg import (
    DEFAULT_TOLERANCE,
    DensityMatrix,
    DensityMatrixError,
    PositivityReport,
    hermitian_eigenvalues,
    positivity_inequalities,
    purity,
    trace_product,
    validate_density,
)
from .states import (
    BELL_KINDS,
    MarginalPair,
    XState,
    bell,
    bell_fano,
    bell_wigner_pair,
    bell_wigner_su4,
    gisin,
    gisin_from_combinations,
    munro,
    peres_horodecki,
    werner,
    werner_wigner,
    xstate_delta,
    xstate_from_matrix,
    xstate_marginals,
    xstate_reduced_wigner,
    xstate_wigner,
)
from .twoqubit import (
    FanoCoefficients,
    delta_pair,
    density_from_su4_coefficients,
    fano_compose,
    fano_extract,
    fano_matrix,
    pair_index,
    reduced_density,
    reduced_wigner,
    su4_coefficients,
    wigner_pair,
    wigner_pair_from_matrix,
)

__version__ = "0.1.0"
