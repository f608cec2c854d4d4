"""Pretty good state transfer in qubit chains.

Exact decisions for Heisenberg (Laplacian) and XY (adjacency) chains from
integer relations among cyclotomic eigenvalues, plus numerical transfer-time
search over ``U(t) = exp(i t M)``.
"""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    Graph,
    GraphError,
    GraphFormatError,
    HamiltonianKind,
    adjacency_matrix,
    build_path,
    build_weighted_chain,
    laplacian_matrix,
    parse_graph_text,
    single_excitation_hamiltonian,
)
from .spectral import (  # noqa: E402
    SignPattern,
    SpectralDecomposition,
    decompose,
    eigenvalue_support,
    is_cospectral,
    strong_cospectrality,
)
from .dynamics import (  # noqa: E402
    FidelityTrace,
    TransferPeak,
    detect_pst,
    evolve_amplitude,
    fidelity_trace,
    find_peak,
    n3_probability,
    phase_at_peak,
)
from .exact import (  # noqa: E402
    CycloElement,
    IntPoly,
    PGSTDecision,
    RelationLattice,
    cyclotomic_poly,
    decide_pgst_general,
    decide_pgst_laplacian,
    exact_path_laplacian_eigenvalues,
    poly_long_division,
    relation_lattice,
    witness_composite,
    witness_odd_prime,
)
