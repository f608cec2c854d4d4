from .polynomials import IntPoly, cyclotomic_poly, divides, euler_phi, poly_long_division
from .cyclotomic import CycloElement, linear_combination
from .lattice import hermite_normal_form, integer_kernel, rational_kernel
from .decision import (
    ExactArithmeticError,
    PGSTDecision,
    RelationLattice,
    decide_pgst_adjacency_path,
    decide_pgst_general,
    decide_pgst_laplacian,
    exact_path_adjacency_eigenvalues,
    exact_path_laplacian_eigenvalues,
    is_relation,
    laplacian_as_general,
    path_laplacian_support,
    relation_lattice,
    sigma_parity,
)
from .witnesses import (
    Witness,
    decide_by_long_division,
    is_power_of_two,
    is_prime,
    odd_index_sum,
    blocking_witness,
    power_of_two_relations,
    relation_divides,
    relation_polynomial,
    witness_composite,
    witness_odd_prime,
)
