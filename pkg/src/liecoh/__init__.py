"""Exact Chevalley-Eilenberg cohomology of the frobeniusian model Lie algebras."""

from .cohomology import (
    Cochain,
    Grading,
    attach_grading,
    ce_differential,
    coboundary_matrix,
    coboundary_space,
    cocycle_space,
    graded_dims,
    graded_spaces,
    h_dim,
    is_coboundary,
    linear_deformation,
    nr_square,
    sq1,
)
from .errors import InputError, JacobiError
from .exact_linalg import Matrix, Subspace, bareiss_rank, kernel_basis, rref, solve
from .exterior import KForm, differential_1form, frobenius_witness, is_contact_form, wedge
from .family import (
    CocycleName,
    FamilyParams,
    build_Der_F,
    build_F,
    catalogue_cocycle,
    deformation_stays_in_family,
    h1_bound_check,
    model_verification_suite,
    omega_report,
    params,
    verify_span,
)
from .lie import (
    BasisChange,
    LieAlgebra,
    apply_basis_change,
    center,
    contraction_conditions,
    derivations,
    derived_series,
    derived_subalgebra,
    from_maurer_cartan,
    heisenberg,
    is_isomorphism_witness,
    jacobi_check,
    solvable_steps,
)

__version__ = "0.1.0"
