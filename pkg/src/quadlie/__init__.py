"""Exact-arithmetic toolkit for quadratic Lie algebras over Q."""

from .exactlin import (
    Matrix,
    Rational,
    Subspace,
    format_rational,
    nullspace,
    parse_rational,
    rref,
    solve,
    subspace_complement,
    subspace_intersect,
    subspace_sum,
)
from .liealg import (
    BilinearForm,
    LieAlgebra,
    SeriesReport,
    abelian,
    adjoint_matrices,
    bracket,
    center,
    derived_series,
    killing_form,
    lower_central_series,
    orthogonal_complement,
    quotient,
    radical,
    socle_and_jacobson,
    split_abelian,
    type_and_nilindex,
    verify_lie,
)
from .freenilp import (
    LieExpr,
    free_nilpotent,
    hall_basis,
    hall_basis_level,
    hall_dimension,
    is_hall,
    normalize,
)
from .forms import (
    FormSpace,
    FreePresentation,
    invariant_forms,
    is_quadratic,
    quotient_by_form_radical,
    recover_free_presentation,
)
from .deriv import (
    MatrixSubspace,
    derivation_space,
    inner_derivation_space,
    quotient_derivation_space,
    skew_derivation_space,
)
from .dblext import (
    DoubleExtension,
    double_extend,
    double_extend_1d,
    reconstruct_via_levi,
)
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
