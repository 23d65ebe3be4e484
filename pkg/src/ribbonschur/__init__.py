"""Exact computations with ribbon Schur functions, compositions and the F-positive cone."""

from .compops import (
    circ,
    equivalence_class,
    equivalent,
    irreducible_factorization,
)
from .compositions import (
    Composition,
    Partition,
    coarsening_multiset,
    composition_of,
    compositions,
    descent_set,
    partitions,
    reverse,
    type_profile,
)
from .cone import Multicollection, extreme_rays, facet_report, fully_balanced, kappa_values
from .errors import NotSymmetricError, ResourceLimitError
from .perms import Permutation, descent_pair_matrix, star, tensor
from .qsym import QsymExpr, is_symmetric, quasi_shuffle_product, to_f, to_m
from .sym import (
    SkewShape,
    jacobi_trudi,
    lambda_tilde,
    ribbon_in_F,
    ribbon_in_h,
    ribbon_lr_coeffs,
    ribbon_shape,
    schur_extract,
    schur_in_F,
    spread,
)

__version__ = "0.1.0"

__all__ = [
    "Composition",
    "Partition",
    "Permutation",
    "QsymExpr",
    "SkewShape",
    "Multicollection",
    "NotSymmetricError",
    "ResourceLimitError",
    "circ",
    "coarsening_multiset",
    "composition_of",
    "compositions",
    "descent_pair_matrix",
    "descent_set",
    "equivalence_class",
    "equivalent",
    "extreme_rays",
    "facet_report",
    "fully_balanced",
    "irreducible_factorization",
    "is_symmetric",
    "jacobi_trudi",
    "kappa_values",
    "lambda_tilde",
    "partitions",
    "quasi_shuffle_product",
    "reverse",
    "ribbon_in_F",
    "ribbon_in_h",
    "ribbon_lr_coeffs",
    "ribbon_shape",
    "schur_extract",
    "schur_in_F",
    "spread",
    "star",
    "tensor",
    "to_f",
    "to_m",
    "type_profile",
]
