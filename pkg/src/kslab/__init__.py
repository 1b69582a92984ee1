"""Exact algebra for harmonic reductions in F[z, w].

Polynomials live in :class:`BiPoly` over Q, Q(i), F_p or F_{p^k}; all
arithmetic is exact.
"""

from .bipoly import (
    XY,
    ZW,
    BiPoly,
    ConicClass,
    NotDivisibleError,
    NotRealError,
    classify_conic,
    fischer_D,
    gcd,
    harmonic_split,
    hermitian_reflect,
    is_harmonic,
    mixed_part,
    separable_rank,
    xy_to_zw,
    zw_to_xy,
)
from .exactla import ExactMatrix, echelon, nullspace, rank, solve
from .fischer import (
    BoundedFailure,
    FischerDecomposition,
    dirichlet_ellipse,
    fischer_solve,
    harmonic_multiple_search,
    quartic_expand,
)
from .galois_lab import BudgetExceeded, frobenius_degree, ks_refute_by_zeros, proposition_key_experiment, subfield_contains
from .ks_lab import (
    check_product_form,
    classify_linear_in_z,
    degree_divisibility_criterion,
    ks_scan,
    modp_transfer,
    reduce_monomial,
)
from .parser import ParseError, parse_poly
from .scalar import QQ, QQI, FieldMismatchError, GaussianRational, ext_field, parse_field, prime_field

__version__ = "0.1.0"
