"""Exact computation in the shifted double Schur basis.

Partitions and tableau counting, sparse exact-rational polynomials over the
x/y/torus-weight variable universe, double and shifted double Schur
functions, equivariant Littlewood-Richardson structure constants by three
independent algorithms, and the coproduct on shifted power sums.
"""

from .comult import (
    PowerPolynomial,
    PrimitivityReport,
    TensorElement,
    coproduct_power_polynomial,
    power_sum_torus,
    relabel_even_odd,
    rho_pullback_power_sum,
    shifted_power_sum,
    verify_primitivity,
)
from .errors import (
    AsymmetricInputError,
    DegenerateSpecializationError,
    DomainError,
    InexactDivisionError,
    InternalInconsistencyError,
    RankTooSmallError,
    UnresolvableIndexError,
    UsageError,
)
from .partitions import (
    Partition,
    SkewShape,
    canonical_key,
    contains,
    count_standard_tableaux,
    hook_h,
    parse_partition,
    partitions_between,
    partitions_up_to,
)
from .polyring import (
    ONE,
    SYMBOLIC,
    ZERO,
    IntSeqWindow,
    Poly,
    YSpec,
    canonical_string,
    const,
    divide_exact,
    poly_det,
    u,
    useq,
    x,
    y,
)
from .schur import (
    alternant_denominator,
    double_h,
    double_schur,
    falling_factorial,
    restrict_to_fixed_point,
    shifted_double_schur,
    shifted_schur_stable,
    vandermonde,
)
from .structconst import (
    SchurExpansion,
    compute_expansion,
    expand_in_shifted_basis,
    molev_coefficient,
    multiplication_table,
    multiply_schubert,
    structure_constants_via_localization,
)

__version__ = "0.1.0"
