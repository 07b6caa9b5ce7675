"""gaussorder: Gauss periods and related high-order elements of F_p[x]/Phi_r(x).

The package constructs the field F_p(theta) = F_p[x]/Phi_r(x) for primes p, r
with p primitive modulo r, builds the candidate high-order elements
theta^e (theta^f + a) and the combined element z, computes exact
multiplicative orders at desk scale, evaluates partition-count and
closed-form lower bounds on those orders, and verifies order >= bound by
exhaustive sweeps and brute-force oracles.
"""

from .arith import (
    DEFAULT_BIT_GUARD,
    Factorization,
    factorize,
    is_prime,
    is_primitive_root,
    multiplicative_order,
    two_adic_part,
)
from .bounds import (
    BOUND_NAMES,
    EXAMPLE_PAIRS,
    BoundReport,
    classify_regime,
    closed_form,
    closed_form_case1,
    closed_form_case2,
    exact_bound_z1,
    exact_bound_z2,
    exact_bound_z3,
    log2_int,
    render_table,
    table_row,
)
from .errors import (
    BadConstant,
    BranchUndefined,
    CapExceeded,
    ExponentNotCoprime,
    GaussOrderError,
    GuardExceeded,
    InvalidParameter,
    NotCoprime,
    NotPrime,
    NotPrimitiveRoot,
    ResourceGuard,
    WrongRegime,
    ZeroConstant,
    ZeroElement,
)
from .field import (
    FieldElement,
    FieldParams,
    build_element,
    build_z,
    constant,
    cyclotomic_is_irreducible,
    frobenius,
    gauss_period,
    make_params,
    mobius_factor,
    monomial,
    one,
    theta,
    z_factors,
    zero,
)
from .order import (
    OrderResult,
    ZDecompositionReport,
    decompose_vw,
    element_order,
    subgroup_order_pair,
    verify_z_decomposition,
)
from .partitions import (
    DEFAULT_ENUMERATION_CAP,
    PartitionSpec,
    count_partitions,
    count_partitions_bounded,
    count_partitions_nondivisible,
    enumerate_partitions_bounded,
)
from .verify import (
    PRODUCT_VARIANTS,
    SweepReport,
    check_frobenius_conjugates,
    check_gauss_period_subfield,
    check_partition_products_distinct,
    sweep,
)

__version__ = "0.1.0"
