"""Exact power-sum expansions for inclusion-exclusion symmetric polynomials.

Computes ``P_n(x)`` (alternating sums of n-th powers of subset sums), its
normalised cofactor ``T_r``, the polynomial part ``W_1`` of the restricted
partition function with its umbral coefficients ``f_r``, and checks the
identities, bounds and conjectured relations between them exactly.
"""

__version__ = "0.1.0"

from .exact import DomainError, Rational, bernoulli, binomial, factorial
from .identities import (
    CnrTable,
    cnr_closed,
    cnr_recursive,
    cnr_term_count,
    verify_eq28_equivalence,
    verify_relation26,
)
from .partfunc import (
    check_parity,
    compute_f_poly,
    count_partitions_brute,
    eval_f,
    eval_W1,
    f_values,
)
from .pcore import CapacityError, eval_P, eval_P_recursive
from .report import VerificationReport
from .symfunc import (
    PowerSumPoly,
    eval_poly,
    flip_even_signs,
    partitions_of,
    power_sums,
)
from .trec import (
    InterpolationError,
    T_values,
    compute_T_poly,
    eval_T_direct,
    eval_T_via_P,
    interpolate_powersum,
)
from .verify import (
    verify_bounds,
    verify_conjecture1,
    verify_conjecture2,
    verify_lemmas,
    verify_power_sum_relations,
)
