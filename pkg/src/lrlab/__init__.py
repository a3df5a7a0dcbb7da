"""Landau-Ramanujan-type counting constants.

Second-order constants of the counting functions for the divisibility of
Ramanujan's tau(n) by q in {2, 3, 5, 7, 23, 691} and for sums of two
squares: exact desk-scale oracles, budgeted L-function and prime-sum
evaluation, and the claim verdicts, plus the `lrlab` command-line front end.
"""

from .budget import ValueWithBudget
from .constants import (
    CLAIM_FALSE,
    INCONCLUSIVE,
    ConstantReport,
    b691_approx,
    b691_character_sums,
    first_order_C5,
    landau_ramanujan_K,
    omitted_products_bound,
    second_order_constant,
    table1,
    verdict,
)
from .characters import character_group, generator_character, kronecker_character
from .errors import (
    ConsistencyError,
    InvalidArgumentError,
    LrlabError,
    PreconditionError,
    ResourceLimitError,
    UnsupportedCaseError,
)
from .lseries import (
    closed_form_l_values,
    euler_gamma_value,
    gamma_k,
    l_derivative_at_1,
    prime_log_sum,
    prime_tail_bound,
    zeta_log_derivative_at_2,
)
from .modforms import lambda_mod3, odd_tau_count, tau_exact, tau_mod
from .multfn import (
    CASES,
    TABLE_CASES,
    CaseSpec,
    count_f,
    dirichlet_series_truncated,
    f_sieve,
    f_value,
    h_f,
    lambda_f_prime_power,
    lambda_table,
)
from .primes import (
    PrimeClassification,
    PrimeTable,
    classify,
    is_prime,
    kronecker_symbol,
    mult_order,
    sieve_primes,
    wilton_class,
    wilton_class_cubic,
)

__version__ = "0.1.0"
