"""Exact verification toolkit for large-sieve quadratic forms with
integer polynomial phases: multiplicative arithmetic kernels, root counts
modulo prime powers, Farey exponential-sum kernels, the sieve form and its
bound chain, power-sum sharpness checks, and Dirichlet character sums.
"""

from .arith import (
    Factorization,
    euler_phi,
    factorize,
    gcd_conv,
    is_prime,
    moebius,
    omega,
    primes_up_to,
    ramanujan_sum,
    theta,
    valuation,
)
from .characters import (
    CharacterTable,
    CorollaryReport,
    DirichletCharacter,
    character_table,
    corollary_lhs,
    corollary_report,
    inducing_character,
    primitive_count,
)
from .errors import BudgetError
from .farey import (
    FareyFraction,
    farey_sequence,
    farey_size,
    gcd_sum_bound,
    kernel_K,
    kernel_direct,
    kernel_exact,
)
from .polyroots import (
    IntPolynomial,
    RhoProfile,
    RootSetModM,
    a_exponent,
    euler_majorant,
    eval_mod,
    lift_roots,
    prop1_sum,
    rho,
    rho_profile,
    rho_shifted,
    roots_mod_prime,
    spacing_check,
    vandermonde_check,
)
from .sharpness import (
    IncompatibleModulusError,
    PowerSumInstance,
    complete_sum,
    ex1_check,
    incomplete_check,
    lower_bound_demo,
    solution_count,
    weil_check,
)
from .sieve import (
    SieveInstance,
    SieveReport,
    envelope_exponent,
    lhs_exact,
    lhs_numeric,
    row_sup,
    row_sup_majorant,
    theorem1_report,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "CharacterTable",
    "CorollaryReport",
    "DirichletCharacter",
    "Factorization",
    "FareyFraction",
    "IncompatibleModulusError",
    "IntPolynomial",
    "PowerSumInstance",
    "RhoProfile",
    "RootSetModM",
    "SieveInstance",
    "SieveReport",
    "a_exponent",
    "character_table",
    "complete_sum",
    "corollary_lhs",
    "corollary_report",
    "envelope_exponent",
    "euler_majorant",
    "euler_phi",
    "eval_mod",
    "ex1_check",
    "factorize",
    "farey_sequence",
    "farey_size",
    "gcd_conv",
    "gcd_sum_bound",
    "incomplete_check",
    "inducing_character",
    "is_prime",
    "kernel_K",
    "kernel_direct",
    "kernel_exact",
    "lhs_exact",
    "lhs_numeric",
    "lift_roots",
    "lower_bound_demo",
    "moebius",
    "omega",
    "primes_up_to",
    "primitive_count",
    "prop1_sum",
    "ramanujan_sum",
    "rho",
    "rho_profile",
    "rho_shifted",
    "roots_mod_prime",
    "row_sup",
    "row_sup_majorant",
    "solution_count",
    "spacing_check",
    "theorem1_report",
    "theta",
    "valuation",
    "vandermonde_check",
]
