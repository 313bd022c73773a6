"""tilekit: exact-arithmetic t-complement tilings of the integers.

Decides whether a finite weighted multiset of integers admits a
t-complement, constructs the complement as a periodic weight sequence,
and computes its minimal period along two independent routes: cycle
structure of the window recurrence, and cyclotomic factorization of the
reduced generating-function denominator.  Includes exact integer
polynomial arithmetic (cyclotomic polynomials, multiplicities,
resultants) and a desk-scale verification lab for the supporting norm
and multiplicity lemmas.
"""

from .engine import (
    DEFAULT_BUDGET,
    DEFAULT_EPSILON,
    STATUS_INCONCLUSIVE,
    STATUS_OK,
    IntegrityError,
    TilingReport,
    algebraic_minimal_period,
    biro_bound_log,
    find_complement,
    gamma_rational_form,
    minimal_period,
    newman_bound,
    step_backward,
    step_forward,
    weight_cap_check,
)
from .lemmas import (
    LemmaEntry,
    LemmaReport,
    check_lemma1,
    check_lemma2,
    check_lemma3,
    check_lemma4,
    lemma1_suite,
    lemma2_suite,
    lemma3_suite,
    lemma4_suite,
    theorem8_bound_report,
)
from .multiset import (
    IntegerMultiset,
    LinearForm,
    PeriodicWeightSequence,
    linear_form_to_multiset,
    parse_linear_form_input,
    representation_function,
)
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    lcm_all,
    mobius,
    omega,
    tau,
    totient_range,
)
from .polynomial import (
    CyclotomicFactorization,
    DivisibilityError,
    Poly,
    conjugate_product,
    cyclotomic,
    cyclotomic_multiplicity,
    cyclotomic_part,
    cyclotomic_value,
    exact_div,
    poly_from_strings,
    poly_gcd,
    poly_to_strings,
    resultant,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_EPSILON",
    "STATUS_INCONCLUSIVE",
    "STATUS_OK",
    "CyclotomicFactorization",
    "DivisibilityError",
    "IntegerMultiset",
    "IntegrityError",
    "LemmaEntry",
    "LemmaReport",
    "LinearForm",
    "PeriodicWeightSequence",
    "Poly",
    "TilingReport",
    "algebraic_minimal_period",
    "biro_bound_log",
    "check_lemma1",
    "check_lemma2",
    "check_lemma3",
    "check_lemma4",
    "conjugate_product",
    "cyclotomic",
    "cyclotomic_multiplicity",
    "cyclotomic_part",
    "cyclotomic_value",
    "divisors",
    "euler_phi",
    "exact_div",
    "factorize",
    "find_complement",
    "gamma_rational_form",
    "lcm_all",
    "lemma1_suite",
    "lemma2_suite",
    "lemma3_suite",
    "lemma4_suite",
    "linear_form_to_multiset",
    "minimal_period",
    "mobius",
    "newman_bound",
    "omega",
    "parse_linear_form_input",
    "poly_from_strings",
    "poly_gcd",
    "poly_to_strings",
    "representation_function",
    "resultant",
    "step_backward",
    "step_forward",
    "tau",
    "theorem8_bound_report",
    "totient_range",
    "weight_cap_check",
]
