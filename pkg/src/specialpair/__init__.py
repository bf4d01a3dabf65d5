"""Special pairs of rationals and a sufficient criterion for order dominance."""

from .arith import (
    Factorization,
    FactorizationLimitError,
    NotInvertibleError,
    PreconditionError,
    PrimePower,
    Rational,
    factorize,
    format_rational,
    lte_valuation,
    mult_order,
    parse_rational,
    primes_in_range,
    reduce_mod,
    solve_power_congruence,
    squarefree_kernel,
    val_of_power_minus_one,
    vp,
)
from .census import (
    CensusRecord,
    CensusSummary,
    HypothesisReport,
    PipelineReport,
    hypothesis1_scan,
    iter_census,
    nonspecial_shape_statistic,
    pipeline_check,
    primitive_root_set,
    run_census,
)
from .criterion import (
    CriterionWitness,
    PairClass,
    PairClassifier,
    SpecialPrimeWitness,
    classify_pair,
    condition_iii_bruteforce,
    find_special_primes,
    order_dominance_check,
    theorem1_check,
)
from .symbols import gen_jacobi, jacobi, kronecker, legendre, lemma3_hypotheses_hold

__version__ = "0.1.0"
