"""overrank: an exact q-series engine and verification harness for
overpartition rank-difference identities.

The package builds every generating function, infinite product and
generalized Lambert series in the rank-difference circle of identities with
exact rational arithmetic, and machine-verifies each identity coefficient by
coefficient to a configurable truncation order, cross-checked against a
combinatorial enumeration oracle.
"""

from .combinat import (
    ENUM_CAP,
    Overpartition,
    RankTable,
    enumerate_overpartitions,
    nbar,
    nbar_class,
    nbar_class_series,
    nbar_series,
    pbar_series,
    rank,
    rank_table,
)
from .errors import (
    BeyondTruncation,
    CapExceeded,
    NegativeExponent,
    OverrankError,
    PoleHit,
    UnknownIdentity,
    ZeroExponent,
    ZeroLeadingTerm,
)
from .lambert import (
    GFuncSpec,
    LambertSpec,
    expand_geom,
    g_func,
    g_index,
    g_series,
    s_bar,
    sigma,
    sigma_ab,
    sigma_primed,
    verify_lemma41,
    verify_lemma42,
    widened_summation,
)
from .products import (
    PochFactor,
    ProductSpec,
    SignedMonomial,
    big_p,
    eval_product,
    p_index,
    p_mono,
    p_zero,
    pochhammer_inf,
    theta,
    triple_product,
    verify_addition,
    verify_hickerson,
    verify_lemma31,
)
from .rankdiff import (
    FinalFormSpec,
    FormulaTerm,
    PochTerm,
    RankDiffKey,
    brackets,
    combination_lhs,
    combination_rank_side,
    combination_theorem_side,
    rank_diff_formula,
    rank_diff_oracle,
    s_bar_b_decomposition,
    s_bar_final_form,
    sigma_coefficient_bracket,
    verify_check,
    verify_sbar_closed,
)
from .registry import IdentityEntry, list_identities, reports_json, run_suite, verify
from .report import IdentityReport, Mismatch, compare
from .series import (
    Coefficient,
    LaurentSeries,
    add,
    coeff,
    extract_progression,
    first_mismatch,
    inverse,
    mul,
    series_equal,
    substitute_power,
)

__version__ = "0.1.0"
