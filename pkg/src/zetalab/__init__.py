"""zetalab: exact zeta-value decompositions of log-weighted cube integrals.

The pipeline turns the r-fold integral of
(-log(x1...xr))**v / (1 - x1...xr) * R(x1)...R(xr) over the unit cube into
an exact rational combination of zeta values, by way of the moment
M(s) = integral x**s R(x) dx, its r-th power's v-th derivative, and exact
partial fractions.  A certified direct-summation path and a seeded Monte
Carlo integrator provide two independent checks on every number produced.
"""

from .numtheory import binomial, generalized_harmonic, harmonic, lcm_upto
from .polys import Poly, integrate_poly_01, legendre_coeffs
from .ratfunc import (
    PartialFractionForm,
    PFTerm,
    RationalFunction,
    UnsupportedPoleError,
    partial_fractions,
    rf_add,
    rf_derivative,
    rf_mul,
    rf_normalize,
    rf_pow,
)
from .moments import (
    SummandSpec,
    build_summand,
    envelope_constant,
    moment_closed_form,
    moment_from_coeffs,
    series_partial_sum,
    tail_bound,
    term_value,
)
from .decomp import (
    CriterionRecord,
    DecompositionReport,
    ZetaCombination,
    apery_report,
    decompose,
    decomposition_report,
    rationality_criterion,
)
from .verify import (
    CrosscheckReport,
    DirectSumError,
    HighPrecisionValue,
    MCEstimate,
    crosscheck,
    direct_sum_value,
    eval_combination,
    mc_integral,
    shifted_series_value,
    zeta_value,
)

__version__ = "0.1.0"

__all__ = [
    "binomial",
    "generalized_harmonic",
    "harmonic",
    "lcm_upto",
    "Poly",
    "integrate_poly_01",
    "legendre_coeffs",
    "RationalFunction",
    "PartialFractionForm",
    "PFTerm",
    "UnsupportedPoleError",
    "partial_fractions",
    "rf_add",
    "rf_derivative",
    "rf_mul",
    "rf_normalize",
    "rf_pow",
    "SummandSpec",
    "build_summand",
    "envelope_constant",
    "moment_closed_form",
    "moment_from_coeffs",
    "series_partial_sum",
    "tail_bound",
    "term_value",
    "ZetaCombination",
    "decompose",
    "DecompositionReport",
    "decomposition_report",
    "apery_report",
    "CriterionRecord",
    "rationality_criterion",
    "HighPrecisionValue",
    "zeta_value",
    "eval_combination",
    "DirectSumError",
    "direct_sum_value",
    "MCEstimate",
    "mc_integral",
    "CrosscheckReport",
    "crosscheck",
    "shifted_series_value",
]
