"""Binary Steinhaus triangles: construction, weights, canonical-basis formulas
and exhaustive extreme-weight exploration, all in exact arithmetic."""

from steinhaus.core import (
    BinarySequence,
    SteinhausTriangle,
    derivative,
    partial_weight,
    render,
    sequence_weight,
    triangle,
    triangle_weight,
    unit_vector,
)
from steinhaus.binomial import PrimeModulus, binom_mod_p, binom_parity, digits, entry
from steinhaus.canonical import (
    ClosedFormSpec,
    FastWeightBreakdown,
    closed_form_paper,
    derive_closed_form,
    lambda_mu_table,
    lambda_of,
    mu_of,
    recurrence_check,
    weight_bruteforce,
    weight_fast,
)
from steinhaus.extremes import (
    BudgetExceeded,
    WeightEnumerator,
    balanced_search,
    max_weight,
    minimum_positive_weight,
    verify_max_weight,
    weight_distribution,
    z_sequence,
)

__all__ = [
    "BinarySequence", "SteinhausTriangle", "derivative", "partial_weight", "render",
    "sequence_weight", "triangle", "triangle_weight", "unit_vector",
    "PrimeModulus", "binom_mod_p", "binom_parity", "digits", "entry",
    "ClosedFormSpec", "FastWeightBreakdown", "closed_form_paper", "derive_closed_form",
    "lambda_mu_table", "lambda_of", "mu_of", "recurrence_check", "weight_bruteforce",
    "weight_fast",
    "BudgetExceeded", "WeightEnumerator", "balanced_search", "max_weight",
    "minimum_positive_weight", "verify_max_weight", "weight_distribution", "z_sequence",
]

__version__ = "0.1.0"
