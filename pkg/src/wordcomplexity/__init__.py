"""Subword complexity and return-time profiles of b-ary expansions, with certified digits,
continued fractions and the lower bounds that tie them to the irrationality exponent."""
from .analysis import (
    ComplexityProfile,
    ExponentEstimate,
    ReturnProfile,
    complexity_lower_from_return,
    complexity_profile,
    exponent_estimate,
    jump_indices,
    profiles,
    return_profile,
)
from .diophantine import (
    BoundTable,
    ContinuedFraction,
    IrrationalityEstimate,
    bound_table,
    continued_fraction,
    critical_mu,
    log_example_bound,
    mu_estimate,
    mu_lower_from_rep,
    rep_lower_from_mu,
    rep_side_bounds,
)
from .expansions import (
    CertifiedDigits,
    ConstantSpec,
    QuadraticSurd,
    generate_digits,
    generate_word,
    lacunary_positions,
    parse_spec,
)
from .structure import (
    PowerDecomposition,
    build_power,
    commuting_roots,
    overlap_period,
    power_decompose,
    smallest_period,
)
from .verify import RunConfig, VerificationCase, VerificationReport, emit_report, run_case
from .words import Alphabet, Factor, SymbolWord, factor_equal, word_from_text, word_to_text

__version__ = "0.1.0"
