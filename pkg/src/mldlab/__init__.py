"""mldlab: exact minimal log discrepancies of plane ideal systems.

Log resolutions by point blow-ups, discrepancy bookkeeping, an
independent monomial-valuation oracle, effective stability constants and
a perturbation harness checking that the mld is unchanged by any edit of
the ideals that agrees modulo m^l.
"""

from .blowup import (
    INF,
    ResolutionGraph,
    blow_up,
    log_resolution,
    refine_for_D,
    replay_resolution,
    snc_status,
    to_dot,
)
from .errors import MldlabError
from .ideals import (
    ORIGIN,
    RationalPoint,
    divisorial_split,
    ideal_order_at,
    order_at,
    rational_cosupport,
)
from .mld import (
    KLT,
    LC_NOT_PLT,
    MINUS_INFINITY,
    NOT_LC,
    PLT_WITH_CENTRE,
    BoundarySpec,
    MldReport,
    MonomialValuation,
    StabilityCertificate,
    classify,
    compute_constants,
    evaluate_graph,
    log_discrepancy,
    mld_at_origin,
    monomial_mld,
    monomial_valuation_data,
)
from .poly import BiPoly, format_poly, poly_parse
from .stability import (
    Perturbation,
    VerificationReport,
    centre_case,
    empirical_min_level,
    equiv_l_check,
    perturb,
    verify_lemma5,
    verify_semicontinuity,
)
from .system import IdealFactor, IdealSystem

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "BoundarySpec",
    "IdealFactor",
    "IdealSystem",
    "INF",
    "KLT",
    "LC_NOT_PLT",
    "MINUS_INFINITY",
    "MldReport",
    "MldlabError",
    "MonomialValuation",
    "NOT_LC",
    "ORIGIN",
    "PLT_WITH_CENTRE",
    "Perturbation",
    "RationalPoint",
    "ResolutionGraph",
    "StabilityCertificate",
    "VerificationReport",
    "blow_up",
    "centre_case",
    "classify",
    "compute_constants",
    "divisorial_split",
    "empirical_min_level",
    "equiv_l_check",
    "evaluate_graph",
    "format_poly",
    "ideal_order_at",
    "log_discrepancy",
    "log_resolution",
    "mld_at_origin",
    "monomial_mld",
    "monomial_valuation_data",
    "order_at",
    "perturb",
    "poly_parse",
    "rational_cosupport",
    "refine_for_D",
    "replay_resolution",
    "snc_status",
    "to_dot",
    "verify_lemma5",
    "verify_semicontinuity",
]
