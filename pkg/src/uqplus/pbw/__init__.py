"""PBW presentations of iterated Ore extensions and their rewriting engine."""

from uqplus.pbw.builtins import BUILTIN_NAMES, UnknownAlgebraError, builtin_presentation
from uqplus.pbw.core import (
    STEP_GUARD,
    AlgebraElement,
    Presentation,
    PresentationError,
    RewriteLimitError,
    normal_form,
)
from uqplus.pbw.identities import IDENTITIES, IdentityResult, identity_names, paper_identity
from uqplus.pbw.ops import (
    AlgebraHom,
    ConfluenceReport,
    HomReport,
    NormalityReport,
    confluence_check,
    hilbert_count,
    hom_check,
    is_central,
    named_element,
    omega_hom,
    pi_hom,
    q_bracket,
    q_normality,
    quotient_check,
    swap_hom_b2,
    torus_hom,
)

__all__ = [
    "BUILTIN_NAMES",
    "UnknownAlgebraError",
    "builtin_presentation",
    "STEP_GUARD",
    "AlgebraElement",
    "Presentation",
    "PresentationError",
    "RewriteLimitError",
    "normal_form",
    "IDENTITIES",
    "IdentityResult",
    "identity_names",
    "paper_identity",
    "AlgebraHom",
    "ConfluenceReport",
    "HomReport",
    "NormalityReport",
    "confluence_check",
    "hilbert_count",
    "hom_check",
    "is_central",
    "named_element",
    "omega_hom",
    "pi_hom",
    "q_bracket",
    "q_normality",
    "quotient_check",
    "swap_hom_b2",
    "torus_hom",
]
